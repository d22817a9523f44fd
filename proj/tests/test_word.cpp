#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "rabbit/ball.hpp"
#include "rabbit/errors.hpp"
#include "rabbit/word.hpp"

using namespace rabbit;

TEST_CASE("parse and format") {
  CHECK(format(parse("x^-1 z^-1 x^-1")) == "x^-1 z^-1 x^-1");
  CHECK(parse("XZX") == parse("x^-1 z^-1 x^-1"));
  CHECK(parse("xx z^2 Z") == parse("x^2 z"));
  CHECK(parse("x x^-1").is_identity());
  CHECK(parse("").is_identity());
  CHECK(parse("   ").is_identity());
  CHECK(format(Word::identity()).empty());
  CHECK(display(Word::identity()) == "id");
  CHECK(format(parse("z^3 x")) == "z^3 x");
  CHECK(parse("x^12").length() == 12);
}

TEST_CASE("parse errors carry position and token") {
  const auto fails_at = [](const char* text, std::size_t pos) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      CHECK(e.position() == pos);
      return true;
    }
    return false;
  };
  CHECK(fails_at("x y", 2));
  CHECK(fails_at("x^", 2));
  CHECK(fails_at("z^0", 2));
  CHECK(fails_at("x^-", 3));
  CHECK_THROWS_AS(parse("x^99999999999"), ParseError);
}

TEST_CASE("free reduction") {
  const Word a = parse("x z^2 x^-1");
  CHECK((a * a.inverse()).is_identity());
  CHECK((a.inverse() * a).is_identity());
  CHECK(a * parse("x z") == parse("x z^2 z"));
  CHECK((parse("x z") * parse("z^-1 x^-1 z")) == parse("z"));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == a.inverse() * a.inverse());
  CHECK(a.pow(0).is_identity());
  CHECK(parse("x z").pow(4).length() == 8);
  CHECK(parse("x").pow(7) == Word::power(Generator::x, 7));
  CHECK(parse("x z x").pow(3) == parse("x z x^2 z x^2 z x"));
}

TEST_CASE("append_power matches repeated products") {
  for (const char* base : {"x", "z^-2", "x z", "x z x", "z x^-1 z^2", "x^2 z x^-1"}) {
    for (const char* prefix : {"", "x^-1", "z x^-2", "x^-1 z^-1 x^-1"}) {
      for (std::int64_t k = 0; k <= 7; ++k) {
        Word fast = parse(prefix);
        fast.append_power(parse(base), k);
        Word slow = parse(prefix);
        for (std::int64_t j = 0; j < k; ++j) slow *= parse(base);
        CHECK(fast == slow);
        CHECK(fast.length() == slow.length());
      }
    }
  }
}

TEST_CASE("group laws on random words") {
  const auto b = ball(5);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Word& u = b[pick(rng)];
    const Word& v = b[pick(rng)];
    const Word& w = b[pick(rng)];
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK(exponent_sum(u * v, Generator::x) ==
          exponent_sum(u, Generator::x) + exponent_sum(v, Generator::x));
    CHECK(Word::from_syllables((u * v).syllables()) == u * v);
  }
}

TEST_CASE("letters and back access") {
  Word w = parse("x z^-2");
  CHECK(w.back_letter() == Letter::z_inv);
  w.pop_back_letter();
  CHECK(w == parse("x z^-1"));
  w.push_back(Letter::z);
  CHECK(w == parse("x"));
  CHECK(inverse_of(Letter::x) == Letter::x_inv);
  CHECK(generator_of(Letter::z_inv) == Generator::z);
  CHECK(sign_of(Letter::x_inv) == -1);
}

TEST_CASE("power rejects oversized exponents") {
  CHECK_THROWS_AS(Word::power(Generator::x, std::int64_t{1} << 40), std::out_of_range);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(parse("z"), parse("x^2")));
  CHECK(shortlex_less(parse("x"), parse("x^-1")));
  CHECK(shortlex_less(parse("x^-1"), parse("z")));
  CHECK(shortlex_less(parse("x^-1 z^-1"), parse("z x")));
  CHECK_FALSE(shortlex_less(parse("x"), parse("x")));
}

TEST_CASE("round trip over the ball of radius 6") {
  std::size_t count = 0;
  for_each_in_ball(6, [&](const Word& w) {
    ++count;
    CHECK(parse(format(w)) == w);
  });
  CHECK(count == ball_size(6));
}
