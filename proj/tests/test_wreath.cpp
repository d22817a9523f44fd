#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "rabbit/ball.hpp"
#include "rabbit/errors.hpp"
#include "rabbit/wreath.hpp"

using namespace rabbit;

namespace {

WreathElement element(Perm3 perm, const char* g3, const char* g2, const char* g1) {
  WreathElement e;
  e.perm = perm;
  e.coords = {parse(g1), parse(g2), parse(g3)};
  return e;
}

Perm3 rho_pow(std::int64_t k) {
  Perm3 p;
  for (std::int64_t i = 0; i < ((k % 3) + 3) % 3; ++i) p = p * Perm3::rho();
  return p;
}

}  // namespace

TEST_CASE("permutations") {
  const Perm3 rho = Perm3::rho();
  CHECK(rho(1) == 3);
  CHECK(rho(2) == 1);
  CHECK(rho(3) == 2);
  CHECK((rho * rho * rho).is_identity());
  CHECK(rho.inverse() == rho * rho);
  CHECK(rho.rho_exponent() == 1);
  CHECK(Perm3({2, 1, 3}).rho_exponent() == std::nullopt);
  CHECK_THROWS_AS(Perm3({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("generator images and small products") {
  CHECK(phi(parse("x")) == element(Perm3::rho(), "x^-1 z^-1", "", ""));
  CHECK(phi(parse("z")) == element({}, "", "", "x"));
  CHECK(phi(parse("x^2")) == element(rho_pow(2), "x^-1 z^-1", "", "x^-1 z^-1"));
  CHECK(phi(parse("z x^2")) == element(rho_pow(2), "z^-1", "", "x^-1 z^-1"));
  CHECK(phi(parse("x^-1")) == element(rho_pow(2), "", "z x", ""));
  CHECK(to_string(phi(parse("z x^2"))) == "ρ²⟨⟨z^-1, id, x^-1 z^-1⟩⟩");
  CHECK(to_string(phi(parse("x^3"))) == "⟨⟨x^-1 z^-1, x^-1 z^-1, x^-1 z^-1⟩⟩");
}

TEST_CASE("powers of x in closed form") {
  const WreathElement x = phi(Letter::x);
  for (std::int64_t m = -40; m <= 40; ++m) {
    CHECK(phi(Word::power(Generator::x, m)) == x.pow(m));
  }
  WreathElement slow;
  for (int i = 0; i < 3001; ++i) slow *= x;
  CHECK(phi(Word::power(Generator::x, 3001)) == slow);
}

TEST_CASE("homomorphism on random pairs") {
  const auto b = ball(7);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    const Word& u = b[pick(rng)];
    const Word& v = b[pick(rng)];
    CHECK(phi(u * v) == phi(u) * phi(v));
    CHECK(phi(u.inverse()) == phi(u).inverse());
  }
  const Word periodic = parse("x^-1 z^-1").pow(500) * parse("z x^2").pow(77);
  WreathElement slow;
  for (const auto& s : periodic.syllables()) {
    for (int j = 0; j < std::abs(s.exp); ++j) {
      slow *= phi(Word::power(s.gen, s.exp > 0 ? 1 : -1));
    }
  }
  CHECK(phi(periodic) == slow);
}

TEST_CASE("coset law") {
  for_each_in_ball(6, [](const Word& w) {
    CHECK(phi(w).perm == rho_pow(w.exponent_sum(Generator::x)));
    CHECK(liftable(w) == (w.exponent_sum(Generator::x) % 3 == 0));
  });
}

TEST_CASE("restrictions") {
  CHECK(restriction(parse("x^3"), 1) == parse("x^-1 z^-1"));
  CHECK(restriction(parse("z"), 1) == parse("x"));
  CHECK(restriction(parse("z"), 2).is_identity());
  CHECK_THROWS_AS(restriction(parse("z"), 4), std::out_of_range);
  const std::vector<int> path = {1, 1};
  CHECK(restriction_path(parse("x^9"), path) == restriction(restriction(parse("x^9"), 1), 1));
}

TEST_CASE("lifting map") {
  CHECK(psi_bar(parse("x^3")) == parse("x^-1 z^-1"));
  CHECK(psi_bar(parse("z")) == parse("x"));
  CHECK(psi_bar(parse("x^-1 z x")).is_identity());
  CHECK(psi_bar(parse("x z x^-1")).is_identity());
  CHECK(psi_bar(parse("z x^2")) == parse("x^-1 z^-1 x^-1"));
  CHECK(psi_bar(parse("x^-1 z^-1 x^-1")) == parse("z x^2"));
  CHECK(psi_bar(parse("x")) == parse("x"));
  CHECK(psi_bar(parse("x^-1")) == parse("x^-1"));
  CHECK(psi_bar(Word::identity()).is_identity());
}

TEST_CASE("direct lifting agrees with the full recursion") {
  for_each_in_ball(8, [](const Word& w) {
    if (psi_bar(w) != psi_bar(phi(w))) FAIL("mismatch at " << display(w));
  });
  for (const char* text : {"x^-1 z^-1", "z x", "x z^2", "z^-1 x^-2", "x^2 z^-1 x"}) {
    for (std::int64_t k : {5, 6, 7, 100, 301}) {
      const Word w = parse(text).pow(k) * parse("z x^4");
      CHECK(psi_bar(w) == psi_bar(phi(w)));
    }
  }
}

TEST_CASE("whole-word classification") {
  CHECK(classify_whole_word(Word::identity()) == PolyClass3::R3);
  CHECK(classify_whole_word(parse("z")) == PolyClass3::A3);
  CHECK(classify_whole_word(parse("z x^2")) == PolyClass3::CoA3);
  CHECK(classify_whole_word(Word::power(Generator::x, 89)) == PolyClass3::A3);
  CHECK(classify_whole_word(Word::power(Generator::x, -77)) == PolyClass3::CoR3);
  std::vector<Word> seen;
  classify_whole_word(parse("x^3"), [&](const Word& w) { seen.push_back(w); });
  REQUIRE(seen.size() >= 2);
  CHECK(seen[0] == parse("x^3"));
  CHECK(seen[1] == parse("x^-1 z^-1"));
  CHECK(whole_word_terminals().size() == 5);
}

TEST_CASE("whole-word classification with a supplied image") {
  for_each_in_ball(6, [](const Word& w) {
    CHECK(classify_whole_word(w, phi(w)) == classify_whole_word(w));
  });
}
