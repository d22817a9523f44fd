#include <doctest.h>

#include <set>

#include "rabbit/errors.hpp"
#include "rabbit/nucleus.hpp"
#include "rabbit/wreath.hpp"

using namespace rabbit;

namespace {

std::set<Word> words(std::initializer_list<const char*> texts) {
  std::set<Word> out;
  for (const char* t : texts) out.insert(parse(t));
  return out;
}

const std::set<Word> kExpected = words({"", "x", "x^-1", "z x", "x^-1 z^-1"});

}  // namespace

TEST_CASE("standard generating set") {
  const auto s = standard_generating_set();
  CHECK(std::set<Word>(s.begin(), s.end()) == words({"", "x", "x^-1", "z", "z^-1"}));
}

TEST_CASE("nucleus of the rabbit recursion") {
  CHECK(nucleus({parse("x"), parse("z")}) == kExpected);
  CHECK(nucleus({parse("x^-1"), parse("z^-1")}) == kExpected);
  CHECK(nucleus({parse("x"), parse("x^-1"), parse("z"), parse("z^-1")}) == kExpected);
}

TEST_CASE("closure keeps the transient generators") {
  const auto closure = restriction_closure(words({"", "x", "x^-1", "z", "z^-1"}));
  CHECK(closure.count(parse("z")) == 1);
  CHECK(closure.count(parse("z^-1")) == 1);
  for (const auto& w : kExpected) CHECK(closure.count(w) == 1);
  const auto recurrent = recurrent_part(closure);
  CHECK(recurrent.count(parse("z")) == 0);
  CHECK(recurrent.count(parse("z^-1")) == 0);
}

TEST_CASE("nucleus is closed under restriction") {
  for (const auto& w : kExpected) {
    for (int i = 1; i <= 3; ++i) CHECK(kExpected.count(restriction(w, i)) == 1);
  }
}

TEST_CASE("verification depth") {
  const auto k = verification_depth(kExpected);
  REQUIRE(k.has_value());
  CHECK(*k <= 8);
  CHECK(verify_nucleus(kExpected, *k));
  CHECK_FALSE(verification_depth(words({"", "x", "x^-1"})).has_value());
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(restriction_closure(words({"x^40 z^40"}), 3), BudgetExceeded);
}
