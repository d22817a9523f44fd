#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rabbit/ball.hpp"
#include "rabbit/errors.hpp"
#include "rabbit/prefix.hpp"
#include "rabbit/wreath.hpp"

using namespace rabbit;

namespace {

const RewriteRule& fired(const char* word) {
  const RewriteRule* r = RuleSet::standard().match(parse(word));
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("rule table shape") {
  const auto rules = RuleSet::standard().rules();
  CHECK(rules.size() == 24);
  for (const auto& r : rules) {
    CHECK(r.max_delta <= 0);
    CHECK(r.consumes() >= 1);
  }
}

TEST_CASE("individual rewrites") {
  CHECK(prefix_step(parse("z")) == parse("x"));
  CHECK(prefix_step(parse("x^3")) == parse("x^-1 z^-1"));
  CHECK(prefix_step(parse("x z^-1 x^-1 z x")) == parse("x z^-1"));
  CHECK(prefix_step(parse("z x")) == parse("x"));
  CHECK(prefix_step(parse("x z x^2")) == parse("x^-1 z^-1"));
  CHECK(prefix_step(parse("z x^-1 z x^2")) == parse("z x"));
  CHECK(prefix_step(parse("x z^2 x^2")) == parse("x^-1 z^-1 x x^-1"));
  CHECK(fired("z^2 x^2").table_case == 8);
  CHECK(fired("x^-1 z x").table_case == 3);
  CHECK(fired("x^5").table_case == 2);
  CHECK(fired("x^-2 z").table_case == 1);
}

TEST_CASE("suffix matching") {
  const Word pat = parse("z x^2");
  CHECK(matches_suffix(parse("x z^3 x^2").syllables(), pat));
  CHECK_FALSE(matches_suffix(parse("x z^3 x^3").syllables(), pat));
  CHECK_FALSE(matches_suffix(parse("x z^-1 x^2").syllables(), pat));
  CHECK(matches_suffix(parse("z x^7").syllables(), parse("x^3")));
  CHECK_FALSE(matches_suffix(parse("x^2").syllables(), parse("x^3")));
}

TEST_CASE("terminal words") {
  CHECK(prefix_terminals().size() == 9);
  for (const auto& t : prefix_terminals()) {
    CHECK(prefix_step(t.word) == t.word);
    CHECK(classify_whole_word(t.word) == t.cls);
  }
  CHECK(prefix_terminal_class(parse("z x^-2")) == PolyClass3::CoA3);
  CHECK_FALSE(prefix_terminal_class(parse("z x")).has_value());
}

TEST_CASE("classification examples") {
  CHECK(classify_prefix(Word::identity()) == PolyClass3::R3);
  CHECK(classify_prefix(parse("z")) == PolyClass3::A3);
  CHECK(classify_prefix(parse("z x^2")) == PolyClass3::CoA3);
  CHECK(classify_prefix(Word::power(Generator::x, 89)) == PolyClass3::A3);
  CHECK(classify_prefix(Word::power(Generator::x, -77)) == PolyClass3::CoR3);
}

TEST_CASE("trace equals iterated single steps") {
  for (const char* text : {"x^89", "x^-77", "z x z^-2 x^4", "x^-1 z^3 x^-2 z x"}) {
    const Word w = parse(text);
    std::vector<Word> iterates;
    std::vector<const RewriteRule*> fired_rules;
    classify_prefix(w, RuleSet::standard(), [&](const Word& g, const RewriteRule* r) {
      iterates.push_back(g);
      fired_rules.push_back(r);
    });
    REQUIRE(!iterates.empty());
    CHECK(iterates.front() == w);
    CHECK(fired_rules.back() == nullptr);
    for (std::size_t i = 0; i + 1 < iterates.size(); ++i) {
      CHECK(prefix_step(iterates[i]) == iterates[i + 1]);
      CHECK(RuleSet::standard().match(iterates[i]) == fired_rules[i]);
    }
  }
}

TEST_CASE("agreement with the whole-word algorithm") {
  for_each_in_ball(8, [](const Word& w) {
    if (classify_prefix(w) != classify_whole_word(w)) FAIL("disagreement at " << display(w));
  });
  for (std::int64_t m = -3000; m <= 3000; ++m) {
    const Word w = Word::power(Generator::x, m);
    if (classify_prefix(w) != classify_whole_word(w)) FAIL("disagreement at x^" << m);
  }
}

TEST_CASE("length never grows and bounds hold") {
  for_each_in_ball(8, [](const Word& w) {
    const RewriteRule* r = RuleSet::standard().match(w);
    if (!r) return;
    const Word next = apply_rule(*r, w);
    const std::int64_t delta = next.length() - w.length();
    CHECK(delta <= r->max_delta);
    if (r->exact_delta) CHECK(delta == r->max_delta);
  });
}

TEST_CASE("rule audit") {
  const AuditReport good = rule_audit(RuleSet::standard(), 200);
  CHECK(good.clean());
  CHECK(good.checks == 24 * 200);
  const AuditReport bad = rule_audit(corrupted_rule_set(), 200);
  CHECK_FALSE(bad.clean());
  for (const auto& v : bad.violations) {
    CHECK(v.rule.find("case5") == 0);
    CHECK(v.class_before != v.class_after);
  }
}

TEST_CASE("rule sets validate their input") {
  RewriteRule empty;
  empty.name = "empty";
  CHECK_THROWS_AS(RuleSet({empty}), std::invalid_argument);
  RewriteRule wide;
  wide.name = "wide";
  wide.pattern = parse("x z x z x");
  CHECK_THROWS_AS(RuleSet({wide}), std::invalid_argument);
}

TEST_CASE("a non-terminal fixed point is reported") {
  RewriteRule only_z;
  only_z.name = "only z";
  only_z.pattern = parse("z");
  only_z.left_prepend = parse("x");
  const RuleSet tiny({only_z});
  CHECK_THROWS_AS(classify_prefix(parse("x^5"), tiny), InconsistencyError);
}
