#include "rabbit/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rabbit/ball.hpp"
#include "rabbit/census.hpp"
#include "rabbit/nineadic.hpp"
#include "rabbit/nucleus.hpp"
#include "rabbit/prefix.hpp"
#include "rabbit/word.hpp"
#include "rabbit/wreath.hpp"

namespace rabbit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Class counts for |g| <= ℓ, ℓ = 0..9, columns R3, coR3, A3, coA3.
constexpr ClassCounts kCensusRows[10] = {
    {1, 0, 0, 0},          {1, 2, 2, 0},          {3, 4, 4, 6},
    {11, 8, 12, 22},       {27, 29, 48, 57},      {94, 82, 139, 170},
    {287, 258, 445, 467},  {857, 785, 1367, 1364}, {2527, 2294, 4078, 4222},
    {7341, 6802, 12495, 12727},
};

constexpr double kCensusSerialLimit = 60.0;
constexpr double kCensusParallelLimit = 10.0;
constexpr int kCensusParallelWorkers = 8;
constexpr double kSubSecond = 1.0;
constexpr std::int64_t kPowerSweep = 100000;
constexpr double kPowerSweepLimit = 300.0;
constexpr double kManyEaredLimit = 10.0;
constexpr int kMaxNucleusDepth = 8;
constexpr std::size_t kHomomorphismPairs = 10000;
constexpr double kPropertyLimit = 120.0;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      else detail.str("");
      ok = false;
      detail << what;
    }
  }
};

Word x_power(std::int64_t m) { return Word::power(Generator::x, m); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

CriterionResult census_rows() {
  Check c;
  const auto serial = run_census(9, Algorithm::both, 1);
  const auto parallel = run_census(9, Algorithm::both, kCensusParallelWorkers);
  for (int r = 0; r <= 9; ++r) {
    const auto& want = kCensusRows[r];
    c.require(serial.rows[static_cast<std::size_t>(r)] == want,
              "serial census row ell=" + std::to_string(r) + " differs");
    c.require(parallel.rows[static_cast<std::size_t>(r)] == want,
              "8-worker census row ell=" + std::to_string(r) + " differs");
  }
  c.require(serial.elapsed.count() < kCensusSerialLimit,
            "serial census took " + fmt_seconds(serial.elapsed.count()));
  c.require(parallel.elapsed.count() < kCensusParallelLimit,
            "8-worker census took " + fmt_seconds(parallel.elapsed.count()));
  if (c.ok) {
    c.detail << "rows 0..9 exact; ell=9 -> 7341,6802,12495,12727; serial "
             << fmt_seconds(serial.elapsed.count()) << ", 8 workers "
             << fmt_seconds(parallel.elapsed.count());
  }
  return {1, "Census reproduction", c.ok, c.detail.str(), 0};
}

CriterionResult worked_examples() {
  Check c;
  const auto t0 = Clock::now();
  c.require(classify_power_3(89) == PolyClass3::A3, "classify_power_3(89) != A3");
  c.require(classify_power_3(-77) == PolyClass3::CoR3, "classify_power_3(-77) != coR3");
  c.require(classify_whole_word(x_power(89)) == PolyClass3::A3, "whole-word x^89 != A3");
  c.require(classify_whole_word(x_power(-77)) == PolyClass3::CoR3, "whole-word x^-77 != coR3");
  c.require(classify_prefix(x_power(89)) == PolyClass3::A3, "prefix x^89 != A3");
  c.require(classify_prefix(x_power(-77)) == PolyClass3::CoR3, "prefix x^-77 != coR3");
  const double s = seconds_since(t0);
  c.require(s < kSubSecond, "took " + fmt_seconds(s));
  if (c.ok) c.detail << "x^89 -> A3 and x^-77 -> coR3 under all three algorithms";
  return {2, "Worked examples 89 and -77", c.ok, c.detail.str(), 0};
}

CriterionResult three_way_powers() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t disagreements = 0;
  std::string first;
  for (std::int64_t m = -kPowerSweep; m <= kPowerSweep; ++m) {
    const PolyClass3 digits = classify_power_3(m);
    const PolyClass3 oracle = oracle_classify_3(m);
    const Word w = x_power(m);
    const PolyClass3 whole = classify_whole_word(w);
    const PolyClass3 pre = classify_prefix(w);
    if (digits != oracle || digits != whole || digits != pre) {
      if (disagreements++ == 0) {
        first = "m=" + std::to_string(m) + ": digits " + std::string(label(digits)) +
                ", oracle " + std::string(label(oracle)) + ", whole-word " +
                std::string(label(whole)) + ", prefix " + std::string(label(pre));
      }
    }
  }
  const double s = seconds_since(t0);
  c.require(disagreements == 0,
            std::to_string(disagreements) + " disagreements, first " + first);
  c.require(s < kPowerSweepLimit, "took " + fmt_seconds(s));
  if (c.ok) c.detail << "m in [-1e5, 1e5]: 200001 values, zero disagreements";
  return {3, "Three-way power agreement", c.ok, c.detail.str(), 0};
}

CriterionResult many_eared() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t disagreements = 0;
  for (std::int64_t m = -kPowerSweep; m <= kPowerSweep; ++m) {
    if (classify_power_n(m) != oracle_classify_n(m)) {
      if (disagreements++ == 0) c.require(false, "first disagreement at m=" + std::to_string(m));
    }
  }
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  constexpr PolyClassN kTable[9] = {PolyClassN::Rn,  PolyClassN::An,   PolyClassN::CoAn,
                                    PolyClassN::Kn1, PolyClassN::Bn,   PolyClassN::CoYn,
                                    PolyClassN::Kn2, PolyClassN::Yn,   PolyClassN::CoBn};
  for (std::int64_t d = 0; d <= 8; ++d) {
    // The digit alone, then behind one and two zero digits.
    for (std::int64_t m : {d, 9 * d, 81 * d}) {
      c.require(classify_power_n(m) == kTable[d],
                "table entry m=" + std::to_string(m) + " gives " +
                    std::string(label(classify_power_n(m))));
    }
  }
  const double s = seconds_since(t0);
  c.require(s < kManyEaredLimit, "took " + fmt_seconds(s));
  if (c.ok) c.detail << "digit scan = recursion on [-1e5, 1e5]; nine table entries verbatim";
  return {4, "Many-eared digit classification", c.ok, c.detail.str(), 0};
}

CriterionResult nucleus_check() {
  Check c;
  const auto t0 = Clock::now();
  const std::set<Word> expected = {Word::identity(), parse("x"), parse("x^-1"), parse("z x"),
                                   parse("x^-1 z^-1")};
  const std::set<Word> got = nucleus({parse("x"), parse("x^-1"), parse("z"), parse("z^-1")});
  c.require(got == expected, "nucleus has " + std::to_string(got.size()) + " elements");
  const auto k = verification_depth(expected, kMaxNucleusDepth);
  c.require(k.has_value(), "criterion fails for every k <= 8");
  const double s = seconds_since(t0);
  c.require(s < kSubSecond, "took " + fmt_seconds(s));
  if (c.ok) c.detail << "{id, x, x^-1, z x, x^-1 z^-1}, verified at k = " << *k;
  return {5, "Nucleus", c.ok, c.detail.str(), 0};
}

CriterionResult lift_fixtures() {
  Check c;
  const auto expect = [&](const char* in, const char* out) {
    const Word got = psi_bar(parse(in));
    c.require(got == parse(out), std::string("psi_bar(") + in + ") = " + display(got));
  };
  expect("x^3", "x^-1 z^-1");
  expect("z", "x");
  expect("x^-1 z x", "");
  expect("x z x^-1", "");
  expect("z x^2", "x^-1 z^-1 x^-1");
  expect("x^-1 z^-1 x^-1", "z x^2");
  if (c.ok) c.detail << "four lift facts and the 2-cycle z x^2 <-> x^-1 z^-1 x^-1";
  return {6, "Lift-table fixtures", c.ok, c.detail.str(), 0};
}

CriterionResult property_suite() {
  Check c;
  const auto t0 = Clock::now();

  const std::vector<Word> b8 = ball(8);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, b8.size() - 1);
  std::size_t hom_fail = 0;
  for (std::size_t i = 0; i < kHomomorphismPairs; ++i) {
    const Word& a = b8[pick(rng)];
    const Word& b = b8[pick(rng)];
    if (phi(a * b) != phi(a) * phi(b)) ++hom_fail;
  }
  c.require(hom_fail == 0, std::to_string(hom_fail) + " homomorphism failures");

  std::size_t coset_fail = 0;
  const Perm3 rho = Perm3::rho();
  for_each_in_ball(7, [&](const Word& w) {
    const std::int64_t k = ((w.exponent_sum(Generator::x) % 3) + 3) % 3;
    Perm3 expected;
    for (std::int64_t i = 0; i < k; ++i) expected = expected * rho;
    if (phi(w).perm != expected) ++coset_fail;
  });
  c.require(coset_fail == 0, std::to_string(coset_fail) + " coset-law failures");

  std::size_t preserve_fail = 0, grow_fail = 0, delta_fail = 0, decrease_fail = 0;
  const RuleSet& rules = RuleSet::standard();
  for (const Word& w : b8) {
    const RewriteRule* rule = rules.match(w);
    const Word next = rule ? apply_rule(*rule, w) : w;
    if (classify_whole_word(next) != classify_whole_word(w)) ++preserve_fail;
    const std::int64_t delta = next.length() - w.length();
    if (delta > 0) ++grow_fail;
    if (rule && (delta > rule->max_delta || (rule->exact_delta && delta != rule->max_delta))) {
      ++delta_fail;
    }
    if (w.length() >= 4) {
      Word cur = w;
      bool decreased = false;
      for (std::int64_t k = 1; k <= w.length() + 4 && !decreased; ++k) {
        cur = prefix_step(cur);
        decreased = cur.length() < w.length();
      }
      if (!decreased) ++decrease_fail;
    }
  }
  c.require(preserve_fail == 0, std::to_string(preserve_fail) + " class-preservation failures");
  c.require(grow_fail == 0, std::to_string(grow_fail) + " length increases");
  c.require(delta_fail == 0, std::to_string(delta_fail) + " rule length-bound violations");
  c.require(decrease_fail == 0, std::to_string(decrease_fail) + " words without decrease");

  for (int l = 0; l <= 9; ++l) {
    std::unordered_set<Word, WordHash> seen;
    bool well_formed = true;
    for_each_in_ball(l, [&](const Word& w) {
      seen.insert(w);
      if (w.length() > l || Word::from_syllables(w.syllables()) != w) well_formed = false;
    });
    c.require(seen.size() == ball_size(l) && well_formed,
              "ball(" + std::to_string(l) + ") has " + std::to_string(seen.size()) + " words");
  }

  std::size_t roundtrip_fail = 0;
  for_each_in_ball(6, [&](const Word& w) {
    if (parse(format(w)) != w) ++roundtrip_fail;
  });
  c.require(roundtrip_fail == 0, std::to_string(roundtrip_fail) + " parse/format failures");

  const double s = seconds_since(t0);
  c.require(s < kPropertyLimit, "took " + fmt_seconds(s));
  if (c.ok) {
    c.detail << "homomorphism x" << kHomomorphismPairs
             << ", coset law on ball(7), prefix bounds on ball(8), ball sizes, round trip";
  }
  return {7, "Property suite", c.ok, c.detail.str(), 0};
}

CriterionResult negative_control() {
  Check c;
  const AuditReport bad = rule_audit(corrupted_rule_set());
  const AuditReport good = rule_audit(RuleSet::standard());
  c.require(!bad.violations.empty(), "corrupted rule set produced no violations");
  c.require(good.clean(), "standard rule set produced " +
                              std::to_string(good.violations.size()) + " violations");
  if (c.ok) {
    c.detail << "corrupted case 5: " << bad.violations.size() << " violations in " << bad.checks
             << " checks; standard table clean over " << good.checks;
  }
  return {8, "Audit negative control", c.ok, c.detail.str(), 0};
}

}  // namespace

std::vector<int> acceptance_ids() { return {1, 2, 3, 4, 5, 6, 7, 8}; }

CriterionResult run_criterion(int id) {
  static const std::function<CriterionResult()> kCriteria[] = {
      census_rows, worked_examples, three_way_powers, many_eared,
      nucleus_check, lift_fixtures, property_suite, negative_control};
  const auto t0 = Clock::now();
  CriterionResult r;
  if (id < 1 || id > 8) {
    r.id = id;
    r.title = "unknown criterion";
    r.detail = "no such criterion";
    return r;
  }
  try {
    r = kCriteria[id - 1]();
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + ". " + r.title +
         " (" + fmt_seconds(r.seconds) + ") -- " + r.detail;
}

std::vector<CriterionResult> run_acceptance(std::span<const int> ids, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (int id : ids) {
    results.push_back(run_criterion(id));
    out << format_result(results.back()) << '\n' << std::flush;
  }
  return results;
}

}  // namespace rabbit
