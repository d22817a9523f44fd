#pragma once

// Prefix rewriting: split g = h·p with p a short right factor, lift p through
// R₃ (borrowing letters where needed) and move the lift to the left end.
// Every rule preserves the class of gR₃ and never increases word length;
// iterating reaches one of nine terminal words.
//
// The rule table is the sign-symmetric closure (ε, δ ∈ {±1}, y = x⁻¹z⁻¹):
//   case 1    h z^δ                    → x^δ h
//   case 2    h x^{3ε}                 → y^ε h
//   case 3/4  h x^{-ε} z^δ x^ε         → h
//   case 5    h z^δ x^ε                → h x^ε
//   case 6    h x^ε z^δ x^{2ε}         → y^ε h
//   case 7    h x^{-ε} z^δ x^{2ε}      → h x^ε
//   case 8    h z^δ z^δ x^{2ε}         → y^ε h x^{-ε}
// Matching is first-hit in the order 3/4, 6/7/8, 2, 5, 1.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rabbit/nineadic.hpp"
#include "rabbit/word.hpp"

namespace rabbit {

struct RewriteRule {
  std::string name;
  /// Row number of the lifting table this rule instantiates (1..8; 3 covers 3/4).
  int table_case = 0;
  /// Suffix matched against the rightmost letters of g.
  Word pattern;
  Word left_prepend;
  Word right_append;
  /// Upper bound on |g'| - |g|.
  int max_delta = 0;
  /// When set, |g'| - |g| == max_delta for every match.
  bool exact_delta = false;

  std::int64_t consumes() const noexcept { return pattern.length(); }
};

/// left_prepend · (w · pattern⁻¹) · right_append, reduced.
Word apply_rule(const RewriteRule& rule, const Word& w);

/// Whether `pattern` is a letter-level suffix of a word whose last syllables
/// are `tail` (tail may be the whole word).
bool matches_suffix(std::span<const Syllable> tail, const Word& pattern);

/// An ordered rule list with a lookup index keyed on the final syllable.
class RuleSet {
 public:
  /// Throws std::invalid_argument for an empty pattern or for a pattern,
  /// prefix or suffix longer than CompiledRule::kMaxSyllables syllables.
  explicit RuleSet(std::vector<RewriteRule> rules);

  /// Flat copy of a rule used by the rewriting loop.
  struct CompiledRule {
    static constexpr std::size_t kMaxSyllables = 4;
    std::array<Syllable, kMaxSyllables> pattern{};
    std::array<Syllable, kMaxSyllables> left{};
    std::array<Syllable, kMaxSyllables> right{};
    std::uint8_t pattern_size = 0;
    std::uint8_t left_size = 0;
    std::uint8_t right_size = 0;
    std::int64_t pattern_length = 0;
    /// Single-syllable pattern, nothing appended, and no multi-syllable rule
    /// shares its |exp| >= 3 bucket: while the final run stays at least
    /// max(3, |pattern exp|) long this rule remains the first match.
    bool repeatable = false;
  };

  static const RuleSet& standard();

  std::span<const RewriteRule> rules() const noexcept { return rules_; }
  /// First rule in priority order whose pattern is a suffix of the word
  /// ending in `syllables`, or nullptr.
  const RewriteRule* match(std::span<const Syllable> syllables) const;
  const RewriteRule* match(const Word& w) const { return match(w.syllables()); }
  /// Index into rules() of the first match, or -1.
  int match_index(std::span<const Syllable> syllables) const noexcept;
  const CompiledRule& compiled(int index) const noexcept {
    return compiled_[static_cast<std::size_t>(index)];
  }

 private:
  static std::size_t bucket_of(const Syllable& s) noexcept;

  std::vector<RewriteRule> rules_;
  std::vector<CompiledRule> compiled_;
  // 2 generators x 2 signs x |exp| in {1, 2, >=3}.
  std::array<std::vector<int>, 12> buckets_;
};

/// The standard table with case 5 changed to append x^{-ε} instead of x^ε.
/// Exists so the audit can be shown to detect a wrong rule.
RuleSet corrupted_rule_set();

/// The nine fixed points of the rewriting and their classes.
struct TerminalWord {
  Word word;
  PolyClass3 cls;
};
std::span<const TerminalWord> prefix_terminals();
std::optional<PolyClass3> prefix_terminal_class(const Word& w);

/// One rewrite, or w unchanged when no rule matches.
Word prefix_step(const Word& w, const RuleSet& rules = RuleSet::standard());

using PrefixTraceFn = std::function<void(const Word&, const RewriteRule*)>;

/// Iterates prefix_step to its fixed point and looks it up in the terminal
/// table. The trace callback sees each iterate with the rule about to fire
/// (nullptr at the fixed point). Throws InconsistencyError after
/// 10·|w| + 100 steps or on a fixed point outside the table.
PolyClass3 classify_prefix(const Word& w, const RuleSet& rules = RuleSet::standard(),
                           const PrefixTraceFn& trace = {});

struct AuditViolation {
  std::string rule;
  Word h;
  Word before;
  Word after;
  PolyClass3 class_before;
  PolyClass3 class_after;
};

struct AuditReport {
  std::size_t checks = 0;
  std::vector<AuditViolation> violations;
  bool clean() const noexcept { return violations.empty(); }
};

/// For every rule and `samples` random h from ball(6), compares the
/// whole-word class of h·pattern with that of the rewritten word.
AuditReport rule_audit(const RuleSet& rules, std::size_t samples = 1000,
                       std::uint64_t seed = 0x5eed);

}  // namespace rabbit
