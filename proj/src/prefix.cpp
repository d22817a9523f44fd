#include "rabbit/prefix.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "rabbit/ball.hpp"
#include "rabbit/errors.hpp"
#include "rabbit/wreath.hpp"

namespace rabbit {

namespace {

Word xp(std::int64_t e) { return Word::power(Generator::x, e); }
Word zp(std::int64_t e) { return Word::power(Generator::z, e); }
Word y_pow(int eps) { return (xp(-1) * zp(-1)).pow(eps); }

RewriteRule make_rule(int table_case, Word pattern, Word left, Word right, int max_delta,
                      bool exact) {
  RewriteRule r;
  r.name = "case" + std::to_string(table_case) + "(" + format(pattern) + ")";
  r.table_case = table_case;
  r.pattern = std::move(pattern);
  r.left_prepend = std::move(left);
  r.right_append = std::move(right);
  r.max_delta = max_delta;
  r.exact_delta = exact;
  return r;
}

std::vector<RewriteRule> standard_rules() {
  constexpr int kSigns[] = {1, -1};
  std::vector<RewriteRule> rules;
  // 3/4: conjugates x^{∓1} z^δ x^{±1} lift trivially.
  for (int eps : kSigns) {
    for (int del : kSigns) {
      rules.push_back(make_rule(eps > 0 ? 3 : 4, xp(-eps) * zp(del) * xp(eps), {}, {}, -3, true));
    }
  }
  // 6/7/8: c z^δ x^{2ε}, by the letter c in front of z^δ.
  for (int eps : kSigns) {
    for (int del : kSigns) {
      rules.push_back(make_rule(6, xp(eps) * zp(del) * xp(2 * eps), y_pow(eps), {}, -2, false));
      rules.push_back(make_rule(7, xp(-eps) * zp(del) * xp(2 * eps), {}, xp(eps), -3, false));
      rules.push_back(
          make_rule(8, zp(2 * del) * xp(2 * eps), y_pow(eps), xp(-eps), -1, false));
    }
  }
  for (int eps : kSigns) rules.push_back(make_rule(2, xp(3 * eps), y_pow(eps), {}, -1, false));
  for (int eps : kSigns) {
    for (int del : kSigns) {
      rules.push_back(make_rule(5, zp(del) * xp(eps), {}, xp(eps), -1, true));
    }
  }
  for (int del : kSigns) rules.push_back(make_rule(1, zp(del), xp(del), {}, 0, false));
  return rules;
}

// Double-ended syllable buffer: the rewriting loop prepends at the left and
// consumes at the right, so each step touches O(1) syllables.
class SyllableDeque {
 public:
  // Rewriting never lengthens the word, so 2|w| slots leave at least |w|
  // prepends between relocations.
  explicit SyllableDeque(const Word& w) {
    const auto syl = w.syllables();
    const std::size_t cap = 2 * static_cast<std::size_t>(w.length()) + 64;
    buf_.resize(cap);
    head_ = cap - syl.size() - 16;
    tail_ = head_;
    for (const auto& s : syl) buf_[tail_++] = s;
    length_ = w.length();
  }

  /// Whether a repeatable rule that just fired still matches first.
  bool can_repeat(const RuleSet::CompiledRule& rule) const noexcept {
    if (tail_ - head_ < 2) return false;
    const Syllable& last = buf_[tail_ - 1];
    const Syllable& p = rule.pattern[0];
    const int need = std::max(3, std::abs(p.exp));
    return last.gen == p.gen && (last.exp > 0) == (p.exp > 0) && std::abs(last.exp) >= need;
  }

  std::span<const Syllable> view() const noexcept {
    return {buf_.data() + head_, tail_ - head_};
  }
  std::int64_t length() const noexcept { return length_; }

  Word to_word() const { return Word::from_syllables(view()); }

  void apply(const RuleSet::CompiledRule& rule) {
    for (std::size_t j = rule.pattern_size; j-- > 0;) {
      Syllable& last = buf_[tail_ - 1];
      last.exp -= rule.pattern[j].exp;
      if (last.exp == 0) --tail_;
    }
    length_ -= rule.pattern_length;
    for (std::size_t j = rule.left_size; j-- > 0;) push_front(rule.left[j]);
    for (std::size_t j = 0; j < rule.right_size; ++j) push_back(rule.right[j]);
  }

 private:
  void push_front(const Syllable& s) {
    if (head_ != tail_ && buf_[head_].gen == s.gen) {
      merge(buf_[head_], s.exp);
      if (buf_[head_].exp == 0) ++head_;
      return;
    }
    if (head_ == 0) recenter(true);
    buf_[--head_] = s;
    length_ += std::abs(s.exp);
  }

  void push_back(const Syllable& s) {
    if (head_ != tail_ && buf_[tail_ - 1].gen == s.gen) {
      merge(buf_[tail_ - 1], s.exp);
      if (buf_[tail_ - 1].exp == 0) --tail_;
      return;
    }
    if (tail_ == buf_.size()) recenter(false);
    buf_[tail_++] = s;
    length_ += std::abs(s.exp);
  }

  void merge(Syllable& target, std::int32_t e) {
    const std::int32_t merged = target.exp + e;
    length_ += std::abs(merged) - std::abs(target.exp);
    target.exp = merged;
  }

  // Rewriting consumes on the right and prepends on the left, so the live
  // window drifts left; re-placing it at the far right end keeps the cost
  // amortized O(1) per step.
  void recenter(bool room_on_left) {
    const std::size_t n = tail_ - head_;
    constexpr std::size_t kSlack = 16;
    const std::size_t cap = std::max(buf_.size(), 4 * n + 64);
    const std::size_t new_head = room_on_left ? cap - n - kSlack : kSlack;
    std::vector<Syllable> next(cap);
    std::copy(buf_.begin() + static_cast<std::ptrdiff_t>(head_),
              buf_.begin() + static_cast<std::ptrdiff_t>(tail_),
              next.begin() + static_cast<std::ptrdiff_t>(new_head));
    buf_ = std::move(next);
    head_ = new_head;
    tail_ = new_head + n;
  }

  std::vector<Syllable> buf_;
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
  std::int64_t length_ = 0;
};

}  // namespace

Word apply_rule(const RewriteRule& rule, const Word& w) {
  Word out = rule.left_prepend;
  out *= w * rule.pattern.inverse();
  out *= rule.right_append;
  return out;
}

bool matches_suffix(std::span<const Syllable> tail, const Word& pattern) {
  const auto pat = pattern.syllables();
  const std::size_t k = pat.size();
  if (k == 0) return true;
  if (k > tail.size()) return false;
  const auto covers = [](const Syllable& s, const Syllable& p) {
    return s.gen == p.gen && (s.exp > 0) == (p.exp > 0) && std::abs(s.exp) >= std::abs(p.exp);
  };
  const std::size_t offset = tail.size() - k;
  if (k == 1) return covers(tail[offset], pat[0]);
  if (!covers(tail[offset], pat[0])) return false;
  for (std::size_t j = 1; j < k; ++j) {
    if (!(tail[offset + j] == pat[j])) return false;
  }
  return true;
}

std::size_t RuleSet::bucket_of(const Syllable& s) noexcept {
  const auto mag = static_cast<std::size_t>(std::min(std::abs(s.exp), 3));
  return static_cast<std::size_t>(s.gen) * 6 + (s.exp < 0 ? 3 : 0) + (mag - 1);
}

namespace {

std::uint8_t copy_syllables(const Word& w, std::array<Syllable, RuleSet::CompiledRule::kMaxSyllables>& out,
                            const std::string& rule) {
  const auto syl = w.syllables();
  if (syl.size() > out.size()) {
    throw std::invalid_argument("rewrite rule " + rule + " has too many syllables");
  }
  std::copy(syl.begin(), syl.end(), out.begin());
  return static_cast<std::uint8_t>(syl.size());
}

}  // namespace

RuleSet::RuleSet(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  compiled_.reserve(rules_.size());
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const RewriteRule& rule = rules_[r];
    const auto pat = rule.pattern.syllables();
    if (pat.empty()) throw std::invalid_argument("rewrite rule with empty pattern");
    CompiledRule c;
    c.pattern_size = copy_syllables(rule.pattern, c.pattern, rule.name);
    c.left_size = copy_syllables(rule.left_prepend, c.left, rule.name);
    c.right_size = copy_syllables(rule.right_append, c.right, rule.name);
    c.pattern_length = rule.pattern.length();
    compiled_.push_back(c);

    Syllable last = pat.back();
    if (pat.size() == 1) {
      // A one-syllable pattern also matches any longer run of the same sign.
      const int lo = std::min(std::abs(last.exp), 3);
      for (int mag = lo; mag <= 3; ++mag) {
        last.exp = last.exp > 0 ? mag : -mag;
        buckets_[bucket_of(last)].push_back(static_cast<int>(r));
      }
    } else {
      buckets_[bucket_of(last)].push_back(static_cast<int>(r));
    }
  }
  for (auto& c : compiled_) {
    if (c.pattern_size != 1 || c.right_size != 0) continue;
    Syllable probe = c.pattern[0];
    probe.exp = probe.exp > 0 ? 3 : -3;
    const auto& bucket = buckets_[bucket_of(probe)];
    c.repeatable = std::all_of(bucket.begin(), bucket.end(), [&](int r) {
      return compiled_[static_cast<std::size_t>(r)].pattern_size == 1;
    });
  }
}

const RuleSet& RuleSet::standard() {
  static const RuleSet rules(standard_rules());
  return rules;
}

int RuleSet::match_index(std::span<const Syllable> syllables) const noexcept {
  const std::size_t n = syllables.size();
  if (n == 0) return -1;
  const Syllable* end = syllables.data() + n;
  for (int r : buckets_[bucket_of(end[-1])]) {
    const CompiledRule& c = compiled_[static_cast<std::size_t>(r)];
    const std::size_t k = c.pattern_size;
    if (k > n) continue;
    const Syllable* tail = end - k;
    const Syllable& head = c.pattern[0];
    if (tail[0].gen != head.gen || (tail[0].exp > 0) != (head.exp > 0) ||
        std::abs(tail[0].exp) < std::abs(head.exp)) {
      continue;
    }
    bool ok = true;
    for (std::size_t j = 1; j < k && ok; ++j) ok = tail[j] == c.pattern[j];
    if (ok) return r;
  }
  return -1;
}

const RewriteRule* RuleSet::match(std::span<const Syllable> syllables) const {
  const int r = match_index(syllables);
  return r < 0 ? nullptr : &rules_[static_cast<std::size_t>(r)];
}

RuleSet corrupted_rule_set() {
  std::vector<RewriteRule> rules(RuleSet::standard().rules().begin(),
                                 RuleSet::standard().rules().end());
  for (auto& r : rules) {
    if (r.table_case == 5) {
      r.right_append = r.right_append.inverse();
      r.name += "[corrupted]";
    }
  }
  return RuleSet(std::move(rules));
}

std::span<const TerminalWord> prefix_terminals() {
  static const std::vector<TerminalWord> table = {
      {Word::identity(), PolyClass3::R3},  {parse("x"), PolyClass3::A3},
      {parse("x^-1"), PolyClass3::CoR3},   {parse("x^2"), PolyClass3::CoA3},
      {parse("x^-2"), PolyClass3::CoA3},   {parse("z x^2"), PolyClass3::CoA3},
      {parse("z x^-2"), PolyClass3::CoA3}, {parse("z^-1 x^2"), PolyClass3::CoA3},
      {parse("z^-1 x^-2"), PolyClass3::CoA3},
  };
  return table;
}

std::optional<PolyClass3> prefix_terminal_class(const Word& w) {
  if (w.length() > 3) return std::nullopt;
  for (const auto& t : prefix_terminals()) {
    if (t.word == w) return t.cls;
  }
  return std::nullopt;
}

Word prefix_step(const Word& w, const RuleSet& rules) {
  const RewriteRule* rule = rules.match(w);
  return rule ? apply_rule(*rule, w) : w;
}

PolyClass3 classify_prefix(const Word& w, const RuleSet& rules, const PrefixTraceFn& trace) {
  SyllableDeque work(w);
  const std::int64_t max_steps = 10 * w.length() + 100;
  for (std::int64_t step = 0; step <= max_steps; ++step) {
    const int r = rules.match_index(work.view());
    if (trace) trace(work.to_word(), r < 0 ? nullptr : &rules.rules()[static_cast<std::size_t>(r)]);
    if (r < 0) {
      const Word fixed = work.to_word();
      if (auto cls = prefix_terminal_class(fixed)) return *cls;
      throw InconsistencyError("prefix rewriting fixed " + display(fixed) +
                               ", which is not a terminal word (from " + display(w) + ")");
    }
    const auto& rule = rules.compiled(r);
    work.apply(rule);
    if (!rule.repeatable) continue;
    while (step < max_steps && work.can_repeat(rule)) {
      ++step;
      if (trace) trace(work.to_word(), &rules.rules()[static_cast<std::size_t>(r)]);
      work.apply(rule);
    }
  }
  throw InconsistencyError("prefix rewriting step bound exceeded for " + display(w));
}

AuditReport rule_audit(const RuleSet& rules, std::size_t samples, std::uint64_t seed) {
  static const std::vector<Word> pool = ball(6);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  AuditReport report;
  for (const auto& rule : rules.rules()) {
    for (std::size_t s = 0; s < samples; ++s) {
      const Word& h = pool[pick(rng)];
      const Word before = h * rule.pattern;
      const Word after = apply_rule(rule, before);
      const PolyClass3 cb = classify_whole_word(before);
      const PolyClass3 ca = classify_whole_word(after);
      ++report.checks;
      if (cb != ca) report.violations.push_back({rule.name, h, before, after, cb, ca});
    }
  }
  return report;
}

}  // namespace rabbit
