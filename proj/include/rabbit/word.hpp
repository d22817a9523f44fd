#pragma once

// Reduced words in the free group on x = D_x and z = D_z.
//
// Composition order: a word is read as a composition of Dehn twists with the
// leftmost factor applied last, so in g = h p the factor p sits at the right
// end and is applied first. All rewriting in this library (lifting moves
// factors from the right end of a word to its left end) is written in this
// convention.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rabbit {

enum class Generator : std::uint8_t { x = 0, z = 1 };

/// A single letter: a generator or its inverse.
enum class Letter : std::uint8_t { x = 0, x_inv = 1, z = 2, z_inv = 3 };

constexpr Generator generator_of(Letter l) noexcept {
  return (l == Letter::x || l == Letter::x_inv) ? Generator::x : Generator::z;
}
constexpr int sign_of(Letter l) noexcept {
  return (l == Letter::x || l == Letter::z) ? 1 : -1;
}
constexpr Letter inverse_of(Letter l) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}

/// Signed run g^exp, exp != 0.
struct Syllable {
  std::int32_t exp;
  Generator gen;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable& a, const Syllable& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.exp <=> b.exp;
  }
};

/// Freely reduced word stored run-length encoded: adjacent syllables always
/// have distinct generators, so equal group elements have equal storage.
class Word {
 public:
  Word() = default;

  static Word identity() { return {}; }
  static Word letter(Letter l);
  /// g^e; throws std::out_of_range if |e| does not fit a syllable.
  static Word power(Generator g, std::int64_t e);
  /// Reduces an arbitrary syllable sequence (zero runs allowed).
  static Word from_syllables(std::span<const Syllable> syllables);

  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }
  std::int64_t length() const noexcept { return length_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  /// Right-multiplies by g^e, reducing at the junction.
  void push_back(Generator g, std::int64_t e);
  void push_back(Letter l) { push_back(generator_of(l), sign_of(l)); }
  /// Removes the rightmost letter. Precondition: not the identity.
  void pop_back_letter();
  /// Rightmost letter. Precondition: not the identity.
  Letter back_letter() const noexcept;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  Word inverse() const;
  /// this^k for any integer k.
  Word pow(std::int64_t k) const;
  /// Right-multiplies by base^k, k >= 0. Copies in bulk when base is
  /// cyclically reduced.
  void append_power(const Word& base, std::int64_t k);
  std::int64_t exponent_sum(Generator g) const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.syllables_.begin(), a.syllables_.end(), b.syllables_.begin(),
        b.syllables_.end());
  }

 private:
  std::vector<Syllable> syllables_;
  std::int64_t length_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Orders by length, then letter by letter with x < x^-1 < z < z^-1.
bool shortlex_less(const Word& a, const Word& b);

inline Word identity() { return Word::identity(); }
inline Word concat(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }
inline std::int64_t exponent_sum(const Word& w, Generator g) {
  return w.exponent_sum(g);
}

/// Parses the word grammar:
///   word   := ws? (atom ws?)*
///   atom   := letter power?
///   letter := "x" | "z" | "X" | "Z"      (uppercase = inverse)
///   power  := "^" ["-"] digit+           (never 0)
/// Throws ParseError with the offending position and token.
Word parse(std::string_view text);

/// Canonical form: space-separated atoms, lowercase letters, "^k" only when
/// |k| >= 2, "^-k" for inverses. The identity formats as "".
std::string format(const Word& w);

/// format(), but the identity prints as "id".
std::string display(const Word& w);

}  // namespace rabbit
