#pragma once

// The wreath recursion Φ : F(x, z) → F(x, z) ≀ Σ₃ of the cubic rabbit, its
// restriction maps, the lifting set map ψ̄ and the whole-word classifier.
//
// Elements of the wreath product are written σ⟨⟨g₃, g₂, g₁⟩⟩. Products follow
//   ⟨⟨h⟩⟩⟨⟨g⟩⟩ = ⟨⟨h_i g_i⟩⟩   and   ⟨⟨g_3, g_2, g_1⟩⟩σ = σ⟨⟨g_σ(3), g_σ(2), g_σ(1)⟩⟩,
// so (σ⟨⟨a⟩⟩)(τ⟨⟨b⟩⟩) = (σ∘τ)⟨⟨a_τ(i) b_i⟩⟩. The generators are
//   Φ(x) = ρ⟨⟨x⁻¹z⁻¹, id, id⟩⟩,   Φ(z) = ⟨⟨id, id, x⟩⟩,   ρ = (1 3 2).

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "rabbit/nineadic.hpp"
#include "rabbit/word.hpp"

namespace rabbit {

/// A permutation of {1, 2, 3}.
class Perm3 {
 public:
  constexpr Perm3() = default;
  /// images[i-1] is the image of i. Throws std::invalid_argument if not a bijection.
  explicit Perm3(std::array<int, 3> images);

  static constexpr Perm3 identity() { return {}; }
  /// ρ: 1 ↦ 3, 3 ↦ 2, 2 ↦ 1.
  static Perm3 rho();

  int operator()(int i) const noexcept { return images_[i - 1]; }
  bool is_identity() const noexcept { return *this == Perm3{}; }
  Perm3 inverse() const noexcept;
  /// k in {0, 1, 2} with *this == ρ^k, if any.
  std::optional<int> rho_exponent() const noexcept;

  /// Composition: (s * t)(i) = s(t(i)).
  friend Perm3 operator*(Perm3 s, Perm3 t) noexcept;
  friend bool operator==(const Perm3&, const Perm3&) = default;

 private:
  std::array<std::uint8_t, 3> images_ = {1, 2, 3};
};

struct WreathElement {
  Perm3 perm;
  /// coords[i-1] = g_i; g_1 is the rightmost coordinate in ⟨⟨g₃, g₂, g₁⟩⟩.
  std::array<Word, 3> coords;

  static WreathElement identity() { return {}; }
  const Word& at(int i) const { return coords[static_cast<std::size_t>(i - 1)]; }

  WreathElement& operator*=(const WreathElement& rhs);
  friend WreathElement operator*(WreathElement lhs, const WreathElement& rhs) {
    lhs *= rhs;
    return lhs;
  }
  WreathElement inverse() const;
  WreathElement pow(std::int64_t k) const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

inline WreathElement wreath_mul(const WreathElement& a, const WreathElement& b) { return a * b; }

/// "ρ²⟨⟨z^-1, id, x^-1 z^-1⟩⟩"
std::string to_string(const WreathElement& e);

const WreathElement& phi(Letter l);
/// Homomorphic extension of the generator images. Repeated syllable pairs
/// (u^k with u two syllables long) are raised by squaring, so periodic words
/// cost O(log k) wreath products.
WreathElement phi(const Word& w);

/// g|_i, i in {1, 2, 3}; throws std::out_of_range otherwise.
Word restriction(const Word& w, int i);
/// g|_{v_1 v_2 ... v_k} = (...(g|_{v_k})...)|_{v_1}: the rightmost index acts first.
Word restriction_path(const Word& w, std::span<const int> path);

/// Whether w lifts through R₃, i.e. Φ(w) has trivial permutation. Equivalent
/// to exponent_sum(w, x) ≡ 0 (mod 3).
bool liftable(const Word& w);

/// ψ̄(g) = g|₁, g|₁·x or g|₁·x⁻¹ for perm id, ρ, ρ² respectively.
Word psi_bar(const Word& w);
/// ψ̄ from a precomputed Φ(w).
Word psi_bar(const WreathElement& phi_of_w);

/// Terminal states of ψ̄: the fixed points id, x, x⁻¹ and the 2-cycle
/// z x² ↔ x⁻¹ z⁻¹ x⁻¹.
struct TerminalState3 {
  Word word;
  PolyClass3 cls;
};
std::span<const TerminalState3> whole_word_terminals();
std::optional<PolyClass3> whole_word_terminal_class(const Word& w);

using TraceFn = std::function<void(const Word&)>;

/// Iterates ψ̄ until a terminal state and returns its class. The trace
/// callback, when set, sees every iterate including w itself. Throws
/// InconsistencyError if max(64, 4·|w|) iterations pass or a non-terminal
/// cycle appears.
PolyClass3 classify_whole_word(const Word& w, const TraceFn& trace = {});
/// Same, with Φ(w) supplied by the caller (used by the census).
PolyClass3 classify_whole_word(const Word& w, const WreathElement& phi_of_w);

}  // namespace rabbit
