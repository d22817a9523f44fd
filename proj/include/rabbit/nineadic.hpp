#pragma once

// Base-9 expansions of integers and the closed-form classification of the
// twisted cubic rabbits D_x^m R_3 (three post-critical points) and
// D_x^m R_n (n >= 4), together with the one-step reduction recursions that
// serve as independent oracles for the digit scans.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rabbit {

/// Least-significant-first base-9 digits. A negative integer has an infinite
/// tail of 8s after the listed digits (...888 = -1); the tail is absorbed
/// maximally, so the last listed digit is never 8 when negative_tail is set,
/// and never 0 otherwise.
struct DigitExpansion {
  std::vector<std::uint8_t> digits;
  bool negative_tail = false;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

DigitExpansion expand(std::int64_t m);
DigitExpansion expand(const mpz_class& m);

/// Σ d_i 9^i - 9^len when negative_tail is set.
mpz_class reconstruct(const DigitExpansion& e);

/// "108_9", "…88804_9", "…888_9" (= -1), "0_9".
std::string to_string(const DigitExpansion& e);

/// Thurston classes of unicritical cubics with three post-critical points:
/// rabbit, corabbit, airplane, coairplane.
enum class PolyClass3 : std::uint8_t { R3 = 0, CoR3 = 1, A3 = 2, CoA3 = 3 };

/// The nine families reached by D_x^m R_n for n >= 4.
enum class PolyClassN : std::uint8_t { Rn, An, CoAn, Kn1, Bn, CoYn, Kn2, Yn, CoBn };

std::string_view label(PolyClass3 c);
std::string_view label(PolyClassN c);
/// Kneading sequence / tree notes for a family (documentation only).
std::string_view family_notes(PolyClassN c);

PolyClass3 classify_power_3(const DigitExpansion& e);
inline PolyClass3 classify_power_3(std::int64_t m) { return classify_power_3(expand(m)); }
inline PolyClass3 classify_power_3(const mpz_class& m) { return classify_power_3(expand(m)); }

/// n only selects the label family; the answer is uniform in n >= 4.
PolyClassN classify_power_n(const DigitExpansion& e);
inline PolyClassN classify_power_n(std::int64_t m) { return classify_power_n(expand(m)); }
inline PolyClassN classify_power_n(const mpz_class& m) { return classify_power_n(expand(m)); }

// --- reduction recursions ---------------------------------------------------

/// Terminal twists of the n = 3 recursion. x_inv and id are the fixed points
/// m = -1 and m = 0.
enum class BaseTwist3 : std::uint8_t { x, x2, y, y2, x_inv2, x_inv, id };

/// Terminal twists of the n >= 4 recursion; y is a formal label here.
enum class BaseTwistN : std::uint8_t { x, x2, y, yx, y_inv_x_inv, y2, x_inv2, x_inv, id };

template <class Int>
struct ReducedPower {
  Int k;
  friend bool operator==(const ReducedPower&, const ReducedPower&) = default;
};

template <class Int>
using ReductionOutcome3 = std::variant<ReducedPower<Int>, BaseTwist3>;
template <class Int>
using ReductionOutcomeN = std::variant<ReducedPower<Int>, BaseTwistN>;

ReductionOutcome3<std::int64_t> reduce_once_3(std::int64_t m);
ReductionOutcome3<mpz_class> reduce_once_3(const mpz_class& m);
ReductionOutcomeN<std::int64_t> reduce_once_n(std::int64_t m);
ReductionOutcomeN<mpz_class> reduce_once_n(const mpz_class& m);

PolyClass3 base_class(BaseTwist3 t);
PolyClassN base_class(BaseTwistN t);
std::string_view to_string(BaseTwist3 t);
std::string_view to_string(BaseTwistN t);

/// Iterates the recursion to a terminal twist and maps it to its class.
PolyClass3 oracle_classify_3(std::int64_t m);
PolyClass3 oracle_classify_3(const mpz_class& m);
PolyClassN oracle_classify_n(std::int64_t m);
PolyClassN oracle_classify_n(const mpz_class& m);

}  // namespace rabbit
