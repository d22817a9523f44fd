#pragma once

// Class census over the ball of radius ℓ: classify every reduced word of
// length <= ℓ and tally the four classes per cumulative radius.

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rabbit/nineadic.hpp"

namespace rabbit {

enum class Algorithm : std::uint8_t { whole_word, prefix, both };

std::string_view to_string(Algorithm a);
/// "whole-word" | "prefix" | "both"; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view text);

/// Counts indexed by PolyClass3: R3, coR3, A3, coA3.
using ClassCounts = std::array<std::uint64_t, 4>;

struct CensusReport {
  int max_len = 0;
  Algorithm algorithm = Algorithm::both;
  /// rows[r] counts every word of length <= r.
  std::vector<ClassCounts> rows;
  std::chrono::duration<double> elapsed{0};
};

/// Throws std::invalid_argument for max_len < 0 or workers < 1, and
/// InconsistencyError (naming the word) when the two algorithms disagree.
/// The tallies do not depend on `workers`.
CensusReport run_census(int max_len, Algorithm algorithm, int workers = 1);

/// "ell,R3,coR3,A3,coA3,total" then one LF-terminated row per radius.
std::string export_csv(const CensusReport& report);

/// Aligned table with one row per class and one column per radius.
std::string export_table(const CensusReport& report);

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Per-radius class frequencies as fractions of the ball size (unreduced).
std::vector<std::array<Ratio, 4>> ratio_trend(const CensusReport& report);

}  // namespace rabbit
