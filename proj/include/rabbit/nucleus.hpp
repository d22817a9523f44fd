#pragma once

// Nucleus of the self-similar action defined by Φ.
//
// A self-similar action with finite symmetric generating set S (1 ∈ S) is
// contracting iff some finite 𝒩 and depth k satisfy ((S ∪ 𝒩)²)|_{X^k} ⊆ 𝒩.
// nucleus() searches for the smallest such set; verify_nucleus() checks the
// criterion directly for a candidate.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "rabbit/word.hpp"

namespace rabbit {

/// {id, x, x⁻¹, z, z⁻¹}.
std::vector<Word> standard_generating_set();

/// Every word reachable from `seeds` by iterated restriction (seeds included).
/// Throws BudgetExceeded past `budget` vertices.
std::set<Word> restriction_closure(const std::set<Word>& seeds, std::size_t budget = 10000);

/// Vertices of the restriction graph on `vertices` that lie on a cycle
/// (self-loops included) or are reachable from one. `vertices` must be
/// closed under restriction.
std::set<Word> recurrent_part(const std::set<Word>& vertices);

/// Symmetrizes `generators`, adds the identity, and alternates restriction
/// closure of N ∪ N² with recurrent-part pruning until N stops changing.
std::set<Word> nucleus(const std::vector<Word>& generators, std::size_t budget = 10000);

/// True iff every depth-k restriction of every product of two elements of
/// S ∪ candidate lies in candidate (S = standard_generating_set()).
bool verify_nucleus(const std::set<Word>& candidate, int depth);

/// Smallest k in 1..max_depth with verify_nucleus(candidate, k).
std::optional<int> verification_depth(const std::set<Word>& candidate, int max_depth = 8);

}  // namespace rabbit
