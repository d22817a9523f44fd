#pragma once

// Enumeration of the ball of radius ℓ in the rank-2 free group.
//
// Order is depth-first preorder over the reduced-word tree, appending letters
// on the right in the order x, x^-1, z, z^-1 and never undoing the last letter.

#include <array>
#include <cstdint>
#include <vector>

#include "rabbit/word.hpp"

namespace rabbit {

inline constexpr std::array<Letter, 4> kLetterOrder = {Letter::x, Letter::x_inv,
                                                       Letter::z, Letter::z_inv};

/// Number of reduced words of length <= radius: 2·3^radius - 1 (1 at radius 0).
std::uint64_t ball_size(int radius);

/// Number of reduced words of length exactly `length`.
std::uint64_t sphere_size(int length);

namespace detail {

template <class Visitor>
void visit_subtree(Word& w, int radius, Visitor& visit) {
  visit(static_cast<const Word&>(w));
  if (w.length() >= radius) return;
  const bool has_last = !w.is_identity();
  const Letter forbidden = has_last ? inverse_of(w.back_letter()) : Letter::x;
  for (Letter l : kLetterOrder) {
    if (has_last && l == forbidden) continue;
    w.push_back(l);
    visit_subtree(w, radius, visit);
    w.pop_back_letter();
  }
}

}  // namespace detail

/// Calls visit(const Word&) once for every word of length <= radius that has
/// `root` as a left factor (root itself included).
template <class Visitor>
void for_each_in_subtree(const Word& root, int radius, Visitor&& visit) {
  if (root.length() > radius) return;
  Word w = root;
  detail::visit_subtree(w, radius, visit);
}

template <class Visitor>
void for_each_in_ball(int radius, Visitor&& visit) {
  for_each_in_subtree(Word::identity(), radius, visit);
}

std::vector<Word> ball(int radius);

/// Independent pieces of ball(radius): `short_words` are visited directly,
/// every `roots` entry is expanded with for_each_in_subtree. Together they
/// cover each word exactly once.
struct BallPartition {
  std::vector<Word> short_words;
  std::vector<Word> roots;
};

BallPartition partition_ball(int radius, int root_length = 2);

}  // namespace rabbit
