#include "rabbit/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace rabbit {

std::uint64_t sphere_size(int length) {
  if (length < 0) throw std::invalid_argument("negative length");
  if (length == 0) return 1;
  std::uint64_t n = 4;
  for (int i = 1; i < length; ++i) n *= 3;
  return n;
}

std::uint64_t ball_size(int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  std::uint64_t p = 1;
  for (int i = 0; i < radius; ++i) p *= 3;
  return 2 * p - 1;
}

std::vector<Word> ball(int radius) {
  std::vector<Word> out;
  out.reserve(ball_size(radius));
  for_each_in_ball(radius, [&](const Word& w) { out.push_back(w); });
  return out;
}

BallPartition partition_ball(int radius, int root_length) {
  BallPartition part;
  for_each_in_ball(std::min(radius, root_length), [&](const Word& w) {
    if (w.length() < root_length || radius < root_length) {
      part.short_words.push_back(w);
    } else {
      part.roots.push_back(w);
    }
  });
  return part;
}

}  // namespace rabbit
