#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace rabbit {

/// Malformed word text. position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string token)
      : std::runtime_error(what), position_(position), token_(std::move(token)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

/// Two algorithms disagreed, an iteration bound tripped, or a rewrite reached
/// a word outside its terminal table. Always a bug, never an answer.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Nucleus search grew past its vertex budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rabbit
