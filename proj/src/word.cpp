#include "rabbit/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "rabbit/errors.hpp"

namespace rabbit {

namespace {

std::int32_t checked_exp(std::int64_t e) {
  if (e > std::numeric_limits<std::int32_t>::max() ||
      e < -std::numeric_limits<std::int32_t>::max()) {
    throw std::out_of_range("word exponent out of range");
  }
  return static_cast<std::int32_t>(e);
}

int letter_rank(Generator g, std::int32_t exp) {
  return 2 * static_cast<int>(g) + (exp < 0 ? 1 : 0);
}

}  // namespace

Word Word::letter(Letter l) {
  Word w;
  w.push_back(l);
  return w;
}

Word Word::power(Generator g, std::int64_t e) {
  Word w;
  w.push_back(g, e);
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) w.push_back(s.gen, s.exp);
  return w;
}

void Word::push_back(Generator g, std::int64_t e) {
  if (e == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == g) {
    auto& last = syllables_.back();
    const std::int64_t merged = static_cast<std::int64_t>(last.exp) + e;
    length_ += std::llabs(merged) - std::llabs(last.exp);
    if (merged == 0) {
      syllables_.pop_back();
    } else {
      last.exp = checked_exp(merged);
    }
    return;
  }
  syllables_.push_back({checked_exp(e), g});
  length_ += std::llabs(e);
}

void Word::pop_back_letter() {
  auto& last = syllables_.back();
  last.exp += last.exp > 0 ? -1 : 1;
  --length_;
  if (last.exp == 0) syllables_.pop_back();
}

Letter Word::back_letter() const noexcept {
  const auto& last = syllables_.back();
  const auto base = static_cast<std::uint8_t>(last.gen) * 2u;
  return static_cast<Letter>(base + (last.exp < 0 ? 1u : 0u));
}

Word& Word::operator*=(const Word& rhs) {
  if (this == &rhs) {
    const Word copy = rhs;
    return *this *= copy;
  }
  // Cancel across the junction, then append the untouched rest in bulk.
  std::size_t j = 0;
  std::int64_t appended = rhs.length_;
  while (j < rhs.syllables_.size() && !syllables_.empty() &&
         syllables_.back().gen == rhs.syllables_[j].gen) {
    Syllable& last = syllables_.back();
    const std::int32_t e = rhs.syllables_[j].exp;
    const std::int64_t before = std::abs(static_cast<std::int64_t>(last.exp));
    const std::int64_t merged = static_cast<std::int64_t>(last.exp) + e;
    if (merged > std::numeric_limits<std::int32_t>::max() ||
        merged < std::numeric_limits<std::int32_t>::min()) {
      throw std::out_of_range("syllable exponent overflow");
    }
    length_ += std::abs(merged) - before;
    appended -= std::abs(static_cast<std::int64_t>(e));
    ++j;
    if (merged != 0) {
      last.exp = static_cast<std::int32_t>(merged);
      break;
    }
    syllables_.pop_back();
  }
  syllables_.insert(syllables_.end(), rhs.syllables_.begin() + static_cast<std::ptrdiff_t>(j),
                    rhs.syllables_.end());
  length_ += appended;
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({static_cast<std::int32_t>(-it->exp), it->gen});
  }
  w.length_ = length_;
  return w;
}

Word Word::pow(std::int64_t k) const {
  Word result;
  if (k < 0) {
    result.append_power(inverse(), -k);
  } else {
    result.append_power(*this, k);
  }
  return result;
}

void Word::append_power(const Word& base, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("append_power needs k >= 0");
  if (k == 0 || base.is_identity()) return;
  if (this == &base) {
    const Word copy = base;
    append_power(copy, k);
    return;
  }
  const auto& b = base.syllables_;
  if (b.size() == 1) {
    const std::int64_t e = b[0].exp;
    if (k > std::numeric_limits<std::int32_t>::max() / std::llabs(e)) {
      throw std::out_of_range("syllable exponent overflow");
    }
    push_back(b[0].gen, e * k);
    return;
  }
  if (b.front().gen == b.back().gen) {
    for (std::int64_t j = 0; j < k; ++j) *this *= base;
    return;
  }
  // Copies of a cyclically reduced base never cancel with each other, so
  // base^k is a plain concatenation; only its junction with *this reduces.
  Word block;
  block.syllables_.resize(b.size() * static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j) {
    std::copy(b.begin(), b.end(),
              block.syllables_.begin() + static_cast<std::ptrdiff_t>(b.size() * static_cast<std::size_t>(j)));
  }
  block.length_ = base.length_ * k;
  if (is_identity()) {
    *this = std::move(block);
  } else {
    *this *= block;
  }
}

std::int64_t Word::exponent_sum(Generator g) const noexcept {
  std::int64_t sum = 0;
  for (const auto& s : syllables_) {
    if (s.gen == g) sum += s.exp;
  }
  return sum;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& s : w.syllables()) {
    const auto v = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.exp)) << 1) |
                   static_cast<std::uint64_t>(s.gen);
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  auto sa = a.syllables();
  auto sb = b.syllables();
  std::size_t i = 0, j = 0;
  std::int64_t left_a = sa.empty() ? 0 : std::llabs(sa[0].exp);
  std::int64_t left_b = sb.empty() ? 0 : std::llabs(sb[0].exp);
  while (i < sa.size() && j < sb.size()) {
    const int ra = letter_rank(sa[i].gen, sa[i].exp);
    const int rb = letter_rank(sb[j].gen, sb[j].exp);
    if (ra != rb) return ra < rb;
    const std::int64_t step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++i < sa.size()) left_a = std::llabs(sa[i].exp);
    if (left_b == 0 && ++j < sb.size()) left_b = std::llabs(sb[j].exp);
  }
  return false;
}

Word parse(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    Generator g;
    int sign;
    switch (text[pos]) {
      case 'x': g = Generator::x; sign = 1; break;
      case 'X': g = Generator::x; sign = -1; break;
      case 'z': g = Generator::z; sign = 1; break;
      case 'Z': g = Generator::z; sign = -1; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                             "' at position " + std::to_string(pos),
                         pos, std::string(1, text[pos]));
    }
    ++pos;
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      const std::size_t digits_start = pos;
      std::int64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > std::numeric_limits<std::int32_t>::max()) {
          throw ParseError("exponent out of range at position " + std::to_string(digits_start),
                           digits_start, std::string(text.substr(start, pos + 1 - start)));
        }
        ++pos;
      }
      if (pos == digits_start) {
        const std::string tok = pos < text.size() ? std::string(1, text[pos]) : std::string("<end>");
        throw ParseError("expected digits after '^' at position " + std::to_string(pos), pos, tok);
      }
      if (value == 0) {
        throw ParseError("zero exponent at position " + std::to_string(digits_start),
                         digits_start, std::string(text.substr(start, pos - start)));
      }
      exp = negative ? -value : value;
    }
    w.push_back(g, sign * exp);
  }
  return w;
}

std::string format(const Word& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.gen == Generator::x ? 'x' : 'z';
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

std::string display(const Word& w) { return w.is_identity() ? std::string("id") : format(w); }

}  // namespace rabbit
