#include "rabbit/wreath.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rabbit/errors.hpp"

namespace rabbit {

Perm3::Perm3(std::array<int, 3> images) {
  std::array<bool, 3> seen{};
  for (std::size_t i = 0; i < 3; ++i) {
    const int v = images[i];
    if (v < 1 || v > 3 || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of {1,2,3}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    images_[i] = static_cast<std::uint8_t>(v);
  }
}

Perm3 Perm3::rho() { return Perm3({3, 1, 2}); }

Perm3 Perm3::inverse() const noexcept {
  Perm3 p;
  for (std::uint8_t i = 0; i < 3; ++i) p.images_[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return p;
}

std::optional<int> Perm3::rho_exponent() const noexcept {
  const Perm3 r = rho();
  if (is_identity()) return 0;
  if (*this == r) return 1;
  if (*this == r * r) return 2;
  return std::nullopt;
}

Perm3 operator*(Perm3 s, Perm3 t) noexcept {
  Perm3 p;
  for (std::size_t i = 0; i < 3; ++i) p.images_[i] = s.images_[t.images_[i] - 1];
  return p;
}

WreathElement& WreathElement::operator*=(const WreathElement& rhs) {
  if (this == &rhs) {
    const WreathElement copy = rhs;
    return *this *= copy;
  }
  const Perm3 t = rhs.perm;
  std::array<Word, 3> next = {std::move(coords[static_cast<std::size_t>(t(1) - 1)]),
                              std::move(coords[static_cast<std::size_t>(t(2) - 1)]),
                              std::move(coords[static_cast<std::size_t>(t(3) - 1)])};
  for (std::size_t i = 0; i < 3; ++i) next[i] *= rhs.coords[i];
  coords = std::move(next);
  perm = perm * t;
  return *this;
}

WreathElement WreathElement::inverse() const {
  const Perm3 inv = perm.inverse();
  WreathElement out;
  out.perm = inv;
  for (int i = 1; i <= 3; ++i) {
    out.coords[static_cast<std::size_t>(i - 1)] = at(inv(i)).inverse();
  }
  return out;
}

WreathElement WreathElement::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  WreathElement result;
  WreathElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string to_string(const WreathElement& e) {
  std::string out;
  switch (e.perm.rho_exponent().value_or(-1)) {
    case 0: break;
    case 1: out = "ρ"; break;
    case 2: out = "ρ²"; break;
    default:
      out = "(" + std::to_string(e.perm(1)) + std::to_string(e.perm(2)) +
            std::to_string(e.perm(3)) + ")";
  }
  out += "⟨⟨" + display(e.at(3)) + ", " + display(e.at(2)) + ", " + display(e.at(1)) + "⟩⟩";
  return out;
}

namespace {

const Word& y_word() {
  static const Word y = Word::power(Generator::x, -1) * Word::power(Generator::z, -1);
  return y;
}

std::array<WreathElement, 4> make_generator_images() {
  WreathElement px;
  px.perm = Perm3::rho();
  px.coords[2] = y_word();
  WreathElement pz;
  pz.coords[0] = Word::letter(Letter::x);
  return {px, px.inverse(), pz, pz.inverse()};
}

// Φ(g^e) without a letter-by-letter product: Φ(x³) = ⟨⟨y, y, y⟩⟩ is central
// in the coordinate sense, so Φ(x^(3q+r)) = ⟨⟨y^q, y^q, y^q⟩⟩ Φ(x)^r.
WreathElement phi_syllable(const Syllable& s) {
  WreathElement out;
  if (s.gen == Generator::z) {
    out.coords[0] = Word::power(Generator::x, s.exp);
    return out;
  }
  std::int64_t q = s.exp / 3;
  std::int64_t r = s.exp % 3;
  if (r < 0) {
    r += 3;
    --q;
  }
  const Word yq = y_word().pow(q);
  out.coords = {yq, yq, yq};
  for (std::int64_t i = 0; i < r; ++i) out *= phi(Letter::x);
  return out;
}

}  // namespace

const WreathElement& phi(Letter l) {
  static const std::array<WreathElement, 4> images = make_generator_images();
  return images[static_cast<std::size_t>(l)];
}

WreathElement phi(const Word& w) {
  const auto syl = w.syllables();
  const std::size_t n = syl.size();
  WreathElement result;
  std::size_t i = 0;
  while (i < n) {
    if (i + 3 < n && syl[i] == syl[i + 2] && syl[i + 1] == syl[i + 3]) {
      std::size_t reps = 2;
      while (i + 2 * reps + 1 < n && syl[i + 2 * reps] == syl[i] &&
             syl[i + 2 * reps + 1] == syl[i + 1]) {
        ++reps;
      }
      WreathElement block = phi_syllable(syl[i]);
      block *= phi_syllable(syl[i + 1]);
      result *= block.pow(static_cast<std::int64_t>(reps));
      i += 2 * reps;
    } else {
      result *= phi_syllable(syl[i]);
      ++i;
    }
  }
  return result;
}

Word restriction(const Word& w, int i) {
  if (i < 1 || i > 3) throw std::out_of_range("restriction index must be 1, 2 or 3");
  WreathElement e = phi(w);
  return std::move(e.coords[static_cast<std::size_t>(i - 1)]);
}

Word restriction_path(const Word& w, std::span<const int> path) {
  Word current = w;
  for (auto it = path.rbegin(); it != path.rend(); ++it) current = restriction(current, *it);
  return current;
}

bool liftable(const Word& w) { return phi(w).perm.is_identity(); }

Word psi_bar(const WreathElement& phi_of_w) {
  const auto k = phi_of_w.perm.rho_exponent();
  if (!k) throw InconsistencyError("Φ image has a permutation outside ⟨ρ⟩");
  Word r = phi_of_w.at(1);
  if (*k == 1) r.push_back(Generator::x, 1);
  if (*k == 2) r.push_back(Generator::x, -1);
  return r;
}

namespace {

// (Φ(x)^r)|_i for r in {0, 1, 2}, indexed [r][i-1].
const std::array<std::array<Word, 3>, 3>& x_residue_coords() {
  static const auto table = [] {
    std::array<std::array<Word, 3>, 3> t;
    WreathElement e;
    for (std::size_t r = 0; r < 3; ++r) {
      t[r] = e.coords;
      e *= phi(Letter::x);
    }
    return t;
  }();
  return table;
}

// ρ^k(1) for k in {0, 1, 2}.
constexpr int kRhoPowerOfOne[3] = {1, 3, 2};

int mod3(std::int64_t v) { return static_cast<int>(((v % 3) + 3) % 3); }

// Restriction of one syllable at coordinate i.
void append_syllable_restriction(Word& out, const Syllable& s, int i) {
  static const Word y_inv = y_word().inverse();
  if (s.gen == Generator::z) {
    if (i == 1) out.push_back(Generator::x, s.exp);
    return;
  }
  std::int64_t q = s.exp / 3;
  int r = static_cast<int>(s.exp % 3);
  if (r < 0) {
    r += 3;
    --q;
  }
  out.append_power(q < 0 ? y_inv : y_word(), q < 0 ? -q : q);
  out *= x_residue_coords()[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)];
}

int x_residue(const Syllable& s) { return s.gen == Generator::x ? mod3(s.exp) : 0; }

}  // namespace

// Builds only the first coordinate: g = s_1 ... s_n gives
// g|_1 = s_1|_{i_1} ... s_n|_{i_n} with i_k = ρ^(x-exponent of s_{k+1}...s_n)(1).
// A run of R repeated syllable pairs contributes a pattern of period 3 in the
// pair index, so it is emitted as a power of three consecutive contributions.
Word psi_bar(const Word& w) {
  const auto syl = w.syllables();
  const std::size_t n = syl.size();
  std::vector<std::uint8_t> suffix(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) {
    suffix[k] = static_cast<std::uint8_t>((suffix[k + 1] + x_residue(syl[k])) % 3);
  }
  Word out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t reps = 1;
    if (k + 3 < n && syl[k] == syl[k + 2] && syl[k + 1] == syl[k + 3]) {
      reps = 2;
      while (k + 2 * reps + 1 < n && syl[k + 2 * reps] == syl[k] &&
             syl[k + 2 * reps + 1] == syl[k + 1]) {
        ++reps;
      }
    }
    if (reps < 6) {
      append_syllable_restriction(out, syl[k], kRhoPowerOfOne[suffix[k + 1]]);
      ++k;
      continue;
    }
    const auto pair = [&](std::size_t j) {
      const std::size_t a = k + 2 * j;
      append_syllable_restriction(out, syl[a], kRhoPowerOfOne[suffix[a + 1]]);
      append_syllable_restriction(out, syl[a + 1], kRhoPowerOfOne[suffix[a + 2]]);
    };
    const std::size_t lead = reps % 3;
    for (std::size_t j = 0; j < lead; ++j) pair(j);
    Word period;
    std::swap(out, period);
    for (std::size_t j = lead; j < lead + 3; ++j) pair(j);
    std::swap(out, period);
    out.append_power(period, static_cast<std::int64_t>((reps - lead) / 3));
    k += 2 * reps;
  }
  if (suffix[0] == 1) out.push_back(Generator::x, 1);
  if (suffix[0] == 2) out.push_back(Generator::x, -1);
  return out;
}

std::span<const TerminalState3> whole_word_terminals() {
  static const std::vector<TerminalState3> table = {
      {Word::identity(), PolyClass3::R3},
      {parse("x"), PolyClass3::A3},
      {parse("x^-1"), PolyClass3::CoR3},
      {parse("z x^2"), PolyClass3::CoA3},
      {parse("x^-1 z^-1 x^-1"), PolyClass3::CoA3},
  };
  return table;
}

std::optional<PolyClass3> whole_word_terminal_class(const Word& w) {
  if (w.length() > 3) return std::nullopt;
  for (const auto& t : whole_word_terminals()) {
    if (t.word == w) return t.cls;
  }
  return std::nullopt;
}

namespace {

PolyClass3 iterate_psi_bar(const Word& w, const WreathElement* phi_of_w, const TraceFn& trace) {
  const std::int64_t bound = std::max<std::int64_t>(64, 4 * w.length());
  std::vector<Word> short_seen;
  Word current = w;
  for (std::int64_t iter = 0; iter <= bound; ++iter) {
    if (trace) trace(current);
    if (auto cls = whole_word_terminal_class(current)) return *cls;
    if (current.length() < 8) {
      if (std::find(short_seen.begin(), short_seen.end(), current) != short_seen.end()) {
        throw InconsistencyError("ψ̄ entered a non-terminal cycle at " + display(current) +
                                 " starting from " + display(w));
      }
      short_seen.push_back(current);
    }
    current = (iter == 0 && phi_of_w) ? psi_bar(*phi_of_w) : psi_bar(current);
  }
  throw InconsistencyError("ψ̄ iteration bound exceeded for " + display(w));
}

}  // namespace

PolyClass3 classify_whole_word(const Word& w, const TraceFn& trace) {
  return iterate_psi_bar(w, nullptr, trace);
}

PolyClass3 classify_whole_word(const Word& w, const WreathElement& phi_of_w) {
  return iterate_psi_bar(w, &phi_of_w, {});
}

}  // namespace rabbit
