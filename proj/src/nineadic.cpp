#include "rabbit/nineadic.hpp"

#include <algorithm>

namespace rabbit {

namespace {

// Floor division by 9 with the remainder in [0, 8].
struct DivMod9 {
  static std::uint8_t split(std::int64_t& m) {
    const auto d = static_cast<std::uint8_t>(((m % 9) + 9) % 9);
    m = (m - d) / 9;
    return d;
  }
  static std::uint8_t split(mpz_class& m) {
    mpz_class q;
    const auto d = static_cast<std::uint8_t>(mpz_fdiv_q_ui(q.get_mpz_t(), m.get_mpz_t(), 9));
    m = std::move(q);
    return d;
  }
};

template <class Int>
DigitExpansion expand_impl(Int m) {
  DigitExpansion e;
  while (m != 0 && m != -1) e.digits.push_back(DivMod9::split(m));
  e.negative_tail = (m == -1);
  return e;
}

template <class Int>
ReductionOutcome3<Int> reduce_once_3_impl(Int m) {
  if (m == 0) return BaseTwist3::id;
  if (m == -1) return BaseTwist3::x_inv;
  const std::uint8_t r = DivMod9::split(m);
  switch (r) {
    case 0:
    case 4:
    case 8: return ReducedPower<Int>{std::move(m)};
    case 1:
    case 5: return BaseTwist3::x;
    case 2: return BaseTwist3::x2;
    case 3: return BaseTwist3::y;
    case 6: return BaseTwist3::y2;
    default: return BaseTwist3::x_inv2;
  }
}

template <class Int>
ReductionOutcomeN<Int> reduce_once_n_impl(Int m) {
  if (m == 0) return BaseTwistN::id;
  const std::uint8_t r = DivMod9::split(m);
  static constexpr BaseTwistN kByResidue[9] = {
      BaseTwistN::id,  // unused: residue 0 reduces to a power
      BaseTwistN::x,   BaseTwistN::x2,     BaseTwistN::y,
      BaseTwistN::yx,  BaseTwistN::y_inv_x_inv, BaseTwistN::y2,
      BaseTwistN::x_inv2, BaseTwistN::x_inv};
  if (r == 0) return ReducedPower<Int>{std::move(m)};
  return kByResidue[r];
}

template <class Int, class Outcome, class Reduce>
auto iterate_to_base(Int m, Reduce reduce) {
  for (;;) {
    Outcome step = reduce(m);
    if (auto* p = std::get_if<0>(&step)) {
      m = std::move(p->k);
      continue;
    }
    return std::get<1>(step);
  }
}

}  // namespace

DigitExpansion expand(std::int64_t m) { return expand_impl(m); }
DigitExpansion expand(const mpz_class& m) { return expand_impl(mpz_class(m)); }

mpz_class reconstruct(const DigitExpansion& e) {
  mpz_class value = 0;
  mpz_class place = 1;
  for (std::uint8_t d : e.digits) {
    value += place * d;
    place *= 9;
  }
  if (e.negative_tail) value -= place;
  return value;
}

std::string to_string(const DigitExpansion& e) {
  std::string out;
  if (e.negative_tail) out = "…888";
  for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) {
    out += static_cast<char>('0' + *it);
  }
  if (out.empty()) out = "0";
  return out + "_9";
}

std::string_view label(PolyClass3 c) {
  switch (c) {
    case PolyClass3::R3: return "R3";
    case PolyClass3::CoR3: return "coR3";
    case PolyClass3::A3: return "A3";
    case PolyClass3::CoA3: return "coA3";
  }
  return "?";
}

std::string_view label(PolyClassN c) {
  switch (c) {
    case PolyClassN::Rn: return "Rn";
    case PolyClassN::An: return "An";
    case PolyClassN::CoAn: return "coAn";
    case PolyClassN::Kn1: return "Kn1";
    case PolyClassN::Bn: return "Bn";
    case PolyClassN::CoYn: return "coYn";
    case PolyClassN::Kn2: return "Kn2";
    case PolyClassN::Yn: return "Yn";
    case PolyClassN::CoBn: return "coBn";
  }
  return "?";
}

std::string_view family_notes(PolyClassN c) {
  switch (c) {
    case PolyClassN::Rn: return "many-eared rabbit; n-pod Hubbard tree rotated counterclockwise; kneading (11...1*)";
    case PolyClassN::An: return "airplane family; path tree, angle 2pi/3 at the critical point; kneading (122...2*)";
    case PolyClassN::CoAn: return "conjugate airplane family; angle 4pi/3; kneading (10...0*)";
    case PolyClassN::Kn1: return "K family, angle 2pi/3 between e1 and e2; kneading (1...10*)";
    case PolyClassN::Bn: return "B family; path tree, angle 2pi/3 between e2 and e3; kneading (12...21*)";
    case PolyClassN::CoYn: return "conjugate Y family; trivalent critical point; kneading (10...02*)";
    case PolyClassN::Kn2: return "K family, angle 4pi/3 between e1 and e2; kneading (1...12*)";
    case PolyClassN::Yn: return "Y family; trivalent critical point; kneading (120...0*)";
    case PolyClassN::CoBn: return "conjugate B family; angle 4pi/3 between e2 and e3";
  }
  return "";
}

PolyClass3 classify_power_3(const DigitExpansion& e) {
  for (std::uint8_t d : e.digits) {
    switch (d) {
      case 0:
      case 4:
      case 8: continue;
      case 1:
      case 5:
      case 6: return PolyClass3::A3;
      default: return PolyClass3::CoA3;
    }
  }
  return e.negative_tail ? PolyClass3::CoR3 : PolyClass3::R3;
}

PolyClassN classify_power_n(const DigitExpansion& e) {
  static constexpr PolyClassN kByDigit[9] = {
      PolyClassN::Rn,  PolyClassN::An,  PolyClassN::CoAn, PolyClassN::Kn1, PolyClassN::Bn,
      PolyClassN::CoYn, PolyClassN::Kn2, PolyClassN::Yn,   PolyClassN::CoBn};
  auto it = std::find_if(e.digits.begin(), e.digits.end(), [](std::uint8_t d) { return d != 0; });
  if (it != e.digits.end()) return kByDigit[*it];
  return e.negative_tail ? PolyClassN::CoBn : PolyClassN::Rn;
}

ReductionOutcome3<std::int64_t> reduce_once_3(std::int64_t m) { return reduce_once_3_impl(m); }
ReductionOutcome3<mpz_class> reduce_once_3(const mpz_class& m) {
  return reduce_once_3_impl(mpz_class(m));
}
ReductionOutcomeN<std::int64_t> reduce_once_n(std::int64_t m) { return reduce_once_n_impl(m); }
ReductionOutcomeN<mpz_class> reduce_once_n(const mpz_class& m) {
  return reduce_once_n_impl(mpz_class(m));
}

PolyClass3 base_class(BaseTwist3 t) {
  switch (t) {
    case BaseTwist3::id: return PolyClass3::R3;
    case BaseTwist3::x_inv: return PolyClass3::CoR3;
    case BaseTwist3::x:
    case BaseTwist3::y2: return PolyClass3::A3;
    case BaseTwist3::x2:
    case BaseTwist3::y:
    case BaseTwist3::x_inv2: return PolyClass3::CoA3;
  }
  return PolyClass3::R3;
}

PolyClassN base_class(BaseTwistN t) {
  switch (t) {
    case BaseTwistN::id: return PolyClassN::Rn;
    case BaseTwistN::x: return PolyClassN::An;
    case BaseTwistN::x2: return PolyClassN::CoAn;
    case BaseTwistN::y: return PolyClassN::Kn1;
    case BaseTwistN::yx: return PolyClassN::Bn;
    case BaseTwistN::y_inv_x_inv: return PolyClassN::CoYn;
    case BaseTwistN::y2: return PolyClassN::Kn2;
    case BaseTwistN::x_inv2: return PolyClassN::Yn;
    case BaseTwistN::x_inv: return PolyClassN::CoBn;
  }
  return PolyClassN::Rn;
}

std::string_view to_string(BaseTwist3 t) {
  switch (t) {
    case BaseTwist3::x: return "x";
    case BaseTwist3::x2: return "x^2";
    case BaseTwist3::y: return "y";
    case BaseTwist3::y2: return "y^2";
    case BaseTwist3::x_inv2: return "x^-2";
    case BaseTwist3::x_inv: return "x^-1";
    case BaseTwist3::id: return "id";
  }
  return "?";
}

std::string_view to_string(BaseTwistN t) {
  switch (t) {
    case BaseTwistN::x: return "x";
    case BaseTwistN::x2: return "x^2";
    case BaseTwistN::y: return "y";
    case BaseTwistN::yx: return "y x";
    case BaseTwistN::y_inv_x_inv: return "y^-1 x^-1";
    case BaseTwistN::y2: return "y^2";
    case BaseTwistN::x_inv2: return "x^-2";
    case BaseTwistN::x_inv: return "x^-1";
    case BaseTwistN::id: return "id";
  }
  return "?";
}

PolyClass3 oracle_classify_3(std::int64_t m) {
  return base_class(iterate_to_base<std::int64_t, ReductionOutcome3<std::int64_t>>(
      m, [](std::int64_t v) { return reduce_once_3(v); }));
}
PolyClass3 oracle_classify_3(const mpz_class& m) {
  return base_class(iterate_to_base<mpz_class, ReductionOutcome3<mpz_class>>(
      m, [](const mpz_class& v) { return reduce_once_3(v); }));
}
PolyClassN oracle_classify_n(std::int64_t m) {
  return base_class(iterate_to_base<std::int64_t, ReductionOutcomeN<std::int64_t>>(
      m, [](std::int64_t v) { return reduce_once_n(v); }));
}
PolyClassN oracle_classify_n(const mpz_class& m) {
  return base_class(iterate_to_base<mpz_class, ReductionOutcomeN<mpz_class>>(
      m, [](const mpz_class& v) { return reduce_once_n(v); }));
}

}  // namespace rabbit
