#include "eulersum/closed_form.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eulersum/specfun.hpp"

namespace eulersum {
namespace {

constexpr double kPi = 3.14159265358979323846;

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational normalize(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (num == 0) return Rational{0, 1};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd128(uabs128(num), u128(den));
  num /= i128(g);
  den /= i128(g);
  constexpr i128 lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim)
    throw std::overflow_error("rational: component exceeds 64-bit range");
  return Rational{(std::int64_t)num, (std::int64_t)den};
}

}  // namespace

Rational rational(std::int64_t num, std::int64_t den) {
  return normalize(i128(num), i128(den));
}

Rational rat_add(const Rational& a, const Rational& b) {
  return normalize(i128(a.num) * b.den + i128(b.num) * a.den,
                   i128(a.den) * b.den);
}

Rational rat_sub(const Rational& a, const Rational& b) {
  return normalize(i128(a.num) * b.den - i128(b.num) * a.den,
                   i128(a.den) * b.den);
}

Rational rat_mul(const Rational& a, const Rational& b) {
  return normalize(i128(a.num) * b.num, i128(a.den) * b.den);
}

Rational rat_neg(const Rational& a) { return Rational{-a.num, a.den}; }

bool rat_less(const Rational& a, const Rational& b) {
  return i128(a.num) * b.den < i128(b.num) * a.den;
}

double rat_to_double(const Rational& a) {
  return (double)a.num / (double)a.den;
}

std::string rat_to_string(const Rational& a) {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

BasisConstant BasisConstant::one() { return BasisConstant{Kind::One, 0, {}}; }

BasisConstant BasisConstant::zeta(int m) {
  if (m < 2) throw std::domain_error("BasisConstant::zeta: order must be >= 2");
  return BasisConstant{Kind::Zeta, m, {}};
}

BasisConstant BasisConstant::pi_cl2(const Rational& angle) {
  return BasisConstant{Kind::PiCl2, 0, angle};
}

bool BasisLess::operator()(const BasisConstant& a, const BasisConstant& b) const {
  const int ra = (int)a.kind;
  const int rb = (int)b.kind;
  if (ra != rb) return ra < rb;
  if (a.kind == BasisConstant::Kind::Zeta) return a.zeta_order < b.zeta_order;
  if (a.kind == BasisConstant::Kind::PiCl2) return rat_less(a.angle, b.angle);
  return false;
}

AngleReduction canonicalize_angle(const Rational& a) {
  // a mod 2 via floor division of num by 2*den.
  i128 num = a.num, den = a.den;
  i128 q = num / (2 * den);
  if (num % (2 * den) != 0 && (num < 0)) q -= 1;
  Rational r = normalize(num - q * 2 * den, den);  // in [0, 2)

  Rational factor = rational(1);
  if (rat_less(rational(1), r)) {  // reflect (1,2) -> (0,1), Cl2 odd + periodic
    r = rat_sub(rational(2), r);
    factor = rational(-1);
  }
  if (r.num == 0 || (r.num == 1 && r.den == 1))
    return AngleReduction{rational(0), std::nullopt};
  if (r.num == 2 && r.den == 3) {  // duplication: Cl2(2pi/3) = (2/3) Cl2(pi/3)
    factor = rat_mul(factor, rational(2, 3));
    r = rational(1, 3);
  }
  return AngleReduction{factor, r};
}

ClosedForm ClosedForm::constant(const Rational& value) {
  return term(BasisConstant::one(), value);
}

ClosedForm ClosedForm::term(const BasisConstant& basis, const Rational& coeff) {
  ClosedForm cf;
  if (coeff.num == 0) return cf;
  if (basis.kind == BasisConstant::Kind::PiCl2) {
    const AngleReduction red = canonicalize_angle(basis.angle);
    if (!red.angle) return cf;
    const Rational c = rat_mul(coeff, red.factor);
    if (c.num == 0) return cf;
    cf.terms_.emplace(BasisConstant{BasisConstant::Kind::PiCl2, 0, *red.angle}, c);
    return cf;
  }
  if (basis.kind == BasisConstant::Kind::Zeta && basis.zeta_order < 2)
    throw std::domain_error("ClosedForm::term: zeta order must be >= 2");
  cf.terms_.emplace(basis, coeff);
  return cf;
}

ClosedForm cf_add(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm out = a;
  for (const auto& [basis, coeff] : b.terms_) {
    auto it = out.terms_.find(basis);
    if (it == out.terms_.end()) {
      out.terms_.emplace(basis, coeff);
    } else {
      it->second = rat_add(it->second, coeff);
      if (it->second.num == 0) out.terms_.erase(it);
    }
  }
  return out;
}

ClosedForm cf_scale(const ClosedForm& a, const Rational& s) {
  ClosedForm out;
  if (s.num == 0) return out;
  for (const auto& [basis, coeff] : a.terms_)
    out.terms_.emplace(basis, rat_mul(coeff, s));
  return out;
}

bool cf_equal(const ClosedForm& a, const ClosedForm& b) { return a == b; }

double cf_eval(const ClosedForm& a) {
  double s = 0.0;
  for (const auto& [basis, coeff] : a.terms()) {
    double v = 0.0;
    switch (basis.kind) {
      case BasisConstant::Kind::One:
        v = 1.0;
        break;
      case BasisConstant::Kind::Zeta:
        v = zeta_int(basis.zeta_order);
        break;
      case BasisConstant::Kind::PiCl2:
        v = kPi * clausen2(rat_to_double(basis.angle) * kPi);
        break;
    }
    s += rat_to_double(coeff) * v;
  }
  return s;
}

std::string cf_render(const ClosedForm& a) {
  if (a.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [basis, coeff] : a.terms()) {
    const bool neg = coeff.num < 0;
    const Rational mag = neg ? rat_neg(coeff) : coeff;
    std::string body;
    switch (basis.kind) {
      case BasisConstant::Kind::One:
        body = rat_to_string(mag);
        break;
      case BasisConstant::Kind::Zeta:
        body = "zeta(" + std::to_string(basis.zeta_order) + ")";
        if (!(mag.num == 1 && mag.den == 1))
          body = rat_to_string(mag) + "*" + body;
        break;
      case BasisConstant::Kind::PiCl2:
        body = "pi*Cl2(" + rat_to_string(basis.angle) + "*pi)";
        if (!(mag.num == 1 && mag.den == 1))
          body = rat_to_string(mag) + "*" + body;
        break;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

}  // namespace eulersum
