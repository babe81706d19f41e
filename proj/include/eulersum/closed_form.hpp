#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace eulersum {

// Exact rational with int64 components, always normalized: den > 0,
// gcd(|num|, den) = 1.  Arithmetic checks for overflow via 128-bit
// intermediates and throws std::overflow_error.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Rational&) const = default;
};

Rational rational(std::int64_t num, std::int64_t den = 1);
Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
Rational rat_neg(const Rational& a);
bool rat_less(const Rational& a, const Rational& b);
double rat_to_double(const Rational& a);
std::string rat_to_string(const Rational& a);

// One element of the constant basis a closed form is expressed over:
// the rational unit, zeta(m) for m >= 2, or pi*Cl2(angle*pi) with the angle
// held exactly as a rational multiple of pi.
struct BasisConstant {
  enum class Kind { One, Zeta, PiCl2 };
  Kind kind = Kind::One;
  int zeta_order = 0;   // Kind::Zeta only
  Rational angle{};     // Kind::PiCl2 only, in units of pi, canonical in (0,1)

  static BasisConstant one();
  static BasisConstant zeta(int m);
  static BasisConstant pi_cl2(const Rational& angle);

  bool operator==(const BasisConstant&) const = default;
};

// Deterministic ordering: One < Zeta(2) < Zeta(3) < ... < PiCl2 by angle.
struct BasisLess {
  bool operator()(const BasisConstant& a, const BasisConstant& b) const;
};

// Reduction of Cl2(a*pi) to the canonical representative: a is taken mod 2,
// reflected from (1, 2) into (0, 1) with a sign, integer angles vanish, and
// Cl2(2/3 pi) folds onto (2/3) Cl2(1/3 pi) by the duplication formula.
// factor 0 with no angle means the term is exactly zero.
struct AngleReduction {
  Rational factor;
  std::optional<Rational> angle;
};
AngleReduction canonicalize_angle(const Rational& a);

// Exact linear combination over the basis.  Zero coefficients are never
// stored, so structural equality is semantic equality over this basis.
class ClosedForm {
 public:
  ClosedForm() = default;
  static ClosedForm constant(const Rational& value);
  // coeff * basis, canonicalizing PiCl2 angles on the way in.
  static ClosedForm term(const BasisConstant& basis, const Rational& coeff);

  const std::map<BasisConstant, Rational, BasisLess>& terms() const {
    return terms_;
  }
  bool operator==(const ClosedForm&) const = default;

 private:
  std::map<BasisConstant, Rational, BasisLess> terms_;
  friend ClosedForm cf_add(const ClosedForm&, const ClosedForm&);
  friend ClosedForm cf_scale(const ClosedForm&, const Rational&);
};

ClosedForm cf_add(const ClosedForm& a, const ClosedForm& b);
ClosedForm cf_scale(const ClosedForm& a, const Rational& s);
bool cf_equal(const ClosedForm& a, const ClosedForm& b);
double cf_eval(const ClosedForm& a);

// Deterministic human-readable rendering, e.g.
// "11/4*zeta(3) - 2*pi*Cl2(1/2*pi)".  The empty form renders as "0".
std::string cf_render(const ClosedForm& a);

}  // namespace eulersum
