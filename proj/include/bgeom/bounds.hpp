#pragma once

#include "bgeom/lattice.hpp"
#include "bgeom/pairs.hpp"

namespace bgeom {

/// Data for the explicit surface inequalities. The model is smooth; B and F
/// are effective combinations of tracked curves, M is nef, G = H + F.
/// Whether |H| (resp. |m0(K+B+M)|) defines a birational map cannot be read
/// off the lattice, so it is recorded as an assertion by the caller.
struct BoundInstance {
  Lattice model;
  BoundaryDivisor boundary;
  DivisorClass nef_part;
  DivisorClass h;
  BoundaryDivisor fixed_part;
  int m0 = 1;
  Rational delta = 1;
  Rational e_param = Rational(1, 2);
  bool birational_asserted = false;

  /// H + F.
  DivisorClass g() const;
};

struct BoundCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool hypotheses_asserted = false;
};

/// vol(K + B + M) on the instance's model.
Rational instance_volume(const BoundInstance& instance);

/// Σ_{b_C > 0} C·H  ≤  (2((3m0+2)/δ + 10m0 + 2))² · vol(K+B+M).
BoundCheck check_boundHB(const BoundInstance& instance);
/// H·(M + 3H)  ≤  ((6m0+1)²/2) · vol(K+B+M).
BoundCheck check_boundHM(const BoundInstance& instance);
/// M²  ≤  (1-e)⁻² · vol(K+B+M). Throws EParamInvalid unless K + eB + eM is big.
BoundCheck check_boundM2(const BoundInstance& instance);
/// G_red·H  ≤  (2/5)(14m0+2)² · vol(K+B+M), with G_red·H = H² + Σ_{F_C > 0} C·H
/// (a general member of a birational |H| is reduced and irreducible).
BoundCheck check_boundHG(const BoundInstance& instance);

/// Throws ValidationError/InvalidPair/NotNef when the instance is malformed.
void validate_instance(const BoundInstance& instance);

}  // namespace bgeom
