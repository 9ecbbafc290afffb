#include "bgeom/bounds.hpp"

#include "bgeom/error.hpp"
#include "bgeom/positivity.hpp"

namespace bgeom {

namespace {

BoundCheck finish(const BoundInstance& instance, Rational lhs, Rational rhs) {
  BoundCheck out;
  out.holds = lhs <= rhs;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.hypotheses_asserted = instance.birational_asserted;
  return out;
}

Rational support_degree(const Lattice& lattice, const BoundaryDivisor& divisor, const DivisorClass& h) {
  Rational sum = 0;
  for (const auto& [name, coeff] : divisor) {
    if (coeff > 0) sum += lattice.intersect(lattice.curve_class(name), h);
  }
  return sum;
}

}  // namespace

DivisorClass BoundInstance::g() const { return h + boundary_class(model, fixed_part); }

void validate_instance(const BoundInstance& instance) {
  const Lattice& x = instance.model;
  x.require_own(instance.nef_part);
  x.require_own(instance.h);
  if (instance.m0 < 1) throw Error(ErrorCode::ValidationError, "m0 must be a positive integer");
  if (instance.delta <= 0 || instance.delta > 1) throw Error(ErrorCode::ValidationError, "delta must lie in (0, 1]");
  for (const auto* divisor : {&instance.boundary, &instance.fixed_part}) {
    for (const auto& [name, coeff] : *divisor) {
      x.curve(name);
      if (coeff < 0) throw Error(ErrorCode::InvalidPair, "negative coefficient on '" + name + "'");
    }
  }
  if (!is_nef_tracked(x, instance.nef_part).nef) throw Error(ErrorCode::NotNef, "M is not nef");
  if (!is_nef_tracked(x, instance.h).nef) throw Error(ErrorCode::NotNef, "H is not nef");
}

Rational instance_volume(const BoundInstance& instance) {
  const Lattice& x = instance.model;
  return volume(x, x.canonical() + boundary_class(x, instance.boundary) + instance.nef_part);
}

BoundCheck check_boundHB(const BoundInstance& instance) {
  validate_instance(instance);
  const Rational m0 = instance.m0;
  const Rational base = 2 * ((3 * m0 + 2) / instance.delta + 10 * m0 + 2);
  const Rational lhs = support_degree(instance.model, instance.boundary, instance.h);
  return finish(instance, lhs, base * base * instance_volume(instance));
}

BoundCheck check_boundHM(const BoundInstance& instance) {
  validate_instance(instance);
  const Lattice& x = instance.model;
  const Rational lhs = x.intersect(instance.h, instance.nef_part + Rational(3) * instance.h);
  const Rational c = Rational(6 * instance.m0 + 1) * (6 * instance.m0 + 1) / 2;
  return finish(instance, lhs, c * instance_volume(instance));
}

BoundCheck check_boundM2(const BoundInstance& instance) {
  validate_instance(instance);
  const Rational& e = instance.e_param;
  if (e <= 0 || e >= 1) throw Error(ErrorCode::EParamInvalid, "e must lie in (0, 1)");
  const Lattice& x = instance.model;
  const DivisorClass scaled = x.canonical() + e * (boundary_class(x, instance.boundary) + instance.nef_part);
  if (!is_big(x, scaled)) throw Error(ErrorCode::EParamInvalid, "K + eB + eM is not big");
  const Rational c = 1 / ((1 - e) * (1 - e));
  return finish(instance, x.intersect(instance.nef_part, instance.nef_part), c * instance_volume(instance));
}

BoundCheck check_boundHG(const BoundInstance& instance) {
  validate_instance(instance);
  const Lattice& x = instance.model;
  const Rational lhs = x.intersect(instance.h, instance.h) + support_degree(x, instance.fixed_part, instance.h);
  const Rational c = Rational(2, 5) * (14 * instance.m0 + 2) * (14 * instance.m0 + 2);
  return finish(instance, lhs, c * instance_volume(instance));
}

}  // namespace bgeom
