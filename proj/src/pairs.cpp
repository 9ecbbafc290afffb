#include "bgeom/pairs.hpp"

#include "bgeom/error.hpp"
#include "bgeom/exact.hpp"
#include "bgeom/positivity.hpp"

#include <algorithm>

namespace bgeom {

namespace {

void require_base_curves(const SurfaceModel& tower, const BoundaryDivisor& boundary) {
  for (const auto& [name, coeff] : boundary) tower.strict_transform(name);
}

}  // namespace

DivisorClass boundary_class(const Lattice& lattice, const BoundaryDivisor& boundary) {
  DivisorClass sum = lattice.zero();
  for (const auto& [name, coeff] : boundary) sum += coeff * lattice.curve_class(name);
  return sum;
}

TowerDivisor log_pullback(const SurfaceModel& tower, const BoundaryDivisor& boundary_on_base) {
  require_base_curves(tower, boundary_on_base);
  const Lattice& lattice = tower.lattice();
  const Index b = tower.base_rank();
  const Index k = static_cast<Index>(tower.depth());

  Vector base_boundary = zero_vector(b);
  for (const auto& [name, coeff] : boundary_on_base) {
    for (const Curve& c : tower.base().curves) {
      if (c.name == name) base_boundary += coeff * c.cls;
    }
  }
  // K_Y = π^*K_X + Σ e_i, hence B_Y = π^*B - Σ e_i
  Vector by = tower.include(base_boundary).coefficients();
  for (Index i = b; i < b + k; ++i) by[i] -= 1;

  TowerDivisor out{lattice.make(by), {}};
  Vector rest = by;
  for (const auto& [name, coeff] : boundary_on_base) {
    out.coefficients[name] = coeff;
    rest -= coeff * lattice.curve(name).cls;
  }
  // the remainder lives in the exceptional coordinates; strict exceptional classes are unitriangular there
  Matrix strict(k, k);
  for (Index i = 0; i < k; ++i) {
    strict.col(i) = lattice.curve(tower.exceptional_name(static_cast<std::size_t>(i))).cls.tail(k);
  }
  const Vector coeffs = *solve_exact(strict, Vector(rest.tail(k)));
  for (Index i = 0; i < k; ++i) out.coefficients[tower.exceptional_name(static_cast<std::size_t>(i))] = coeffs[i];
  return out;
}

TowerDivisor trace_MB(const SurfaceModel& tower, const BoundaryDivisor& boundary_on_base) {
  require_base_curves(tower, boundary_on_base);
  const Lattice& lattice = tower.lattice();
  TowerDivisor out{lattice.zero(), {}};
  for (const auto& [name, coeff] : boundary_on_base) {
    out.coefficients[name] = coeff;
    out.cls += coeff * lattice.curve_class(name);
  }
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    out.coefficients[tower.exceptional_name(i)] = 1;
    out.cls += lattice.curve_class(tower.exceptional_name(i));
  }
  return out;
}

TowerDivisor trace_LB(const SurfaceModel& tower, const BoundaryDivisor& boundary_on_base) {
  const TowerDivisor by = log_pullback(tower, boundary_on_base);
  const Lattice& lattice = tower.lattice();
  TowerDivisor out{lattice.zero(), {}};
  for (const auto& [name, coeff] : by.coefficients) {
    const Rational clamped = std::max(coeff, Rational(0));
    out.coefficients[name] = clamped;
    out.cls += clamped * lattice.curve_class(name);
  }
  return out;
}

std::vector<std::pair<std::string, Rational>> discrepancies(const Contraction& contraction,
                                                            const BoundaryDivisor& boundary_on_target,
                                                            const DivisorClass& nef_on_source) {
  const Lattice& source = contraction.source();
  const auto& contracted = contraction.contracted();
  for (const auto& [name, coeff] : boundary_on_target) {
    if (std::find(contracted.begin(), contracted.end(), name) != contracted.end()) {
      throw Error(ErrorCode::InvalidPair, "boundary curve '" + name + "' is contracted");
    }
  }
  const DivisorClass d = source.canonical() + boundary_class(source, boundary_on_target) + nef_on_source;
  const std::vector<Rational> a = contraction.exceptional_coefficients(d - contraction.pullback_of_pushforward(d));
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t j = 0; j < contracted.size(); ++j) out.emplace_back(contracted[j], a[j]);
  return out;
}

std::string_view to_string(Singularity s) {
  switch (s) {
    case Singularity::gklt: return "gklt";
    case Singularity::glc: return "glc";
    case Singularity::not_glc: return "not_glc";
  }
  return "not_glc";
}

GenPair::GenPair(Lattice model, BoundaryDivisor boundary, DivisorClass nef_part, int cartier_index)
    : carrier_(std::move(model)),
      boundary_(std::move(boundary)),
      nef_part_(std::move(nef_part)),
      cartier_index_(cartier_index) {
  validate();
}

GenPair::GenPair(Contraction contraction, BoundaryDivisor boundary, DivisorClass nef_part, int cartier_index)
    : carrier_(std::move(contraction)),
      boundary_(std::move(boundary)),
      nef_part_(std::move(nef_part)),
      cartier_index_(cartier_index) {
  validate();
}

const Lattice& GenPair::top() const {
  if (on_contraction()) return contraction().source();
  return std::get<Lattice>(carrier_);
}

void GenPair::validate() const {
  const Lattice& lattice = top();
  lattice.require_own(nef_part_);
  if (cartier_index_ < 1) throw Error(ErrorCode::InvalidPair, "Cartier index must be positive");
  for (const auto& [name, coeff] : boundary_) {
    lattice.curve(name);
    if (coeff < 0) throw Error(ErrorCode::InvalidPair, "boundary coefficient of '" + name + "' is negative");
    if (on_contraction()) {
      const auto& contracted = contraction().contracted();
      if (std::find(contracted.begin(), contracted.end(), name) != contracted.end()) {
        throw Error(ErrorCode::InvalidPair, "boundary curve '" + name + "' is contracted");
      }
    }
  }
  for (Index i = 0; i < nef_part_.size(); ++i) {
    if (!is_integer(Rational(cartier_index_) * nef_part_[i])) {
      throw Error(ErrorCode::InvalidPair, "r·M is not integral");
    }
  }
  if (!is_nef_tracked(lattice, nef_part_).nef) throw Error(ErrorCode::NotNef, "nef part is not nef on tracked curves");
}

Singularity classify(const GenPair& pair) {
  std::vector<Rational> values;
  if (pair.on_contraction()) {
    if (!pair.contraction().is_log_resolution()) {
      throw Error(ErrorCode::NotLogResolution, "classification needs a log resolution");
    }
    for (const auto& [name, a] : discrepancies(pair.contraction(), pair.boundary(), pair.nef_part())) {
      values.push_back(a);
    }
  }
  // a boundary coefficient b corresponds to discrepancy -b
  for (const auto& [name, b] : pair.boundary()) values.push_back(-b);
  const bool klt = std::all_of(values.begin(), values.end(), [](const Rational& a) { return a > -1; });
  const bool lc = std::all_of(values.begin(), values.end(), [](const Rational& a) { return a >= -1; });
  if (klt) return Singularity::gklt;
  return lc ? Singularity::glc : Singularity::not_glc;
}

Rational pair_volume(const GenPair& pair) {
  const Lattice& top = pair.top();
  DivisorClass d = top.canonical() + pair.strict_boundary() + pair.nef_part();
  if (pair.on_contraction()) {
    const Contraction& f = pair.contraction();
    for (const auto& [name, a] : discrepancies(f, pair.boundary(), pair.nef_part())) {
      if (a < 0) d += (-a) * top.curve_class(name);
    }
  }
  return volume(top, d);
}

Rational pair_volume_on_target(const GenPair& pair) {
  if (!pair.on_contraction()) return pair_volume(pair);
  const Contraction& f = pair.contraction();
  const Lattice& top = pair.top();
  const DivisorClass d = top.canonical() + pair.strict_boundary() + pair.nef_part();
  return volume(f.target(), f.pushforward(d));
}

bool in_dcc_set(const Rational& x, int max_n, const std::vector<Rational>& extra) {
  if (std::find(extra.begin(), extra.end(), x) != extra.end()) return true;
  if (x < 0 || x >= 1) return false;
  // x = 1 - 1/n  <=>  n = 1/(1-x) is a positive integer
  const Rational n = Rational(1) / (Rational(1) - x);
  return is_integer(n) && n <= max_n;
}

}  // namespace bgeom
