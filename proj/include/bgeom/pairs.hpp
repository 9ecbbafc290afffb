#pragma once

#include "bgeom/contraction.hpp"
#include "bgeom/lattice.hpp"
#include "bgeom/model.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bgeom {

/// Coefficients on tracked curves; absent curves have coefficient 0.
using BoundaryDivisor = std::map<std::string, Rational>;

/// Σ coeff·class over the named tracked curves of `lattice`.
DivisorClass boundary_class(const Lattice& lattice, const BoundaryDivisor& boundary);

/// A divisor on the top of a tower, with its coefficients on base strict
/// transforms and on the (strict) exceptional curves.
struct TowerDivisor {
  DivisorClass cls;
  BoundaryDivisor coefficients;
};

/// B_Y defined by K_Y + B_Y = π^*(K_X + B).
TowerDivisor log_pullback(const SurfaceModel& tower, const BoundaryDivisor& boundary_on_base);
/// Strict transform of B plus the reduced exceptional locus.
TowerDivisor trace_MB(const SurfaceModel& tower, const BoundaryDivisor& boundary_on_base);
/// B_Y ∨ 0, the effective part of the log pullback.
TowerDivisor trace_LB(const SurfaceModel& tower, const BoundaryDivisor& boundary_on_base);

/// Generalized discrepancies a_E from
///   K + f⁻¹_*B′ + M = f^*(K′ + B′ + M′) + Σ a_E E,  M′ = f_*M,
/// in the contraction's curve order. Boundary names are non-contracted curves.
std::vector<std::pair<std::string, Rational>> discrepancies(const Contraction& contraction,
                                                            const BoundaryDivisor& boundary_on_target,
                                                            const DivisorClass& nef_on_source);

enum class Singularity { gklt, glc, not_glc };
std::string_view to_string(Singularity s);

/// Generalized polarized pair: a boundary on a smooth model or on the target of
/// a contraction, decorated with a nef part M on the smooth (top) model. The
/// nef part downstairs is always f_*M.
class GenPair {
 public:
  /// Throws InvalidPair (negative coefficient, bad Cartier index, r·M not
  /// integral), UnknownCurveName, ModelMismatch or NotNef.
  GenPair(Lattice model, BoundaryDivisor boundary, DivisorClass nef_part, int cartier_index = 1);
  GenPair(Contraction contraction, BoundaryDivisor boundary, DivisorClass nef_part, int cartier_index = 1);

  bool on_contraction() const { return std::holds_alternative<Contraction>(carrier_); }
  const Contraction& contraction() const { return std::get<Contraction>(carrier_); }
  /// The smooth model carrying M (the source of the contraction, if any).
  const Lattice& top() const;
  const BoundaryDivisor& boundary() const { return boundary_; }
  const DivisorClass& nef_part() const { return nef_part_; }
  int cartier_index() const { return cartier_index_; }

  /// f⁻¹_*B′ on the top model.
  DivisorClass strict_boundary() const { return boundary_class(top(), boundary_); }

 private:
  void validate() const;

  std::variant<Lattice, Contraction> carrier_;
  BoundaryDivisor boundary_;
  DivisorClass nef_part_;
  int cartier_index_;
};

/// glc/gklt verdict. On a contraction the log-resolution flag must be set
/// (NotLogResolution otherwise).
Singularity classify(const GenPair& pair);

/// vol(K + B + M), computed on the smooth model via the effective part of the
/// log pullback when the carrier is a contraction.
Rational pair_volume(const GenPair& pair);
/// Same volume computed directly on the contraction target with the Mumford form.
Rational pair_volume_on_target(const GenPair& pair);

/// Membership in {1 - 1/n : 1 ≤ n ≤ max_n} ∪ extra.
bool in_dcc_set(const Rational& x, int max_n, const std::vector<Rational>& extra = {});

}  // namespace bgeom
