#pragma once

#include "bgeom/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bgeom {

/// Numerical description of a smooth projective surface: a Picard lattice of
/// signature (1, rank-1), its canonical class and some irreducible curves.
struct BaseSurface {
  std::string name;
  std::vector<std::string> basis;
  Matrix gram;
  Vector canonical;
  std::vector<Curve> curves;
  /// Hand-verified: the tracked curves generate the effective cone, so
  /// tracked nefness and tracked volumes are the true ones.
  bool effective_cone_generated = false;
};

/// P² with basis {L} and the line L tracked.
BaseSurface projective_plane();
/// Hirzebruch surface F_n, basis {C0, f}, C0² = -n.
BaseSurface hirzebruch(int n);
/// Ruled surface over an elliptic curve with invariant e = n (n ≥ 1); C0 is the
/// negative section. Contracting C0 yields the projective cone over an
/// elliptic curve of degree n.
BaseSurface elliptic_ruled(int n);

/// Raw base data; checks symmetry, dimensions and the Hodge index signature.
BaseSurface make_base(std::string name, std::vector<std::string> basis, Matrix gram, Vector canonical,
                      std::vector<Curve> curves);
void validate_base(const BaseSurface& base);
/// Adds further tracked curves (given in the base basis) to a base surface.
BaseSurface with_curves(BaseSurface base, const std::vector<std::pair<std::string, Vector>>& extra);

/// A point to blow up, described by the multiplicity of each tracked curve at
/// it. Infinitely-near points are centers lying on an earlier exceptional curve.
struct BlowupCenter {
  std::map<std::string, int> multiplicities;
  /// Name of the new exceptional curve; empty means "E<index>".
  std::string name;

  friend bool operator==(const BlowupCenter&, const BlowupCenter&) = default;
};

/// A base surface followed by an ordered tower of point blow-ups, described in
/// the total-transform basis (pullbacks of base generators, then e_1..e_k).
class SurfaceModel {
 public:
  const BaseSurface& base() const { return base_; }
  const std::vector<BlowupCenter>& centers() const { return centers_; }
  const Lattice& lattice() const { return lattice_; }

  Index rank() const { return lattice_.rank(); }
  Index base_rank() const { return base_.gram.rows(); }
  std::size_t depth() const { return centers_.size(); }

  /// π* of a base class.
  DivisorClass include(const Vector& base_class) const;
  /// Total transform e_{i+1} of the i-th exceptional divisor (0-based).
  DivisorClass exceptional_total(std::size_t i) const;
  const std::string& exceptional_name(std::size_t i) const { return exceptional_names_[i]; }
  /// Multiplicity at center i of the strict transform of `curve` on the model just before it.
  int multiplicity(std::string_view curve, std::size_t center) const;
  /// Iterated strict transform of a base curve. Throws UnknownCurveName for non-base names.
  DivisorClass strict_transform(std::string_view base_curve) const;
  /// Base coordinates of a class (the pushforward to the base surface).
  Vector base_part(const DivisorClass& d) const;

 private:
  friend SurfaceModel build_model(BaseSurface base, std::vector<BlowupCenter> centers);
  SurfaceModel(BaseSurface base, std::vector<BlowupCenter> centers, Lattice lattice,
               std::vector<std::string> exceptional_names, std::vector<std::vector<int>> multiplicities);

  BaseSurface base_;
  std::vector<BlowupCenter> centers_;
  Lattice lattice_;
  std::vector<std::string> exceptional_names_;
  std::vector<std::vector<int>> multiplicities_;  // [curve index][center index]
};

/// Errors: UnknownCurveName, InvalidMultiplicity, ValidationError (name clash).
SurfaceModel build_model(BaseSurface base, std::vector<BlowupCenter> centers);
SurfaceModel blow_up(const SurfaceModel& model, BlowupCenter center);
/// The model after only the first `depth` blow-ups.
SurfaceModel truncate(const SurfaceModel& model, std::size_t depth);

/// First violated necessary condition for the tracked curves to be distinct
/// irreducible curves (pairwise non-negative intersections, non-negative
/// arithmetic genus), if any.
std::optional<std::string> configuration_defect(const Lattice& lattice);

}  // namespace bgeom
