#pragma once

#include "bgeom/lattice.hpp"
#include "bgeom/model.hpp"

#include <string>
#include <vector>

namespace bgeom {

/// Contraction of a negative-definite configuration of tracked curves. The
/// target is described by the quotient of the source lattice by the span of
/// the contracted classes, carrying the Mumford intersection form; it is
/// possibly singular, so its gram may be non-integral.
class Contraction {
 public:
  /// Throws UnknownCurveName, ValidationError (repeated curve) or SingularGram
  /// (the contracted curves do not have a negative-definite gram).
  Contraction(Lattice source, std::vector<std::string> contracted, bool log_resolution = false);

  const Lattice& source() const { return source_; }
  const Lattice& target() const { return target_; }
  const std::vector<std::string>& contracted() const { return contracted_; }
  bool is_log_resolution() const { return log_resolution_; }

  /// Restriction of the intersection form to the contracted classes.
  const Matrix& exceptional_gram() const { return exceptional_gram_; }
  DivisorClass contracted_class(std::size_t j) const { return source_.make(classes_.col(static_cast<Index>(j))); }

  /// f_*: source classes to target classes; kills exactly the contracted span.
  DivisorClass pushforward(const DivisorClass& d) const;
  /// f^*: the unique lift of a target class orthogonal to every contracted curve.
  DivisorClass numerical_pullback(const DivisorClass& d) const;
  /// D + Σ x_j E_j orthogonal to every contracted E_k (= f^* f_* D).
  DivisorClass pullback_of_pushforward(const DivisorClass& d) const;
  /// Coefficients c_j with D = Σ c_j E_j. Throws NotExceptional when D is not in the contracted span.
  std::vector<Rational> exceptional_coefficients(const DivisorClass& d) const;

 private:
  Vector orthogonalizer(const Vector& v) const;  // x with (v + S x)·S = 0
  Vector project(const Vector& v) const;        // target coordinates of v

  Lattice source_;
  std::vector<std::string> contracted_;
  bool log_resolution_;
  Matrix classes_;           // rank × s, columns are contracted classes
  Matrix exceptional_gram_;  // s × s
  std::vector<Index> pivots_;
  Matrix reduced_;           // s × rank, reduced row echelon with unit pivot columns
  std::vector<Index> kept_;  // source basis columns that index the target basis
  Lattice target_;
};

/// Pushforward along a tower truncation (drops the later exceptional coordinates).
DivisorClass push_down(const SurfaceModel& top, const SurfaceModel& lower, const DivisorClass& d);
/// Total-transform pullback along a tower truncation.
DivisorClass pull_up(const SurfaceModel& lower, const SurfaceModel& top, const DivisorClass& d);

/// The contraction of every exceptional curve of a tower, whose target is the base surface.
Contraction contract_tower(const SurfaceModel& model, bool log_resolution = false);

struct NegativityVerdict {
  std::vector<Rational> coefficients;  // of D along the contracted curves
  bool hypothesis_met = false;         // D·E_k ≥ 0 for every contracted E_k
  bool conclusion = false;             // every coefficient of D is ≤ 0
};

/// Negativity Lemma instance: D exceptional with D·E_k ≥ 0 for all k forces
/// -D ≥ 0. Throws NotExceptional if f_*D ≠ 0 and InternalConsistency if the
/// hypothesis holds but the conclusion fails.
NegativityVerdict check_negativity(const Contraction& contraction, const DivisorClass& d);

}  // namespace bgeom
