#pragma once

#include "bgeom/contraction.hpp"
#include "bgeom/lattice.hpp"
#include "bgeom/model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bgeom {

/// Whether π^*M - E stays nef after blowing up `center`, decided by the
/// multiplicity test M·C ≥ mult(C) over the tracked curves. The blown-up
/// model is also checked directly; disagreement throws CriterionMismatch.
bool blowup_nef_criterion(const SurfaceModel& model, const DivisorClass& m, const BlowupCenter& center);

/// Castelnuovo contraction of a tracked (-1)-curve (E² = -1, K·E = -1).
/// The returned contraction's pushforward is the class transport
/// D ↦ D + (D·E)E read in target coordinates. Throws NotMinusOneCurve.
Contraction contract_minus_one_curve(const Lattice& lattice, std::string_view curve);

struct DescentResult {
  Lattice intermediate;                  // X′
  DivisorClass m_prime;                  // M′ on X′
  std::vector<std::string> contracted;   // in contraction order
  std::vector<Contraction> steps;        // Y = Y_0 → Y_1 → … → X′
  int blowup_count = 0;                  // blow-ups from X to X′
  Rational bound;                        // M² - M_Y²

  /// Pullback of a class on X′ back to Y through every step.
  DivisorClass pull_back_to_top(const DivisorClass& d) const;
};

/// Picks which eligible curve to contract next (indices into the eligible list).
using DescentChooser = std::function<std::size_t(const std::vector<std::string>& eligible)>;

/// Blows down X-exceptional (-1)-curves E with M·E = 0 until none remain.
/// Default order scans the tower from the bottom. Throws NotNef.
DescentResult descend_nef(const SurfaceModel& tower, const DivisorClass& m_y);
DescentResult descend_nef(const SurfaceModel& tower, const DivisorClass& m_y, const DescentChooser& choose);

/// X-exceptional (-1)-curves of `lattice` orthogonal to `m`, in lattice order.
std::vector<std::string> eligible_curves(const Lattice& lattice, const DivisorClass& m);

/// Pushforward to the base surface of a class on any intermediate lattice of
/// `tower` whose basis is a subset of the tower's basis.
Vector push_to_base(const SurfaceModel& tower, const Lattice& intermediate, const DivisorClass& d);

/// Verifies g^*M′ = M_Y, h_*M′ = M, the blow-up bound and positivity of M′ on
/// the remaining exceptional (-1)-curves. Returns the first failure message.
std::optional<std::string> descent_defect(const SurfaceModel& tower, const DivisorClass& m_y,
                                          const DescentResult& result);

/// Nefness of the pushforward along a tower truncation; InternalConsistency if violated.
bool check_pushforward_nef(const SurfaceModel& tower, std::size_t depth, const DivisorClass& m);
/// Nefness of the pushforward along a contraction of (-1)-curves.
bool check_pushforward_nef(const Contraction& contraction, const DivisorClass& m);

struct TrivialBlowupCheck {
  bool holds = true;
  std::optional<std::string> witness;  // exceptional curve with M′·E ≠ 0
};

/// For M on the base with M·C = 0 and a nef M′ on a tower whose centers all lie
/// over C with h_*M′ = M: checks M′·E = 0 on every exceptional curve.
/// Throws PreconditionUnmet when the hypotheses fail.
TrivialBlowupCheck check_trivial_blowup(const SurfaceModel& tower, std::string_view base_curve,
                                        const Vector& m_on_base, const DivisorClass& m_prime);

}  // namespace bgeom
