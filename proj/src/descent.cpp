#include "bgeom/descent.hpp"

#include "bgeom/error.hpp"
#include "bgeom/positivity.hpp"

namespace bgeom {

namespace {

bool is_minus_one_curve(const Lattice& lattice, const Curve& c) {
  return lattice.dot(c.cls, c.cls) == -1 && lattice.dot(lattice.canonical().coefficients(), c.cls) == -1;
}

}  // namespace

bool blowup_nef_criterion(const SurfaceModel& model, const DivisorClass& m, const BlowupCenter& center) {
  const Lattice& lattice = model.lattice();
  lattice.require_own(m);

  bool by_multiplicity = true;
  for (const Curve& c : lattice.curves()) {
    const auto it = center.multiplicities.find(c.name);
    const int mult = it == center.multiplicities.end() ? 0 : it->second;
    if (lattice.dot(m.coefficients(), c.cls) < mult) by_multiplicity = false;
  }

  const SurfaceModel blown = blow_up(model, center);
  const DivisorClass candidate = pull_up(model, blown, m) - blown.exceptional_total(model.depth());
  const bool direct = is_nef_tracked(blown.lattice(), candidate).nef;

  if (by_multiplicity != direct) {
    throw Error(ErrorCode::CriterionMismatch, "multiplicity criterion disagrees with the blown-up model");
  }
  return direct;
}

Contraction contract_minus_one_curve(const Lattice& lattice, std::string_view curve) {
  const Curve& c = lattice.curve(curve);
  if (!is_minus_one_curve(lattice, c)) {
    throw Error(ErrorCode::NotMinusOneCurve, "'" + c.name + "' is not a (-1)-curve");
  }
  return Contraction(lattice, {c.name});
}

std::vector<std::string> eligible_curves(const Lattice& lattice, const DivisorClass& m) {
  lattice.require_own(m);
  std::vector<std::string> out;
  for (const Curve& c : lattice.curves()) {
    if (c.exceptional && is_minus_one_curve(lattice, c) && lattice.dot(m.coefficients(), c.cls) == 0) {
      out.push_back(c.name);
    }
  }
  return out;
}

DivisorClass DescentResult::pull_back_to_top(const DivisorClass& d) const {
  DivisorClass current = d;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) current = it->numerical_pullback(current);
  return current;
}

DescentResult descend_nef(const SurfaceModel& tower, const DivisorClass& m_y) {
  return descend_nef(tower, m_y, [](const std::vector<std::string>&) { return std::size_t{0}; });
}

DescentResult descend_nef(const SurfaceModel& tower, const DivisorClass& m_y, const DescentChooser& choose) {
  const Lattice& top = tower.lattice();
  top.require_own(m_y);
  if (!is_nef_tracked(top, m_y).nef) throw Error(ErrorCode::NotNef, "M_Y is not nef on the tracked curves");

  Lattice current = top;
  DivisorClass m = m_y;
  std::vector<std::string> contracted;
  std::vector<Contraction> steps;
  while (true) {
    const std::vector<std::string> eligible = eligible_curves(current, m);
    if (eligible.empty()) break;
    const std::size_t pick = choose(eligible);
    if (pick >= eligible.size()) throw Error(ErrorCode::InternalConsistency, "descent chooser out of range");
    Contraction step = contract_minus_one_curve(current, eligible[pick]);
    m = step.pushforward(m);
    current = step.target();
    contracted.push_back(eligible[pick]);
    steps.push_back(std::move(step));
  }

  const Vector base_m = tower.base_part(m_y);
  const Rational bound = base_m.dot(tower.base().gram * base_m) - top.intersect(m_y, m_y);
  const int count = static_cast<int>(current.rank() - tower.base_rank());
  return DescentResult{std::move(current), std::move(m), std::move(contracted), std::move(steps), count, bound};
}

Vector push_to_base(const SurfaceModel& tower, const Lattice& intermediate, const DivisorClass& d) {
  intermediate.require_own(d);
  Vector out(tower.base_rank());
  for (Index i = 0; i < tower.base_rank(); ++i) {
    const auto idx = intermediate.basis_index(tower.lattice().basis()[static_cast<std::size_t>(i)]);
    if (!idx) throw Error(ErrorCode::InternalConsistency, "intermediate model lost a base generator");
    out[i] = d[*idx];
  }
  return out;
}

std::optional<std::string> descent_defect(const SurfaceModel& tower, const DivisorClass& m_y,
                                          const DescentResult& result) {
  if (!(result.pull_back_to_top(result.m_prime) == m_y)) return "g^*M' differs from M_Y";
  if (push_to_base(tower, result.intermediate, result.m_prime) != tower.base_part(m_y)) return "h_*M' differs from M";
  if (Rational(result.blowup_count) > result.bound) return "more blow-ups than M^2 - M_Y^2";
  if (!is_nef_tracked(result.intermediate, result.m_prime).nef) return "M' is not nef";
  const Lattice& x = result.intermediate;
  for (const Curve& c : x.curves()) {
    if (c.exceptional && is_minus_one_curve(x, c) && x.dot(result.m_prime.coefficients(), c.cls) <= 0) {
      return "remaining (-1)-curve '" + c.name + "' has M'·E <= 0";
    }
  }
  return std::nullopt;
}

bool check_pushforward_nef(const SurfaceModel& tower, std::size_t depth, const DivisorClass& m) {
  if (!is_nef_tracked(tower.lattice(), m).nef) throw Error(ErrorCode::PreconditionUnmet, "M is not nef");
  const SurfaceModel lower = truncate(tower, depth);
  if (!is_nef_tracked(lower.lattice(), push_down(tower, lower, m)).nef) {
    throw Error(ErrorCode::InternalConsistency, "pushforward of a nef divisor is not nef");
  }
  return true;
}

bool check_pushforward_nef(const Contraction& contraction, const DivisorClass& m) {
  if (!is_nef_tracked(contraction.source(), m).nef) throw Error(ErrorCode::PreconditionUnmet, "M is not nef");
  if (!is_nef_tracked(contraction.target(), contraction.pushforward(m)).nef) {
    throw Error(ErrorCode::InternalConsistency, "pushforward of a nef divisor is not nef");
  }
  return true;
}

TrivialBlowupCheck check_trivial_blowup(const SurfaceModel& tower, std::string_view base_curve,
                                        const Vector& m_on_base, const DivisorClass& m_prime) {
  const Lattice& top = tower.lattice();
  top.require_own(m_prime);
  tower.strict_transform(base_curve);
  const BaseSurface& base = tower.base();
  if (m_on_base.size() != tower.base_rank()) throw Error(ErrorCode::ModelMismatch, "M has wrong length");

  Vector curve_class;
  for (const Curve& c : base.curves) {
    if (c.name == base_curve) curve_class = c.cls;
  }
  if (m_on_base.dot(base.gram * curve_class) != 0) throw Error(ErrorCode::PreconditionUnmet, "M·C is not zero");
  if (tower.base_part(m_prime) != m_on_base) throw Error(ErrorCode::PreconditionUnmet, "h_*M' differs from M");
  if (!is_nef_tracked(top, m_prime).nef) throw Error(ErrorCode::PreconditionUnmet, "M' is not nef");

  std::vector<bool> over(tower.depth(), false);
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    over[i] = tower.multiplicity(base_curve, i) > 0;
    for (std::size_t j = 0; j < i && !over[i]; ++j) {
      over[i] = over[j] && tower.multiplicity(tower.exceptional_name(j), i) > 0;
    }
    if (!over[i]) {
      throw Error(ErrorCode::PreconditionUnmet, "center " + std::to_string(i + 1) + " does not lie over the curve");
    }
  }

  TrivialBlowupCheck result;
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    const DivisorClass e = top.curve_class(tower.exceptional_name(i));
    if (top.intersect(m_prime, e) != 0) {
      result.holds = false;
      result.witness = tower.exceptional_name(i);
      break;
    }
  }
  return result;
}

}  // namespace bgeom
