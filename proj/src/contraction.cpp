#include "bgeom/contraction.hpp"

#include "bgeom/error.hpp"
#include "bgeom/exact.hpp"

#include <algorithm>
#include <set>

namespace bgeom {

namespace {

Matrix collect_classes(const Lattice& source, const std::vector<std::string>& names) {
  std::set<std::string> seen;
  Matrix classes(source.rank(), static_cast<Index>(names.size()));
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (!seen.insert(names[j]).second) {
      throw Error(ErrorCode::ValidationError, "curve '" + names[j] + "' contracted twice");
    }
    classes.col(static_cast<Index>(j)) = source.curve(names[j]).cls;
  }
  return classes;
}

Matrix checked_gram(const Lattice& source, const Matrix& classes) {
  Matrix g = classes.transpose() * source.gram() * classes;
  if (!is_negative_definite(g)) {
    throw Error(ErrorCode::SingularGram, "contracted curves do not have a negative-definite intersection matrix");
  }
  return g;
}

// Reduced row echelon form of the contracted classes (as rows), choosing pivot
// columns from the right so that exceptional coordinates are eliminated first.
Matrix echelon_from_right(const Matrix& classes, std::vector<Index>& pivots) {
  Matrix r = classes.transpose();
  const Index rows = r.rows();
  Index row = 0;
  for (Index c = r.cols() - 1; c >= 0 && row < rows; --c) {
    Index p = row;
    while (p < rows && r(p, c) == 0) ++p;
    if (p == rows) continue;
    r.row(row).swap(r.row(p));
    const Rational lead = r(row, c);
    r.row(row) /= lead;
    for (Index i = 0; i < rows; ++i) {
      if (i == row || r(i, c) == 0) continue;
      const Rational factor = r(i, c);
      r.row(i) -= factor * r.row(row);
    }
    pivots.push_back(c);
    ++row;
  }
  if (row != rows) throw Error(ErrorCode::SingularGram, "contracted classes are linearly dependent");
  return r;
}

std::vector<Index> complement(Index n, const std::vector<Index>& pivots) {
  std::vector<Index> kept;
  for (Index c = 0; c < n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) kept.push_back(c);
  }
  return kept;
}

bool is_prefix(const SurfaceModel& lower, const SurfaceModel& top) {
  if (lower.base().basis != top.base().basis || lower.base().gram != top.base().gram ||
      lower.base().canonical != top.base().canonical || lower.depth() > top.depth()) {
    return false;
  }
  return std::equal(lower.centers().begin(), lower.centers().end(), top.centers().begin());
}

}  // namespace

Contraction::Contraction(Lattice source, std::vector<std::string> contracted, bool log_resolution)
    : source_(std::move(source)),
      contracted_(std::move(contracted)),
      log_resolution_(log_resolution),
      classes_(collect_classes(source_, contracted_)),
      exceptional_gram_(checked_gram(source_, classes_)),
      pivots_(),
      reduced_(echelon_from_right(classes_, pivots_)),
      kept_(complement(source_.rank(), pivots_)),
      target_([this] {
        std::vector<std::string> basis;
        Matrix lifts(source_.rank(), static_cast<Index>(kept_.size()));
        for (std::size_t i = 0; i < kept_.size(); ++i) {
          basis.push_back(source_.basis()[static_cast<std::size_t>(kept_[i])]);
          Vector e = zero_vector(source_.rank());
          e[kept_[i]] = 1;
          lifts.col(static_cast<Index>(i)) = e + classes_ * orthogonalizer(e);
        }
        Matrix gram = lifts.transpose() * source_.gram() * lifts;
        std::vector<Curve> curves;
        for (const Curve& c : source_.curves()) {
          if (std::find(contracted_.begin(), contracted_.end(), c.name) != contracted_.end()) continue;
          curves.push_back({c.name, project(c.cls), c.exceptional});
        }
        return Lattice(std::move(basis), std::move(gram), project(source_.canonical().coefficients()),
                       std::move(curves));
      }()) {}

Vector Contraction::orthogonalizer(const Vector& v) const {
  const Vector rhs = -(classes_.transpose() * (source_.gram() * v));
  auto x = solve_exact(exceptional_gram_, rhs);
  if (!x) throw Error(ErrorCode::SingularGram, "exceptional gram is singular");
  return *x;
}

Vector Contraction::project(const Vector& v) const {
  Vector w = v;
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const Rational a = w[pivots_[j]];
    if (a != 0) w -= a * reduced_.row(static_cast<Index>(j)).transpose();
  }
  Vector out(static_cast<Index>(kept_.size()));
  for (std::size_t i = 0; i < kept_.size(); ++i) out[static_cast<Index>(i)] = w[kept_[i]];
  return out;
}

DivisorClass Contraction::pushforward(const DivisorClass& d) const {
  source_.require_own(d);
  return target_.make(project(d.coefficients()));
}

DivisorClass Contraction::numerical_pullback(const DivisorClass& d) const {
  target_.require_own(d);
  Vector x = zero_vector(source_.rank());
  for (std::size_t i = 0; i < kept_.size(); ++i) x[kept_[i]] = d[static_cast<Index>(i)];
  const Vector a = orthogonalizer(x);
  return source_.make(x + classes_ * a);
}

DivisorClass Contraction::pullback_of_pushforward(const DivisorClass& d) const {
  source_.require_own(d);
  return source_.make(d.coefficients() + classes_ * orthogonalizer(d.coefficients()));
}

std::vector<Rational> Contraction::exceptional_coefficients(const DivisorClass& d) const {
  if (!pushforward(d).is_zero()) {
    throw Error(ErrorCode::NotExceptional, "divisor is not supported on the contracted curves");
  }
  const Vector rhs = classes_.transpose() * (source_.gram() * d.coefficients());
  auto c = solve_exact(exceptional_gram_, rhs);
  if (!c) throw Error(ErrorCode::SingularGram, "exceptional gram is singular");
  return {c->begin(), c->end()};
}

DivisorClass push_down(const SurfaceModel& top, const SurfaceModel& lower, const DivisorClass& d) {
  top.lattice().require_own(d);
  if (!is_prefix(lower, top)) throw Error(ErrorCode::ModelMismatch, "lower model is not a truncation of the tower");
  return lower.lattice().make(d.coefficients().head(lower.rank()));
}

DivisorClass pull_up(const SurfaceModel& lower, const SurfaceModel& top, const DivisorClass& d) {
  lower.lattice().require_own(d);
  if (!is_prefix(lower, top)) throw Error(ErrorCode::ModelMismatch, "lower model is not a truncation of the tower");
  Vector v = zero_vector(top.rank());
  v.head(lower.rank()) = d.coefficients();
  return top.lattice().make(std::move(v));
}

Contraction contract_tower(const SurfaceModel& model, bool log_resolution) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < model.depth(); ++i) names.push_back(model.exceptional_name(i));
  return Contraction(model.lattice(), std::move(names), log_resolution);
}

NegativityVerdict check_negativity(const Contraction& contraction, const DivisorClass& d) {
  NegativityVerdict verdict;
  verdict.coefficients = contraction.exceptional_coefficients(d);
  const Lattice& source = contraction.source();
  verdict.hypothesis_met = true;
  for (std::size_t k = 0; k < contraction.contracted().size(); ++k) {
    if (source.intersect(d, contraction.contracted_class(k)) < 0) verdict.hypothesis_met = false;
  }
  verdict.conclusion = std::all_of(verdict.coefficients.begin(), verdict.coefficients.end(),
                                   [](const Rational& c) { return c <= 0; });
  if (verdict.hypothesis_met && !verdict.conclusion) {
    throw Error(ErrorCode::InternalConsistency, "negativity lemma violated: arithmetic inconsistency");
  }
  return verdict;
}

}  // namespace bgeom
