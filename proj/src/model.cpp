#include "bgeom/model.hpp"

#include "bgeom/error.hpp"
#include "bgeom/exact.hpp"

#include <set>

namespace bgeom {

namespace {

Matrix gram2(int a, int b, int c) {
  Matrix g(2, 2);
  g << Rational(a), Rational(b), Rational(b), Rational(c);
  return g;
}

Vector vec(std::initializer_list<int> values) {
  Vector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (int x : values) v[i++] = Rational(x);
  return v;
}

}  // namespace

BaseSurface projective_plane() {
  Matrix g(1, 1);
  g(0, 0) = 1;
  return {"P2", {"L"}, g, vec({-3}), {{"L", vec({1}), false}}, true};
}

BaseSurface hirzebruch(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidBase, "Hirzebruch index must be non-negative");
  return {"F" + std::to_string(n),
          {"C0", "f"},
          gram2(-n, 1, 0),
          vec({-2, -(n + 2)}),
          {{"C0", vec({1, 0}), false}, {"f", vec({0, 1}), false}},
          true};
}

BaseSurface elliptic_ruled(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidBase, "elliptic ruled surface needs e = n >= 1");
  return {"ruled1_" + std::to_string(n),
          {"C0", "f"},
          gram2(-n, 1, 0),
          vec({-2, -n}),
          {{"C0", vec({1, 0}), false}, {"f", vec({0, 1}), false}},
          true};
}

void validate_base(const BaseSurface& base) {
  const Index n = base.gram.rows();
  if (n < 1) throw Error(ErrorCode::InvalidBase, "base rank must be positive");
  if (!is_symmetric(base.gram)) throw Error(ErrorCode::InvalidBase, "gram matrix is not symmetric");
  if (base.canonical.size() != n || static_cast<Index>(base.basis.size()) != n) {
    throw Error(ErrorCode::InvalidBase, "canonical class or basis has wrong length");
  }
  const Inertia in = inertia(base.gram);
  if (in.positive != 1 || in.negative != n - 1) {
    throw Error(ErrorCode::InvalidBase, "gram matrix does not have signature (1, rank-1)");
  }
  std::set<std::string> names;
  for (const Curve& c : base.curves) {
    if (c.cls.size() != n) throw Error(ErrorCode::InvalidBase, "curve '" + c.name + "' has wrong length");
    if (c.exceptional) throw Error(ErrorCode::InvalidBase, "base curves cannot be exceptional");
    if (!names.insert(c.name).second) throw Error(ErrorCode::InvalidBase, "duplicate curve name '" + c.name + "'");
  }
}

BaseSurface make_base(std::string name, std::vector<std::string> basis, Matrix gram, Vector canonical,
                      std::vector<Curve> curves) {
  BaseSurface base{std::move(name), std::move(basis), std::move(gram), std::move(canonical), std::move(curves), false};
  validate_base(base);
  return base;
}

BaseSurface with_curves(BaseSurface base, const std::vector<std::pair<std::string, Vector>>& extra) {
  for (const auto& [name, cls] : extra) base.curves.push_back({name, cls, false});
  base.effective_cone_generated = false;
  validate_base(base);
  return base;
}

SurfaceModel::SurfaceModel(BaseSurface base, std::vector<BlowupCenter> centers, Lattice lattice,
                           std::vector<std::string> exceptional_names,
                           std::vector<std::vector<int>> multiplicities)
    : base_(std::move(base)),
      centers_(std::move(centers)),
      lattice_(std::move(lattice)),
      exceptional_names_(std::move(exceptional_names)),
      multiplicities_(std::move(multiplicities)) {}

SurfaceModel build_model(BaseSurface base, std::vector<BlowupCenter> centers) {
  validate_base(base);
  const Index b = base.gram.rows();
  const Index k = static_cast<Index>(centers.size());
  const Index r = b + k;

  Matrix gram = zero_matrix(r, r);
  gram.topLeftCorner(b, b) = base.gram;
  for (Index i = b; i < r; ++i) gram(i, i) = -1;

  Vector canonical = Vector::Constant(r, Rational(1));
  canonical.head(b) = base.canonical;

  std::vector<std::string> basis;
  for (const auto& name : base.basis) basis.push_back("pi" + name);
  for (Index i = 1; i <= k; ++i) basis.push_back("E" + std::to_string(i));

  std::vector<Curve> curves;
  std::vector<std::vector<int>> mult;
  for (const Curve& c : base.curves) {
    Vector cls = zero_vector(r);
    cls.head(b) = c.cls;
    curves.push_back({c.name, std::move(cls), false});
    mult.emplace_back(static_cast<std::size_t>(k), 0);
  }

  std::vector<std::string> exceptional_names;
  for (Index i = 0; i < k; ++i) {
    BlowupCenter& center = centers[static_cast<std::size_t>(i)];
    if (center.name.empty()) center.name = "E" + std::to_string(i + 1);
    int exceptional_through = 0;
    for (const auto& [name, m] : center.multiplicities) {
      std::size_t idx = 0;
      while (idx < curves.size() && curves[idx].name != name) ++idx;
      if (idx == curves.size()) {
        throw Error(ErrorCode::UnknownCurveName,
                    "center " + std::to_string(i + 1) + " references unknown curve '" + name + "'");
      }
      if (m < 0) throw Error(ErrorCode::InvalidMultiplicity, "negative multiplicity for '" + name + "'");
      if (curves[idx].exceptional) {
        if (m > 1) {
          throw Error(ErrorCode::InvalidMultiplicity,
                      "exceptional curve '" + name + "' is smooth; multiplicity must be 0 or 1");
        }
        exceptional_through += m;
      }
      curves[idx].cls[b + i] -= m;
      mult[idx][static_cast<std::size_t>(i)] = m;
    }
    if (exceptional_through > 2) {
      throw Error(ErrorCode::InvalidMultiplicity,
                  "center " + std::to_string(i + 1) + " lies on more than two exceptional curves");
    }
    for (const Curve& c : curves) {
      if (c.name == center.name) throw Error(ErrorCode::ValidationError, "duplicate curve name '" + center.name + "'");
    }
    Vector e = zero_vector(r);
    e[b + i] = 1;
    curves.push_back({center.name, std::move(e), true});
    mult.emplace_back(static_cast<std::size_t>(k), 0);
    exceptional_names.push_back(center.name);
  }

  Lattice lattice(std::move(basis), std::move(gram), std::move(canonical), std::move(curves));
  return SurfaceModel(std::move(base), std::move(centers), std::move(lattice), std::move(exceptional_names),
                      std::move(mult));
}

SurfaceModel blow_up(const SurfaceModel& model, BlowupCenter center) {
  std::vector<BlowupCenter> centers = model.centers();
  centers.push_back(std::move(center));
  return build_model(model.base(), std::move(centers));
}

SurfaceModel truncate(const SurfaceModel& model, std::size_t depth) {
  if (depth > model.depth()) throw Error(ErrorCode::ModelMismatch, "truncation deeper than the tower");
  std::vector<BlowupCenter> centers(model.centers().begin(),
                                    model.centers().begin() + static_cast<std::ptrdiff_t>(depth));
  return build_model(model.base(), std::move(centers));
}

DivisorClass SurfaceModel::include(const Vector& base_class) const {
  if (base_class.size() != base_rank()) throw Error(ErrorCode::ModelMismatch, "base class has wrong length");
  Vector v = zero_vector(rank());
  v.head(base_rank()) = base_class;
  return lattice_.make(std::move(v));
}

DivisorClass SurfaceModel::exceptional_total(std::size_t i) const {
  return lattice_.basis_vector(base_rank() + static_cast<Index>(i));
}

int SurfaceModel::multiplicity(std::string_view curve, std::size_t center) const {
  const auto idx = lattice_.curve_index(curve);
  if (!idx) throw Error(ErrorCode::UnknownCurveName, "unknown curve '" + std::string(curve) + "'");
  return multiplicities_[static_cast<std::size_t>(*idx)][center];
}

DivisorClass SurfaceModel::strict_transform(std::string_view base_curve) const {
  for (const Curve& c : base_.curves) {
    if (c.name == base_curve) return lattice_.curve_class(base_curve);
  }
  throw Error(ErrorCode::UnknownCurveName, "'" + std::string(base_curve) + "' is not a base curve");
}

Vector SurfaceModel::base_part(const DivisorClass& d) const {
  lattice_.require_own(d);
  return d.coefficients().head(base_rank());
}

std::optional<std::string> configuration_defect(const Lattice& lattice) {
  const auto& curves = lattice.curves();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Rational self = lattice.dot(curves[i].cls, curves[i].cls);
    const Rational twice_genus_minus_two = self + lattice.dot(lattice.canonical().coefficients(), curves[i].cls);
    if (!is_integer(twice_genus_minus_two) || twice_genus_minus_two < -2 ||
        numerator(twice_genus_minus_two) % 2 != 0) {
      return "curve '" + curves[i].name + "' has negative arithmetic genus";
    }
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (lattice.dot(curves[i].cls, curves[j].cls) < 0) {
        return "curves '" + curves[i].name + "' and '" + curves[j].name + "' meet negatively";
      }
    }
  }
  return std::nullopt;
}

}  // namespace bgeom
