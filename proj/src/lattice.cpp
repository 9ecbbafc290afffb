#include "bgeom/lattice.hpp"

#include "bgeom/error.hpp"

#include <atomic>

namespace bgeom {

namespace {

LatticeId next_lattice_id() {
  static std::atomic<std::uint64_t> counter{0};
  return LatticeId{++counter};
}

void require_same(LatticeId a, LatticeId b) {
  if (!(a == b)) throw Error(ErrorCode::ModelMismatch, "divisor classes live on different models");
}

}  // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same(lattice_, other.lattice_);
  coefficients_ += other.coefficients_;
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same(lattice_, other.lattice_);
  coefficients_ -= other.coefficients_;
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
  coefficients_ *= scalar;
  return *this;
}

Lattice::Lattice(std::vector<std::string> basis, Matrix gram, Vector canonical, std::vector<Curve> curves)
    : id_(next_lattice_id()),
      basis_(std::move(basis)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      curves_(std::move(curves)) {
  const Index n = gram_.rows();
  if (gram_.cols() != n || canonical_.size() != n || static_cast<Index>(basis_.size()) != n) {
    throw Error(ErrorCode::InvalidBase, "lattice data has inconsistent dimensions");
  }
  for (const Curve& c : curves_) {
    if (c.cls.size() != n) throw Error(ErrorCode::InvalidBase, "curve '" + c.name + "' has wrong length");
  }
}

DivisorClass Lattice::make(Vector coefficients) const {
  if (coefficients.size() != rank()) throw Error(ErrorCode::ModelMismatch, "coefficient vector has wrong length");
  return {id_, std::move(coefficients)};
}

DivisorClass Lattice::basis_vector(Index i) const {
  Vector v = zero_vector(rank());
  v[i] = 1;
  return {id_, std::move(v)};
}

std::optional<Index> Lattice::basis_index(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == name) return static_cast<Index>(i);
  }
  return std::nullopt;
}

std::optional<Index> Lattice::curve_index(std::string_view name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].name == name) return static_cast<Index>(i);
  }
  return std::nullopt;
}

const Curve& Lattice::curve(std::string_view name) const {
  const auto i = curve_index(name);
  if (!i) throw Error(ErrorCode::UnknownCurveName, "unknown curve '" + std::string(name) + "'");
  return curves_[static_cast<std::size_t>(*i)];
}

void Lattice::require_own(const DivisorClass& d) const {
  if (!(d.lattice() == id_)) throw Error(ErrorCode::ModelMismatch, "divisor class belongs to another model");
}

Rational Lattice::intersect(const DivisorClass& a, const DivisorClass& b) const {
  require_own(a);
  require_own(b);
  return dot(a.coefficients(), b.coefficients());
}

DivisorClass curve_combination(const Lattice& lattice,
                               const std::vector<std::pair<std::string, Rational>>& terms) {
  DivisorClass sum = lattice.zero();
  for (const auto& [name, coeff] : terms) sum += coeff * lattice.curve_class(name);
  return sum;
}

}  // namespace bgeom
