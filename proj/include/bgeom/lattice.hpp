#pragma once

#include "bgeom/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgeom {

/// Identity of a lattice; copies of a lattice share it, every construction gets a fresh one.
struct LatticeId {
  std::uint64_t value = 0;
  friend bool operator==(LatticeId, LatticeId) = default;
};

/// A divisor class: coefficient vector in the basis of one specific lattice.
class DivisorClass {
 public:
  DivisorClass(LatticeId lattice, Vector coefficients)
      : lattice_(lattice), coefficients_(std::move(coefficients)) {}

  LatticeId lattice() const { return lattice_; }
  const Vector& coefficients() const { return coefficients_; }
  const Rational& operator[](Index i) const { return coefficients_[i]; }
  Index size() const { return coefficients_.size(); }
  bool is_zero() const { return bgeom::is_zero(coefficients_); }

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& scalar);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.lattice_ == b.lattice_ && a.coefficients_ == b.coefficients_;
  }

 private:
  LatticeId lattice_;
  Vector coefficients_;
};

/// An irreducible curve whose class is tracked by a lattice. `exceptional`
/// marks curves contracted by the map down to the base surface.
struct Curve {
  std::string name;
  Vector cls;
  bool exceptional = false;
};

/// Numerical data of a surface: basis names, intersection form, canonical
/// class and the tracked irreducible curves. Immutable after construction.
class Lattice {
 public:
  Lattice(std::vector<std::string> basis, Matrix gram, Vector canonical, std::vector<Curve> curves);

  LatticeId id() const { return id_; }
  Index rank() const { return gram_.rows(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Matrix& gram() const { return gram_; }
  const std::vector<Curve>& curves() const { return curves_; }

  DivisorClass canonical() const { return {id_, canonical_}; }
  DivisorClass make(Vector coefficients) const;
  DivisorClass zero() const { return {id_, zero_vector(rank())}; }
  DivisorClass basis_vector(Index i) const;

  std::optional<Index> basis_index(std::string_view name) const;
  std::optional<Index> curve_index(std::string_view name) const;
  const Curve& curve(std::string_view name) const;  // throws UnknownCurveName
  DivisorClass curve_class(std::string_view name) const { return make(curve(name).cls); }
  DivisorClass curve_class(Index i) const { return make(curves_[static_cast<std::size_t>(i)].cls); }

  /// Throws ModelMismatch unless `d` lives on this lattice.
  void require_own(const DivisorClass& d) const;

  Rational intersect(const DivisorClass& a, const DivisorClass& b) const;
  Rational dot(const Vector& a, const Vector& b) const { return a.dot(gram_ * b); }

 private:
  LatticeId id_;
  std::vector<std::string> basis_;
  Matrix gram_;
  Vector canonical_;
  std::vector<Curve> curves_;
};

inline Rational intersect(const Lattice& lattice, const DivisorClass& a, const DivisorClass& b) {
  return lattice.intersect(a, b);
}

inline DivisorClass canonical_class(const Lattice& lattice) { return lattice.canonical(); }

/// Linear combination of tracked curves, Σ coeff·class(curve).
DivisorClass curve_combination(const Lattice& lattice,
                               const std::vector<std::pair<std::string, Rational>>& terms);

}  // namespace bgeom
