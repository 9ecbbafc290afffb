#include "bgeom/positivity.hpp"

#include "bgeom/error.hpp"
#include "bgeom/exact.hpp"

namespace bgeom {

NefCheck is_nef_tracked(const Lattice& lattice, const DivisorClass& d) {
  lattice.require_own(d);
  NefCheck result;
  for (const Curve& c : lattice.curves()) {
    const Rational product = lattice.dot(d.coefficients(), c.cls);
    if (product < 0) {
      result.nef = false;
      result.violations.emplace_back(c.name, product);
    }
  }
  return result;
}

ZariskiDecomposition zariski(const Lattice& lattice, const DivisorClass& d) {
  lattice.require_own(d);
  const auto& curves = lattice.curves();
  const Index n = static_cast<Index>(curves.size());
  std::vector<bool> in_support(curves.size(), false);
  std::vector<Index> support;
  Vector coeffs;
  Vector positive = d.coefficients();

  while (true) {
    bool grew = false;
    for (Index i = 0; i < n; ++i) {
      if (in_support[static_cast<std::size_t>(i)]) continue;
      if (lattice.dot(positive, curves[static_cast<std::size_t>(i)].cls) < 0) {
        in_support[static_cast<std::size_t>(i)] = true;
        grew = true;
      }
    }
    if (!grew) break;

    support.clear();
    for (Index i = 0; i < n; ++i) {
      if (in_support[static_cast<std::size_t>(i)]) support.push_back(i);
    }
    const Index s = static_cast<Index>(support.size());
    Matrix classes(lattice.rank(), s);
    for (Index j = 0; j < s; ++j) classes.col(j) = curves[static_cast<std::size_t>(support[j])].cls;
    const Matrix g = classes.transpose() * lattice.gram() * classes;
    if (!is_negative_definite(g)) {
      throw Error(ErrorCode::NotPseudoeffective, "negative part support is not negative definite");
    }
    // (D - Σ c_j C_j)·C_k = 0 for every C_k in the support
    const Vector rhs = classes.transpose() * (lattice.gram() * d.coefficients());
    coeffs = *solve_exact(g, rhs);
    for (Index j = 0; j < s; ++j) {
      if (coeffs[j] < 0) throw Error(ErrorCode::NotPseudoeffective, "negative part acquired a negative coefficient");
    }
    positive = d.coefficients() - classes * coeffs;
  }

  ZariskiDecomposition result{lattice.make(positive), lattice.make(d.coefficients() - positive), {}, {}};
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (coeffs[static_cast<Index>(j)] == 0) continue;
    result.support.push_back(curves[static_cast<std::size_t>(support[j])].name);
    result.coefficients.push_back(coeffs[static_cast<Index>(j)]);
  }
  return result;
}

Rational volume(const Lattice& lattice, const DivisorClass& d) {
  try {
    const ZariskiDecomposition z = zariski(lattice, d);
    const Rational square = lattice.intersect(z.positive, z.positive);
    return square > 0 ? square : Rational(0);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPseudoeffective) return Rational(0);
    throw;
  }
}

}  // namespace bgeom
