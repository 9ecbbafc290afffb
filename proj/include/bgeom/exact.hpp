#pragma once

// Exact dense linear algebra for field scalars (no tolerances: a pivot is
// either zero or it is not). Header-only and templated on the scalar so the
// same routines serve Rational and any other exact field type.

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace bgeom {

struct Inertia {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Diagonal pivots of a symmetric LDLᵀ congruence, with symmetric row/column
/// moves when a zero pivot would otherwise stall the elimination. The signs of
/// the pivots give the inertia (Sylvester's law).
template <typename Derived>
std::vector<typename Derived::Scalar> ldlt_pivots(const Eigen::MatrixBase<Derived>& symmetric) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat m = symmetric;
  const Eigen::Index n = m.rows();
  std::vector<Scalar> pivots;
  pivots.reserve(static_cast<std::size_t>(n));

  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index j = k + 1;
      while (j < n && m(j, j) == 0) ++j;
      if (j < n) {
        m.row(k).swap(m.row(j));
        m.col(k).swap(m.col(j));
      } else {
        j = k + 1;
        while (j < n && m(j, k) == 0) ++j;
        if (j == n) {
          pivots.push_back(Scalar(0));
          continue;
        }
        // all trailing diagonal entries vanish, so adding row/col j yields 2·m(j,k) on the diagonal
        m.row(k) += m.row(j);
        m.col(k) += m.col(j);
      }
    }
    const Scalar pivot = m(k, k);
    pivots.push_back(pivot);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Scalar factor = m(i, k) / pivot;
      for (Eigen::Index c = k + 1; c < n; ++c) m(i, c) -= factor * m(k, c);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      m(k, i) = Scalar(0);
      m(i, k) = Scalar(0);
    }
  }
  return pivots;
}

template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& symmetric) {
  Inertia result;
  for (const auto& p : ldlt_pivots(symmetric)) {
    if (p > 0) {
      ++result.positive;
    } else if (p < 0) {
      ++result.negative;
    } else {
      ++result.zero;
    }
  }
  return result;
}

template <typename Derived>
bool is_negative_definite(const Eigen::MatrixBase<Derived>& symmetric) {
  return inertia(symmetric).negative == symmetric.rows();
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

/// Solves a·x = b by Gaussian elimination; nullopt when a is singular.
template <typename DerivedA, typename DerivedB>
std::optional<Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1>> solve_exact(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = a.rows();
  Mat m = a;
  Vec rhs = b;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      m.row(k).swap(m.row(p));
      std::swap(rhs[k], rhs[p]);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Scalar factor = m(i, k) / m(k, k);
      for (Eigen::Index c = k; c < n; ++c) m(i, c) -= factor * m(k, c);
      rhs[i] -= factor * rhs[k];
    }
  }
  Vec x(n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    Scalar acc = rhs[k];
    for (Eigen::Index c = k + 1; c < n; ++c) acc -= m(k, c) * x[c];
    x[k] = acc / m(k, k);
  }
  return x;
}

/// Rank by exact row reduction.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = a;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(rank).swap(m.row(p));
    for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Scalar factor = m(i, c) / m(rank, c);
      m.row(i) -= factor * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

}  // namespace bgeom
