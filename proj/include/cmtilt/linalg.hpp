#pragma once

// Exact dense linear algebra over a field scalar S (Rational or Fp).  Eigen is
// used for storage and products; every decomposition here is pivot-on-nonzero
// Gaussian elimination, so no magnitude comparisons ever happen.

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <vector>

#include "cmtilt/field.hpp"

namespace cmtilt {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Vec<S> zero_vec(Index n) {
  return Vec<S>::Constant(n, S(0));
}

template <class S>
Mat<S> zero_mat(Index r, Index c) {
  return Mat<S>::Constant(r, c, S(0));
}

template <class S>
Mat<S> identity_mat(Index n) {
  Mat<S> m = zero_mat<S>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
Vec<S> unit_vec(Index n, Index i) {
  Vec<S> v = zero_vec<S>(n);
  v(i) = S(1);
  return v;
}

template <class S, class Derived>
bool is_zero_all(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(S(m(i, j)))) return false;
  return true;
}

/// a * b, skipping zero entries.  Structure matrices are mostly zero and with
/// GMP rationals every skipped term saves allocations.
template <class DA, class DB>
Mat<typename DA::Scalar> mul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  const auto& A = a.derived();
  const auto& B = b.derived();
  std::vector<std::vector<Index>> nz(A.cols());
  for (Index k = 0; k < A.cols(); ++k)
    for (Index i = 0; i < A.rows(); ++i)
      if (!is_zero(S(A(i, k)))) nz[k].push_back(i);
  Mat<S> out = zero_mat<S>(A.rows(), B.cols());
  for (Index j = 0; j < B.cols(); ++j)
    for (Index k = 0; k < B.rows(); ++k) {
      const S bkj = B(k, j);
      if (is_zero(bkj)) continue;
      for (Index i : nz[k]) out(i, j) += A(i, k) * bkj;
    }
  return out;
}

/// y += c x, touching only the nonzero entries of x.
template <class DY, class DX, class S>
void axpy(const Eigen::MatrixBase<DY>& y_, const S& c, const Eigen::MatrixBase<DX>& x) {
  auto& y = const_cast<Eigen::MatrixBase<DY>&>(y_).derived();
  if (is_zero(c)) return;
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i) {
      const auto& v = x.derived()(i, j);
      if (!is_zero(S(v))) y(i, j) += c * v;
    }
}

template <class S>
struct Echelon {
  Mat<S> reduced;              // reduced row echelon form
  std::vector<Index> pivots;   // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
Echelon<S> row_echelon(Mat<S> a) {
  Echelon<S> out;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const S scale = inv(a(r, c));
    for (Index j = c; j < cols; ++j) a(r, j) *= scale;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const S f = a(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <class S>
Index rank(const Mat<S>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return a.rows() <= a.cols() ? row_echelon<S>(a).rank() : row_echelon<S>(a.transpose()).rank();
}

/// Columns span {v : a v = 0}.
template <class S>
Mat<S> nullspace(const Mat<S>& a) {
  const Index cols = a.cols();
  if (a.rows() == 0) return identity_mat<S>(cols);
  Echelon<S> e = row_echelon<S>(a);
  std::vector<bool> is_pivot(cols, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  Mat<S> basis = zero_mat<S>(cols, cols - e.rank());
  Index k = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = S(1);
    for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free);
    ++k;
  }
  return basis;
}

/// Indices of a maximal independent subset of the columns of `a` (greedy, left to right).
template <class S>
std::vector<Index> independent_columns(const Mat<S>& a) {
  if (a.rows() == 0) return {};
  return row_echelon<S>(a).pivots;
}

template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  Echelon<S> e = row_echelon<S>(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<S> x = zero_vec<S>(a.cols());
  for (Index r = 0; r < e.rank(); ++r) x(e.pivots[r]) = e.reduced(r, a.cols());
  return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
  const Index n = a.rows();
  if (n != a.cols()) return std::nullopt;
  if (n == 0) return Mat<S>(0, 0);
  Mat<S> aug(n, 2 * n);
  aug << a, identity_mat<S>(n);
  Echelon<S> e = row_echelon<S>(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return Mat<S>(e.reduced.rightCols(n));
}

template <class S>
S determinant(Mat<S> a) {
  const Index n = a.rows();
  S det(1);
  for (Index c = 0; c < n; ++c) {
    Index piv = -1;
    for (Index i = c; i < n; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return S(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const S pinv = inv(a(c, c));
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const S f = a(i, c) * pinv;
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Characteristic polynomial det(t I - a), coefficients lowest degree first.
/// Hessenberg reduction followed by the standard recurrence; valid over any field.
template <class S>
std::vector<S> charpoly(Mat<S> h) {
  const Index n = h.rows();
  for (Index j = 0; j + 2 < n; ++j) {
    Index piv = -1;
    for (Index i = j + 1; i < n; ++i)
      if (!is_zero(h(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      h.row(piv).swap(h.row(j + 1));
      h.col(piv).swap(h.col(j + 1));
    }
    const S pinv = inv(h(j + 1, j));
    for (Index k = j + 2; k < n; ++k) {
      if (is_zero(h(k, j))) continue;
      const S u = h(k, j) * pinv;
      h.row(k) -= u * h.row(j + 1);
      h.col(j + 1) += u * h.col(k);
    }
  }
  // p[m] has degree m.
  std::vector<std::vector<S>> p(n + 1);
  p[0] = {S(1)};
  for (Index m = 1; m <= n; ++m) {
    std::vector<S> cur(m + 1, S(0));
    // (t - h_mm) p_{m-1}
    for (Index d = 0; d < m; ++d) {
      cur[d + 1] += p[m - 1][d];
      cur[d] -= h(m - 1, m - 1) * p[m - 1][d];
    }
    S t(1);
    for (Index i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      const S coeff = t * h(m - i - 1, m - 1);
      if (is_zero(coeff)) continue;
      for (std::size_t d = 0; d < p[m - i - 1].size(); ++d) cur[d] -= coeff * p[m - i - 1][d];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

/// A subspace of S^n kept in reduced echelon form: each basis vector has a 1 at
/// its pivot and zeros at every other pivot, so coordinates are read off directly.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}

  static Subspace spanned_by(const Mat<S>& columns) {
    Subspace s(columns.rows());
    for (Index j = 0; j < columns.cols(); ++j) s.add(columns.col(j));
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  const Vec<S>& vector(Index k) const { return basis_[k]; }
  const std::vector<Index>& pivots() const { return pivots_; }

  Mat<S> basis() const {
    Mat<S> m(ambient_, dim());
    for (Index k = 0; k < dim(); ++k) m.col(k) = basis_[k];
    return m;
  }

  /// Residue of v after reduction against the basis.
  Vec<S> reduce(Vec<S> v) const {
    for (Index k = 0; k < dim(); ++k) {
      const S c = v(pivots_[k]);
      if (!is_zero(c)) axpy(v, S(-c), basis_[k]);
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return is_zero_all<S>(reduce(v)); }

  bool contains_all(const Mat<S>& m) const {
    for (Index j = 0; j < m.cols(); ++j)
      if (!contains(m.col(j))) return false;
    return true;
  }

  /// Coordinates in this subspace's basis, or nullopt if v is outside.
  std::optional<Vec<S>> coordinates(const Vec<S>& v) const {
    Vec<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[k]);
    if (!contains(v)) return std::nullopt;
    return c;
  }

  /// Coordinates without the membership check; caller guarantees v lies inside.
  Vec<S> coordinates_unchecked(const Vec<S>& v) const {
    Vec<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[k]);
    return c;
  }

  /// Returns true if the dimension grew.
  bool add(const Vec<S>& v0) {
    Vec<S> v = reduce(v0);
    Index piv = -1;
    for (Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    v *= inv(v(piv));
    for (auto& b : basis_) {
      const S c = b(piv);
      if (!is_zero(c)) axpy(b, S(-c), v);
    }
    // Keep pivots sorted so the basis order is canonical.
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    basis_.insert(basis_.begin() + idx, std::move(v));
    return true;
  }

  void add_columns(const Mat<S>& m) {
    for (Index j = 0; j < m.cols(); ++j) add(m.col(j));
  }

  Subspace intersect(const Subspace& other) const {
    // Solve B x = C y.
    Mat<S> sys(ambient_, dim() + other.dim());
    sys << basis(), -other.basis();
    Mat<S> ker = nullspace<S>(sys);
    Subspace out(ambient_);
    out.add_columns(mul(basis(), ker.topRows(dim())));
    return out;
  }

 private:
  Index ambient_ = 0;
  std::vector<Vec<S>> basis_;
  std::vector<Index> pivots_;
};

}  // namespace cmtilt
