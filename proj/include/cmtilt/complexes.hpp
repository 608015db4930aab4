#pragma once

// Bounded complexes of projective right modules e A, Hom in the homotopy
// category, and the complexes over the cyclic algebra kQ/(z^2).
//
// A map e A -> f A is left multiplication by an element of f A e, so a
// differential between sums of such modules is a matrix of algebra elements
// with entry [q][p] in f_q A e_p.

#include <map>
#include <string>
#include <vector>

#include "cmtilt/algebra.hpp"

namespace cmtilt {

template <class S>
using ElementMatrix = std::vector<std::vector<Vec<S>>>;  // [row][col]

template <class S>
struct BoundedComplex {
  int lo = 0;
  std::vector<std::vector<Vec<S>>> terms;        // idempotents of the summands, degree lo + k
  std::vector<std::vector<std::string>> names;   // summand labels, same shape as terms
  std::vector<ElementMatrix<S>> d;               // d[k]: degree lo + k -> lo + k + 1

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool empty() const { return terms.empty(); }

  const std::vector<Vec<S>>& term(int t) const {
    static const std::vector<Vec<S>> none;
    if (t < lo || t > hi()) return none;
    return terms[t - lo];
  }

  /// Entry [q][p] of d^t, zero when out of range.
  Vec<S> diff(int t, int q, int p, int algebra_dim) const {
    if (t < lo || t >= hi()) return zero_vec<S>(algebra_dim);
    return d[t - lo][q][p];
  }
};

template <class S>
ElementMatrix<S> zero_elements(std::size_t rows, std::size_t cols, int dim) {
  return ElementMatrix<S>(rows, std::vector<Vec<S>>(cols, zero_vec<S>(dim)));
}

template <class S>
ElementMatrix<S> compose(const FinDimAlgebra<S>& A, const ElementMatrix<S>& f, const ElementMatrix<S>& g) {
  const std::size_t rows = f.size(), mid = g.size(), cols = g.empty() ? 0 : g[0].size();
  ElementMatrix<S> out = zero_elements<S>(rows, cols, A.dim());
  for (std::size_t q = 0; q < rows; ++q)
    for (std::size_t p = 0; p < cols; ++p)
      for (std::size_t r = 0; r < mid; ++r) out[q][p] += A.multiply(f[q][r], g[r][p]);
  return out;
}

/// Differential entries lie in the right corners and d d = 0.
template <class S>
void validate_complex(const FinDimAlgebra<S>& A, const BoundedComplex<S>& X) {
  if (X.d.size() + 1 != X.terms.size() && !(X.terms.empty() && X.d.empty()))
    throw Error(ErrorKind::InternalCheckFailed, "complex has the wrong number of differentials");
  for (std::size_t k = 0; k < X.d.size(); ++k)
    for (std::size_t q = 0; q < X.terms[k + 1].size(); ++q)
      for (std::size_t p = 0; p < X.terms[k].size(); ++p) {
        const Vec<S>& v = X.d[k][q][p];
        if (A.multiply(A.multiply(X.terms[k + 1][q], v), X.terms[k][p]) != v)
          throw Error(ErrorKind::InternalCheckFailed, "differential entry outside its corner");
      }
  for (std::size_t k = 0; k + 1 < X.d.size(); ++k)
    for (const auto& row : compose(A, X.d[k + 1], X.d[k]))
      for (const auto& v : row)
        if (!is_zero_all<S>(v)) throw Error(ErrorKind::InternalCheckFailed, "d^2 != 0");
}

/// X[m]: (X[m])^t = X^{t+m}, differential multiplied by (-1)^m.
template <class S>
BoundedComplex<S> shift(const BoundedComplex<S>& X, int m) {
  BoundedComplex<S> out = X;
  out.lo = X.lo - m;
  if (m % 2 != 0)
    for (auto& mat : out.d)
      for (auto& row : mat)
        for (auto& v : row) v = -v;
  return out;
}

template <class S>
BoundedComplex<S> stalk_complex(int degree, std::vector<Vec<S>> idempotents, std::vector<std::string> names) {
  BoundedComplex<S> out;
  out.lo = degree;
  out.terms.push_back(std::move(idempotents));
  out.names.push_back(std::move(names));
  return out;
}

namespace detail {

template <class S>
struct HomCell {
  int t, q, p;
  Vec<S> element;
};

/// Basis of Hom^s(X, Y) = prod_t Hom(X^t, Y^{t+s}).
template <class S>
std::vector<HomCell<S>> hom_basis(const FinDimAlgebra<S>& A, const BoundedComplex<S>& X, const BoundedComplex<S>& Y,
                                  int s) {
  std::vector<HomCell<S>> out;
  for (int t = X.lo; t <= X.hi(); ++t) {
    const auto& src = X.term(t);
    const auto& dst = Y.term(t + s);
    for (std::size_t q = 0; q < dst.size(); ++q)
      for (std::size_t p = 0; p < src.size(); ++p) {
        const Subspace<S> corner = A.corner(dst[q], src[p]);
        for (Index k = 0; k < corner.dim(); ++k)
          out.push_back({t, static_cast<int>(q), static_cast<int>(p), corner.vector(k)});
      }
  }
  return out;
}

/// Matrix of D(f) = d_Y f - (-1)^s f d_X on Hom^s, written in ambient coordinates
/// of Hom^{s+1} (one algebra vector per cell).
template <class S>
Mat<S> hom_differential(const FinDimAlgebra<S>& A, const BoundedComplex<S>& X, const BoundedComplex<S>& Y, int s,
                        const std::vector<HomCell<S>>& basis) {
  std::map<std::tuple<int, int, int>, Index> slot;
  Index rows = 0;
  for (int t = X.lo; t <= X.hi(); ++t)
    for (std::size_t q = 0; q < Y.term(t + s + 1).size(); ++q)
      for (std::size_t p = 0; p < X.term(t).size(); ++p) {
        slot[{t, static_cast<int>(q), static_cast<int>(p)}] = rows;
        rows += A.dim();
      }
  const int d = A.dim();
  const S sign = s % 2 == 0 ? S(1) : S(-1);
  Mat<S> out = zero_mat<S>(rows, static_cast<Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto& cell = basis[c];
    // d_Y^{t+s} f^t : X^t -> Y^{t+s+1}
    for (std::size_t q = 0; q < Y.term(cell.t + s + 1).size(); ++q) {
      const Vec<S> v = A.multiply(Y.diff(cell.t + s, static_cast<int>(q), cell.q, d), cell.element);
      out.col(c).segment(slot.at({cell.t, static_cast<int>(q), cell.p}), d) += v;
    }
    // f^t d_X^{t-1} : X^{t-1} -> Y^{t+s}, the cell of X^{t-1}
    for (std::size_t p = 0; p < X.term(cell.t - 1).size(); ++p) {
      const Vec<S> v = A.multiply(cell.element, X.diff(cell.t - 1, cell.p, static_cast<int>(p), d));
      out.col(c).segment(slot.at({cell.t - 1, cell.q, static_cast<int>(p)}), d) -= sign * v;
    }
  }
  return out;
}

}  // namespace detail

/// dim Hom_{K^b(proj A)}(X, Y[s]) = dim H^s of the total Hom complex.
template <class S>
int hom_homotopy(const FinDimAlgebra<S>& A, const BoundedComplex<S>& X, const BoundedComplex<S>& Y, int s) {
  const auto here = detail::hom_basis(A, X, Y, s);
  const auto before = detail::hom_basis(A, X, Y, s - 1);
  const Index rank_out = rank<S>(detail::hom_differential(A, X, Y, s, here));
  const Index rank_in = rank<S>(detail::hom_differential(A, X, Y, s - 1, before));
  return static_cast<int>(static_cast<Index>(here.size()) - rank_out - rank_in);
}

/// H^0 of the endomorphism complex as a finite-dimensional algebra.
template <class S>
FinDimAlgebra<S> homotopy_endomorphisms(const FinDimAlgebra<S>& A, const BoundedComplex<S>& X) {
  const auto cells = detail::hom_basis(A, X, X, 0);
  const Mat<S> D0 = detail::hom_differential(A, X, X, 0, cells);
  const Mat<S> cycles = nullspace<S>(D0);
  // Boundaries, in the coordinates of the degree-zero cells.
  const auto prev = detail::hom_basis(A, X, X, -1);
  const Mat<S> Dm = detail::hom_differential(A, X, X, -1, prev);
  const Index d = A.dim();
  // Coordinates of the ambient vector of a Hom^0 element in the cell basis.
  Mat<S> cell_ambient = zero_mat<S>(Dm.rows(), static_cast<Index>(cells.size()));
  {
    std::map<std::tuple<int, int, int>, Index> slot;
    Index row = 0;
    for (int t = X.lo; t <= X.hi(); ++t)
      for (std::size_t q = 0; q < X.term(t).size(); ++q)
        for (std::size_t p = 0; p < X.term(t).size(); ++p) {
          slot[{t, static_cast<int>(q), static_cast<int>(p)}] = row;
          row += d;
        }
    for (std::size_t c = 0; c < cells.size(); ++c)
      cell_ambient.col(c).segment(slot.at({cells[c].t, cells[c].q, cells[c].p}), d) = cells[c].element;
  }
  const Subspace<S> boundaries = Subspace<S>::spanned_by(Dm);
  // Quotient basis: cycles independent modulo boundaries.
  std::vector<Vec<S>> reps;  // ambient vectors
  Subspace<S> seen = boundaries;
  for (Index c = 0; c < cycles.cols(); ++c) {
    const Vec<S> v = cell_ambient * cycles.col(c);
    if (seen.add(v)) reps.push_back(v);
  }
  const Index h = static_cast<Index>(reps.size());
  Mat<S> rep_basis(Dm.rows(), h);
  for (Index k = 0; k < h; ++k) rep_basis.col(k) = reps[k];
  Mat<S> with_boundaries(Dm.rows(), h + boundaries.dim());
  with_boundaries.leftCols(h) = rep_basis;
  for (Index k = 0; k < boundaries.dim(); ++k) with_boundaries.col(h + k) = boundaries.vector(k);
  auto to_matrices = [&](const Vec<S>& amb) {
    std::map<int, ElementMatrix<S>> out;
    Index row = 0;
    for (int t = X.lo; t <= X.hi(); ++t) {
      const std::size_t n = X.term(t).size();
      out[t] = zero_elements<S>(n, n, A.dim());
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p, row += d) out[t][q][p] = amb.segment(row, d);
    }
    return out;
  };
  auto to_ambient = [&](const std::map<int, ElementMatrix<S>>& m) {
    Vec<S> out(Dm.rows());
    Index row = 0;
    for (int t = X.lo; t <= X.hi(); ++t)
      for (const auto& r : m.at(t))
        for (const auto& v : r) {
          out.segment(row, d) = v;
          row += d;
        }
    return out;
  };
  auto class_of = [&](const Vec<S>& amb) -> Vec<S> {
    const auto sol = solve<S>(with_boundaries, amb);
    if (!sol) throw Error(ErrorKind::InternalCheckFailed, "composite of chain maps is not a cycle");
    return sol->head(h);
  };
  std::vector<std::map<int, ElementMatrix<S>>> mats;
  for (const auto& v : reps) mats.push_back(to_matrices(v));
  std::map<int, ElementMatrix<S>> id;
  for (int t = X.lo; t <= X.hi(); ++t) {
    const std::size_t n = X.term(t).size();
    id[t] = zero_elements<S>(n, n, A.dim());
    for (std::size_t q = 0; q < n; ++q) id[t][q][q] = X.term(t)[q];
  }
  std::vector<std::string> labels;
  for (Index k = 0; k < h; ++k) labels.push_back("h" + std::to_string(k));
  auto product = [&](int u, int v) {
    std::map<int, ElementMatrix<S>> comp;
    for (int t = X.lo; t <= X.hi(); ++t) comp[t] = compose(A, mats[u].at(t), mats[v].at(t));
    return class_of(to_ambient(comp));
  };
  return algebra_from_products<S>(A.field(), labels, product, class_of(to_ambient(id)), {}, {});
}

/// Local with residue field k: one vertex class, one primitive idempotent, residue dimension 1.
template <class S>
bool is_local_endomorphism_algebra(const FinDimAlgebra<S>& E) {
  if (E.dim() == 0) return false;
  const auto& st = E.structure();
  return st.vertex_count() == 1 && st.primitives.size() == 1;
}

// Complexes over the cyclic algebra built by build_cyclic_nilpotent: vertex v of
// Z/nZ (labels 1..n) has idempotent basis vector (v-1) mod n and the arrow
// z: v -> v+1 is basis vector n + (v-1) mod n.

inline int cyclic_vertex(int v, int n) { return ((v - 1) % n + n) % n; }

template <class S>
Vec<S> cyclic_idempotent(const FinDimAlgebra<S>& A, int n, int v) {
  return unit_vec<S>(A.dim(), cyclic_vertex(v, n));
}

template <class S>
Vec<S> cyclic_arrow(const FinDimAlgebra<S>& A, int n, int v) {
  return unit_vec<S>(A.dim(), n + cyclic_vertex(v, n));
}

inline std::string cyclic_name(int v, int n) { return "P" + std::to_string(cyclic_vertex(v, n) + 1); }

/// X^i_{a,b}: P^i -> P^{i+1} -> ... -> P^{i+b} in degrees a .. a+b, all maps z.
template <class S>
BoundedComplex<S> build_x_complex(const FinDimAlgebra<S>& A, int n, int i, int a, int b) {
  if (b < 0) throw Error(ErrorKind::InvalidInput, "X^i_{a,b} needs b >= 0");
  BoundedComplex<S> X;
  X.lo = a;
  for (int k = 0; k <= b; ++k) {
    X.terms.push_back({cyclic_idempotent(A, n, i + k)});
    X.names.push_back({cyclic_name(i + k, n)});
    if (k < b) X.d.push_back({{cyclic_arrow(A, n, i + k)}});
  }
  validate_complex(A, X);
  return X;
}

/// M = X^1_{1-n, n-1}: P^1 -> ... -> P^n in degrees 1-n .. 0.
template <class S>
BoundedComplex<S> build_m_complex(const FinDimAlgebra<S>& A, int n) {
  return build_x_complex(A, n, 1, 1 - n, n - 1);
}

/// P = P^1 + ... + P^{n-1} as a stalk complex in degree 0 (empty when n = 1).
template <class S>
BoundedComplex<S> build_p_stalk(const FinDimAlgebra<S>& A, int n) {
  if (n == 1) return {};
  std::vector<Vec<S>> idems;
  std::vector<std::string> names;
  for (int v = 1; v <= n - 1; ++v) {
    idems.push_back(cyclic_idempotent(A, n, v));
    names.push_back(cyclic_name(v, n));
  }
  return stalk_complex<S>(0, std::move(idems), std::move(names));
}

struct SiltingReport {
  int n = 0;
  std::vector<std::pair<int, int>> hom_table;      // (s, dim Hom(M, M[s])), |s| <= 2n + 2
  std::vector<std::pair<int, int>> p_orthogonal;   // (i, dim Hom(P[i], M)), |i| <= 2n
  bool silting = false;
  bool tilting = false;
  bool matches_dg_model = false;   // dims of k[w]/(w^2), deg w = 1 - n
  bool p_vanishes = false;
  bool m_local = false;
};

template <class S>
SiltingReport silting_positivity_check(const FinDimAlgebra<S>& A, int n) {
  SiltingReport rep;
  rep.n = n;
  const BoundedComplex<S> M = build_m_complex(A, n);
  const int range = 2 * n + 2;
  rep.silting = rep.tilting = rep.matches_dg_model = true;
  for (int s = -range; s <= range; ++s) {
    const int h = hom_homotopy(A, M, M, s);
    rep.hom_table.push_back({s, h});
    if (s > 0 && h != 0) rep.silting = false;
    if (s != 0 && h != 0) rep.tilting = false;
    if (h != (s == 0 ? 1 : 0) + (s == 1 - n ? 1 : 0)) rep.matches_dg_model = false;
  }
  const BoundedComplex<S> P = build_p_stalk(A, n);
  rep.p_vanishes = true;
  for (int i = -2 * n; i <= 2 * n && !P.empty(); ++i) {
    const int h = hom_homotopy(A, shift(P, i), M, 0);
    rep.p_orthogonal.push_back({i, h});
    if (h != 0) rep.p_vanishes = false;
  }
  rep.m_local = is_local_endomorphism_algebra(homotopy_endomorphisms(A, M));
  return rep;
}

}  // namespace cmtilt
