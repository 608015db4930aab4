#pragma once

// Right modules over a FinDimAlgebra, projective covers, minimal projective
// resolutions and the dimension verdicts built on them.
//
// A module stores one action matrix per algebra basis element: m.b = rho[b] m,
// so rho(u v) = rho(v) rho(u).

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cmtilt/algebra.hpp"

namespace cmtilt {

template <class S>
struct AlgebraModule {
  int dim = 0;
  std::vector<Mat<S>> rho;

  Mat<S> action(const Vec<S>& a) const {
    Mat<S> m = zero_mat<S>(dim, dim);
    for (Index b = 0; b < a.size(); ++b)
      axpy(m, a(b), rho[b]);
    return m;
  }
};

/// Checks rho(e_i e_j) = rho(e_j) rho(e_i) for all basis pairs and rho(1) = id.
template <class S>
bool is_module(const FinDimAlgebra<S>& A, const AlgebraModule<S>& M) {
  if (static_cast<int>(M.rho.size()) != A.dim()) return false;
  if (M.action(A.unit()) != identity_mat<S>(M.dim)) return false;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      if (M.action(A.left_basis(i).col(j)) != mul(M.rho[j], M.rho[i])) return false;
  return true;
}

template <class S>
AlgebraModule<S> right_regular(const FinDimAlgebra<S>& A) {
  AlgebraModule<S> M{A.dim(), {}};
  for (int b = 0; b < A.dim(); ++b) M.rho.push_back(A.right_matrix(A.basis_vector(b)));
  return M;
}

/// Submodule spanned by the columns of `sub` (must be closed under the action).
template <class S>
AlgebraModule<S> submodule(const AlgebraModule<S>& M, const Subspace<S>& sub) {
  AlgebraModule<S> out{static_cast<int>(sub.dim()), {}};
  const Mat<S> basis = sub.basis();
  for (const auto& r : M.rho) {
    const Mat<S> image = mul(r, basis);
    Mat<S> coords(sub.dim(), sub.dim());
    for (Index c = 0; c < image.cols(); ++c) {
      const auto v = sub.coordinates(image.col(c));
      if (!v) throw Error(ErrorKind::InternalCheckFailed, "subspace is not a submodule");
      coords.col(c) = *v;
    }
    out.rho.push_back(std::move(coords));
  }
  return out;
}

/// M / sub, on the standard basis vectors complementary to the pivots of sub.
template <class S>
AlgebraModule<S> quotient_module(const AlgebraModule<S>& M, const Subspace<S>& sub) {
  Subspace<S> full = sub;
  std::vector<Index> complement;
  for (Index i = 0; i < M.dim; ++i)
    if (full.add(unit_vec<S>(M.dim, i))) complement.push_back(i);
  const Index q = static_cast<Index>(complement.size());
  // Coordinates of v modulo sub in the complement basis.
  auto reduce = [&](const Vec<S>& v) {
    Mat<S> sys(M.dim, sub.dim() + q);
    sys << sub.basis(), Mat<S>::Zero(M.dim, q);
    for (Index k = 0; k < q; ++k) sys.col(sub.dim() + k) = unit_vec<S>(M.dim, complement[k]);
    const auto x = solve<S>(sys, v);
    return Vec<S>(x->tail(q));
  };
  AlgebraModule<S> out{static_cast<int>(q), {}};
  for (const auto& r : M.rho) {
    Mat<S> m(q, q);
    for (Index k = 0; k < q; ++k) m.col(k) = reduce(r.col(complement[k]));
    out.rho.push_back(std::move(m));
  }
  return out;
}

/// eA as a submodule of the right regular module.
template <class S>
AlgebraModule<S> projective_module(const FinDimAlgebra<S>& A, const Vec<S>& e) {
  return submodule(right_regular(A), Subspace<S>::spanned_by(A.left_matrix(e)));
}

/// Top of the indecomposable projective of vertex class `cls`.
template <class S>
AlgebraModule<S> simple_module(const FinDimAlgebra<S>& A, int cls) {
  const auto& st = A.structure();
  const Vec<S>& e = st.vertex(cls);
  const Subspace<S> ea = Subspace<S>::spanned_by(A.left_matrix(e));
  const Mat<S> erad = mul(A.left_matrix(e), st.radical.basis());
  AlgebraModule<S> P = submodule(right_regular(A), ea);
  Subspace<S> sub(P.dim);
  for (Index c = 0; c < erad.cols(); ++c) sub.add(*ea.coordinates(erad.col(c)));
  return quotient_module(P, sub);
}

/// Dual of the left regular module, a right A-module: rho_b = L_b^T.
template <class S>
AlgebraModule<S> dual_left_regular(const FinDimAlgebra<S>& A) {
  AlgebraModule<S> M{A.dim(), {}};
  for (int b = 0; b < A.dim(); ++b) M.rho.push_back(A.left_basis(b).transpose());
  return M;
}

/// Dual of the right regular module, a right module over the opposite algebra: rho_b = R_b^T.
template <class S>
AlgebraModule<S> dual_right_regular(const FinDimAlgebra<S>& A) {
  AlgebraModule<S> M{A.dim(), {}};
  for (int b = 0; b < A.dim(); ++b) M.rho.push_back(A.right_matrix(A.basis_vector(b)).transpose());
  return M;
}

template <class S>
struct ProjectiveCover {
  std::vector<int> summands;  // vertex class of each summand e A
  AlgebraModule<S> P;         // direct sum of the e A, in the order of summands
  Mat<S> map;                 // M.dim x P.dim
};

/// Minimal projective cover: one generator per simple summand of the top.
template <class S>
ProjectiveCover<S> projective_cover(const FinDimAlgebra<S>& A, const AlgebraModule<S>& M) {
  const auto& st = A.structure();
  // M.rad
  Subspace<S> covered(M.dim);
  for (Index k = 0; k < st.radical.dim(); ++k) covered.add_columns(M.action(st.radical.vector(k)));
  struct Generator {
    Vec<S> v;
    int cls;
  };
  std::vector<Generator> gens;
  for (int cls = 0; cls < st.vertex_count() && covered.dim() < M.dim; ++cls) {
    const Mat<S> me = M.action(st.vertex(cls));  // columns span M.e
    for (Index c = 0; c < me.cols() && covered.dim() < M.dim; ++c) {
      const Vec<S> v = me.col(c);
      if (covered.contains(v)) continue;
      gens.push_back({v, cls});
      for (int b = 0; b < A.dim(); ++b) covered.add(mul(M.rho[b], v));
    }
  }
  if (covered.dim() != M.dim) throw Error(ErrorKind::InternalCheckFailed, "projective cover is not surjective");

  ProjectiveCover<S> out;
  std::vector<Mat<S>> pieces;  // basis of each e A inside A
  int total = 0;
  for (const auto& g : gens) {
    out.summands.push_back(g.cls);
    const Subspace<S> ea = Subspace<S>::spanned_by(A.left_matrix(st.vertex(g.cls)));
    pieces.push_back(ea.basis());
    total += static_cast<int>(ea.dim());
  }
  out.P.dim = total;
  const AlgebraModule<S> reg = right_regular(A);
  for (int b = 0; b < A.dim(); ++b) out.P.rho.push_back(zero_mat<S>(total, total));
  out.map = zero_mat<S>(M.dim, total);
  int offset = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Subspace<S> ea = Subspace<S>::spanned_by(pieces[g]);
    const Index k = ea.dim();
    for (int b = 0; b < A.dim(); ++b) {
      const Mat<S> image = mul(reg.rho[b], pieces[g]);
      for (Index c = 0; c < k; ++c) out.P.rho[b].block(offset, offset + c, k, 1) = ea.coordinates_unchecked(image.col(c));
    }
    // e a -> v.(e a)
    for (Index c = 0; c < k; ++c) out.map.col(offset + c) = mul(M.action(pieces[g].col(c)), gens[g].v);
    offset += static_cast<int>(k);
  }
  return out;
}

/// Basis of Hom_A(M, N) as N.dim x M.dim matrices; equations use the algebra generators.
template <class S>
std::vector<Mat<S>> hom_space(const FinDimAlgebra<S>& A, const AlgebraModule<S>& M, const AlgebraModule<S>& N) {
  const Index m = M.dim, n = N.dim;
  const Index unknowns = m * n;
  if (unknowns == 0) return {};
  // Current solution space, columns are vec(T) in column-major order.
  Mat<S> sol = identity_mat<S>(unknowns);
  for (const auto& g : A.structure().generators) {
    if (sol.cols() == 0) break;
    const Mat<S> rm = M.action(g), rn = N.action(g);
    // vec(T rm - rn T) as a linear map of vec(T).
    Mat<S> eq = zero_mat<S>(unknowns, unknowns);
    for (Index j = 0; j < m; ++j)
      for (Index i = 0; i < n; ++i) {
        const Index col = j * n + i;  // unknown T(i, j)
        // (T rm)(i, c) gets T(i, j) rm(j, c)
        for (Index c = 0; c < m; ++c)
          if (!is_zero(rm(j, c))) eq(c * n + i, col) += rm(j, c);
        // (rn T)(r, j) gets rn(r, i) T(i, j)
        for (Index r = 0; r < n; ++r)
          if (!is_zero(rn(r, i))) eq(j * n + r, col) -= rn(r, i);
      }
    const Mat<S> restricted = mul(eq, sol);
    sol = mul(sol, nullspace<S>(restricted));
  }
  std::vector<Mat<S>> out;
  for (Index c = 0; c < sol.cols(); ++c) {
    Mat<S> t(n, m);
    for (Index j = 0; j < m; ++j)
      for (Index i = 0; i < n; ++i) t(i, j) = sol(j * n + i, c);
    out.push_back(std::move(t));
  }
  return out;
}

/// Searches Hom_A(M, N) for an invertible map: random trials, then a sweep
/// over coefficient patterns in {-1, 0, 1}.  nullopt means search-negative.
template <class S>
std::optional<Mat<S>> find_isomorphism(const FinDimAlgebra<S>& A, const AlgebraModule<S>& M,
                                       const AlgebraModule<S>& N, std::uint64_t seed = 0x5eed) {
  if (M.dim != N.dim) return std::nullopt;
  if (M.dim == 0) return Mat<S>(0, 0);
  const auto& st = A.structure();
  for (int cls = 0; cls < st.vertex_count(); ++cls)
    if (rank<S>(M.action(st.vertex(cls))) != rank<S>(N.action(st.vertex(cls)))) return std::nullopt;
  const auto hom = hom_space(A, M, N);
  if (hom.empty()) return std::nullopt;
  auto invertible = [&](const Mat<S>& t) { return rank<S>(t) == M.dim; };
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    Mat<S> t = zero_mat<S>(N.dim, M.dim);
    for (const auto& h : hom) t += random_scalar<S>(rng) * h;
    if (invertible(t)) return t;
  }
  const std::size_t h = hom.size();
  std::vector<int> digits(h, 0);
  const long long cap = 60000;
  for (long long step = 0; step < cap; ++step) {
    // next pattern in base 3
    std::size_t k = 0;
    while (k < h && digits[k] == 2) digits[k++] = 0;
    if (k == h) break;
    ++digits[k];
    Mat<S> t = zero_mat<S>(N.dim, M.dim);
    for (std::size_t i = 0; i < h; ++i)
      if (digits[i] != 0) t += S(digits[i] == 1 ? 1 : -1) * hom[i];
    if (invertible(t)) return t;
  }
  return std::nullopt;
}

enum class DimKind { Finite, Infinite, Unknown };

struct DimVerdict {
  DimKind kind = DimKind::Unknown;
  int value = -1;          // the dimension when finite, the cutoff when unknown
  int repeat_from = -1;    // syzygy indices j < k with Omega_j = Omega_k when infinite
  int repeat_to = -1;

  bool finite() const { return kind == DimKind::Finite; }
  std::string str() const {
    switch (kind) {
      case DimKind::Finite: return std::to_string(value);
      case DimKind::Infinite: return "infinite";
      case DimKind::Unknown: return "unknown(>=" + std::to_string(value) + ")";
    }
    return "unknown";
  }
};

template <class S>
struct Resolution {
  std::vector<std::vector<int>> terms;  // vertex classes of the summands of P_k
  std::vector<Mat<S>> differentials;    // d_0: P_0 -> M, d_k: P_k -> P_{k-1}
  std::vector<int> term_dims;
  std::vector<int> syzygy_dims;         // dim Omega_k, Omega_0 = M
  DimVerdict verdict;
};

/// Minimal projective resolution up to length `cutoff`.
template <class S>
Resolution<S> minimal_resolution(const FinDimAlgebra<S>& A, const AlgebraModule<S>& M, int cutoff) {
  Resolution<S> res;
  std::vector<AlgebraModule<S>> syzygies{M};
  Mat<S> inclusion = identity_mat<S>(M.dim);  // Omega_k -> P_{k-1} (identity for k = 0)
  res.syzygy_dims.push_back(M.dim);
  if (M.dim == 0) {
    res.verdict = {DimKind::Finite, 0};
    return res;
  }
  for (int k = 0; k <= cutoff; ++k) {
    const ProjectiveCover<S> cover = projective_cover(A, syzygies.back());
    res.terms.push_back(cover.summands);
    res.term_dims.push_back(cover.P.dim);
    res.differentials.push_back(mul(inclusion, cover.map));
    const Mat<S> ker = nullspace<S>(cover.map);
    const Subspace<S> kernel = Subspace<S>::spanned_by(ker);
    res.syzygy_dims.push_back(static_cast<int>(kernel.dim()));
    if (kernel.dim() == 0) {
      res.verdict = {DimKind::Finite, k};
      return res;
    }
    AlgebraModule<S> next = submodule(cover.P, kernel);
    for (int j = 0; j < static_cast<int>(syzygies.size()); ++j) {
      if (find_isomorphism(A, next, syzygies[j], A.seed())) {
        res.verdict = {DimKind::Infinite, -1, j, k + 1};
        return res;
      }
    }
    inclusion = kernel.basis();
    syzygies.push_back(std::move(next));
  }
  res.verdict = {DimKind::Unknown, cutoff};
  return res;
}

inline int default_cutoff(int algebra_dim) { return algebra_dim + 2; }

inline DimVerdict combine_max(const std::vector<DimVerdict>& vs) {
  DimVerdict out{DimKind::Finite, 0};
  for (const auto& v : vs) {
    if (v.kind == DimKind::Infinite) return v;
    if (v.kind == DimKind::Unknown) out = v;
    else if (out.kind == DimKind::Finite) out.value = std::max(out.value, v.value);
  }
  return out;
}

/// Max projective dimension of the simple modules.
template <class S>
DimVerdict global_dimension(const FinDimAlgebra<S>& A, int cutoff = -1) {
  if (cutoff < 0) cutoff = default_cutoff(A.dim());
  std::vector<DimVerdict> vs;
  for (int cls = 0; cls < A.structure().vertex_count(); ++cls)
    vs.push_back(minimal_resolution(A, simple_module(A, cls), cutoff).verdict);
  return combine_max(vs);
}

struct InjectiveDimensions {
  DimVerdict right;  // injdim of A as a right module
  DimVerdict left;   // injdim of A as a left module
};

template <class S>
InjectiveDimensions injective_dimensions(const FinDimAlgebra<S>& A, int cutoff = -1) {
  if (cutoff < 0) cutoff = default_cutoff(A.dim());
  InjectiveDimensions out;
  const FinDimAlgebra<S> op = A.opposite();
  out.right = minimal_resolution(op, dual_right_regular(A), cutoff).verdict;
  out.left = minimal_resolution(A, dual_left_regular(A), cutoff).verdict;
  return out;
}

template <class S>
bool is_projective(const FinDimAlgebra<S>& A, const AlgebraModule<S>& M) {
  return projective_cover(A, M).P.dim == M.dim;
}

/// Both duals D(A_A) and D(_A A) are projective.
template <class S>
bool self_injective(const FinDimAlgebra<S>& A) {
  return is_projective(A.opposite(), dual_right_regular(A)) && is_projective(A, dual_left_regular(A));
}

}  // namespace cmtilt
