#pragma once

// Checks shared by the analysis pipeline and the acceptance runner: the
// squarefree test on f, Coxeter comparison targets, the three-term projective
// sequences over Gamma for standard-graded f, and recognition of the cyclic
// algebra kQ/(z^2).

#include <optional>
#include <string>
#include <vector>

#include "cmtilt/builders.hpp"
#include "cmtilt/resolution.hpp"
#include "cmtilt/unipoly.hpp"

namespace cmtilt {

/// f = y^m h with y not dividing h; f is squarefree iff m <= 1 and h(x, 1) is
/// squarefree.  Weighted homogeneity makes h determined by h(x, 1).
template <class S>
bool is_squarefree(const WeightedPoly& f) {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : f.terms) m = std::min(m, e.second);
  if (m > 1) return false;
  std::vector<S> coeffs;
  for (const auto& [e, c] : f.terms) {
    if (static_cast<int>(coeffs.size()) <= e.first) coeffs.resize(e.first + 1, S(0));
    coeffs[e.first] += from_rational<S>(c);
  }
  const UniPoly<S> h(coeffs);
  if (h.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial vanishes over this field");
  if (h.degree() <= 0) return true;
  return gcd(h, h.derivative()).degree() == 0;
}

struct CoxeterTarget {
  std::string name;      // "A3", "D6", "E8", "canonical2222"
  char family = 'A';     // 'A', 'D', 'E' or 'C' for the canonical algebra
  int rank = 0;
};

inline std::optional<CoxeterTarget> parse_target(const std::string& name) {
  if (name == "canonical2222") return CoxeterTarget{name, 'C', 6};
  if (name.size() < 2 || std::string("ADE").find(name[0]) == std::string::npos) return std::nullopt;
  int n = 0;
  try {
    n = std::stoi(name.substr(1));
  } catch (...) {
    return std::nullopt;
  }
  if (n < 1 || (name[0] == 'D' && n < 3) || (name[0] == 'E' && (n < 6 || n > 8))) return std::nullopt;
  return CoxeterTarget{name, name[0], n};
}

/// Coxeter polynomial of the target's path algebra (D3 is A3).
template <class S>
std::vector<BigInt> target_coxeter(FieldSpec field, const CoxeterTarget& t) {
  if (t.family == 'C') return coxeter_polynomial(cartan_matrix(build_canonical_2222<S>(field, Rational(-1))));
  DynkinType type = t.family == 'A' ? DynkinType::A : t.family == 'D' ? DynkinType::D : DynkinType::E;
  int n = t.rank;
  if (t.family == 'D' && n == 3) type = DynkinType::A;
  return coxeter_polynomial(cartan_matrix(path_algebra<S>(field, dynkin_quiver(type, n))));
}

/// All targets of the given rank.
inline std::vector<CoxeterTarget> targets_of_rank(int n) {
  std::vector<CoxeterTarget> out;
  out.push_back({"A" + std::to_string(n), 'A', n});
  if (n >= 4) out.push_back({"D" + std::to_string(n), 'D', n});
  if (n >= 6 && n <= 8) out.push_back({"E" + std::to_string(n), 'E', n});
  if (n == 6) out.push_back({"canonical2222", 'C', 6});
  return out;
}

struct SequenceStep {
  int i = 0;
  int dim_left = 0, dim_middle = 0, dim_right = 0;  // P^{i+2}, (P^{i+1})^2, P^i
  int rank_left = 0, rank_right = 0;
  int cokernel = 0;       // dim P^i / image, expected dim S^i = 1
  bool composite_zero = true;
  bool exact = false;
};

struct SequenceReport {
  std::vector<SequenceStep> steps;   // 1 <= i <= a, P^{a+2} = 0
  bool literal_exact = false;
  int top_kernel_dim = 0;            // kernel of (P^{a+1})^2 -> P^a
  bool top_kernel_projective = false;
  bool corrected_exact = false;      // steps i < a exact and the top kernel projective
};

/// The sequences 0 -> P^{i+2} -> (P^{i+1})^2 -> P^i -> S^i -> 0 over Gamma for
/// standard-graded f, P^i = Gamma e_i, maps given by right multiplication with
/// [y, -x] and [x, y].
template <class S>
SequenceReport check_koszul_sequences(const QuotientRing<S>& K, const FinDimAlgebra<S>& gamma) {
  const auto& R = K.ring();
  if (R.dx() != 1 || R.dy() != 1) throw Error(ErrorKind::InvalidInput, "sequence check needs the standard grading");
  const int a = K.a(), size = a + K.p();
  const int d = gamma.dim();
  auto idem = [&](int i) {
    return gamma_element(K, i, i, R.one());
  };
  auto column = [&](int i) { return Subspace<S>::spanned_by(gamma.right_matrix(idem(i))); };
  auto mult = [&](int i, const RingElement<S>& u) {
    // right multiplication by u placed in entry (i + 1, i), P^{i+1} -> P^i
    return gamma.right_matrix(gamma_element(K, i + 1, i, u));
  };
  auto basis_of = [](const Subspace<S>& s) { return s.dim() == 0 ? Mat<S>(s.ambient_dim(), 0) : s.basis(); };
  SequenceReport rep;
  rep.literal_exact = true;
  for (int i = 1; i <= a; ++i) {
    SequenceStep st;
    st.i = i;
    const Subspace<S> Pi = column(i), P1 = column(i + 1);
    const bool has_left = i + 2 <= size && i + 2 <= a + 1;
    const Subspace<S> P2 = has_left ? column(i + 2) : Subspace<S>(d);
    st.dim_left = static_cast<int>(P2.dim());
    st.dim_middle = 2 * static_cast<int>(P1.dim());
    st.dim_right = static_cast<int>(Pi.dim());
    const Mat<S> B1 = basis_of(P1);
    Mat<S> beta(d, 2 * B1.cols());
    beta << mult(i, R.x()) * B1, mult(i, R.y()) * B1;
    st.rank_right = static_cast<int>(rank<S>(beta));
    st.cokernel = st.dim_right - st.rank_right;
    Mat<S> alpha = zero_mat<S>(2 * B1.cols(), P2.dim());
    if (has_left) {
      const Mat<S> B2 = basis_of(P2);
      const Mat<S> ya = mult(i + 1, R.y()) * B2, xa = mult(i + 1, R.x()) * B2;
      for (Index c = 0; c < B2.cols(); ++c) {
        alpha.col(c).head(B1.cols()) = P1.coordinates_unchecked(ya.col(c));
        alpha.col(c).tail(B1.cols()) = -P1.coordinates_unchecked(xa.col(c));
      }
      st.composite_zero = is_zero_all<S>(Mat<S>(beta * alpha));
    }
    st.rank_left = static_cast<int>(rank<S>(alpha));
    st.exact = st.composite_zero && st.rank_left == st.dim_left && st.rank_left + st.rank_right == st.dim_middle &&
               st.cokernel == 1;
    if (!st.exact) rep.literal_exact = false;
    if (i == a) {
      // Kernel of beta as a left Gamma-module, i.e. a right module over the opposite.
      const Mat<S> ker = nullspace<S>(beta);
      rep.top_kernel_dim = static_cast<int>(ker.cols());
      Mat<S> amb(2 * d, ker.cols());
      for (Index c = 0; c < ker.cols(); ++c) {
        amb.col(c).head(d) = B1 * ker.col(c).head(B1.cols());
        amb.col(c).tail(d) = B1 * ker.col(c).tail(B1.cols());
      }
      const FinDimAlgebra<S> op = gamma.opposite();
      AlgebraModule<S> two;
      two.dim = 2 * d;
      for (int b = 0; b < d; ++b) {
        Mat<S> m = zero_mat<S>(2 * d, 2 * d);
        const Mat<S> L = gamma.left_basis(b);
        m.topLeftCorner(d, d) = L;
        m.bottomRightCorner(d, d) = L;
        two.rho.push_back(std::move(m));
      }
      const AlgebraModule<S> kmod = submodule(two, Subspace<S>::spanned_by(amb));
      rep.top_kernel_projective = ker.cols() == 0 || is_projective(op, kmod);
    }
    rep.steps.push_back(st);
  }
  rep.corrected_exact = rep.top_kernel_projective;
  for (const auto& st : rep.steps) {
    const bool ok = st.i < a ? st.exact : st.composite_zero && st.cokernel == 1;
    if (!ok) rep.corrected_exact = false;
  }
  return rep;
}

struct CyclicShape {
  bool matches = false;
  int n = 0;
};

/// Lambda with n vertex classes, dimension 2n, rad^2 = 0 and arrows forming one n-cycle.
template <class S>
CyclicShape recognize_cyclic(const FinDimAlgebra<S>& L) {
  CyclicShape out;
  const auto& st = L.structure();
  out.n = st.vertex_count();
  const int n = out.n;
  if (L.dim() != 2 * n || st.radical_sq.dim() != 0 || static_cast<int>(st.primitives.size()) != n) return out;
  const IntMatrix q = quiver_arrows(L);
  std::vector<int> next(n, -1);
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < n; ++j) {
      count += static_cast<int>(q[i][j]);
      if (q[i][j] == 1) next[i] = j;
    }
    if (count != 1 || next[i] < 0) return out;
  }
  int cur = 0;
  for (int k = 1; k < n; ++k) {
    cur = next[cur];
    if (cur == 0) return out;
  }
  out.matches = next[cur] == 0;
  return out;
}

}  // namespace cmtilt
