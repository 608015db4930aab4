#pragma once

// Graded R-modules stored degreewise on a finite window, the degree-zero Hom
// oracle between them, and the CM_0 test through the Lambda-module of K (x) M.

#include <functional>
#include <string>
#include <vector>

#include "cmtilt/quotient_ring.hpp"
#include "cmtilt/resolution.hpp"

namespace cmtilt {

template <class S>
class GradedModuleWindow {
 public:
  GradedModuleWindow(int lo, int hi, int dx, int dy, std::vector<int> dims, std::vector<Mat<S>> act_x,
                     std::vector<Mat<S>> act_y)
      : lo_(lo), hi_(hi), dx_(dx), dy_(dy), dims_(std::move(dims)), act_x_(std::move(act_x)), act_y_(std::move(act_y)) {}

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int dx() const { return dx_; }
  int dy() const { return dy_; }
  int dim(int j) const { return j < lo_ || j > hi_ ? 0 : dims_[j - lo_]; }

  /// x: M_j -> M_{j+dx}.  Zero outside the window.
  Mat<S> x_map(int j) const { return action(act_x_, j, dx_); }
  Mat<S> y_map(int j) const { return action(act_y_, j, dy_); }

  /// Multiplication by a homogeneous ring element, M_j -> M_{j + deg u}.
  Mat<S> element_map(const GradedRing<S>& R, const RingElement<S>& u, int j) const {
    Mat<S> out = zero_mat<S>(dim(j + u.degree), dim(j));
    const auto mons = R.basis(u.degree);
    for (std::size_t k = 0; k < mons.size(); ++k) {
      if (is_zero(u.coords(k))) continue;
      Mat<S> m = identity_mat<S>(dim(j));
      int cur = j;
      for (int t = 0; t < mons[k].first; ++t, cur += dx_) m = x_map(cur) * m;
      for (int t = 0; t < mons[k].second; ++t, cur += dy_) m = y_map(cur) * m;
      out += u.coords(k) * m;
    }
    return out;
  }

  /// x y = y x on every degree where both composites stay in the window.
  bool commutes() const {
    for (int j = lo_; j + dx_ + dy_ <= hi_; ++j)
      if (y_map(j + dx_) * x_map(j) != x_map(j + dy_) * y_map(j)) return false;
    return true;
  }

 private:
  Mat<S> action(const std::vector<Mat<S>>& maps, int j, int step) const {
    if (j < lo_ || j + step > hi_ || dim(j) == 0 || dim(j + step) == 0) return zero_mat<S>(dim(j + step), dim(j));
    return maps[j - lo_];
  }

  int lo_, hi_, dx_, dy_;
  std::vector<int> dims_;
  std::vector<Mat<S>> act_x_, act_y_;
};

enum class TruncationKind { RTrunc, KTrunc, RQuot };

inline std::string truncation_name(TruncationKind kind, int shift) {
  const std::string s = std::to_string(shift);
  switch (kind) {
    case TruncationKind::RTrunc: return "R(" + s + ")_{>=0}";
    case TruncationKind::KTrunc: return "K(" + s + ")_{>=0}";
    case TruncationKind::RQuot: return "(R/R_{>=" + s + "})(" + s + ")";
  }
  return "?";
}

namespace detail {

template <class S>
GradedModuleWindow<S> window_from(int lo, int hi, int dx, int dy, const std::function<int(int)>& dim,
                                  const std::function<Mat<S>(int, int)>& act) {
  std::vector<int> dims;
  std::vector<Mat<S>> ax, ay;
  for (int j = lo; j <= hi; ++j) dims.push_back(dim(j));
  for (int j = lo; j <= hi; ++j) {
    ax.push_back(j + dx <= hi ? act(j, 0) : Mat<S>());
    ay.push_back(j + dy <= hi ? act(j, 1) : Mat<S>());
  }
  return GradedModuleWindow<S>(lo, hi, dx, dy, std::move(dims), std::move(ax), std::move(ay));
}

}  // namespace detail

/// R(i)_{>=0}, K(i)_{>=0} or (R/R_{>=i})(i) on degrees up to hi.
template <class S>
GradedModuleWindow<S> truncation_module(const QuotientRing<S>& K, TruncationKind kind, int i, int hi) {
  const GradedRing<S>& R = K.ring();
  const int dx = R.dx(), dy = R.dy();
  switch (kind) {
    case TruncationKind::RTrunc:
      return detail::window_from<S>(
          0, hi, dx, dy, [&](int j) { return R.dim(i + j); },
          [&](int j, int which) { return R.multiplication_matrix(which ? R.y() : R.x(), i + j); });
    case TruncationKind::KTrunc: {
      const KElement<S> kx = K.from_ring(R.x()), ky = K.from_ring(R.y());
      return detail::window_from<S>(
          0, hi, dx, dy, [&](int j) { return K.dim(i + j); },
          [&](int j, int which) { return K.multiplication_matrix(which ? ky : kx, i + j); });
    }
    case TruncationKind::RQuot: {
      if (i < 1) throw Error(ErrorKind::InvalidInput, "R/R_{>=i} needs i >= 1");
      // Supported on degrees -i .. -1, where it equals R_{i+j}.
      auto dim = [&, i](int j) { return j < -i || j >= 0 ? 0 : R.dim(i + j); };
      return detail::window_from<S>(-i, std::max(hi, -1), dx, dy, dim, [&, i](int j, int which) -> Mat<S> {
        const int step = which ? dy : dx;
        if (dim(j) == 0 || dim(j + step) == 0) return zero_mat<S>(dim(j + step), dim(j));
        return R.multiplication_matrix(which ? R.y() : R.x(), i + j);
      });
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown truncation kind");
}

/// (R / g R)(shift) on degrees [-shift, hi]; the basis of each piece is the set of
/// non-pivot monomials of g R inside R.
template <class S>
GradedModuleWindow<S> cokernel_module(const GradedRing<S>& R, const RingElement<S>& g, int shift, int hi) {
  const int lo = -shift;
  std::vector<Subspace<S>> images;
  std::vector<std::vector<Index>> free_coords;
  for (int j = lo; j <= hi; ++j) {
    const int d = shift + j;
    Subspace<S> im(R.dim(d));
    if (d - g.degree >= 0 && R.dim(d - g.degree) > 0) im = Subspace<S>::spanned_by(R.multiplication_matrix(g, d - g.degree));
    std::vector<Index> keep;
    const auto& piv = im.pivots();
    for (Index c = 0; c < R.dim(d); ++c)
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) keep.push_back(c);
    images.push_back(std::move(im));
    free_coords.push_back(std::move(keep));
  }
  auto dim = [&](int j) { return j < lo || j > hi ? 0 : static_cast<int>(free_coords[j - lo].size()); };
  return detail::window_from<S>(lo, hi, R.dx(), R.dy(), dim, [&](int j, int which) {
    const int step = which ? R.dy() : R.dx();
    Mat<S> out = zero_mat<S>(dim(j + step), dim(j));
    if (out.size() == 0) return out;
    const Mat<S> full = R.multiplication_matrix(which ? R.y() : R.x(), shift + j);
    const auto& src = free_coords[j - lo];
    const auto& dst = free_coords[j + step - lo];
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Vec<S> v = images[j + step - lo].reduce(full.col(src[c]));
      for (std::size_t r = 0; r < dst.size(); ++r) out(r, c) = v(dst[r]);
    }
    return out;
  });
}

template <class S>
using WindowFactory = std::function<GradedModuleWindow<S>(int hi)>;

template <class S>
WindowFactory<S> truncation_factory(const QuotientRing<S>& K, TruncationKind kind, int i) {
  return [&K, kind, i](int hi) { return truncation_module(K, kind, i, hi); };
}

/// A degree-zero map, one N_j x M_j block per degree of the window.
template <class S>
struct GradedMap {
  int lo = 0;
  std::vector<Mat<S>> parts;
  const Mat<S>& at(int j) const { return parts[j - lo]; }
};

template <class S>
struct HomResult {
  int dim = 0;
  int window = 0;                     // top degree of the accepted computation
  std::vector<GradedMap<S>> basis;
};

/// Maps M -> N of degree zero commuting with x and y on [lo, hi].  Sweeps degrees
/// upward: values on x M + y M are forced, values on a complement are new
/// parameters, kernel relations of [x | y] become linear constraints.
template <class S>
HomResult<S> hom_on_window(const GradedModuleWindow<S>& M, const GradedModuleWindow<S>& N) {
  const int lo = M.lo(), hi = std::min(M.hi(), N.hi());
  const int dx = M.dx(), dy = M.dy();
  Index P = 0;
  std::vector<Mat<S>> phi;  // vec(phi_j) as (N_j M_j) x P, column-major blocks
  auto phi_at = [&](int j) -> const Mat<S>& { return phi[j - lo]; };
  auto image_of = [&](int src, int c, const Mat<S>& act) -> Mat<S> {
    const Index ns = N.dim(src);
    return act * phi_at(src).middleRows(c * ns, ns);
  };
  for (int j = lo; j <= hi; ++j) {
    const int mj = M.dim(j), nj = N.dim(j);
    if (mj == 0 || nj == 0) {
      phi.push_back(zero_mat<S>(static_cast<Index>(mj) * nj, P));
      continue;
    }
    std::vector<Mat<S>> values;  // forced value of each column of [x | y], N_j x P
    Mat<S> A(mj, 0);
    for (int which = 0; which < 2; ++which) {
      const int src = j - (which ? dy : dx);
      if (src < lo || M.dim(src) == 0) continue;
      const Mat<S> act_m = which ? M.y_map(src) : M.x_map(src);
      const Mat<S> act_n = which ? N.y_map(src) : N.x_map(src);
      const Index old = A.cols();
      A.conservativeResize(mj, old + act_m.cols());
      A.rightCols(act_m.cols()) = act_m;
      for (int c = 0; c < M.dim(src); ++c) values.push_back(image_of(src, c, act_n));
    }
    // Basis of M_j: independent image columns, completed by unit vectors.
    const auto ind = independent_columns<S>(A);
    Subspace<S> span(mj);
    Mat<S> Bm(mj, 0);
    std::vector<Mat<S>> basis_values;
    std::vector<bool> is_fresh;
    for (Index c : ind) {
      is_fresh.push_back(false);
      span.add(A.col(c));
      Bm.conservativeResize(mj, Bm.cols() + 1);
      Bm.col(Bm.cols() - 1) = A.col(c);
      basis_values.push_back(values[c]);
    }
    const Index fresh_start = P;
    int fresh = 0;
    for (int k = 0; k < mj && span.dim() < mj; ++k) {
      const Vec<S> e = unit_vec<S>(mj, k);
      if (!span.add(e)) continue;
      Bm.conservativeResize(mj, Bm.cols() + 1);
      Bm.col(Bm.cols() - 1) = e;
      basis_values.push_back(Mat<S>());
      is_fresh.push_back(true);
      ++fresh;
    }
    if (fresh > 0) {
      P += static_cast<Index>(fresh) * nj;
      for (auto& m : phi) m.conservativeResizeLike(zero_mat<S>(m.rows(), P));
      for (auto& m : values) m.conservativeResizeLike(zero_mat<S>(nj, P));
      int q = 0;
      for (std::size_t b = 0; b < basis_values.size(); ++b) {
        Mat<S>& v = basis_values[b];
        if (is_fresh[b]) {
          v = zero_mat<S>(nj, P);
          for (int r = 0; r < nj; ++r) v(r, fresh_start + q * nj + r) = S(1);
          ++q;
        } else {
          v.conservativeResizeLike(zero_mat<S>(nj, P));
        }
      }
    }
    const Mat<S> Binv = *inverse<S>(Bm);
    Mat<S> cur = zero_mat<S>(static_cast<Index>(mj) * nj, P);
    for (int c = 0; c < mj; ++c)
      for (int k = 0; k < mj; ++k)
        if (!is_zero(Binv(k, c))) cur.middleRows(c * nj, nj) += Binv(k, c) * basis_values[k];
    phi.push_back(std::move(cur));
    // Relations among the columns of [x | y].
    const Mat<S> ker = nullspace<S>(A);
    if (ker.cols() == 0 || P == 0) continue;
    Mat<S> constraints(ker.cols() * nj, P);
    for (Index w = 0; w < ker.cols(); ++w) {
      Mat<S> acc = zero_mat<S>(nj, P);
      for (Index c = 0; c < ker.rows(); ++c)
        if (!is_zero(ker(c, w))) acc += ker(c, w) * values[c];
      constraints.middleRows(w * nj, nj) = acc;
    }
    const Mat<S> Z = nullspace<S>(constraints);
    if (Z.cols() == P) continue;
    for (auto& m : phi) m = m * Z;
    P = Z.cols();
  }
  HomResult<S> out;
  out.dim = static_cast<int>(P);
  out.window = hi;
  for (Index k = 0; k < P; ++k) {
    GradedMap<S> g;
    g.lo = lo;
    for (int j = lo; j <= hi; ++j) {
      const int mj = M.dim(j), nj = N.dim(j);
      Mat<S> part = zero_mat<S>(nj, mj);
      for (int c = 0; c < mj; ++c) part.col(c) = phi_at(j).col(k).segment(static_cast<Index>(c) * nj, nj);
      g.parts.push_back(std::move(part));
    }
    out.basis.push_back(std::move(g));
  }
  return out;
}

template <class S>
int default_window(const GradedRing<S>& R) {
  return R.n() - R.dx() - R.dy() + 2 * R.n() + 2 * (R.dx() + R.dy());
}

/// Hom oracle with the stability recheck: the answer at hi = B must agree with
/// hi = B + max(dx, dy); on disagreement the window is enlarged once.
template <class S>
HomResult<S> graded_hom(const WindowFactory<S>& M, const WindowFactory<S>& N, int B, int step, int max_window = 0) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    const int lo_b = B + attempt * step, hi_b = lo_b + step;
    if (max_window > 0 && hi_b > max_window)
      throw Error(ErrorKind::WindowUnstable, "Hom window " + std::to_string(hi_b) + " exceeds --max-window");
    HomResult<S> first = hom_on_window(M(lo_b), N(lo_b));
    const HomResult<S> second = hom_on_window(M(hi_b), N(hi_b));
    if (first.dim == second.dim) return first;
  }
  throw Error(ErrorKind::WindowUnstable, "graded Hom dimension did not stabilize");
}

template <class S>
HomResult<S> graded_hom(const QuotientRing<S>& K, const WindowFactory<S>& M, const WindowFactory<S>& N,
                        int max_window = 0) {
  const auto& R = K.ring();
  return graded_hom(M, N, default_window(R), std::max(R.dx(), R.dy()), max_window);
}

template <class S>
int graded_hom_dim(const QuotientRing<S>& K, const WindowFactory<S>& M, const WindowFactory<S>& N,
                   int max_window = 0) {
  return graded_hom(K, M, N, max_window).dim;
}

/// True when the degree-zero map family commutes with x and y on the window.
template <class S>
bool is_graded_map(const GradedModuleWindow<S>& M, const GradedModuleWindow<S>& N, const GradedMap<S>& f) {
  for (int j = M.lo(); j <= std::min(M.hi(), N.hi()); ++j) {
    if (j + M.dx() <= M.hi() && N.x_map(j) * f.at(j) != f.at(j + M.dx()) * M.x_map(j)) return false;
    if (j + M.dy() <= M.hi() && N.y_map(j) * f.at(j) != f.at(j + M.dy()) * M.y_map(j)) return false;
  }
  return true;
}

/// The right Lambda-module Hom(sum_{i=1}^p K(i), K (x) M) = sum_i (K (x) M)_{-i}, read
/// off from M in degrees t - i with t a multiple of deg r past the window bound.
template <class S>
AlgebraModule<S> lambda_module_of(const WindowFactory<S>& Mf, const QuotientRing<S>& K, int stable_from) {
  const auto& R = K.ring();
  const int p = K.p(), dr = K.dr(), a = K.a();
  int t = dr * ((stable_from + p + dr - 1) / dr);
  if (t - p < stable_from) t += dr;
  const int hi = t + std::max(p, a + dr) + dr + 1;
  const GradedModuleWindow<S> M = Mf(hi);
  for (int j = t - p; j + dr <= hi; ++j) {
    const Mat<S> rm = M.element_map(R, K.r(), j);
    if (rm.rows() != rm.cols() || rank<S>(rm) != rm.rows())
      throw Error(ErrorKind::WindowUnstable, "multiplication by r is not bijective in high degrees");
  }
  auto r_power = [&](int from, int steps) {
    Mat<S> m = identity_mat<S>(M.dim(from));
    for (int s = 0; s < steps; ++s) m = M.element_map(R, K.r(), from + s * dr) * m;
    return m;
  };
  std::vector<int> offset(p + 2, 0);
  for (int i = 1; i <= p; ++i) offset[i + 1] = offset[i] + M.dim(t - i);
  const int total = offset[p + 1];
  AlgebraModule<S> out;
  out.dim = total;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j)
      for (int k = 0; k < K.dim(i - j); ++k) {
        const int rep = K.rep_degree(i - j);
        const int steps = (rep - (i - j)) / dr;
        const RingElement<S> u{rep, unit_vec<S>(R.dim(rep), k)};
        const Mat<S> um = M.element_map(R, u, t - i);
        const Mat<S> back = *inverse<S>(r_power(t - j, steps));
        Mat<S> rho = zero_mat<S>(total, total);
        rho.block(offset[j], offset[i], M.dim(t - j), M.dim(t - i)) = back * um;
        out.rho.push_back(std::move(rho));
      }
  return out;
}

/// K (x) M is projective over K, tested as projectivity of its Lambda-module.
template <class S>
bool is_cm0(const WindowFactory<S>& M, const QuotientRing<S>& K, const FinDimAlgebra<S>& lambda, int stable_from = -1) {
  if (stable_from < 0) stable_from = default_window(K.ring());
  const AlgebraModule<S> X = lambda_module_of(M, K, stable_from);
  if (!is_module(lambda, X)) throw Error(ErrorKind::InternalCheckFailed, "K (x) M failed the Lambda-module axioms");
  return is_projective(lambda, X);
}

}  // namespace cmtilt
