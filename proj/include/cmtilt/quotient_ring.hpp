#pragma once

// The graded total quotient ring K = R[1/r] of a one-dimensional hypersurface.
// K_i is stored as the slice R_{s(i)}, s(i) = i + N dr with N >= 0 minimal such
// that s(i) > a; multiplication by r is bijective on R-degrees above a.

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "cmtilt/algebra.hpp"
#include "cmtilt/graded_ring.hpp"

namespace cmtilt {

template <class S>
struct KElement {
  int degree = 0;
  Vec<S> coords;  // in the monomial basis of R_{s(degree)}
};

template <class S>
struct ComponentData {
  int index = 0;  // 1-based
  Vec<S> idempotent;
  int period = 0;
  int local_dim = 0;
};

struct PeriodSearch {
  int period = 0;
  bool certified = true;     // false when a smaller divisor was rejected by random search only
  bool fallback = false;     // no proper divisor of dr had a unit; r itself is the witness
};

inline std::vector<int> divisors_of(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

template <class S>
class QuotientRing {
 public:
  explicit QuotientRing(std::shared_ptr<const GradedRing<S>> ring, std::uint64_t seed = 0x5eed)
      : ring_(std::move(ring)), seed_(seed) {
    const auto& R = *ring_;
    r_ = choose_nzd(R);
    dr_ = r_.degree;
    a_ = R.n() - R.dx() - R.dy();
    check_a_invariant();
    period_ = find_period(nullptr);
    decompose();
  }

  const GradedRing<S>& ring() const { return *ring_; }
  std::shared_ptr<const GradedRing<S>> ring_ptr() const { return ring_; }
  const RingElement<S>& r() const { return r_; }
  int dr() const { return dr_; }
  int a() const { return a_; }
  int p() const { return period_.period; }
  const PeriodSearch& period_search() const { return period_; }
  const std::vector<ComponentData<S>>& components() const { return components_; }
  const FinDimAlgebra<S>& degree_zero() const { return k0_; }
  std::uint64_t seed() const { return seed_; }

  /// s(i): the R-degree representing K_i.
  int rep_degree(int i) const {
    if (i > a_) return i;
    const int steps = (a_ - i) / dr_ + 1;
    return i + steps * dr_;
  }

  int dim(int i) const { return ring_->dim(rep_degree(i)); }

  KElement<S> zero(int i) const { return {i, zero_vec<S>(dim(i))}; }
  KElement<S> one() const { return from_ring(ring_->one()); }
  KElement<S> basis_element(int i, int k) const { return {i, unit_vec<S>(dim(i), k)}; }

  /// Image of u in K under R -> K.
  KElement<S> from_ring(const RingElement<S>& u) const {
    RingElement<S> cur = u;
    while (cur.degree < rep_degree(u.degree)) cur = ring_->multiply(r_, cur);
    return {u.degree, cur.coords};
  }

  KElement<S> multiply(const KElement<S>& u, const KElement<S>& v) const {
    const int deg = u.degree + v.degree;
    if (dim(deg) == 0 || is_zero_all<S>(u.coords) || is_zero_all<S>(v.coords)) return zero(deg);
    RingElement<S> prod = ring_->multiply({rep_degree(u.degree), u.coords}, {rep_degree(v.degree), v.coords});
    const int target = rep_degree(deg);
    while (prod.degree > target) prod = divide_by_r(prod);
    if (prod.degree != target) throw Error(ErrorKind::InternalCheckFailed, "K product landed below its slice");
    return {deg, prod.coords};
  }

  KElement<S> add(const KElement<S>& u, const KElement<S>& v) const { return {u.degree, u.coords + v.coords}; }

  /// Matrix of v -> u v from K_i to K_{i + deg u}.
  Mat<S> multiplication_matrix(const KElement<S>& u, int i) const {
    Mat<S> m = zero_mat<S>(dim(i + u.degree), dim(i));
    for (int k = 0; k < dim(i); ++k) m.col(k) = multiply(u, basis_element(i, k)).coords;
    return m;
  }

  /// e K_i for e in K_0.
  Subspace<S> slice(const Vec<S>* idem, int i) const {
    if (!idem) return Subspace<S>::spanned_by(identity_mat<S>(dim(i)));
    return Subspace<S>::spanned_by(multiplication_matrix({0, *idem}, i));
  }

  std::string basis_label(int i, int k) const {
    const int s = rep_degree(i);
    const std::string mono = ring_->monomial_label(ring_->basis(s)[k]);
    const int steps = (s - i) / dr_;
    if (steps == 0) return mono;
    return mono + "/r" + (steps == 1 ? "" : "^" + std::to_string(steps));
  }

  /// Some u in e K_q multiplies e K_0 onto e K_q and e K_{-q} onto e K_0 bijectively.
  /// Returns (found, certified).
  std::pair<bool, bool> has_unit(int q, const Vec<S>* idem) const {
    const Subspace<S> v0 = slice(idem, 0), vq = slice(idem, q), vm = slice(idem, -q);
    const Index d = v0.dim();
    if (vq.dim() != d || vm.dim() != d) return {false, true};
    if (d == 0) return {true, true};
    // Matrices of multiplication by each basis vector of e K_q.
    std::vector<Mat<S>> fwd, back;
    for (Index k = 0; k < d; ++k) {
      const KElement<S> u{q, vq.vector(k)};
      Mat<S> f(d, d), b(d, d);
      for (Index c = 0; c < d; ++c) {
        f.col(c) = vq.coordinates_unchecked(multiply(u, {0, v0.vector(c)}).coords);
        b.col(c) = v0.coordinates_unchecked(multiply(u, {-q, vm.vector(c)}).coords);
      }
      fwd.push_back(std::move(f));
      back.push_back(std::move(b));
    }
    auto test = [&](const std::vector<long long>& c) {
      Mat<S> f = zero_mat<S>(d, d), b = zero_mat<S>(d, d);
      for (Index k = 0; k < d; ++k) {
        if (c[k] == 0) continue;
        f += S(c[k]) * fwd[k];
        b += S(c[k]) * back[k];
      }
      return rank<S>(f) == d && rank<S>(b) == d;
    };
    for (Index k = 0; k < d; ++k) {
      std::vector<long long> c(d, 0);
      c[k] = 1;
      if (test(c)) return {true, true};
    }
    // det(f) det(b) has total degree 2d in the coordinates; a nonzero polynomial
    // of degree t does not vanish on all of T^d when |T| > t.
    const std::uint64_t size = field_size<S>();
    long long base = 2 * d + 1;
    bool definitive = true;
    if (size != 0 && static_cast<std::uint64_t>(base) > size) base = static_cast<long long>(size);
    double grid = 1;
    for (Index k = 0; k < d; ++k) grid *= static_cast<double>(base);
    if (grid <= 2e5) {
      std::vector<long long> c(d, 0);
      while (true) {
        if (test(c)) return {true, true};
        Index k = 0;
        while (k < d && c[k] == base - 1) c[k++] = 0;
        if (k == d) break;
        ++c[k];
      }
      return {false, definitive};
    }
    std::mt19937_64 rng(seed_ + static_cast<std::uint64_t>(q));
    const long long range = size != 0 ? static_cast<long long>(size) : 4 * d + 1;
    std::uniform_int_distribution<long long> dist(0, range - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long long> c(d);
      for (auto& x : c) x = dist(rng);
      if (test(c)) return {true, true};
    }
    return {false, false};
  }

 private:
  static RingElement<S> choose_nzd(const GradedRing<S>& R) {
    if (R.is_nonzerodivisor(R.x())) return R.x();
    if (R.is_nonzerodivisor(R.y())) return R.y();
    const std::uint64_t size = field_size<S>();
    const long long cap = size == 0 ? 100 : std::min<long long>(100, static_cast<long long>(size) - 1);
    // Combine x and a power of y of matching degree, or the reverse.
    Exponent big{1, 0}, small{0, 1};
    int dbig = R.dx(), dsmall = R.dy();
    if (dbig < dsmall) {
      std::swap(big, small);
      std::swap(dbig, dsmall);
    }
    if (dbig % dsmall == 0) {
      const int e = dbig / dsmall;
      const RingElement<S> lead = R.monomial(big);
      const RingElement<S> power = R.monomial({small.first * e, small.second * e});
      for (long long c = 1; c <= cap; ++c) {
        RingElement<S> cand = R.add(lead, {power.degree, S(c) * power.coords});
        if (R.is_nonzerodivisor(cand)) return cand;
      }
    }
    throw Error(ErrorKind::NoNzdFound, "no homogeneous non-zero-divisor among x, y, x + c y^e");
  }

  RingElement<S> divide_by_r(const RingElement<S>& v) const {
    const int src = v.degree - dr_;
    std::shared_ptr<const Mat<S>> inv_m;
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->inverse.find(src);
      if (it != cache_->inverse.end()) inv_m = it->second;
    }
    if (!inv_m) {
      const auto m = inverse<S>(ring_->multiplication_matrix(r_, src));
      if (!m) throw Error(ErrorKind::InternalCheckFailed, "multiplication by r is not bijective in degree " +
                                                              std::to_string(src));
      inv_m = std::make_shared<const Mat<S>>(*m);
      std::lock_guard<std::mutex> lock(cache_->mutex);
      cache_->inverse.emplace(src, inv_m);
    }
    return {src, (*inv_m) * v.coords};
  }

  // dim R_m < dim K_m exactly for m = a among the degrees scanned, with K_m
  // read off far above every candidate a, where r is checked to be bijective.
  void check_a_invariant() const {
    const auto& R = *ring_;
    const int n = R.n();
    const int high = a_ + 2 * n + dr_;
    auto stable_dim = [&](int m) {
      int t = m;
      while (t <= high) t += dr_;
      if (rank<S>(R.multiplication_matrix(r_, t)) != R.dim(t) || R.dim(t) != R.dim(t + dr_))
        throw Error(ErrorKind::InternalCheckFailed, "r is not bijective in high degree " + std::to_string(t));
      return R.dim(t);
    };
    int largest = std::numeric_limits<int>::min();
    for (int m = -(R.dx() + R.dy() + dr_); m <= high; ++m) {
      const int rd = R.dim(m), kd = stable_dim(m);
      if (rd > kd) throw Error(ErrorKind::InternalCheckFailed, "dim R_m exceeds dim K_m");
      if (rd < kd) largest = m;
    }
    if (largest != a_)
      throw Error(ErrorKind::InternalCheckFailed, "a-invariant window check gave " + std::to_string(largest) +
                                                      ", closed form " + std::to_string(a_));
  }

  PeriodSearch find_period(const Vec<S>* idem) const {
    PeriodSearch out;
    for (int q : divisors_of(dr_)) {
      if (q == dr_) {
        out.period = q;  // r itself is a unit of degree dr
        out.fallback = q > 1;
        return out;
      }
      const auto [found, certified] = has_unit(q, idem);
      if (found) {
        out.period = q;
        return out;
      }
      out.certified = out.certified && certified;
    }
    return out;
  }

  void decompose() {
    const int d = dim(0);
    std::vector<std::string> labels;
    for (int k = 0; k < d; ++k) labels.push_back(basis_label(0, k));
    k0_ = algebra_from_products<S>(
        ring_->field(), labels, [&](int i, int j) { return multiply(basis_element(0, i), basis_element(0, j)).coords; },
        one().coords, {}, {});
    k0_.set_seed(seed_);
    const auto& st = k0_.structure();
    for (std::size_t c = 0; c < st.primitives.size(); ++c) {
      ComponentData<S> comp;
      comp.index = static_cast<int>(c) + 1;
      comp.idempotent = st.primitives[c];
      comp.local_dim = static_cast<int>(slice(&comp.idempotent, 0).dim());
      comp.period = find_period(&comp.idempotent).period;
      components_.push_back(std::move(comp));
    }
  }

  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const Mat<S>>> inverse;
  };

  std::shared_ptr<const GradedRing<S>> ring_;
  std::uint64_t seed_;
  RingElement<S> r_;
  int dr_ = 1;
  int a_ = 0;
  PeriodSearch period_;
  std::vector<ComponentData<S>> components_;
  FinDimAlgebra<S> k0_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace cmtilt
