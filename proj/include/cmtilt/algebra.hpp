#pragma once

// Finite-dimensional associative unital algebras given by structure constants.
//
// Basis e_0..e_{d-1}; left_[i] is the matrix of v -> e_i v, so
// e_i e_j = sum_k left_[i](k, j) e_k.  Elements are coordinate vectors.

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cmtilt/linalg.hpp"
#include "cmtilt/unipoly.hpp"

namespace cmtilt {

template <class S>
class FinDimAlgebra;

template <class S>
struct AlgebraStructure {
  Subspace<S> radical;
  Subspace<S> radical_sq;
  int nilpotency_index = 0;           // least k with rad^k = 0
  std::vector<Vec<S>> primitives;     // orthogonal primitive idempotents, sum 1
  std::vector<int> origin;            // designated idempotent each primitive refines
  std::vector<int> class_of;          // vertex class of each primitive
  std::vector<int> representatives;   // one primitive index per class
  std::vector<int> multiplicity;      // primitives per class
  std::vector<int> residue_dim;       // dim eAe / e rad e per class
  std::vector<Vec<S>> generators;     // algebra generators (idempotents first)

  int vertex_count() const { return static_cast<int>(representatives.size()); }
  const Vec<S>& vertex(int cls) const { return primitives[representatives[cls]]; }
};

template <class S>
class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;

  FinDimAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<Mat<S>> left, Vec<S> unit,
                std::vector<Vec<S>> idempotents, std::vector<std::string> idempotent_labels)
      : field_(field),
        labels_(std::move(labels)),
        left_(std::move(left)),
        unit_(std::move(unit)),
        idempotents_(std::move(idempotents)),
        idempotent_labels_(std::move(idempotent_labels)) {
    if (idempotents_.empty()) {
      idempotents_.push_back(unit_);
      idempotent_labels_.push_back("1");
    }
    validate();
  }

  const FieldSpec& field() const { return field_; }
  int dim() const { return static_cast<int>(left_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<S>& unit() const { return unit_; }
  const std::vector<Vec<S>>& idempotents() const { return idempotents_; }
  const std::vector<std::string>& idempotent_labels() const { return idempotent_labels_; }
  const Mat<S>& left_basis(int i) const { return left_[i]; }

  Vec<S> basis_vector(int i) const { return unit_vec<S>(dim(), i); }

  Mat<S> left_matrix(const Vec<S>& u) const {
    Mat<S> m = zero_mat<S>(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      axpy(m, u(i), left_[i]);
    return m;
  }

  /// Matrix of v -> v u.
  Mat<S> right_matrix(const Vec<S>& u) const {
    Mat<S> m(dim(), dim());
    for (int i = 0; i < dim(); ++i) m.col(i) = mul(left_[i], u);
    return m;
  }

  Vec<S> multiply(const Vec<S>& u, const Vec<S>& v) const {
    Vec<S> out = zero_vec<S>(dim());
    for (int i = 0; i < dim(); ++i)
      if (!is_zero(u(i))) axpy(out, u(i), mul(left_[i], v));
    return out;
  }

  /// Span of e A f.
  Subspace<S> corner(const Vec<S>& e, const Vec<S>& f) const {
    return Subspace<S>::spanned_by(mul(left_matrix(e), right_matrix(f)));
  }

  /// Image of a subspace under v -> e v f.
  Subspace<S> corner_of(const Subspace<S>& sub, const Vec<S>& e, const Vec<S>& f) const {
    return Subspace<S>::spanned_by(mul(left_matrix(e), mul(right_matrix(f), sub.basis())));
  }

  /// Checks (e_i e_j) e_k = e_i (e_j e_k) on all basis triples.
  bool is_associative() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        const Vec<S> ij = left_[i].col(j);
        if (is_zero_all<S>(ij)) {
          // e_i e_j = 0 forces e_i (e_j e_k) = 0.
          for (int k = 0; k < dim(); ++k)
            if (!is_zero_all<S>(mul(left_[i], left_[j].col(k)))) return false;
          continue;
        }
        if (left_matrix(ij) != mul(left_[i], left_[j])) return false;
      }
    return true;
  }

  FinDimAlgebra opposite() const {
    std::vector<Mat<S>> left(dim());
    for (int i = 0; i < dim(); ++i) left[i] = right_matrix(basis_vector(i));
    FinDimAlgebra op(field_, labels_, std::move(left), unit_, idempotents_, idempotent_labels_);
    op.seed_ = seed_;
    return op;
  }

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  std::uint64_t seed() const { return seed_; }

  /// Radical, primitive idempotents and vertex classes, computed once.
  const AlgebraStructure<S>& structure() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->structure) cache_->structure = std::make_shared<AlgebraStructure<S>>(compute_structure());
    return *cache_->structure;
  }

 private:
  void validate() const {
    const Index d = dim();
    if (d < 1) throw Error(ErrorKind::InvalidInput, "algebra of dimension 0");
    for (const auto& l : left_)
      if (l.rows() != d || l.cols() != d) throw Error(ErrorKind::InternalCheckFailed, "bad structure matrix shape");
    if (left_matrix(unit_) != identity_mat<S>(d) || right_matrix(unit_) != identity_mat<S>(d))
      throw Error(ErrorKind::InternalCheckFailed, "unit does not act as identity");
    Vec<S> sum = zero_vec<S>(d);
    for (std::size_t a = 0; a < idempotents_.size(); ++a) {
      sum += idempotents_[a];
      for (std::size_t b = 0; b < idempotents_.size(); ++b) {
        const Vec<S> prod = multiply(idempotents_[a], idempotents_[b]);
        if (a == b ? prod != idempotents_[a] : !is_zero_all<S>(prod))
          throw Error(ErrorKind::InternalCheckFailed, "designated idempotents are not orthogonal idempotents");
      }
    }
    if (sum != unit_) throw Error(ErrorKind::InternalCheckFailed, "designated idempotents do not sum to 1");
  }

  Subspace<S> compute_radical() const {
    const int d = dim();
    if constexpr (!is_rational_v<S>) {
      if (Fp::modulus() <= static_cast<std::uint32_t>(d))
        throw Error(ErrorKind::SmallCharUnsupported, "characteristic " + std::to_string(Fp::modulus()) +
                                                         " does not exceed algebra dimension " + std::to_string(d));
    }
    Vec<S> tau(d);
    for (int k = 0; k < d; ++k) tau(k) = left_[k].trace();
    Mat<S> gram(d, d);
    for (int i = 0; i < d; ++i) gram.row(i) = (tau.transpose() * left_[i]);
    return Subspace<S>::spanned_by(nullspace<S>(gram));
  }

  // Products u v with u from `a`, v from `b`.
  Subspace<S> product_space(const Subspace<S>& a, const Subspace<S>& b) const {
    Subspace<S> out(dim());
    for (Index i = 0; i < a.dim(); ++i) {
      const Mat<S> la = left_matrix(a.vector(i));
      out.add_columns(mul(la, b.basis()));
    }
    return out;
  }

  Vec<S> evaluate(const UniPoly<S>& poly, const Vec<S>& x, const Vec<S>& e) const {
    Vec<S> acc = zero_vec<S>(dim());
    for (int k = poly.degree(); k >= 0; --k) acc = multiply(acc, x) + poly.coeff(k) * e;
    return acc;
  }

  // Minimal polynomial of x inside the corner with unit e.
  UniPoly<S> minimal_polynomial(const Vec<S>& x, const Vec<S>& e) const {
    std::vector<Vec<S>> powers{e};
    Subspace<S> span(dim());
    span.add(e);
    while (true) {
      Vec<S> next = multiply(x, powers.back());
      if (span.contains(next)) {
        Mat<S> basis(dim(), static_cast<Index>(powers.size()));
        for (std::size_t k = 0; k < powers.size(); ++k) basis.col(k) = powers[k];
        const auto c = solve<S>(basis, next);
        std::vector<S> coeffs(powers.size() + 1);
        for (std::size_t k = 0; k < powers.size(); ++k) coeffs[k] = -(*c)(k);
        coeffs.back() = S(1);
        return UniPoly<S>(coeffs);
      }
      span.add(next);
      powers.push_back(std::move(next));
    }
  }

  // Splits e using the minimal polynomial of x.  Returns the pieces (one
  // piece means no split) and whether e was certified local.
  std::pair<std::vector<Vec<S>>, bool> try_split(const Vec<S>& x, const Vec<S>& e, int residue) const {
    const UniPoly<S> mu = minimal_polynomial(x, e);
    const auto factors = factor(mu);
    if (factors.size() == 1) return {{e}, factors.front().first.degree() == residue};
    std::vector<Vec<S>> pieces;
    for (const auto& [q, m] : factors) {
      UniPoly<S> g = UniPoly<S>::constant(S(1));
      for (int k = 0; k < m; ++k) g = g * q;
      const UniPoly<S> cofactor = exact_div(mu, g);
      auto [one, s, t] = extended_gcd(cofactor, g);
      const UniPoly<S> h = (s * cofactor) % mu;
      pieces.push_back(evaluate(h, x, e));
    }
    return {pieces, false};
  }

  AlgebraStructure<S> compute_structure() const {
    AlgebraStructure<S> st;
    st.radical = compute_radical();
    // Two-sided ideal and nilpotency checks.
    const Subspace<S> whole = Subspace<S>::spanned_by(identity_mat<S>(dim()));
    if (!st.radical.contains_all(product_space(st.radical, whole).basis()) ||
        !st.radical.contains_all(product_space(whole, st.radical).basis()))
      throw Error(ErrorKind::InternalCheckFailed, "radical is not a two-sided ideal");
    st.radical_sq = product_space(st.radical, st.radical);
    {
      Subspace<S> power = st.radical;
      int k = 1;
      while (power.dim() > 0) {
        if (k > dim()) throw Error(ErrorKind::InternalCheckFailed, "radical is not nilpotent");
        power = product_space(power, st.radical);
        ++k;
      }
      st.nilpotency_index = k;
    }

    std::mt19937_64 rng(seed_);
    struct Pending {
      Vec<S> e;
      int origin;
    };
    std::vector<Pending> work;
    for (std::size_t a = 0; a < idempotents_.size(); ++a) work.push_back({idempotents_[a], static_cast<int>(a)});
    std::vector<int> residues;
    while (!work.empty()) {
      Pending cur = std::move(work.back());
      work.pop_back();
      const Subspace<S> eae = corner(cur.e, cur.e);
      const int residue = static_cast<int>(eae.dim() - corner_of(st.radical, cur.e, cur.e).dim());
      if (residue == 1) {
        st.primitives.push_back(cur.e);
        st.origin.push_back(cur.origin);
        residues.push_back(residue);
        continue;
      }
      bool done = false;
      const int attempts = static_cast<int>(eae.dim()) + 200;
      for (int t = 0; t < attempts && !done; ++t) {
        Vec<S> x = zero_vec<S>(dim());
        if (t < eae.dim()) {
          x = eae.vector(t);
        } else {
          for (Index k = 0; k < eae.dim(); ++k) x += random_scalar<S>(rng) * eae.vector(k);
        }
        auto [pieces, local] = try_split(x, cur.e, residue);
        if (pieces.size() > 1) {
          for (auto& p : pieces) work.push_back({std::move(p), cur.origin});
          done = true;
        } else if (local) {
          st.primitives.push_back(cur.e);
          st.origin.push_back(cur.origin);
          residues.push_back(residue);
          done = true;
        }
      }
      if (!done) throw Error(ErrorKind::InternalCheckFailed, "could not split or certify an idempotent as primitive");
    }
    // Deterministic order: by designated idempotent, then by coordinates.
    {
      std::vector<std::size_t> order(st.primitives.size());
      std::iota(order.begin(), order.end(), 0);
      auto key = [&](std::size_t i) {
        std::vector<std::string> k;
        for (Index c = 0; c < st.primitives[i].size(); ++c) k.push_back(to_string(st.primitives[i](c)));
        return k;
      };
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (st.origin[a] != st.origin[b]) return st.origin[a] < st.origin[b];
        return key(a) < key(b);
      });
      AlgebraStructure<S> sorted = st;
      sorted.primitives.clear();
      sorted.origin.clear();
      std::vector<int> sorted_res;
      for (auto i : order) {
        sorted.primitives.push_back(st.primitives[i]);
        sorted.origin.push_back(st.origin[i]);
        sorted_res.push_back(residues[i]);
      }
      st = std::move(sorted);
      residues = std::move(sorted_res);
    }

    // Vertex classes: eA = e'A iff some basis product of e'Ae and eAe' leaves rad.
    const int np = static_cast<int>(st.primitives.size());
    st.class_of.assign(np, -1);
    for (int i = 0; i < np; ++i) {
      if (st.class_of[i] >= 0) continue;
      const int cls = static_cast<int>(st.representatives.size());
      st.representatives.push_back(i);
      st.multiplicity.push_back(1);
      st.residue_dim.push_back(residues[i]);
      st.class_of[i] = cls;
      for (int j = i + 1; j < np; ++j)
        if (st.class_of[j] < 0 && isomorphic_projectives(st, st.primitives[i], st.primitives[j])) {
          st.class_of[j] = cls;
          ++st.multiplicity[cls];
        }
    }

    st.generators = compute_generators(st);
    return st;
  }

  // eA = e'A: find phi in e'Ae, psi in eAe' with phi psi = e', psi phi = e.
  bool isomorphic_projectives(const AlgebraStructure<S>& st, const Vec<S>& e, const Vec<S>& f) const {
    const Subspace<S> fae = corner(f, e), eaf = corner(e, f);
    for (Index a = 0; a < fae.dim(); ++a)
      for (Index b = 0; b < eaf.dim(); ++b) {
        const Vec<S> u = multiply(fae.vector(a), eaf.vector(b));  // in fAf
        if (st.radical.contains(u)) continue;
        // Inverse of u in the local ring fAf.
        const Subspace<S> faf = corner(f, f);
        const Mat<S> lu = mul(left_matrix(u), faf.basis());
        const auto w = solve<S>(lu, f);
        if (!w) continue;
        const Vec<S> winv = mul(faf.basis(), *w);
        const Vec<S> psi = multiply(eaf.vector(b), winv);
        if (multiply(fae.vector(a), psi) == f && multiply(psi, fae.vector(a)) == e) return true;
        throw Error(ErrorKind::InternalCheckFailed, "projective isomorphism witness failed verification");
      }
    return false;
  }

  // Primitive idempotents plus a greedy choice of corner elements until the
  // generated subalgebra is everything.
  std::vector<Vec<S>> compute_generators(const AlgebraStructure<S>& st) const {
    std::vector<Vec<S>> gens = st.primitives;
    auto closure = [&](const std::vector<Vec<S>>& g) {
      Subspace<S> span(dim());
      for (const auto& v : g) span.add(v);
      bool grew = true;
      while (grew) {
        grew = false;
        const Mat<S> basis = span.basis();
        for (const auto& v : g) {
          const Mat<S> prods = mul(left_matrix(v), basis);
          for (Index c = 0; c < prods.cols(); ++c) grew |= span.add(prods.col(c));
        }
      }
      return span;
    };
    Subspace<S> sub = closure(gens);
    for (std::size_t i = 0; i < st.primitives.size() && sub.dim() < dim(); ++i)
      for (std::size_t j = 0; j < st.primitives.size() && sub.dim() < dim(); ++j) {
        const Subspace<S> c = corner(st.primitives[i], st.primitives[j]);
        for (Index k = 0; k < c.dim() && sub.dim() < dim(); ++k) {
          if (sub.contains(c.vector(k))) continue;
          gens.push_back(c.vector(k));
          sub = closure(gens);
        }
      }
    if (sub.dim() != dim()) throw Error(ErrorKind::InternalCheckFailed, "generator search incomplete");
    return gens;
  }

  struct Cache {
    std::mutex mutex;
    std::shared_ptr<AlgebraStructure<S>> structure;
  };

  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<Mat<S>> left_;
  Vec<S> unit_;
  std::vector<Vec<S>> idempotents_;
  std::vector<std::string> idempotent_labels_;
  std::uint64_t seed_ = 0x5eed;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Builds an algebra from a product on basis indices: product(i, j) = coordinates of e_i e_j.
template <class S, class Product>
FinDimAlgebra<S> algebra_from_products(FieldSpec field, std::vector<std::string> labels, Product&& product,
                                       Vec<S> unit, std::vector<Vec<S>> idempotents,
                                       std::vector<std::string> idempotent_labels) {
  const int d = static_cast<int>(labels.size());
  std::vector<Mat<S>> left(d, zero_mat<S>(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) left[i].col(j) = product(i, j);
  return FinDimAlgebra<S>(field, std::move(labels), std::move(left), std::move(unit), std::move(idempotents),
                          std::move(idempotent_labels));
}

using IntMatrix = std::vector<std::vector<long long>>;

/// C[i][j] = dim e_i A e_j on class representatives.
template <class S>
IntMatrix cartan_matrix(const FinDimAlgebra<S>& A) {
  const auto& st = A.structure();
  const int m = st.vertex_count();
  IntMatrix c(m, std::vector<long long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c[i][j] = A.corner(st.vertex(i), st.vertex(j)).dim();
  return c;
}

/// arrows[i][j] = dim e_j rad e_i - dim e_j rad^2 e_i (arrows i -> j).
template <class S>
IntMatrix quiver_arrows(const FinDimAlgebra<S>& A) {
  const auto& st = A.structure();
  const int m = st.vertex_count();
  IntMatrix q(m, std::vector<long long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      q[i][j] = A.corner_of(st.radical, st.vertex(j), st.vertex(i)).dim() -
                A.corner_of(st.radical_sq, st.vertex(j), st.vertex(i)).dim();
  return q;
}

inline Mat<Rational> to_rational(const IntMatrix& m) {
  const Index n = static_cast<Index>(m.size());
  Mat<Rational> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = Rational(m[i][j]);
  return out;
}

inline BigInt int_determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  return boost::multiprecision::numerator(determinant<Rational>(to_rational(m)));
}

/// Characteristic polynomial of -C^{-T} C, lowest degree first.
inline std::vector<BigInt> coxeter_polynomial(const IntMatrix& cartan) {
  const Mat<Rational> c = to_rational(cartan);
  const auto cinv = inverse<Rational>(c);
  if (!cinv) throw Error(ErrorKind::CartanSingular, "Cartan matrix is singular");
  const Mat<Rational> phi = -(cinv->transpose() * c);
  std::vector<BigInt> out;
  for (const auto& q : charpoly<Rational>(phi)) {
    if (boost::multiprecision::denominator(q) != 1)
      throw Error(ErrorKind::InternalCheckFailed, "Coxeter polynomial is not integral");
    out.push_back(boost::multiprecision::numerator(q));
  }
  return out;
}

inline std::string polynomial_string(const std::vector<BigInt>& coeffs) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    const bool show = mag != 1 || k == 0;
    if (show) out += mag.str();
    if (k > 0) out += std::string(show ? "*" : "") + (k == 1 ? "t" : "t^" + std::to_string(k));
  }
  return out.empty() ? "0" : out;
}

}  // namespace cmtilt
