#pragma once

// R = k[x,y]/(f) for weighted-homogeneous f.  R_i has the monomial basis
// {x^a y^b : a dx + b dy = i, x^a y^b not divisible by LM(f)}, LM taken in lex
// order with x > y.  Monomials are listed by increasing power of x.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "cmtilt/linalg.hpp"
#include "cmtilt/weighted_poly.hpp"

namespace cmtilt {

template <class S>
struct RingElement {
  int degree = 0;
  Vec<S> coords;
};

template <class S>
class GradedRing {
 public:
  GradedRing(const WeightedPoly& f, FieldSpec field) : field_(field), dx_(f.dx), dy_(f.dy) {
    for (const auto& [e, c] : f.terms) {
      S v = from_rational<S>(c);
      if (!is_zero(v)) terms_.push_back({e, v});
    }
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "polynomial vanishes over " + field.name());
    WeightedPoly reduced{{}, dx_, dy_};
    for (const auto& t : terms_) reduced.terms[t.first] = Rational(1);
    n_ = reduced.degree();
    if (n_ <= 0) throw Error(ErrorKind::InvalidInput, "polynomial is a unit");
    lead_ = reduced.leading_exponent();
    for (const auto& t : terms_)
      if (t.first == lead_) lead_coeff_ = t.second;
    source_ = f;
  }

  const FieldSpec& field() const { return field_; }
  const WeightedPoly& polynomial() const { return source_; }
  int dx() const { return dx_; }
  int dy() const { return dy_; }
  int n() const { return n_; }
  Exponent leading_exponent() const { return lead_; }

  /// Exponents (a, b) with a dx + b dy = i and no restriction, increasing in a.
  std::vector<Exponent> all_monomials(int i) const {
    std::vector<Exponent> out;
    if (i < 0) return out;
    for (int a = 0; a * dx_ <= i; ++a)
      if ((i - a * dx_) % dy_ == 0) out.push_back({a, (i - a * dx_) / dy_});
    return out;
  }

  bool is_standard(const Exponent& e) const { return e.first < lead_.first || e.second < lead_.second; }

  std::vector<Exponent> basis(int i) const {
    std::vector<Exponent> out;
    for (const auto& e : all_monomials(i))
      if (is_standard(e)) out.push_back(e);
    return out;
  }

  int dim(int i) const { return static_cast<int>(basis(i).size()); }

  Index index_of(const Exponent& e) const {
    const auto b = basis(e.first * dx_ + e.second * dy_);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b[k] == e) return static_cast<Index>(k);
    return -1;
  }

  /// Normal form of the monomial x^a y^b as coordinates in the basis of its degree.
  Vec<S> normal_form(const Exponent& e) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->normal_forms.find(e);
      if (it != cache_->normal_forms.end()) return it->second;
    }
    const int deg = e.first * dx_ + e.second * dy_;
    Vec<S> out = zero_vec<S>(dim(deg));
    if (is_standard(e)) {
      out(index_of(e)) = S(1);
    } else {
      // x^a y^b = x^(a-A) y^(b-B) LM and LM = -(1/lc) (f - lc LM).
      const S scale = -inv(lead_coeff_);
      for (const auto& [t, c] : terms_) {
        if (t == lead_) continue;
        out += (scale * c) * normal_form({e.first - lead_.first + t.first, e.second - lead_.second + t.second});
      }
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->normal_forms.emplace(e, out);
    return out;
  }

  RingElement<S> monomial(const Exponent& e) const { return {e.first * dx_ + e.second * dy_, normal_form(e)}; }
  RingElement<S> x() const { return monomial({1, 0}); }
  RingElement<S> y() const { return monomial({0, 1}); }
  RingElement<S> one() const { return monomial({0, 0}); }
  RingElement<S> zero(int degree) const { return {degree, zero_vec<S>(dim(degree))}; }

  RingElement<S> add(const RingElement<S>& u, const RingElement<S>& v) const {
    if (u.degree != v.degree) throw Error(ErrorKind::InternalCheckFailed, "adding elements of different degrees");
    return {u.degree, u.coords + v.coords};
  }

  RingElement<S> multiply(const RingElement<S>& u, const RingElement<S>& v) const {
    const int deg = u.degree + v.degree;
    RingElement<S> out = zero(deg);
    if (out.coords.size() == 0) return out;
    const auto bu = basis(u.degree), bv = basis(v.degree);
    for (std::size_t i = 0; i < bu.size(); ++i) {
      if (is_zero(u.coords(i))) continue;
      for (std::size_t j = 0; j < bv.size(); ++j) {
        if (is_zero(v.coords(j))) continue;
        out.coords += (u.coords(i) * v.coords(j)) *
                      normal_form({bu[i].first + bv[j].first, bu[i].second + bv[j].second});
      }
    }
    return out;
  }

  /// Matrix of v -> r v from R_i to R_{i + deg r}.
  Mat<S> multiplication_matrix(const RingElement<S>& r, int i) const {
    const int rows = dim(i + r.degree), cols = dim(i);
    Mat<S> m = zero_mat<S>(rows, cols);
    const auto b = basis(i);
    for (int j = 0; j < cols; ++j) m.col(j) = multiply(r, monomial(b[j])).coords;
    return m;
  }

  /// Injectivity of r on R_i for 0 <= i <= 2n + dx + dy + deg r.
  bool is_nonzerodivisor(const RingElement<S>& r) const {
    if (r.degree <= 0) throw Error(ErrorKind::DegreeNotPositive, "non-zero-divisor test needs positive degree");
    const int bound = 2 * n_ + dx_ + dy_ + r.degree;
    for (int i = 0; i <= bound; ++i)
      if (rank<S>(multiplication_matrix(r, i)) < dim(i)) return false;
    return true;
  }

  std::string monomial_label(const Exponent& e) const {
    std::string s;
    if (e.first > 0) s += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second > 0) s += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
    return s.empty() ? "1" : s;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Exponent, Vec<S>> normal_forms;
  };

  FieldSpec field_;
  WeightedPoly source_;
  int dx_, dy_, n_ = 0;
  std::vector<std::pair<Exponent, S>> terms_;
  Exponent lead_;
  S lead_coeff_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// dim k[x,y]_i for the given weights.
inline int free_dim(int i, int dx, int dy) {
  if (i < 0) return 0;
  int count = 0;
  for (int a = 0; a * dx <= i; ++a)
    if ((i - a * dx) % dy == 0) ++count;
  return count;
}

}  // namespace cmtilt
