#pragma once

// Univariate polynomials over Q or F_p: arithmetic, gcd, squarefree
// decomposition and factorization into monic irreducibles.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cmtilt/field.hpp"

namespace cmtilt {

template <class S>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const S& c) { return UniPoly(std::vector<S>{c}); }
  static UniPoly monomial(const S& c, int deg) {
    std::vector<S> v(deg + 1, S(0));
    v[deg] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly t() { return monomial(S(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == S(1); }
  const std::vector<S>& coefficients() const { return c_; }
  S coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : S(0); }
  S leading() const { return c_.empty() ? S(0) : c_.back(); }

  UniPoly monic() const {
    if (is_zero()) return *this;
    const S l = inv(leading());
    std::vector<S> v = c_;
    for (auto& x : v) x *= l;
    return UniPoly(std::move(v));
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * S(static_cast<long long>(i));
    return UniPoly(std::move(v));
  }

  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<S> v(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<S> v(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> v(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (cmtilt::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const S& s, const UniPoly& a) { return constant(s) * a; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (cmtilt::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c_[i]) + ")";
      if (i > 0) out += "*t^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && cmtilt::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divmod(const UniPoly<S>& a, const UniPoly<S>& b) {
  if (b.is_zero()) throw Error(ErrorKind::InternalCheckFailed, "polynomial division by zero");
  std::vector<S> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly<S>{}, a};
  std::vector<S> q(a.degree() - db + 1, S(0));
  const S linv = inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const S c = r[i] * linv;
    if (is_zero(c)) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeff(j);
  }
  r.resize(db);
  return {UniPoly<S>(std::move(q)), UniPoly<S>(std::move(r))};
}

template <class S>
UniPoly<S> operator%(const UniPoly<S>& a, const UniPoly<S>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <class S>
UniPoly<S> exact_div(const UniPoly<S>& a, const UniPoly<S>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InternalCheckFailed, "inexact polynomial division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class S>
UniPoly<S> gcd(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero()) {
    UniPoly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s a + t b = g, g monic.
template <class S>
std::tuple<UniPoly<S>, UniPoly<S>, UniPoly<S>> extended_gcd(const UniPoly<S>& a,
                                                             const UniPoly<S>& b) {
  UniPoly<S> r0 = a, r1 = b;
  UniPoly<S> s0 = UniPoly<S>::constant(S(1)), s1;
  UniPoly<S> t0, t1 = UniPoly<S>::constant(S(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const S l = inv(r0.leading());
  return {l * r0, l * s0, l * t0};
}

template <class S>
UniPoly<S> powmod(UniPoly<S> base, BigInt e, const UniPoly<S>& mod) {
  UniPoly<S> result = UniPoly<S>::constant(S(1)) % mod;
  base = base % mod;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = (result * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return result;
}

template <class S>
using FactorList = std::vector<std::pair<UniPoly<S>, int>>;

namespace detail {

template <class S>
bool poly_less(const UniPoly<S>& a, const UniPoly<S>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) == b.coeff(i)) continue;
    if constexpr (is_rational_v<S>) return a.coeff(i) < b.coeff(i);
    else return a.coeff(i).value() < b.coeff(i).value();
  }
  return false;
}

template <class S>
void sort_factors(FactorList<S>& f) {
  std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return poly_less(x.first, y.first);
  });
}

}  // namespace detail

/// Squarefree decomposition of a monic polynomial: a = prod g_i^{m_i}, g_i
/// squarefree, pairwise coprime.  Handles p-th powers in characteristic p.
template <class S>
FactorList<S> squarefree_decomposition(const UniPoly<S>& a0) {
  FactorList<S> out;
  if (a0.degree() <= 0) return out;
  const UniPoly<S> a = a0.monic();
  const std::uint64_t p = characteristic<S>();
  UniPoly<S> c = gcd(a, a.derivative());
  UniPoly<S> w = exact_div(a, c);
  int i = 1;
  while (!w.is_one()) {
    UniPoly<S> y = gcd(w, c);
    UniPoly<S> fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    // Remaining c is a p-th power (only in characteristic p); a^p = a on F_p.
    if (p == 0) throw Error(ErrorKind::InternalCheckFailed, "squarefree decomposition stalled");
    std::vector<S> root(c.degree() / p + 1, S(0));
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) root[k / p] = c.coeff(k);
    for (auto& [g, m] : squarefree_decomposition(UniPoly<S>(std::move(root))))
      out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

struct FactorOptions {
  std::uint64_t seed = 0x5eed;
  int rational_degree_bound = 16;
  int split_retry_cap = 64;
};

namespace detail {

// Distinct-degree factorization of a squarefree monic polynomial over F_p.
inline std::vector<std::pair<UniPoly<Fp>, int>> distinct_degree(UniPoly<Fp> f) {
  std::vector<std::pair<UniPoly<Fp>, int>> out;
  const BigInt p = Fp::modulus();
  const UniPoly<Fp> x = UniPoly<Fp>::t();
  UniPoly<Fp> h = x % f;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = powmod(h, p, f);
    UniPoly<Fp> g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// Cantor-Zassenhaus equal-degree splitting.
inline std::vector<UniPoly<Fp>> equal_degree(const UniPoly<Fp>& g, int d, std::mt19937_64& rng,
                                             int retry_cap) {
  std::vector<UniPoly<Fp>> parts{g};
  const std::size_t target = static_cast<std::size_t>(g.degree() / d);
  const std::uint32_t p = Fp::modulus();
  BigInt exponent = boost::multiprecision::pow(BigInt(p), d);
  exponent = (exponent - 1) / 2;
  int attempts = 0;
  while (parts.size() < target) {
    if (++attempts > retry_cap)
      throw Error(ErrorKind::UnsupportedFactorization, "equal-degree splitting retry cap exceeded");
    std::vector<Fp> coeffs(g.degree());
    for (auto& c : coeffs) c = random_scalar<Fp>(rng);
    UniPoly<Fp> a(coeffs);
    if (a.degree() < 1) continue;
    UniPoly<Fp> b;
    if (p == 2) {
      UniPoly<Fp> term = a % g;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      b = powmod(a, exponent, g) - UniPoly<Fp>::constant(Fp(1));
    }
    std::vector<UniPoly<Fp>> next;
    for (const auto& u : parts) {
      if (u.degree() == d) {
        next.push_back(u);
        continue;
      }
      UniPoly<Fp> t = gcd(b % u, u);
      if (t.degree() > 0 && t.degree() < u.degree()) {
        next.push_back(t);
        next.push_back(exact_div(u, t));
      } else {
        next.push_back(u);
      }
    }
    parts = std::move(next);
  }
  return parts;
}

inline std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt(1000000000000LL))
    throw Error(ErrorKind::UnsupportedFactorization, "coefficient too large for rational-root search");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  const BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  const BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  return sn * sn == n && sd * sd == d;
}

// Factor a squarefree monic polynomial over Q: rational roots, then a
// quadratic irreducibility test.  Anything else is rejected.
inline std::vector<UniPoly<Rational>> factor_squarefree_rational(UniPoly<Rational> f,
                                                                 int degree_bound) {
  std::vector<UniPoly<Rational>> out;
  const int original_degree = f.degree();
  while (f.degree() >= 1) {
    if (f.degree() == 1) {
      out.push_back(f);
      return out;
    }
    if (f.coeff(0).is_zero()) {
      out.push_back(UniPoly<Rational>::t());
      f = exact_div(f, UniPoly<Rational>::t());
      continue;
    }
    // Clear denominators.
    BigInt l = 1;
    for (const auto& c : f.coefficients()) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    std::vector<BigInt> ints;
    for (const auto& c : f.coefficients()) ints.push_back(boost::multiprecision::numerator(c * Rational(l)));
    bool found = false;
    for (const BigInt& num : divisors(ints.front())) {
      for (const BigInt& den : divisors(ints.back())) {
        for (int sign : {1, -1}) {
          Rational root(BigInt(sign) * num, den);
          if (!f.eval(root).is_zero()) continue;
          UniPoly<Rational> lin(std::vector<Rational>{-root, Rational(1)});
          out.push_back(lin);
          f = exact_div(f, lin);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (found) continue;
    if (f.degree() == 2) {
      // No rational root, so the quadratic is irreducible.
      out.push_back(f);
      return out;
    }
    throw Error(ErrorKind::UnsupportedFactorization,
                "degree " + std::to_string(f.degree()) + " factor without rational roots over Q (input degree " +
                    std::to_string(original_degree) + ", bound " + std::to_string(degree_bound) + ")");
  }
  return out;
}

}  // namespace detail

/// Factorization into monic irreducibles with multiplicities, sorted canonically.
/// The leading coefficient of `a` is dropped.
template <class S>
FactorList<S> factor(const UniPoly<S>& a, const FactorOptions& opts = {}) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidInput, "cannot factor the zero polynomial");
  FactorList<S> out;
  if constexpr (is_rational_v<S>) {
    for (const auto& [g, m] : squarefree_decomposition(a))
      for (auto& irr : detail::factor_squarefree_rational(g, opts.rational_degree_bound))
        out.emplace_back(std::move(irr), m);
  } else {
    std::mt19937_64 rng(opts.seed);
    for (const auto& [g, m] : squarefree_decomposition(a))
      for (const auto& [h, d] : detail::distinct_degree(g))
        for (auto& irr : detail::equal_degree(h, d, rng, opts.split_retry_cap))
          out.emplace_back(irr.monic(), m);
  }
  detail::sort_factors(out);
  return out;
}

}  // namespace cmtilt
