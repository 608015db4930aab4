#include <random>

#include "doctest.h"

#include "cmtilt/linalg.hpp"
#include "cmtilt/unipoly.hpp"
#include "cmtilt/weighted_poly.hpp"

using namespace cmtilt;

namespace {

template <class S>
UniPoly<S> poly(std::initializer_list<long long> low_first) {
  std::vector<S> c;
  for (long long v : low_first) c.push_back(S(v));
  return UniPoly<S>(c);
}

// Leibniz expansion, an oracle independent of elimination.
template <class S>
S leibniz_det(const Mat<S>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  S total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    S term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class S>
bool irreducible_by_search(const UniPoly<S>& f) {
  // Over F_p: no monic factor of degree <= deg/2, by enumerating all of them.
  const int p = static_cast<int>(Fp::modulus());
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::vector<int> c(d, 0);
    while (true) {
      std::vector<S> coeffs;
      for (int v : c) coeffs.push_back(S(v));
      coeffs.push_back(S(1));
      if ((f % UniPoly<S>(coeffs)).is_zero()) return false;
      int k = 0;
      while (k < d && c[k] == p - 1) c[k++] = 0;
      if (k == d) break;
      ++c[k];
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  FpContext ctx(7);
  CHECK(Fp(3) * Fp(5) == Fp(1));
  CHECK(Fp(-1) == Fp(6));
  for (int v = 1; v < 7; ++v) CHECK(Fp(v) * Fp(v).inverse() == Fp(1));
  CHECK_THROWS_AS(FpContext(8), Error);
  CHECK(is_prime(101));
  CHECK(!is_prime(91));
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("fp:101").p == 101);
  CHECK(FieldSpec::parse("fp:101").name() == "fp:101");
  CHECK_THROWS_AS(FieldSpec::parse("fp:100"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("r"), Error);
}

TEST_CASE("gcd of univariate polynomials") {
  SUBCASE("common factor over Q") {
    CHECK(gcd(poly<Rational>({-1, 0, 1}), poly<Rational>({-1, 1})) == poly<Rational>({-1, 1}));
  }
  SUBCASE("coprime") { CHECK(gcd(poly<Rational>({0, 1}), poly<Rational>({1, 1})).is_one()); }
  SUBCASE("t^4 - 1 and t^6 - 1 over F_7") {
    FpContext ctx(7);
    CHECK(gcd(poly<Fp>({-1, 0, 0, 0, 1}), poly<Fp>({-1, 0, 0, 0, 0, 0, 1})) == poly<Fp>({-1, 0, 1}));
  }
  SUBCASE("zero") { CHECK(gcd(UniPoly<Rational>(), UniPoly<Rational>()).is_zero()); }
}

TEST_CASE("gcd divides both inputs") {
  FpContext ctx(101);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Fp> a(6), b(5), c(3);
    for (auto& v : a) v = random_scalar<Fp>(rng);
    for (auto& v : b) v = random_scalar<Fp>(rng);
    for (auto& v : c) v = random_scalar<Fp>(rng);
    const UniPoly<Fp> common(c);
    const UniPoly<Fp> x = UniPoly<Fp>(a) * common, y = UniPoly<Fp>(b) * common;
    const UniPoly<Fp> g = gcd(x, y);
    CHECK((x % g).is_zero());
    CHECK((y % g).is_zero());
    if (!common.is_zero()) CHECK((g % common.monic()).is_zero());
  }
}

TEST_CASE("factorization examples") {
  SUBCASE("difference of squares over F_7") {
    FpContext ctx(7);
    const auto f = factor(poly<Fp>({-1, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].first * f[1].first == poly<Fp>({-1, 0, 1}));
    CHECK(f[0].second == 1);
    CHECK(f[1].second == 1);
  }
  SUBCASE("pure power over Q") {
    const auto f = factor(poly<Rational>({0, 0, 0, 1}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].first == poly<Rational>({0, 1}));
    CHECK(f[0].second == 3);
  }
  SUBCASE("t^2 + 1 irreducible over F_7") {
    FpContext ctx(7);
    // -1 is not a square mod 7.
    for (int v = 0; v < 7; ++v) CHECK(Fp(v) * Fp(v) != Fp(-1));
    const auto f = factor(poly<Fp>({1, 0, 1}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].first == poly<Fp>({1, 0, 1}));
  }
  SUBCASE("rational roots and an irreducible quadratic over Q") {
    // (2t - 1)(t + 3)^2 (t^2 + 2)
    const auto g = poly<Rational>({-1, 2}) * poly<Rational>({3, 1}) * poly<Rational>({3, 1}) * poly<Rational>({2, 0, 1});
    const auto f = factor(g);
    REQUIRE(f.size() == 3);
    UniPoly<Rational> back = UniPoly<Rational>::constant(g.leading());
    for (const auto& [q, m] : f)
      for (int k = 0; k < m; ++k) back = back * q;
    CHECK(back == g);
  }
  SUBCASE("cubic without rational roots over Q is rejected") {
    CHECK_THROWS_AS(factor(poly<Rational>({-2, 0, 0, 1})), Error);
  }
  SUBCASE("p-th powers in characteristic p") {
    FpContext ctx(3);
    // (t + 1)^3 (t^2 + 1)^6 over F_3
    UniPoly<Fp> g = UniPoly<Fp>::constant(Fp(1));
    for (int k = 0; k < 3; ++k) g = g * poly<Fp>({1, 1});
    for (int k = 0; k < 6; ++k) g = g * poly<Fp>({1, 0, 1});
    const auto f = factor(g);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair{poly<Fp>({1, 1}), 3});
    CHECK(f[1] == std::pair{poly<Fp>({1, 0, 1}), 6});
  }
}

TEST_CASE("factorization recombines over F_7 and F_101") {
  for (std::uint32_t p : {7u, 101u}) {
    FpContext ctx(p);
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Fp> c(deg(rng) + 1);
      for (auto& v : c) v = random_scalar<Fp>(rng);
      c.back() = Fp(1) + Fp(static_cast<long long>(trial % (p - 1)));
      const UniPoly<Fp> a(c);
      const auto f = factor(a);
      UniPoly<Fp> back = UniPoly<Fp>::constant(a.leading());
      for (const auto& [q, m] : f) {
        CHECK(q.leading() == Fp(1));
        if (p == 7) CHECK(irreducible_by_search(q));
        for (int k = 0; k < m; ++k) back = back * q;
      }
      CHECK(back == a);
    }
  }
}

TEST_CASE("factorization is deterministic for a fixed seed") {
  FpContext ctx(101);
  const auto g = poly<Fp>({6, -5, 1}) * poly<Fp>({2, 0, 1}) * poly<Fp>({3, 1, 0, 1});
  CHECK(factor(g) == factor(g));
  CHECK(factor(g, {.seed = 99}) == factor(g));
}

TEST_CASE("exact linear algebra") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Mat<Rational> m(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) m(i, j) = random_scalar<Rational>(rng);
    if (trial % 3 == 0) m.col(3) = m.col(0) + m.col(1);
    CHECK(determinant<Rational>(m) == leibniz_det<Rational>(m));
    const Mat<Rational> ker = nullspace<Rational>(m);
    CHECK(rank<Rational>(m) + ker.cols() == 4);
    CHECK(is_zero_all<Rational>(Mat<Rational>(m * ker)));
    const auto inv = inverse<Rational>(m);
    CHECK(inv.has_value() == !leibniz_det<Rational>(m).is_zero());
    if (inv) CHECK(Mat<Rational>(m * *inv) == identity_mat<Rational>(4));
    // charpoly at t = 2 against det(2I - m)
    const auto cp = charpoly<Rational>(m);
    Rational at2 = 0;
    for (int k = static_cast<int>(cp.size()) - 1; k >= 0; --k) at2 = at2 * 2 + cp[k];
    CHECK(at2 == leibniz_det<Rational>(Mat<Rational>(Rational(2) * identity_mat<Rational>(4) - m)));
  }
}

TEST_CASE("subspace operations") {
  FpContext ctx(101);
  Mat<Fp> gens(3, 2);
  gens << Fp(1), Fp(0), Fp(2), Fp(1), Fp(3), Fp(1);
  auto s = Subspace<Fp>::spanned_by(gens);
  CHECK(s.dim() == 2);
  Vec<Fp> v(3);
  v << Fp(1), Fp(3), Fp(4);  // sum of the columns
  CHECK(s.contains(v));
  const auto c = s.coordinates(v);
  REQUIRE(c.has_value());
  CHECK(Vec<Fp>(s.basis() * *c) == v);
  v(2) = Fp(5);
  CHECK(!s.contains(v));
  Mat<Fp> other(3, 2);
  other << Fp(1), Fp(0), Fp(3), Fp(0), Fp(4), Fp(1);
  const auto meet = s.intersect(Subspace<Fp>::spanned_by(other));
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(gens.col(0) + gens.col(1)));
}

TEST_CASE("polynomial parser") {
  const auto t = parse_polynomial("3*x^2*y - y^3");
  CHECK(t.at({2, 1}) == 3);
  CHECK(t.at({0, 3}) == -1);
  CHECK(parse_polynomial("x(x-y)").at({1, 1}) == -1);
  CHECK(parse_polynomial("1/2 x^4 + y^2").at({4, 0}) == Rational(1, 2));
  CHECK(parse_polynomial("x - x").empty());
  CHECK_THROWS_AS(parse_polynomial("x + z"), Error);
  CHECK_THROWS_AS(parse_polynomial("x^"), Error);
  CHECK_THROWS_AS(make_weighted_poly("x^2 + y", 1, 1), Error);
  try {
    make_weighted_poly("x^2 + y", 1, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
  const auto f = make_weighted_poly("x^5 - y^3", 3, 5);
  CHECK(f.degree() == 15);
  CHECK(f.leading_exponent() == Exponent{5, 0});
  CHECK(f.str() == "x^5 - y^3");
}
