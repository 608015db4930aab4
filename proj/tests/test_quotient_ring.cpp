#include "doctest.h"

#include "cmtilt/quotient_ring.hpp"

using namespace cmtilt;

namespace {

template <class S>
QuotientRing<S> quotient(const std::string& f, int dx, int dy, FieldSpec field) {
  return QuotientRing<S>(std::make_shared<const GradedRing<S>>(make_weighted_poly(f, dx, dy), field));
}

struct Case {
  const char* f;
  int dx, dy;
};

const Case kCatalogRings[] = {
    {"x^4 - y^2", 1, 2}, {"x^5 - y^2", 2, 5}, {"x^4 - x*y^2", 2, 3}, {"x^5 - x*y^2", 1, 2},
    {"x^4 - y^3", 3, 4}, {"x^3*y - y^3", 2, 3}, {"x^5 - y^3", 3, 5}, {"y^2", 3, 1},
    {"x*(x-y)*(x-2y)*(x-3y)", 1, 1}, {"x^2*(x-y)^2", 1, 1}, {"x^4 - y^2", 1, 1 * 2},
};

std::vector<int> periods(const QuotientRing<Fp>& K) {
  std::vector<int> out;
  for (const auto& c : K.components()) out.push_back(c.period);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("a-invariant") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  CHECK(quotient<Fp>("x^5 - y^3", 3, 5, F).a() == 7);
  CHECK(quotient<Fp>("x^4 - y^2", 1, 2, F).a() == 1);
  CHECK(quotient<Rational>("y^2", 3, 1, FieldSpec::rationals()).a() == -2);
}

TEST_CASE("quotient dimensions") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  CHECK(quotient<Fp>("x^4 - y^2", 1, 2, F).dim(0) == 2);
  CHECK(quotient<Fp>("y^2", 3, 1, F).dim(2) == 0);
}

TEST_CASE("dimension comparison between R and K") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  for (const auto& c : kCatalogRings) {
    const auto K = quotient<Fp>(c.f, c.dx, c.dy, F);
    const auto& R = K.ring();
    const int a = K.a(), n = R.n();
    for (int i = 0; i <= a; ++i) CHECK(R.dim(i) <= K.dim(i));
    if (a >= 0) CHECK(R.dim(a) < K.dim(a));
    for (int i = a + 1; i <= a + 2 * n; ++i) CHECK(R.dim(i) == K.dim(i));
    for (int i = -2 * n; i <= 2 * n; ++i) CHECK(K.dim(i) == K.dim(i + K.p()));
  }
}

TEST_CASE("multiplication in K") {
  SUBCASE("(y/x)^2 = 0 for y^2 with deg x = 3") {
    auto K = quotient<Rational>("y^2", 3, 1, FieldSpec::rationals());
    const auto& R = K.ring();
    // y/x has degree -2; it is y r^... / r^...: build it as y divided once by x.
    const KElement<Rational> y = K.from_ring(R.y());
    // K_{-2} is one-dimensional, spanned by y x / x^2 = y / x.
    REQUIRE(K.dim(-2) == 1);
    const KElement<Rational> yx = K.basis_element(-2, 0);
    CHECK(is_zero_all<Rational>(K.multiply(yx, yx).coords));
    CHECK(K.multiply(K.one(), y).coords == y.coords);
    // (y/x) x = y
    CHECK(K.multiply(yx, K.from_ring(R.x())).coords == y.coords);
  }
  SUBCASE("x^4 = y^2 survives in K for x^4 - y^2") {
    auto K = quotient<Rational>("x^4 - y^2", 1, 2, FieldSpec::rationals());
    const auto x = K.from_ring(K.ring().x()), y = K.from_ring(K.ring().y());
    const auto x4 = K.multiply(K.multiply(x, x), K.multiply(x, x));
    CHECK(x4.coords == K.multiply(y, y).coords);
  }
  SUBCASE("K is associative on sampled degrees") {
    FpContext ctx(101);
    auto K = quotient<Fp>("x^3*y - y^3", 2, 3, FieldSpec::prime(101));
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j)
        for (int k = -4; k <= 4; k += 2)
          for (int s = 0; s < K.dim(i); ++s)
            for (int t = 0; t < K.dim(j); ++t)
              for (int u = 0; u < K.dim(k); ++u) {
                const auto a = K.basis_element(i, s), b = K.basis_element(j, t), c = K.basis_element(k, u);
                CHECK(K.multiply(K.multiply(a, b), c).coords == K.multiply(a, K.multiply(b, c)).coords);
              }
  }
}

TEST_CASE("period") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  CHECK(quotient<Fp>("x^5 - y^3", 3, 5, F).p() == 1);
  CHECK(quotient<Fp>("x^4 - x*y^2", 2, 3, F).p() == 3);
  CHECK(quotient<Rational>("y^2", 3, 1, FieldSpec::rationals()).p() == 3);
}

TEST_CASE("ring decomposition") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  SUBCASE("A_3") {
    const auto K = quotient<Fp>("x^4 - y^2", 1, 2, F);
    CHECK(periods(K) == std::vector<int>{1, 1});
  }
  SUBCASE("D_6") {
    const auto K = quotient<Fp>("x^5 - x*y^2", 1, 2, F);
    CHECK(periods(K) == std::vector<int>{1, 1, 2});
  }
  SUBCASE("y^2 with deg x = 3") {
    auto K = quotient<Rational>("y^2", 3, 1, FieldSpec::rationals());
    REQUIRE(K.components().size() == 1);
    CHECK(K.components()[0].period == 3);
  }
  SUBCASE("idempotents are orthogonal, sum to one and local") {
    for (const auto& c : kCatalogRings) {
      const auto K = quotient<Fp>(c.f, c.dx, c.dy, F);
      const auto& A = K.degree_zero();
      Vec<Fp> sum = zero_vec<Fp>(A.dim());
      for (const auto& a : K.components()) {
        sum += a.idempotent;
        CHECK(A.multiply(a.idempotent, a.idempotent) == a.idempotent);
        for (const auto& b : K.components())
          if (a.index != b.index) CHECK(is_zero_all<Fp>(A.multiply(a.idempotent, b.idempotent)));
        const auto corner = A.corner(a.idempotent, a.idempotent);
        CHECK(corner.dim() - A.corner_of(A.structure().radical, a.idempotent, a.idempotent).dim() == 1);
      }
      CHECK(sum == A.unit());
    }
  }
}
