#include "doctest.h"

#include "cmtilt/builders.hpp"
#include "cmtilt/resolution.hpp"

using namespace cmtilt;

namespace {

template <class S>
std::shared_ptr<QuotientRing<S>> quotient(const std::string& f, int dx, int dy, FieldSpec field) {
  return std::make_shared<QuotientRing<S>>(std::make_shared<const GradedRing<S>>(make_weighted_poly(f, dx, dy), field));
}

}  // namespace

TEST_CASE("Lambda") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  SUBCASE("A_3 entry: Lambda = K_0, semisimple of dimension 2") {
    const auto L = build_lambda(*quotient<Fp>("x^4 - y^2", 1, 2, F));
    CHECK(L.dim() == 2);
    CHECK(L.structure().radical.dim() == 0);
  }
  SUBCASE("E8 entry: Lambda = k") { CHECK(build_lambda(*quotient<Fp>("x^5 - y^3", 3, 5, F)).dim() == 1); }
  SUBCASE("y^2 with deg x = 3: cyclic quiver with z^2 = 0") {
    const auto L = build_lambda(*quotient<Fp>("y^2", 3, 1, F));
    CHECK(L.dim() == 6);
    CHECK(L.structure().vertex_count() == 3);
    CHECK(L.structure().radical_sq.dim() == 0);
    const auto q = quiver_arrows(L);
    for (int i = 0; i < 3; ++i) {
      long long out = 0;
      for (int j = 0; j < 3; ++j) out += q[i][j];
      CHECK(out == 1);
      CHECK(q[i][i] == 0);
    }
  }
}

TEST_CASE("Gamma") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  SUBCASE("A_3 entry") {
    const auto G = build_gamma(*quotient<Fp>("x^4 - y^2", 1, 2, F));
    CHECK(G.dim() == 5);
    CHECK(G.structure().vertex_count() == 3);
    const auto q = quiver_arrows(G);
    long long arrows = 0;
    for (const auto& row : q)
      for (long long v : row) arrows += v;
    CHECK(arrows == 2);
  }
  SUBCASE("E8 entry") { CHECK(build_gamma(*quotient<Fp>("x^5 - y^3", 3, 5, F)).structure().vertex_count() == 8); }
  SUBCASE("a = 0 gives Gamma = Lambda") {
    const auto K = quotient<Fp>("x*y", 1, 1, F);
    REQUIRE(K->a() == 0);
    CHECK(build_gamma(*K).dim() == build_lambda(*K).dim());
  }
  SUBCASE("negative a is rejected") {
    CHECK_THROWS_AS(build_gamma(*quotient<Fp>("y^2", 3, 1, F)), Error);
  }
}

TEST_CASE("R^a") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  const auto K = quotient<Fp>("x^5 - y^3", 3, 5, F);
  CHECK(build_r_a(K->ring(), 1).dim() == 1);
  const auto R3 = std::make_shared<const GradedRing<Fp>>(make_weighted_poly("x^3 - y^3", 1, 1), F);
  CHECK(build_r_a(*R3, 2).dim() == 4);
  const auto Ra = build_r_a(K->ring(), K->a());
  CHECK(Ra.is_associative());
  CHECK(global_dimension(Ra).finite());
}

TEST_CASE("path algebras and special algebras") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  CHECK(path_algebra<Fp>(F, dynkin_quiver(DynkinType::A, 2)).dim() == 3);
  CHECK(path_algebra<Fp>(F, dynkin_quiver(DynkinType::E, 8)).is_associative());
  const auto C = build_cyclic_nilpotent<Fp>(F, 3);
  CHECK(C.dim() == 6);
  CHECK(C.is_associative());
  const auto can = build_canonical_2222<Fp>(F, Rational(2));
  CHECK(can.dim() == 16);
  CHECK(can.is_associative());
  CHECK(int_determinant(cartan_matrix(can)) != 0);
  const auto gl = global_dimension(can);
  CHECK(gl.finite());
  CHECK(gl.value <= 2);
  CHECK_THROWS_AS(build_canonical_2222<Fp>(F, Rational(1)), Error);
  CHECK_THROWS_AS(build_canonical_2222<Fp>(F, Rational(0)), Error);
}
