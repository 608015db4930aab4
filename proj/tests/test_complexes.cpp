#include "doctest.h"

#include "cmtilt/builders.hpp"
#include "cmtilt/complexes.hpp"

using namespace cmtilt;

namespace {

// Euler characteristic of the total Hom complex equals the alternating sum of
// the Hom^s dimensions, computed here from the Cartan matrix alone.
template <class S>
int euler_from_cartan(const FinDimAlgebra<S>& A, const BoundedComplex<S>& X, const BoundedComplex<S>& Y) {
  int total = 0;
  for (int s = Y.lo - X.hi(); s <= Y.hi() - X.lo; ++s) {
    int dim = 0;
    for (int t = X.lo; t <= X.hi(); ++t)
      for (const auto& f : Y.term(t + s))
        for (const auto& e : X.term(t)) dim += static_cast<int>(A.corner(f, e).dim());
    total += (s % 2 == 0 ? 1 : -1) * dim;
  }
  return total;
}

}  // namespace

TEST_CASE("stalk complexes") {
  FpContext ctx(101);
  const auto A = build_cyclic_nilpotent<Fp>(FieldSpec::prime(101), 3);
  const auto X = build_x_complex(A, 3, 1, 0, 0);
  CHECK(hom_homotopy(A, X, X, 0) == 1);
  const auto Y = build_x_complex(A, 3, 2, 0, 0);
  CHECK(hom_homotopy(A, X, Y, 0) == 1);  // z: P^1 -> P^2
  CHECK(hom_homotopy(A, Y, X, 0) == 0);
  CHECK(hom_homotopy(A, X, Y, 1) == 0);
}

TEST_CASE("d^2 = 0 is enforced") {
  FpContext ctx(101);
  const auto A = build_cyclic_nilpotent<Fp>(FieldSpec::prime(101), 2);
  BoundedComplex<Fp> bad;
  bad.lo = 0;
  bad.terms = {{cyclic_idempotent(A, 2, 1)}, {cyclic_idempotent(A, 2, 2)}, {cyclic_idempotent(A, 2, 1)}};
  bad.names = {{"P1"}, {"P2"}, {"P1"}};
  // z then (e + z): the composite contains z.
  bad.d = {{{cyclic_arrow(A, 2, 1)}}, {{Vec<Fp>(cyclic_arrow(A, 2, 2) + cyclic_idempotent(A, 2, 1))}}};
  CHECK_THROWS_AS(validate_complex(A, bad), Error);
}

TEST_CASE("Euler characteristic of Hom complexes") {
  FpContext ctx(101);
  const auto A = build_cyclic_nilpotent<Fp>(FieldSpec::prime(101), 3);
  for (int b = 0; b <= 4; ++b)
    for (int c = 0; c <= 3; ++c) {
      const auto X = build_x_complex(A, 3, 1, 0, b);
      const auto Y = build_x_complex(A, 3, 2, 1, c);
      int chi = 0;
      for (int s = -12; s <= 12; ++s) chi += (s % 2 == 0 ? 1 : -1) * hom_homotopy(A, X, Y, s);
      CHECK(chi == euler_from_cartan(A, X, Y));
    }
}

TEST_CASE("shift compatibility") {
  FpContext ctx(101);
  const auto A = build_cyclic_nilpotent<Fp>(FieldSpec::prime(101), 3);
  const auto M = build_m_complex(A, 3);
  const auto X = build_x_complex(A, 3, 2, -1, 2);
  for (int s = -6; s <= 6; ++s) {
    CHECK(hom_homotopy(A, M, M, s) == hom_homotopy(A, shift(M, -1), M, s - 1));
    CHECK(hom_homotopy(A, X, M, s) == hom_homotopy(A, shift(X, -1), M, s - 1));
    CHECK(hom_homotopy(A, X, M, s) == hom_homotopy(A, X, shift(M, s), 0));
  }
}

TEST_CASE("X complexes have local endomorphism rings") {
  FpContext ctx(101);
  const auto A = build_cyclic_nilpotent<Fp>(FieldSpec::prime(101), 3);
  for (int b = 0; b <= 4; ++b) {
    const auto X = build_x_complex(A, 3, 1, 0, b);
    CHECK(hom_homotopy(A, X, X, 0) >= 1);
    CHECK(is_local_endomorphism_algebra(homotopy_endomorphisms(A, X)));
  }
  // A sum of two stalks is decomposable.
  BoundedComplex<Fp> two = stalk_complex<Fp>(0, {cyclic_idempotent(A, 3, 1), cyclic_idempotent(A, 3, 2)}, {"P1", "P2"});
  CHECK(!is_local_endomorphism_algebra(homotopy_endomorphisms(A, two)));
}

TEST_CASE("M complex reproduces k[w]/(w^2)") {
  FpContext ctx(101);
  const FieldSpec F = FieldSpec::prime(101);
  for (int n = 1; n <= 4; ++n) {
    const auto A = build_cyclic_nilpotent<Fp>(F, n);
    const auto rep = silting_positivity_check(A, n);
    CHECK(rep.silting);
    CHECK(rep.tilting == (n == 1));
    CHECK(rep.matches_dg_model);
    CHECK(rep.p_vanishes);
    CHECK(rep.m_local);
  }
  const auto A = build_cyclic_nilpotent<Fp>(F, 3);
  const auto M = build_m_complex(A, 3);
  CHECK(M.lo == -2);
  CHECK(M.hi() == 0);
  CHECK(hom_homotopy(A, M, M, 0) == 1);
  CHECK(hom_homotopy(A, M, M, -2) == 1);
  for (int s = -8; s <= 8; ++s)
    if (s != 0 && s != -2) CHECK(hom_homotopy(A, M, M, s) == 0);
}
