// Acceptance runner: one PASS/FAIL line per criterion, with runtimes.
//
//   cmtilt_acceptance [--expect-fail 7,...]
//
// Exit 0 when the set of failing criteria equals the expected set (empty by
// default), 1 otherwise.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "cmtilt/analysis.hpp"
#include "cmtilt/builders.hpp"
#include "cmtilt/catalog.hpp"
#include "cmtilt/complexes.hpp"
#include "cmtilt/graded_modules.hpp"

using namespace cmtilt;

namespace {

using S = Fp;
const FieldSpec F101 = FieldSpec::prime(101);

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Entry {
  std::string name, f;
  int wx, wy, a, p;
  std::string target;
};

// The seven entries with constants and Dynkin targets.
const std::vector<Entry> kConstants = {
    {"A3", "x^4 - y^2", 1, 2, 1, 1, "D3"},   {"A4", "x^5 - y^2", 2, 5, 3, 1, "A4"},
    {"D5", "x^4 - x*y^2", 2, 3, 3, 3, "A7"}, {"D6", "x^5 - x*y^2", 1, 2, 2, 2, "D6"},
    {"E6", "x^4 - y^3", 3, 4, 5, 1, "E6"},   {"E7", "x^3*y - y^3", 2, 3, 4, 2, "E7"},
    {"E8", "x^5 - y^3", 3, 5, 7, 1, "E8"},
};

const std::string kSquarefreeQuartic = "x*(x - y)*(x - 2*y)*(x - 3*y)";
const std::string kSquareQuartic = "x^2*(x - y)^2";
const std::string kSquarefreeQuintic = "x*(x - y)*(x - 2*y)*(x - 3*y)*(x - 4*y)";
const std::string kSquareQuintic = "x^2*(x - y)^2*(x - 2*y)";

std::shared_ptr<const GradedRing<S>> ring_of(const std::string& f, int wx, int wy) {
  return std::make_shared<const GradedRing<S>>(make_weighted_poly(f, wx, wy), F101);
}

AnalysisOptions options(const std::string& f, int wx, int wy) {
  AnalysisOptions o;
  o.field = F101;
  o.f = f;
  o.wx = wx;
  o.wy = wy;
  o.hom_grid_limit = 1000;
  return o;
}

// Catalog entries with a Gamma side, D7 included.
std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog_entries()) out.push_back(e);
  return out;
}

std::vector<CatalogRow>& catalog_rows() {
  static std::vector<CatalogRow> rows = [] {
    std::vector<CatalogRow> r;
    for (const auto& e : full_catalog()) r.push_back(run_entry(e));
    return r;
  }();
  return rows;
}

Outcome constants() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& e : kConstants) {
    const QuotientRing<S> K(ring_of(e.f, e.wx, e.wy));
    const bool hit = K.a() == e.a && K.p() == e.p;
    ok &= hit;
    os << e.name << "(" << K.a() << "," << K.p() << ")" << (hit ? "" : "!") << " ";
  }
  return {ok, os.str()};
}

Outcome dynkin() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& e : kConstants) {
    const QuotientRing<S> K(ring_of(e.f, e.wx, e.wy));
    const auto cox = coxeter_polynomial(cartan_matrix(build_gamma(K)));
    const bool hit = cox == target_coxeter<S>(F101, *parse_target(e.target));
    ok &= hit;
    os << e.name << "~" << e.target << (hit ? "" : "!") << " ";
  }
  return {ok, os.str()};
}

Outcome ranks() {
  std::ostringstream os;
  bool ok = true;
  int count = 0;
  for (const auto& row : catalog_rows()) {
    if (!row.report || row.report->a < 0) continue;
    const auto& r = *row.report;
    int sum = r.a;
    for (const auto& c : r.components) sum += c.period;
    const bool hit = r.gamma->vertex_count == sum;
    ok &= hit;
    ++count;
    if (!hit) os << row.entry.name << ": " << r.gamma->vertex_count << " vs " << sum << " ";
  }
  os << count << " entries";
  return {ok && count > 0, os.str()};
}

Outcome oracle() {
  std::ostringstream os;
  bool ok = true;
  int cells = 0;
  for (const auto& e : full_catalog()) {
    const WeightedPoly f = make_weighted_poly(e.f, e.wx, e.wy);
    if (f.degree() - e.wx - e.wy < 0) continue;
    const QuotientRing<S> K(ring_of(e.f, e.wx, e.wy));
    const auto G = build_gamma(K);
    const int size = K.a() + K.p();
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j) {
        const int h = graded_hom_dim(K, truncation_factory(K, TruncationKind::RTrunc, i),
                                     truncation_factory(K, TruncationKind::RTrunc, j));
        const int c = static_cast<int>(
            G.corner(gamma_element(K, j, j, K.ring().one()), gamma_element(K, i, i, K.ring().one())).dim());
        ++cells;
        if (h != c) {
          ok = false;
          os << e.name << "(" << i << "," << j << "): " << h << " vs " << c << " ";
        }
      }
  }
  os << cells << " cells";
  return {ok, os.str()};
}

Outcome injdim() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& f : {kSquarefreeQuartic, kSquareQuartic, kSquarefreeQuintic, kSquareQuintic}) {
    const QuotientRing<S> K(ring_of(f, 1, 1));
    const auto d = injective_dimensions(build_gamma(K));
    const bool hit = d.right.finite() && d.left.finite() && d.right.value <= 2 && d.left.value <= 2;
    ok &= hit;
    os << d.right.str() << "/" << d.left.str() << " ";
  }
  return {ok, os.str()};
}

Outcome dichotomy() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& f : {kSquarefreeQuartic, kSquarefreeQuintic}) {
    const auto g = global_dimension(build_gamma(QuotientRing<S>(ring_of(f, 1, 1))));
    ok &= g.finite() && g.value <= 2;
    os << "squarefree " << g.str() << "; ";
  }
  const auto g = global_dimension(build_gamma(QuotientRing<S>(ring_of(kSquareQuartic, 1, 1))));
  const bool certified = g.kind == DimKind::Infinite && g.repeat_from >= 0 && g.repeat_to > g.repeat_from;
  ok &= certified;
  os << "x^2(x-y)^2 " << g.str();
  if (g.kind == DimKind::Infinite) os << " (syzygy " << g.repeat_from << " = " << g.repeat_to << ")";
  return {ok, os.str()};
}

Outcome sequences() {
  const QuotientRing<S> K(ring_of(kSquarefreeQuintic, 1, 1));
  const auto rep = check_koszul_sequences(K, build_gamma(K));
  std::ostringstream os;
  os << "a=" << K.a() << ";";
  for (const auto& st : rep.steps)
    os << " i=" << st.i << (st.exact ? " exact" : " not exact") << " (dims " << st.dim_left << "," << st.dim_middle
       << "," << st.dim_right << "; ranks " << st.rank_left << "," << st.rank_right << ")";
  os << "; with P^{a+2} replaced by the kernel (dim " << rep.top_kernel_dim << ", "
     << (rep.top_kernel_projective ? "projective" : "not projective") << "): "
     << (rep.corrected_exact ? "exact" : "not exact");
  return {rep.literal_exact, os.str()};
}

Outcome lambda_props() {
  std::ostringstream os;
  bool ok = true;
  int count = 0;
  for (const auto& e : full_catalog()) {
    const auto field = e.field;
    const bool hit = with_field(field, [&](auto tag) {
      using T = decltype(tag);
      const auto ring = std::make_shared<const GradedRing<T>>(make_weighted_poly(e.f, e.wx, e.wy), field);
      const QuotientRing<T> K(ring);
      const auto L = build_lambda(K);
      const bool semisimple = L.structure().radical.dim() == 0;
      return self_injective(L) && semisimple == is_squarefree<T>(ring->polynomial());
    });
    ok &= hit;
    ++count;
    if (!hit) os << e.name << " ";
  }
  os << count << " entries";
  return {ok, os.str()};
}

Outcome negative() {
  const FieldSpec Q = FieldSpec::rationals();
  return with_field(Q, [&](auto tag) {
    using T = decltype(tag);
    const QuotientRing<T> K(std::make_shared<const GradedRing<T>>(make_weighted_poly("y^2", 3, 1), Q));
    const auto L = build_lambda(K);
    const auto shape = recognize_cyclic(L);
    const auto arrows = quiver_arrows(L);
    bool one_in_one_out = true;
    for (int i = 0; i < 3 && shape.n == 3; ++i) {
      long long out = 0, in = 0;
      for (int j = 0; j < 3; ++j) {
        out += arrows[i][j];
        in += arrows[j][i];
      }
      one_in_one_out &= out == 1 && in == 1;
    }
    const auto rep = silting_positivity_check(build_cyclic_nilpotent<T>(Q, 3), 3);
    bool table = rep.hom_table.size() == 17;
    for (const auto& [s, d] : rep.hom_table) table &= d == ((s == 0 || s == -2) ? 1 : 0);
    const bool ok = L.dim() == 6 && L.structure().vertex_count() == 3 && shape.matches && one_in_one_out && table &&
                    rep.silting && !rep.tilting;
    std::ostringstream os;
    os << "Lambda dim " << L.dim() << ", " << L.structure().vertex_count() << " vertices, cyclic "
       << (shape.matches ? "yes" : "no") << "; Hom(M,M[s]) nonzero at";
    for (const auto& [s, d] : rep.hom_table)
      if (d) os << " s=" << s;
    os << "; silting " << (rep.silting ? "yes" : "no") << ", tilting " << (rep.tilting ? "yes" : "no");
    return Outcome{ok, os.str()};
  });
}

Outcome vanishing() {
  const QuotientRing<S> K(ring_of("x^3*y - y^3", 2, 3));
  const int a = K.a(), size = a + K.p();
  int zeros = 0, cells = 0;
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j < i && j <= a; ++j) {
      ++cells;
      zeros += graded_hom_dim(K, truncation_factory(K, TruncationKind::RTrunc, i),
                              truncation_factory(K, TruncationKind::RTrunc, j)) == 0;
    }
  return {cells > 0 && zeros == cells, std::to_string(zeros) + "/" + std::to_string(cells) + " cells zero"};
}

// Property suites over every algebra and complex built here.
template <class T>
bool radical_nilpotent(const FinDimAlgebra<T>& A) {
  const auto& st = A.structure();
  // Independent of the structure code: multiply basis vectors pairwise.
  std::vector<Vec<T>> power;
  for (Index k = 0; k < st.radical.dim(); ++k) power.push_back(st.radical.vector(k));
  int k = 1;
  while (!power.empty()) {
    if (k > A.dim()) return false;
    Subspace<T> next(A.dim());
    for (const auto& u : power)
      for (Index m = 0; m < st.radical.dim(); ++m) next.add(A.multiply(u, st.radical.vector(m)));
    power.clear();
    for (Index m = 0; m < next.dim(); ++m) power.push_back(next.vector(m));
    ++k;
  }
  return k == st.nilpotency_index;
}

Outcome properties() {
  int algebras = 0, complexes = 0, rings = 0, finite = 0;
  std::string failure;
  auto algebra = [&](const std::string& name, const FinDimAlgebra<S>& A) {
    ++algebras;
    if (!A.is_associative()) failure += name + " not associative; ";
    if (!radical_nilpotent(A)) failure += name + " radical; ";
    const auto g = global_dimension(A);
    if (g.finite()) {
      ++finite;
      const BigInt det = int_determinant(cartan_matrix(A));
      if (det != 1 && det != -1) failure += name + " det " + det.str() + "; ";
    }
  };
  FpContext ctx(101);
  for (const auto& e : full_catalog()) {
    const auto R = ring_of(e.f, e.wx, e.wy);
    ++rings;
    for (int i = 0; i <= 3 * R->n(); ++i)
      if (R->dim(i) != free_dim(i, e.wx, e.wy) - free_dim(i - R->n(), e.wx, e.wy))
        failure += e.name + " Hilbert at " + std::to_string(i) + "; ";
    const QuotientRing<S> K(R);
    algebra(e.name + " Lambda", build_lambda(K));
    if (K.a() >= 0) algebra(e.name + " Gamma", build_gamma(K));
    if (K.a() >= 1) algebra(e.name + " R^a", build_r_a(*R, K.a()));
  }
  for (const auto& f : {kSquareQuartic, kSquarefreeQuintic, kSquareQuintic}) {
    const QuotientRing<S> K(ring_of(f, 1, 1));
    algebra(f + " Lambda", build_lambda(K));
    algebra(f + " Gamma", build_gamma(K));
    algebra(f + " R^a", build_r_a(K.ring(), K.a()));
  }
  for (int n = 1; n <= 8; ++n) algebra("A" + std::to_string(n), path_algebra<S>(F101, dynkin_quiver(DynkinType::A, n, 0b1010)));
  for (int n = 4; n <= 8; ++n) algebra("D" + std::to_string(n), path_algebra<S>(F101, dynkin_quiver(DynkinType::D, n, 0b0110)));
  for (int n = 6; n <= 8; ++n) algebra("E" + std::to_string(n), path_algebra<S>(F101, dynkin_quiver(DynkinType::E, n, 0b1001)));
  for (const auto& l : {Rational(-1), Rational(3, 4), Rational(3, 2)})
    algebra("canonical " + l.str(), build_canonical_2222<S>(F101, l));
  for (int n = 1; n <= 4; ++n) {
    const auto C = build_cyclic_nilpotent<S>(F101, n);
    algebra("cyclic " + std::to_string(n), C);
    // d^2 = 0 for every X^i_{a,b} with b <= 2n, and for the shifted M.
    for (int i = 1; i <= n; ++i)
      for (int b = 0; b <= 2 * n; ++b) {
        try {
          validate_complex(C, build_x_complex(C, n, i, 0, b));
          ++complexes;
        } catch (const Error& e) {
          failure += "X^" + std::to_string(i) + "_{0," + std::to_string(b) + "}: " + e.what() + "; ";
        }
      }
    for (int m = -2; m <= 2; ++m) {
      try {
        validate_complex(C, shift(build_m_complex(C, n), m));
        validate_complex(C, shift(build_p_stalk(C, n), m));
        complexes += 2;
      } catch (const Error& e) {
        failure += std::string("shifted complex: ") + e.what() + "; ";
      }
    }
  }
  std::ostringstream os;
  os << algebras << " algebras (" << finite << " of finite gldim), " << complexes << " complexes, " << rings
     << " rings";
  if (!failure.empty()) os << "; " << failure;
  return {failure.empty(), os.str()};
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria expected to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "constants (a, p) for A3 A4 D5 D6 E6 E7 E8", 5, [] { FpContext c(101); return constants(); }},
      {2, "Coxeter polynomial of Gamma equals the Dynkin target", 60, [] { FpContext c(101); return dynkin(); }},
      {3, "vertex classes of Gamma = a + sum p_i", 0, [] { return ranks(); }},
      {4, "entrywise dim e_j Gamma e_i = graded Hom oracle", 0, [] { FpContext c(101); return oracle(); }},
      {5, "injdim Gamma <= 2 on both sides, standard-graded quartics and quintics", 0,
       [] { FpContext c(101); return injdim(); }},
      {6, "gldim Gamma finite iff f squarefree", 0, [] { FpContext c(101); return dichotomy(); }},
      {7, "0 -> P^{i+2} -> (P^{i+1})^2 -> P^i -> S^i -> 0 exact, squarefree quintic, P^{a+2} = 0", 0,
       [] { FpContext c(101); return sequences(); }},
      {8, "Lambda self-injective; semisimple iff f squarefree", 0, [] { return lambda_props(); }},
      {9, "negative case n = 3: cyclic Lambda, Hom table of k[w]/(w^2), silting not tilting", 10,
       [] { return negative(); }},
      {10, "Hom vanishing for j < i, j <= a on E7", 0, [] { FpContext c(101); return vanishing(); }},
      {11, "property suites", 0, [] { return properties(); }},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit]";
    }
    if (!o.pass) failed.insert(c.id);
    std::printf("%s %2d  %s  [%.2f s]\n     %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu/%zu criteria pass", criteria.size() - failed.size(), criteria.size());
  if (!expected.empty()) std::printf("; failures %s the expected set", failed == expected ? "match" : "differ from");
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
