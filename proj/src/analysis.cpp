#include "cmtilt/analysis.hpp"

#include "cmtilt/builders.hpp"
#include "cmtilt/graded_modules.hpp"

namespace cmtilt {

namespace {

template <class S>
std::string element_string(const GradedRing<S>& R, const RingElement<S>& u) {
  std::string out;
  const auto mons = R.basis(u.degree);
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (is_zero(u.coords(k))) continue;
    const std::string c = to_string(u.coords(k));
    const std::string m = R.monomial_label(mons[k]);
    if (!out.empty()) out += " + ";
    if (c == "1") out += m;
    else if (m == "1") out += c;
    else out += c + "*" + m;
  }
  return out.empty() ? "0" : out;
}

void add_check(AnalysisReport& rep, std::string name, bool ok, std::string detail) {
  rep.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void skip_check(AnalysisReport& rep, std::string name, std::string detail) {
  rep.checks.push_back({std::move(name), CheckStatus::Skip, std::move(detail)});
}

template <class S>
void analyze_gamma(const AnalysisOptions& o, const QuotientRing<S>& K, AnalysisReport& rep) {
  const int a = K.a(), p = K.p(), size = a + p;
  const GradedRing<S>& R = K.ring();
  const FinDimAlgebra<S> G = build_gamma(K);
  GammaReport g;
  g.dim = G.dim();
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) g.expected_dim += i <= a ? R.dim(i - j) : K.dim(i - j);
  const auto& st = G.structure();
  g.vertex_count = st.vertex_count();
  g.cartan = cartan_matrix(G);
  g.arrows = quiver_arrows(G);
  g.cartan_det = int_determinant(g.cartan);
  g.gldim = global_dimension(G);
  const InjectiveDimensions inj = injective_dimensions(G);
  g.injdim_right = inj.right;
  g.injdim_left = inj.left;
  bool coxeter_ok = true;
  try {
    g.coxeter = coxeter_polynomial(g.cartan);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CartanSingular) throw;
    coxeter_ok = false;
  }

  add_check(rep, "gamma_dimension", g.dim == g.expected_dim,
            "dim " + std::to_string(g.dim) + ", entry sum " + std::to_string(g.expected_dim));
  add_check(rep, "grothendieck_rank", g.vertex_count == rep.grothendieck_rank,
            "vertex classes " + std::to_string(g.vertex_count) + ", a + sum p_i = " +
                std::to_string(rep.grothendieck_rank));
  add_check(rep, "gldim_reduced_dichotomy", g.gldim.finite() == rep.squarefree,
            "gldim " + g.gldim.str() + ", squarefree " + (rep.squarefree ? "yes" : "no"));
  if (g.gldim.finite()) {
    const bool unimodular = g.cartan_det == 1 || g.cartan_det == -1;
    add_check(rep, "cartan_unimodular", unimodular, "det " + g.cartan_det.str());
  } else {
    skip_check(rep, "cartan_unimodular", "gldim not finite");
  }
  const bool gorenstein = g.injdim_right.finite() && g.injdim_left.finite() &&
                          g.injdim_right.value == g.injdim_left.value;
  add_check(rep, "iwanaga_gorenstein", gorenstein,
            "injdim right " + g.injdim_right.str() + ", left " + g.injdim_left.str());
  if (R.dx() == 1 && R.dy() == 1) {
    const bool bound = gorenstein && g.injdim_right.value <= 2;
    add_check(rep, "injdim_at_most_2", bound, "standard grading");
  }

  // Hom oracle on the (a+p)^2 grid against the corners of Gamma.
  if (size <= o.hom_grid_limit) {
    g.hom_oracle.assign(size, std::vector<int>(size, 0));
    bool entrywise = true, vanishing = true;
    std::string first_mismatch;
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j) {
        const int h = graded_hom_dim(K, truncation_factory(K, TruncationKind::RTrunc, i),
                                     truncation_factory(K, TruncationKind::RTrunc, j), o.max_window);
        g.hom_oracle[i - 1][j - 1] = h;
        const auto corner = G.corner(gamma_element(K, j, j, R.one()), gamma_element(K, i, i, R.one()));
        if (h != corner.dim()) {
          entrywise = false;
          if (first_mismatch.empty())
            first_mismatch = "(" + std::to_string(i) + "," + std::to_string(j) + "): oracle " + std::to_string(h) +
                             ", corner " + std::to_string(corner.dim());
        }
        if (j < i && j <= a && h != 0) vanishing = false;
      }
    add_check(rep, "oracle_entrywise", entrywise, entrywise ? "all entries agree" : first_mismatch);
    add_check(rep, "hom_vanishing", vanishing, "Hom(R(i)_{>=0}, R(j)_{>=0}) for j < i, j <= a");
  } else {
    skip_check(rep, "oracle_entrywise", "a + p exceeds the grid limit");
    skip_check(rep, "hom_vanishing", "a + p exceeds the grid limit");
  }

  // Coxeter comparison.
  if (!coxeter_ok) {
    add_check(rep, "coxeter_match", false, "Cartan matrix singular");
  } else if (o.target) {
    const auto t = parse_target(*o.target);
    if (!t) throw Error(ErrorKind::InvalidInput, "unknown comparison target " + *o.target);
    const bool ok = target_coxeter<S>(K.ring().field(), *t) == g.coxeter;
    if (ok) rep.coxeter_matches.push_back(t->name);
    add_check(rep, "coxeter_match", ok, t->name);
  } else {
    for (const auto& t : targets_of_rank(g.vertex_count))
      if (target_coxeter<S>(K.ring().field(), t) == g.coxeter) rep.coxeter_matches.push_back(t.name);
    if (rep.coxeter_matches.empty()) skip_check(rep, "coxeter_match", "no A/D/E or canonical target of this rank");
    else add_check(rep, "coxeter_match", true, rep.coxeter_matches.front());
  }

  if (R.dx() == 1 && R.dy() == 1 && a >= 1) {
    rep.sequences = check_koszul_sequences(K, G);
    const auto& s = *rep.sequences;
    add_check(rep, "resolution_exactness", s.corrected_exact,
              std::string("literal sequences with P^{a+2} = 0 ") + (s.literal_exact ? "exact" : "not exact at i = a") +
                  "; kernel at i = a has dim " + std::to_string(s.top_kernel_dim) +
                  (s.top_kernel_projective ? " and is projective" : " and is not projective"));
  } else {
    skip_check(rep, "resolution_exactness", "needs standard grading and a >= 1");
  }
  rep.gamma = std::move(g);
}

template <class S>
void analyze_negative(const QuotientRing<S>& K, const FinDimAlgebra<S>& L, AnalysisReport& rep) {
  NegativeReport neg;
  neg.regular = rep.squarefree;
  neg.tilting_exists = neg.regular;
  const CyclicShape shape = recognize_cyclic(L);
  neg.lambda_cyclic = shape.matches;
  neg.cycle_length = shape.n;
  if (shape.matches) {
    const auto C = build_cyclic_nilpotent<S>(K.ring().field(), shape.n);
    neg.silting = silting_positivity_check(C, shape.n);
    const auto& s = *neg.silting;
    add_check(rep, "silting", s.silting && s.p_vanishes && s.matches_dg_model,
              "Hom(M, M[s]) matches k[w]/(w^2) with deg w = " + std::to_string(1 - shape.n));
    add_check(rep, "tilting_iff_regular", s.tilting == neg.regular,
              std::string("tilting ") + (s.tilting ? "yes" : "no") + ", regular " + (neg.regular ? "yes" : "no"));
  } else if (neg.regular) {
    add_check(rep, "tilting_iff_regular", L.structure().radical.dim() == 0, "regular: Lambda semisimple");
  } else {
    skip_check(rep, "silting", "Lambda is not a cyclic algebra with rad^2 = 0");
  }
  rep.negative = std::move(neg);
}

template <class S>
AnalysisReport run(const AnalysisOptions& o) {
  AnalysisReport rep;
  const WeightedPoly f = make_weighted_poly(o.f, o.wx, o.wy);
  rep.field = o.field.name();
  rep.f = f.str();
  rep.wx = o.wx;
  rep.wy = o.wy;
  rep.seed = o.seed;
  rep.degree = f.degree();
  auto ring = std::make_shared<const GradedRing<S>>(f, o.field);
  const QuotientRing<S> K(ring, o.seed);
  rep.a = K.a();
  rep.p = K.p();
  rep.r_degree = K.dr();
  rep.r = element_string(*ring, K.r());
  rep.period_certified = K.period_search().certified;
  rep.period_fallback = K.period_search().fallback;
  rep.grothendieck_rank = K.a();
  for (const auto& c : K.components()) {
    rep.components.push_back({c.index, c.period, c.local_dim});
    rep.grothendieck_rank += c.period;
  }
  rep.squarefree = is_squarefree<S>(f);

  const FinDimAlgebra<S> L = build_lambda(K);
  rep.lambda.dim = L.dim();
  rep.lambda.vertex_count = L.structure().vertex_count();
  rep.lambda.self_injective = self_injective(L);
  rep.lambda.semisimple = L.structure().radical.dim() == 0;
  rep.lambda.cartan = cartan_matrix(L);
  rep.lambda.arrows = quiver_arrows(L);
  add_check(rep, "lambda_self_injective", rep.lambda.self_injective, "dim " + std::to_string(L.dim()));
  add_check(rep, "semisimple_iff_squarefree", rep.lambda.semisimple == rep.squarefree,
            std::string("semisimple ") + (rep.lambda.semisimple ? "yes" : "no") + ", squarefree " +
                (rep.squarefree ? "yes" : "no"));
  int lambda_vertices = 0;
  for (const auto& c : K.components()) lambda_vertices += c.period;
  add_check(rep, "lambda_vertex_count", rep.lambda.vertex_count == lambda_vertices,
            std::to_string(rep.lambda.vertex_count) + " classes, sum p_i = " + std::to_string(lambda_vertices));

  if (K.a() >= 0) analyze_gamma(o, K, rep);
  else analyze_negative(K, L, rep);
  return rep;
}

}  // namespace

AnalysisReport analyze(const AnalysisOptions& options) {
  return with_field(options.field, [&](auto tag) { return run<decltype(tag)>(options); });
}

}  // namespace cmtilt
