#include "cmtilt/report.hpp"

#include <sstream>

namespace cmtilt {

using nlohmann::ordered_json;

namespace {

ordered_json big(const BigInt& b) {
  if (b >= std::numeric_limits<std::int64_t>::min() && b <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(b);
  return b.str();
}

ordered_json poly(const std::vector<BigInt>& c) {
  ordered_json out = ordered_json::array();
  for (const auto& b : c) out.push_back(big(b));
  return out;
}

ordered_json matrix(const IntMatrix& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(static_cast<std::int64_t>(v));
    out.push_back(r);
  }
  return out;
}

ordered_json verdict(const DimVerdict& v) {
  ordered_json out;
  switch (v.kind) {
    case DimKind::Finite: out["kind"] = "finite"; break;
    case DimKind::Infinite: out["kind"] = "infinite"; break;
    case DimKind::Unknown: out["kind"] = "unknown"; break;
  }
  out["value"] = v.kind == DimKind::Infinite ? ordered_json(nullptr) : ordered_json(v.value);
  if (v.kind == DimKind::Infinite) out["repeat"] = {v.repeat_from, v.repeat_to};
  else out["repeat"] = nullptr;
  return out;
}

ordered_json checks(const std::vector<CheckResult>& cs) {
  ordered_json out = ordered_json::array();
  for (const auto& c : cs) out.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return out;
}

std::string rational_string(const Rational& q) { return q.str(); }

}  // namespace

ordered_json to_json(const SiltingReport& r) {
  ordered_json out;
  out["n"] = r.n;
  ordered_json table = ordered_json::array();
  for (const auto& [s, d] : r.hom_table) table.push_back({{"shift", s}, {"dim", d}});
  out["hom_table"] = table;
  ordered_json orth = ordered_json::array();
  for (const auto& [i, d] : r.p_orthogonal) orth.push_back({{"shift", i}, {"dim", d}});
  out["p_orthogonal"] = orth;
  out["silting"] = r.silting;
  out["tilting"] = r.tilting;
  out["matches_dg_model"] = r.matches_dg_model;
  out["p_vanishes"] = r.p_vanishes;
  out["m_local"] = r.m_local;
  return out;
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json out;
  out["input"] = {{"field", r.field}, {"f", r.f}, {"wx", r.wx}, {"wy", r.wy}, {"seed", r.seed}, {"degree", r.degree}};
  out["a"] = r.a;
  out["p"] = r.p;
  out["r"] = {{"degree", r.r_degree}, {"element", r.r}};
  out["period_certified"] = r.period_certified;
  out["period_fallback"] = r.period_fallback;
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.components)
    comps.push_back({{"index", c.index}, {"period", c.period}, {"local_dim", c.local_dim}});
  out["components"] = {{"m", r.components.size()}, {"list", comps}};
  out["grothendieck_rank"] = r.grothendieck_rank;
  out["squarefree"] = r.squarefree;
  out["lambda"] = {{"dim", r.lambda.dim},
                   {"vertex_count", r.lambda.vertex_count},
                   {"self_injective", r.lambda.self_injective},
                   {"semisimple", r.lambda.semisimple},
                   {"cartan", matrix(r.lambda.cartan)},
                   {"arrows", matrix(r.lambda.arrows)}};
  if (r.gamma) {
    const auto& g = *r.gamma;
    ordered_json gj;
    gj["dim"] = g.dim;
    gj["expected_dim"] = g.expected_dim;
    gj["vertex_count"] = g.vertex_count;
    gj["cartan"] = matrix(g.cartan);
    gj["arrows"] = matrix(g.arrows);
    gj["cartan_det"] = big(g.cartan_det);
    gj["coxeter_polynomial"] = poly(g.coxeter);
    gj["injdim_right"] = verdict(g.injdim_right);
    gj["injdim_left"] = verdict(g.injdim_left);
    gj["gldim"] = verdict(g.gldim);
    gj["hom_oracle"] = g.hom_oracle.empty() ? ordered_json(nullptr) : ordered_json(g.hom_oracle);
    out["gamma"] = gj;
  } else {
    out["gamma"] = nullptr;
  }
  if (r.sequences) {
    const auto& s = *r.sequences;
    ordered_json steps = ordered_json::array();
    for (const auto& st : s.steps)
      steps.push_back({{"i", st.i},
                       {"dims", {st.dim_left, st.dim_middle, st.dim_right}},
                       {"ranks", {st.rank_left, st.rank_right}},
                       {"cokernel", st.cokernel},
                       {"composite_zero", st.composite_zero},
                       {"exact", st.exact}});
    out["sequences"] = {{"steps", steps},
                        {"literal_exact", s.literal_exact},
                        {"top_kernel_dim", s.top_kernel_dim},
                        {"top_kernel_projective", s.top_kernel_projective},
                        {"corrected_exact", s.corrected_exact}};
  } else {
    out["sequences"] = nullptr;
  }
  if (r.negative) {
    const auto& n = *r.negative;
    out["negative"] = {{"regular", n.regular},
                       {"tilting_exists", n.tilting_exists},
                       {"lambda_cyclic", n.lambda_cyclic},
                       {"cycle_length", n.cycle_length},
                       {"silting", n.silting ? to_json(*n.silting) : ordered_json(nullptr)}};
  } else {
    out["negative"] = nullptr;
  }
  out["coxeter_matches"] = r.coxeter_matches;
  out["checks"] = checks(r.checks);
  out["pass"] = r.all_pass();
  return out;
}

ordered_json to_json(const CatalogRow& row) {
  ordered_json out;
  const auto& e = row.entry;
  out["name"] = e.name;
  out["expected"] = {{"field", e.field.name()}, {"f", e.f},        {"wx", e.wx},         {"wy", e.wy},
                     {"a", e.a},                {"p", e.p},        {"periods", e.periods}, {"rank", e.rank},
                     {"target", e.target ? ordered_json(*e.target) : ordered_json(nullptr)}};
  out["error"] = row.error.empty() ? ordered_json(nullptr) : ordered_json(row.error);
  out["expectations"] = checks(row.expectations);
  if (row.lambda)
    out["lambda_candidates"] = {{"cross_ratio", rational_string(row.lambda->cross_ratio)},
                                {"ratio_14_13", rational_string(row.lambda->ratio_14_13)}};
  else
    out["lambda_candidates"] = nullptr;
  out["report"] = row.report ? to_json(*row.report) : ordered_json(nullptr);
  out["pass"] = row.pass();
  return out;
}

ordered_json to_json(const CatalogSummary& s) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : s.rows) rows.push_back(to_json(r));
  return {{"entries", rows}, {"pass", s.pass()}};
}

std::string to_text(const SiltingReport& r) {
  std::ostringstream os;
  os << "cyclic algebra kQ/(z^2), n = " << r.n << "\n";
  os << "Hom(M, M[s]):";
  for (const auto& [s, d] : r.hom_table)
    if (d != 0) os << " s=" << s << ":" << d;
  os << " (zero elsewhere for |s| <= " << 2 * r.n + 2 << ")\n";
  os << "silting " << (r.silting ? "yes" : "no") << ", tilting " << (r.tilting ? "yes" : "no")
     << ", matches k[w]/(w^2) " << (r.matches_dg_model ? "yes" : "no") << ", P orthogonal "
     << (r.p_vanishes ? "yes" : "no") << ", End(M) local " << (r.m_local ? "yes" : "no") << "\n";
  return os.str();
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "f = " << r.f << "  weights (" << r.wx << "," << r.wy << ")  degree " << r.degree << "  over " << r.field
     << "\n";
  os << "a = " << r.a << "  p = " << r.p << "  r = " << r.r << " (degree " << r.r_degree << ")";
  if (!r.period_certified) os << "  [period not certified]";
  if (r.period_fallback) os << "  [unit witness in degree p is r]";
  os << "\ncomponents:";
  for (const auto& c : r.components) os << " p_" << c.index << "=" << c.period;
  os << "  rank a + sum p_i = " << r.grothendieck_rank << "  squarefree " << (r.squarefree ? "yes" : "no") << "\n";
  os << "Lambda: dim " << r.lambda.dim << ", " << r.lambda.vertex_count << " vertices, self-injective "
     << (r.lambda.self_injective ? "yes" : "no") << ", semisimple " << (r.lambda.semisimple ? "yes" : "no") << "\n";
  if (r.gamma) {
    const auto& g = *r.gamma;
    os << "Gamma: dim " << g.dim << ", " << g.vertex_count << " vertices, det C = " << g.cartan_det
       << ", gldim " << g.gldim.str() << ", injdim " << g.injdim_right.str() << "/" << g.injdim_left.str() << "\n";
    if (!g.coxeter.empty()) os << "Coxeter polynomial: " << polynomial_string(g.coxeter) << "\n";
    if (!r.coxeter_matches.empty()) {
      os << "matches:";
      for (const auto& m : r.coxeter_matches) os << " " << m;
      os << "\n";
    }
  }
  if (r.negative) {
    const auto& n = *r.negative;
    os << "negative case: regular " << (n.regular ? "yes" : "no") << ", tilting object "
       << (n.tilting_exists ? "exists" : "does not exist");
    if (n.lambda_cyclic) os << ", Lambda cyclic of length " << n.cycle_length;
    os << "\n";
    if (n.silting) os << to_text(*n.silting);
  }
  for (const auto& c : r.checks) os << "  [" << to_string(c.status) << "] " << c.name << ": " << c.detail << "\n";
  os << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string to_text(const CatalogSummary& s) {
  std::ostringstream os;
  for (const auto& row : s.rows) {
    os << (row.pass() ? "PASS " : "FAIL ") << row.entry.name << "  f = " << row.entry.f << "  (" << row.entry.wx
       << "," << row.entry.wy << ")";
    if (!row.error.empty()) {
      os << "  error: " << row.error << "\n";
      continue;
    }
    const auto& r = *row.report;
    os << "  a=" << r.a << " p=" << r.p << " rank=" << r.grothendieck_rank;
    if (!r.coxeter_matches.empty()) os << " coxeter=" << r.coxeter_matches.front();
    if (row.lambda) os << " lambda=" << row.lambda->cross_ratio.str() << "|" << row.lambda->ratio_14_13.str();
    os << "\n";
    for (const auto& c : row.expectations)
      if (c.status == CheckStatus::Fail) os << "    expected " << c.name << ": " << c.detail << "\n";
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::Fail) os << "    check " << c.name << ": " << c.detail << "\n";
  }
  os << (s.pass() ? "catalog PASS" : "catalog FAIL") << "\n";
  return os.str();
}

}  // namespace cmtilt
