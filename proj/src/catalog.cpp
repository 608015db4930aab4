#include "cmtilt/catalog.hpp"

#include <thread>

namespace cmtilt {

namespace {

CatalogEntry entry(std::string name, std::string f, int wx, int wy, int a, int p, std::vector<int> periods, int rank,
                   std::optional<std::string> target) {
  CatalogEntry e;
  e.name = std::move(name);
  e.f = std::move(f);
  e.wx = wx;
  e.wy = wy;
  e.a = a;
  e.p = p;
  e.periods = std::move(periods);
  e.rank = rank;
  e.target = std::move(target);
  return e;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c = {
      entry("A3", "x^4 - y^2", 1, 2, 1, 1, {1, 1}, 3, "D3"),
      entry("A4", "x^5 - y^2", 2, 5, 3, 1, {1}, 4, "A4"),
      entry("A5", "x^6 - y^2", 1, 3, 2, 1, {1, 1}, 4, "D4"),
      entry("A6", "x^7 - y^2", 2, 7, 5, 1, {1}, 6, "A6"),
      entry("D4", "x^3 - x*y^2", 1, 1, 1, 1, {1, 1, 1}, 4, "D4"),
      entry("D5", "x^4 - x*y^2", 2, 3, 3, 3, {3, 1}, 7, "A7"),
      entry("D6", "x^5 - x*y^2", 1, 2, 2, 2, {1, 1, 2}, 6, "D6"),
      entry("D7", "x^6 - x*y^2", 2, 5, 5, 5, {5, 1}, 11, "A11"),
      entry("E6", "x^4 - y^3", 3, 4, 5, 1, {1}, 6, "E6"),
      entry("E7", "x^3*y - y^3", 2, 3, 4, 2, {2, 1}, 7, "E7"),
      entry("E8", "x^5 - y^3", 3, 5, 7, 1, {1}, 8, "E8"),
      entry("T44", "x*(x - y)*(x - 2*y)*(x - 3*y)", 1, 1, 2, 1, {1, 1, 1, 1}, 6, "canonical2222"),
      entry("neg-y2-31", "y^2", 3, 1, -2, 3, {3}, 1, std::nullopt),
      entry("neg-y2-21", "y^2", 2, 1, -1, 2, {2}, 1, std::nullopt),
      entry("neg-y-11", "y", 1, 1, -1, 1, {1}, 0, std::nullopt),
  };
  for (auto& e : c) {
    if (e.name == "D7") e.optional = true;
    if (e.name.rfind("neg-", 0) == 0) e.field = FieldSpec::rationals();
  }
  return c;
}

void expect(CatalogRow& row, const std::string& name, bool ok, const std::string& detail) {
  row.expectations.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "(" + out + ")";
}

}  // namespace

LambdaCandidates t44_lambda(const std::vector<Rational>& r) {
  if (r.size() != 4) throw Error(ErrorKind::InvalidInput, "cross-ratio needs four roots");
  const Rational den = (r[0] - r[2]) * (r[1] - r[3]);
  if (den == 0) throw Error(ErrorKind::BadLambda, "repeated roots");
  return {(r[0] - r[3]) * (r[1] - r[2]) / den, (r[0] - r[3]) * (r[1] - r[3]) / den};
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

bool CatalogRow::pass() const {
  if (!error.empty() || !report) return false;
  for (const auto& c : expectations)
    if (c.status == CheckStatus::Fail) return false;
  return report->all_pass();
}

bool CatalogSummary::pass() const {
  for (const auto& r : rows)
    if (!r.pass()) return false;
  return true;
}

CatalogRow run_entry(const CatalogEntry& e) {
  CatalogRow row;
  row.entry = e;
  AnalysisOptions o;
  o.field = e.field;
  o.f = e.f;
  o.wx = e.wx;
  o.wy = e.wy;
  o.target = e.target;
  try {
    row.report = analyze(o);
  } catch (const std::exception& ex) {
    row.error = ex.what();
    return row;
  }
  const AnalysisReport& r = *row.report;
  expect(row, "a", r.a == e.a, std::to_string(r.a) + " vs expected " + std::to_string(e.a));
  expect(row, "p", r.p == e.p, std::to_string(r.p) + " vs expected " + std::to_string(e.p));
  if (!e.periods.empty()) {
    std::vector<int> got;
    for (const auto& c : r.components) got.push_back(c.period);
    std::vector<int> want = e.periods, have = got;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    expect(row, "periods", want == have, join(got) + " vs expected " + join(e.periods));
  }
  expect(row, "rank", r.grothendieck_rank == e.rank,
         std::to_string(r.grothendieck_rank) + " vs expected " + std::to_string(e.rank));
  if (e.name == "T44") row.lambda = t44_lambda({Rational(0), Rational(1), Rational(2), Rational(3)});
  return row;
}

CatalogSummary run_catalog(const std::string& filter) {
  std::vector<CatalogEntry> chosen;
  for (const auto& e : catalog_entries()) {
    if (e.optional ? filter != e.name : e.name.find(filter) == std::string::npos) continue;
    chosen.push_back(e);
  }
  CatalogSummary s;
  s.rows.resize(chosen.size());
  std::vector<std::thread> workers;
  for (std::size_t k = 0; k < chosen.size(); ++k)
    workers.emplace_back([&, k] { s.rows[k] = run_entry(chosen[k]); });
  for (auto& w : workers) w.join();
  return s;
}

}  // namespace cmtilt
