#pragma once

// The example catalog: ADE curve singularities with weights, the quartic T44,
// and non-reduced cases with a < 0.  Each entry carries the expected constants.

#include <optional>
#include <string>
#include <vector>

#include "cmtilt/analysis.hpp"

namespace cmtilt {

struct CatalogEntry {
  std::string name;
  FieldSpec field = FieldSpec::prime(101);
  std::string f;
  int wx = 1, wy = 1;
  int a = 0;
  int p = 0;
  std::vector<int> periods;           // p_i in component order; empty: not compared
  int rank = 0;                       // a + sum p_i
  std::optional<std::string> target;  // Coxeter comparison target
  bool optional = false;              // larger entry, skipped unless named by the filter
};

/// Cross-ratio candidates for T44 with roots 0, 1, 2, 3 (x - alpha y factors).
struct LambdaCandidates {
  Rational cross_ratio;  // (a1-a4)(a2-a3) / ((a1-a3)(a2-a4))
  Rational ratio_14_13;  // (a1-a4)(a2-a4) / ((a1-a3)(a2-a4)) = (a1-a4)/(a1-a3)
};
LambdaCandidates t44_lambda(const std::vector<Rational>& roots);

const std::vector<CatalogEntry>& catalog_entries();

struct CatalogRow {
  CatalogEntry entry;
  std::optional<AnalysisReport> report;
  std::string error;                        // set when analyze threw
  std::vector<CheckResult> expectations;    // comparisons with the entry's expected values
  std::optional<LambdaCandidates> lambda;   // T44 only
  bool pass() const;
};

struct CatalogSummary {
  std::vector<CatalogRow> rows;
  bool pass() const;
};

/// Entries whose name contains filter (case-sensitive); optional entries only
/// when the filter names them exactly.  Runs entries on parallel threads and
/// returns rows in catalog order.
CatalogSummary run_catalog(const std::string& filter = "");

CatalogRow run_entry(const CatalogEntry& e);

}  // namespace cmtilt
