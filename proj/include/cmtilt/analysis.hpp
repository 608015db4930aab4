#pragma once

// End-to-end analysis of one hypersurface R = k[x,y]/(f): quotient ring data,
// Lambda, Gamma (a >= 0) or the negative-case checks (a < 0), and named checks.
// Everything in the report is exact; no field elements leak out.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmtilt/algebra.hpp"
#include "cmtilt/checks.hpp"
#include "cmtilt/complexes.hpp"
#include "cmtilt/resolution.hpp"

namespace cmtilt {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct ComponentReport {
  int index = 0;
  int period = 0;
  int local_dim = 0;
};

struct LambdaReport {
  int dim = 0;
  int vertex_count = 0;
  bool self_injective = false;
  bool semisimple = false;
  IntMatrix cartan;
  IntMatrix arrows;
};

struct GammaReport {
  int dim = 0;
  int expected_dim = 0;              // sum of entry dimensions from R and K
  int vertex_count = 0;
  IntMatrix cartan;
  IntMatrix arrows;
  BigInt cartan_det;
  std::vector<BigInt> coxeter;       // ascending coefficients
  DimVerdict injdim_right, injdim_left, gldim;
  std::vector<std::vector<int>> hom_oracle;   // [i-1][j-1] = dim Hom(R(i)_{>=0}, R(j)_{>=0}); empty if skipped
};

struct NegativeReport {
  bool regular = false;              // a < 0 and f squarefree
  bool tilting_exists = false;       // iff regular
  bool lambda_cyclic = false;
  int cycle_length = 0;
  std::optional<SiltingReport> silting;
};

struct AnalysisOptions {
  FieldSpec field = FieldSpec::prime(101);
  std::string f;
  int wx = 1;
  int wy = 1;
  int max_window = 0;                // 0: no cap on the Hom oracle window
  std::uint64_t seed = 0x5eed;
  std::optional<std::string> target; // Coxeter comparison target; auto-detected when absent
  int hom_grid_limit = 10;           // run the Hom oracle grid when a + p <= limit
};

struct AnalysisReport {
  // inputs
  std::string field;
  std::string f;
  int wx = 0, wy = 0;
  std::uint64_t seed = 0;
  int degree = 0;
  // quotient ring
  int a = 0;
  int p = 0;
  int r_degree = 0;
  std::string r;
  bool period_certified = true;
  bool period_fallback = false;
  std::vector<ComponentReport> components;
  int grothendieck_rank = 0;         // a + sum p_i
  bool squarefree = false;
  LambdaReport lambda;
  std::optional<GammaReport> gamma;
  std::optional<SequenceReport> sequences;
  std::optional<NegativeReport> negative;
  std::vector<std::string> coxeter_matches;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  const CheckResult* check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Runs the whole pipeline.  Throws Error for input and unsupported cases.
AnalysisReport analyze(const AnalysisOptions& options);

}  // namespace cmtilt
