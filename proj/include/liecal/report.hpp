#ifndef LIECAL_REPORT_HPP
#define LIECAL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liecal/algebra.hpp"

namespace liecal {

/// One verification record. `pass` is always recomputable from the numeric
/// fields and the published threshold of the suite.
struct SuiteReport {
  std::string suite;
  std::string group;
  int component_index = -1;  ///< -1 when not tied to a component
  int spin = -1;
  std::string form_label;

  bool has_value = false;
  bool mc = false;  ///< value is a Monte Carlo mean with spread fields
  double value = 0.0;
  double stderr_ = 0.0;
  double min_observed = 0.0;
  double max_observed = 0.0;

  bool has_grad = false;
  double grad_norm = 0.0;

  long long samples = 0;
  long long seed = 0;
  bool pass = false;
  long long runtime_ms = 0;
  std::string note;  ///< human-readable claim text (markdown output only)
};

struct EvidenceReport {
  std::string version = "0.1.0";
  std::vector<SuiteReport> suites;
};

struct ReportOptions {
  int samples = 100000;
  std::uint64_t seed = 0;
  double h = 1e-4;
  double tol = 1e-6;
  int jobs = 1;
  bool timings = false;  ///< off by default: byte-identical output contract
};

struct DecomposeOutcome {
  std::vector<SuiteReport> rows;
  bool pass = false;
};

/// Spin multiset of the Kostant decomposition against the exponent table;
/// so(4k) duplicates are annotated Euler / Pontryagin.
DecomposeOutcome run_decompose(Family family, int param);

/// f([V_i]) and the finite-difference gradient norm for an exact form.
SuiteReport run_critical(Family family, int param, int component_index,
                         const std::string& form_label, double h, double tol);

/// Sphere-pullback Monte Carlo average on the designated component.
/// `group` is one of su/so/sp (with param) or "spin7"/"spin9" (param ignored).
SuiteReport run_average(const std::string& group, int param, int samples, std::uint64_t seed);

/// Proportionality, zero-set consistency, and sign rows for one case
/// ("su3".."su6" or "spin9").
std::vector<SuiteReport> run_resultant_check(const std::string& case_id, int samples,
                                             std::uint64_t seed);

/// The full evidence table at the given settings.
EvidenceReport run_full_report(const ReportOptions& opts);

std::string to_json(const EvidenceReport& rep);
std::string to_csv(const EvidenceReport& rep);
std::string to_markdown(const EvidenceReport& rep);

}  // namespace liecal

#endif
