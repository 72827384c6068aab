#include "liecal/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <sstream>

#include "liecal/clifford.hpp"
#include "liecal/grassmann.hpp"
#include "liecal/invforms.hpp"
#include "liecal/principal.hpp"
#include "liecal/resultants.hpp"

namespace liecal {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

std::string group_label(Family f, int param) {
  return family_name(f) + "(" + std::to_string(param) + ")";
}

Family parse_family(const std::string& s) {
  if (s == "su") return Family::su;
  if (s == "so") return Family::so;
  if (s == "sp") return Family::sp;
  throw UnsupportedFamily("unknown family '" + s + "'");
}

/// The exact catalog form whose degree matches a component, or "".
/// The sigma = -1 copy of so(2k) pairs with the Pfaffian (the sigma-even
/// forms vanish on it identically, so(4) included).
std::string exact_label_for(const MatrixLieAlgebra& g, int spin, bool first_of_duplicate) {
  const int p = spin / 2 + 1;  // polynomial degree
  if (g.family == Family::so && spin == g.param - 2 && first_of_duplicate) return "pf";
  if (spin == 2) return "killing";
  switch (g.family) {
    case Family::su:
    case Family::sp:
      return "c" + std::to_string(p);
    case Family::so:
      if (p % 2 == 0) return "c" + std::to_string(p);
      return "";
  }
  return "";
}

/// Exact form value on a component with a random-frame scale probe;
/// nonvanishing threshold 1e-6 * scale.
SuiteReport form_value_row(const MatrixLieAlgebra& g, const std::string& group, int index,
                           const IsotypicComponent& comp, const std::string& label,
                           std::uint64_t seed) {
  const FormSpec fs = make_form(form_polynomial(label, g));
  const FrameEvaluator ev = exact_form_evaluator(g, fs);
  const GrassmannFrame fr = frame_from_basis(comp.basis);
  const double f0 = f_value(ev, fr);
  double scale = std::abs(f0);
  for (int t = 0; t < 5; ++t) {
    const GrassmannFrame rf = random_frame(g.dim, comp.dim(), seed + 1000 + t);
    scale = std::max(scale, std::abs(f_value(ev, rf)));
  }
  SuiteReport r;
  r.suite = "form_value";
  r.group = group;
  r.component_index = index;
  r.spin = comp.spin;
  r.form_label = fs.poly.label;
  r.has_value = true;
  r.value = f0;
  r.pass = std::abs(f0) >= 1e-6 * scale;
  r.note = "degree-" + std::to_string(fs.form_degree) + " form restricts nontrivially";
  return r;
}

struct AverageCase {
  std::vector<MatrixXd> actions;
  std::string group;
  std::string form_label;
  int component_index = -1;
  int spin = -1;
};

AverageCase make_average_case(const std::string& group, int param) {
  AverageCase ac;
  if (group == "spin7" || group == "spin9") {
    const int d = (group == "spin7") ? 7 : 9;
    const SpinStructure s = spin_structure(d);
    const KostantDecomposition kd = kostant_decompose(s.so_d, s.triple);
    const IsotypicComponent& comp = kd.components[(d == 7) ? 1 : 3];
    for (int j = 0; j < comp.dim(); ++j)
      ac.actions.push_back(spin_lift(s.clifford, s.so_d.element(comp.basis.col(j)).real()));
    ac.group = group;
    ac.form_label = (d == 7) ? "p1p1-4p2" : "spin9-euler";
    ac.component_index = (d == 7) ? 1 : 3;
    ac.spin = comp.spin;
    return ac;
  }
  const Family f = parse_family(group);
  ac.group = group_label(f, param);
  if (f == Family::so) {
    if (param % 2 != 0 || param < 4)
      throw UnsupportedParam("sphere averages for the so family need so(2n), 2n >= 4");
    // geometric V basis e_0 wedge e_i, i = 1..2n-1: integrand v_0^{2n-2},
    // so the so(4) mean has the closed form 1/4
    for (int i = 1; i < param; ++i) ac.actions.push_back(so_wedge(param, 0, i));
    ac.form_label = "pf";
    const MatrixLieAlgebra g = build_algebra(f, param);
    const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
    for (std::size_t i = 0; i < kd.components.size(); ++i)
      if (kd.components[i].spin == param - 2) {
        ac.component_index = static_cast<int>(i);
        break;
      }
    ac.spin = param - 2;
    return ac;
  }
  const MatrixLieAlgebra g = build_algebra(f, param);
  const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
  const IsotypicComponent& top = kd.components.back();
  for (int j = 0; j < top.dim(); ++j)
    ac.actions.push_back(g.realified(g.element(top.basis.col(j))));
  ac.component_index = static_cast<int>(kd.components.size()) - 1;
  ac.spin = top.spin;
  ac.form_label =
      (f == Family::su) ? "c" + std::to_string(param) : "c" + std::to_string(2 * param);
  return ac;
}

}  // namespace

DecomposeOutcome run_decompose(Family family, int param) {
  DecomposeOutcome out;
  const MatrixLieAlgebra g = build_algebra(family, param);
  const PrincipalTriple t = principal_triple(g);
  KostantDecomposition kd;
  try {
    kd = kostant_decompose(g, t);
  } catch (const DecompositionResidual& e) {
    SuiteReport r;
    r.suite = "decompose";
    r.group = group_label(family, param);
    r.pass = false;
    r.note = e.what();
    out.rows.push_back(r);
    out.pass = false;
    return out;
  }
  const bool dup = (family == Family::so && param % 4 == 0);
  for (std::size_t i = 0; i < kd.components.size(); ++i) {
    const auto& c = kd.components[i];
    SuiteReport r;
    r.suite = "decompose";
    r.group = group_label(family, param);
    r.component_index = static_cast<int>(i);
    r.spin = c.spin;
    r.has_value = true;
    r.value = c.dim();
    r.pass = true;
    r.note = "dim " + std::to_string(c.dim());
    if (dup && c.spin == param - 2) {
      const bool first = (i == 0 || kd.components[i - 1].spin != c.spin);
      r.form_label = first ? "euler-copy" : "pontryagin-copy";
      r.note += first ? " (sigma = -1)" : " (sigma = +1)";
    }
    out.rows.push_back(r);
  }
  out.pass = true;
  return out;
}

SuiteReport run_critical(Family family, int param, int component_index,
                         const std::string& form_label, double h, double tol) {
  const MatrixLieAlgebra g = build_algebra(family, param);
  const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
  if (component_index < 0 || component_index >= static_cast<int>(kd.components.size()))
    throw UnsupportedParam("component index out of range");
  const IsotypicComponent& comp = kd.components[component_index];
  const FormSpec fs = make_form(form_polynomial(form_label, g));
  if (fs.form_degree != comp.dim())
    throw DegreeMismatch("form degree " + std::to_string(fs.form_degree) +
                         " does not match component dimension " + std::to_string(comp.dim()));
  const FrameEvaluator ev = exact_form_evaluator(g, fs);
  const GrassmannFrame fr = frame_from_basis(comp.basis);
  const double f0 = f_value(ev, fr);
  const Gradient grad = grad_fd(ev, fr, h);

  SuiteReport r;
  r.suite = "critical";
  r.group = group_label(family, param);
  r.component_index = component_index;
  r.spin = comp.spin;
  r.form_label = fs.poly.label;
  r.has_value = true;
  r.value = f0;
  r.has_grad = true;
  r.grad_norm = grad.norm;
  r.pass = grad.norm <= tol * std::max(1.0, std::abs(f0));
  r.note = "gradient vanishes at [V_i]";
  return r;
}

SuiteReport run_average(const std::string& group, int param, int samples, std::uint64_t seed) {
  const AverageCase ac = make_average_case(group, param);
  const SphereStats st = sphere_average(ac.actions, Sampler{seed, samples});
  SuiteReport r;
  r.suite = "average";
  r.group = ac.group;
  r.component_index = ac.component_index;
  r.spin = ac.spin;
  r.form_label = ac.form_label;
  r.has_value = true;
  r.mc = true;
  r.value = st.mean;
  r.stderr_ = st.stderr_;
  r.min_observed = st.min_observed;
  r.max_observed = st.max_observed;
  r.samples = samples;
  r.seed = static_cast<long long>(seed);
  r.pass = std::abs(st.mean) > 5.0 * st.stderr_;
  r.note = "sphere-pullback average is nonzero (|mean| > 5 stderr)";
  return r;
}

std::vector<SuiteReport> run_resultant_check(const std::string& case_id, int samples,
                                             std::uint64_t seed) {
  const double spread_thr = (case_id == "spin9") ? 1e-6 : 1e-8;
  const ProportionalityResult pr = proportionality_suite(case_id, samples, seed);
  const SignSuiteResult sr = sign_suite(case_id, samples, seed + 1);
  const std::string group = case_id == "spin9" ? "spin9" : ("su(" + case_id.substr(2) + ")");

  SuiteReport prop;
  prop.suite = "resultant_prop";
  prop.group = group;
  prop.form_label = "q/resultant";
  prop.has_value = true;
  prop.value = pr.ratio_rel_spread;
  prop.samples = samples;
  prop.seed = static_cast<long long>(seed);
  prop.pass = pr.ratio_rel_spread <= spread_thr;
  prop.note = "ratio mean " + fmt17(pr.ratio_mean) + ", accepted " + std::to_string(pr.accepted);

  SuiteReport zeros;
  zeros.suite = "resultant_zeros";
  zeros.group = group;
  zeros.form_label = "common-zero";
  zeros.has_value = true;
  zeros.value = pr.zeros_consistent ? 1.0 : 0.0;
  zeros.samples = 100;
  zeros.seed = static_cast<long long>(seed);
  zeros.pass = pr.zeros_consistent;
  zeros.note = "constructed common zeros annihilate the Q-polynomial";

  SuiteReport sign;
  sign.suite = "resultant_sign";
  sign.group = group;
  sign.form_label = sr.nonnegative_expected ? "nonnegative" : "nonpositive";
  sign.has_value = true;
  sign.value = static_cast<double>(sr.violations);
  sign.samples = samples;
  sign.seed = static_cast<long long>(seed + 1);
  sign.pass = sr.violations == 0;
  sign.note = "observed range [" + fmt17(sr.min_value) + ", " + fmt17(sr.max_value) + "]";

  return {prop, zeros, sign};
}

EvidenceReport run_full_report(const ReportOptions& opts) {
  using Task = std::function<std::vector<SuiteReport>()>;
  std::vector<Task> tasks;

  auto classical_block = [&opts](Family f, int param) {
    return [f, param, opts]() {
      std::vector<SuiteReport> rows;
      const DecomposeOutcome d = run_decompose(f, param);
      rows.insert(rows.end(), d.rows.begin(), d.rows.end());
      if (!d.pass) return rows;
      const MatrixLieAlgebra g = build_algebra(f, param);
      const KostantDecomposition kd = kostant_decompose(g, principal_triple(g));
      for (std::size_t i = 0; i < kd.components.size(); ++i) {
        const auto& c = kd.components[i];
        const bool first_dup =
            (i == 0 || kd.components[i - 1].spin != c.spin);
        const std::string label = exact_label_for(g, c.spin, first_dup);
        SuiteReport row;
        if (!label.empty() && c.dim() <= kMaxExactFormDegree) {
          row = form_value_row(g, group_label(f, param), static_cast<int>(i), c, label,
                               opts.seed);
        } else {
          row.suite = "form_value";
          row.group = group_label(f, param);
          row.component_index = static_cast<int>(i);
          row.spin = c.spin;
          row.form_label = "none";
          row.pass = true;  // no claim made for this component
          row.note = "no exact evaluator in range";
        }
        rows.push_back(row);
      }
      const bool sphere = (f == Family::su) || (f == Family::sp) ||
                          (f == Family::so && param % 2 == 0);
      if (sphere)
        rows.push_back(run_average(family_name(f), param, opts.samples, opts.seed));
      if (f == Family::su && param >= 3 && param <= 6)
        for (auto& r :
             run_resultant_check("su" + std::to_string(param), opts.samples / 100, opts.seed))
          rows.push_back(r);
      return rows;
    };
  };

  for (int n = 3; n <= 6; ++n) tasks.push_back(classical_block(Family::su, n));
  for (int N = 4; N <= 9; ++N) tasks.push_back(classical_block(Family::so, N));
  for (int n = 2; n <= 3; ++n) tasks.push_back(classical_block(Family::sp, n));

  tasks.push_back([&opts]() {
    std::vector<SuiteReport> rows;
    rows.push_back(run_average("spin7", 0, opts.samples, opts.seed));
    const SpinStructure s = spin_structure(7);
    const KostantDecomposition kd = kostant_decompose(s.so_d, s.triple);
    const double det = spin7_submersion_det(s, kd);
    SuiteReport sub;
    sub.suite = "submersion";
    sub.group = "spin7";
    sub.component_index = 1;
    sub.spin = 6;
    sub.form_label = "volume";
    sub.has_value = true;
    sub.value = det;
    sub.pass = std::abs(det) >= 1e-6;
    sub.note = "orbit map is submersive at the fixed spinor";
    rows.push_back(sub);
    // exact twin of the averaged degree-7 form, evaluated on so(7)
    const IsotypicComponent& spin6 = kd.components[1];
    rows.push_back(form_value_row(s.so_d, "spin7", 1, spin6, "spin7", opts.seed));
    return rows;
  });

  tasks.push_back([&opts]() {
    std::vector<SuiteReport> rows;
    rows.push_back(run_average("spin9", 0, opts.samples, opts.seed));
    for (auto& r : run_resultant_check("spin9", opts.samples / 100, opts.seed))
      rows.push_back(r);
    return rows;
  });

  // run tasks (optionally in parallel), merge in fixed order
  std::vector<std::vector<SuiteReport>> results(tasks.size());
  std::vector<long long> elapsed(tasks.size(), 0);
  auto run_task = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    results[i] = tasks[i]();
    const auto t1 = std::chrono::steady_clock::now();
    elapsed[i] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  };
  if (opts.jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(opts.jobs, static_cast<int>(tasks.size()));
    for (int w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
          run_task(i);
      }));
    for (auto& f : futs) f.get();
  }

  EvidenceReport rep;
  for (std::size_t i = 0; i < results.size(); ++i)
    for (auto& r : results[i]) {
      r.runtime_ms = opts.timings ? elapsed[i] : 0;
      rep.suites.push_back(std::move(r));
    }
  return rep;
}

std::string to_json(const EvidenceReport& rep) {
  std::string out = "{\"version\":\"" + json_escape(rep.version) + "\",\"suites\":[";
  bool first = true;
  for (const auto& r : rep.suites) {
    if (!first) out += ",";
    first = false;
    out += "{\"suite\":\"" + json_escape(r.suite) + "\"";
    out += ",\"group\":\"" + json_escape(r.group) + "\"";
    out += ",\"component_index\":" + std::to_string(r.component_index);
    out += ",\"spin\":" + std::to_string(r.spin);
    out += ",\"form_label\":\"" + json_escape(r.form_label) + "\"";
    out += ",\"value\":";
    if (!r.has_value) {
      out += "null";
    } else if (r.mc) {
      out += "{\"mean\":" + fmt17(r.value) + ",\"stderr\":" + fmt17(r.stderr_) +
             ",\"min\":" + fmt17(r.min_observed) + ",\"max\":" + fmt17(r.max_observed) + "}";
    } else {
      out += fmt17(r.value);
    }
    out += ",\"grad_norm\":" + (r.has_grad ? fmt17(r.grad_norm) : std::string("null"));
    out += ",\"samples\":" + std::to_string(r.samples);
    out += ",\"seed\":" + std::to_string(r.seed);
    out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
    out += ",\"runtime_ms\":" + std::to_string(r.runtime_ms);
    out += "}";
  }
  out += "]}";
  return out;
}

std::string to_csv(const EvidenceReport& rep) {
  std::string out =
      "suite,group,component_index,spin,form_label,value,mean,stderr,min,max,grad_norm,"
      "samples,seed,pass,runtime_ms\n";
  for (const auto& r : rep.suites) {
    out += r.suite + "," + r.group + "," + std::to_string(r.component_index) + "," +
           std::to_string(r.spin) + "," + r.form_label + ",";
    if (r.has_value && !r.mc) out += fmt17(r.value);
    out += ",";
    if (r.has_value && r.mc)
      out += fmt17(r.value) + "," + fmt17(r.stderr_) + "," + fmt17(r.min_observed) + "," +
             fmt17(r.max_observed);
    else
      out += ",,,";
    out += ",";
    if (r.has_grad) out += fmt17(r.grad_norm);
    out += "," + std::to_string(r.samples) + "," + std::to_string(r.seed) + "," +
           (r.pass ? std::string("true") : std::string("false")) + "," +
           std::to_string(r.runtime_ms) + "\n";
  }
  return out;
}

std::string to_markdown(const EvidenceReport& rep) {
  std::string out = "| suite | group | V_i | spin | form | value | grad | pass | claim |\n";
  out += "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rep.suites) {
    std::string value = "-";
    if (r.has_value) {
      value = fmt17(r.value);
      if (r.mc) value += " +- " + fmt17(r.stderr_);
    }
    out += "| " + r.suite + " | " + r.group + " | " +
           (r.component_index >= 0 ? std::to_string(r.component_index) : std::string("-")) +
           " | " + (r.spin >= 0 ? std::to_string(r.spin) : std::string("-")) + " | " +
           (r.form_label.empty() ? "-" : r.form_label) + " | " + value + " | " +
           (r.has_grad ? fmt17(r.grad_norm) : std::string("-")) + " | " +
           (r.pass ? "yes" : "NO") + " | " + r.note + " |\n";
  }
  return out;
}

}  // namespace liecal
