#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "liecal/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

liecal::Family family_arg(const std::string& s) {
  if (s == "su") return liecal::Family::su;
  if (s == "so") return liecal::Family::so;
  if (s == "sp") return liecal::Family::sp;
  throw liecal::UnsupportedFamily("family must be su, so or sp");
}

void print_row(const liecal::SuiteReport& r) {
  std::printf("[%s] %s", r.suite.c_str(), r.group.c_str());
  if (r.component_index >= 0) std::printf(" V_%d (spin %d)", r.component_index, r.spin);
  if (!r.form_label.empty()) std::printf(" form=%s", r.form_label.c_str());
  if (r.has_value) {
    if (r.mc)
      std::printf(" mean=%.10g stderr=%.3g min=%.3g max=%.3g", r.value, r.stderr_,
                  r.min_observed, r.max_observed);
    else
      std::printf(" value=%.10g", r.value);
  }
  if (r.has_grad) std::printf(" grad=%.3g", r.grad_norm);
  std::printf(" %s", r.pass ? "PASS" : "FAIL");
  if (!r.note.empty()) std::printf("  (%s)", r.note.c_str());
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"principal sl(2) subalgebras, invariant forms and their verification suites"};
  app.set_help_flag("--help", "print help");  // keep -h free: `critical --h <step>`
  app.require_subcommand(1);

  std::string family = "su", case_id = "su3", form = "killing", out_path, format = "json";
  int param = 3, component = 0, samples = 100000, jobs = 1;
  std::uint64_t seed = 0;
  double h = 1e-4, tol = 1e-6;
  bool timings = false;

  auto* dec = app.add_subcommand("decompose", "Kostant decomposition against the exponent table");
  dec->add_option("--family", family)->required();
  dec->add_option("--param", param)->required();

  auto* crit = app.add_subcommand("critical", "finite-difference criticality of f_i at [V_i]");
  crit->set_help_flag("--help", "print help");
  crit->add_option("--family", family)->required();
  crit->add_option("--param", param)->required();
  crit->add_option("--component", component)->required();
  crit->add_option("--form", form)->required();
  crit->add_option("--h", h);
  crit->add_option("--tol", tol);

  auto* avg = app.add_subcommand("average", "sphere-pullback Monte Carlo average");
  avg->add_option("--family", family)->required();
  avg->add_option("--param", param);
  avg->add_option("--samples", samples);
  avg->add_option("--seed", seed);

  auto* res = app.add_subcommand("resultant_check", "proportionality and sign suites");
  res->add_option("--case", case_id)->required();
  res->add_option("--samples", samples);
  res->add_option("--seed", seed);

  auto* rep = app.add_subcommand("report", "full evidence table");
  rep->add_option("--out", out_path);
  rep->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));
  rep->add_option("--samples", samples);
  rep->add_option("--seed", seed);
  rep->add_option("--h", h);
  rep->add_option("--tol", tol);
  rep->add_option("--jobs", jobs);
  rep->add_flag("--timings", timings, "measure wall time (breaks byte-determinism)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dec->parsed()) {
      const auto outc = liecal::run_decompose(family_arg(family), param);
      for (const auto& r : outc.rows) print_row(r);
      return outc.pass ? kExitPass : kExitClaimFail;
    }
    if (crit->parsed()) {
      const auto r = liecal::run_critical(family_arg(family), param, component, form, h, tol);
      print_row(r);
      return r.pass ? kExitPass : kExitClaimFail;
    }
    if (avg->parsed()) {
      const auto r = liecal::run_average(family, param, samples, seed);
      print_row(r);
      return r.pass ? kExitPass : kExitClaimFail;
    }
    if (res->parsed()) {
      bool ok = true;
      for (const auto& r : liecal::run_resultant_check(case_id, samples, seed)) {
        print_row(r);
        ok = ok && r.pass;
      }
      return ok ? kExitPass : kExitClaimFail;
    }
    if (rep->parsed()) {
      std::ofstream out_file;
      if (!out_path.empty()) {
        out_file.open(out_path, std::ios::binary);
        if (!out_file) {
          std::cerr << "cannot open '" << out_path << "' for writing\n";
          return kExitIo;
        }
      }
      liecal::ReportOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      opts.h = h;
      opts.tol = tol;
      opts.jobs = jobs;
      opts.timings = timings;
      const auto table = liecal::run_full_report(opts);
      std::string text;
      if (format == "json") text = liecal::to_json(table);
      else if (format == "csv") text = liecal::to_csv(table);
      else text = liecal::to_markdown(table);
      if (out_path.empty()) {
        std::cout << text << "\n";
      } else {
        out_file << text;
        out_file.flush();
        if (!out_file.good()) return kExitIo;
      }
      bool ok = true;
      for (const auto& r : table.suites) ok = ok && r.pass;
      return ok ? kExitPass : kExitClaimFail;
    }
  } catch (const liecal::UnsupportedParam& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liecal::UnsupportedFamily& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liecal::UnsupportedDim& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liecal::WrongFamily& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liecal::DegreeTooLarge& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liecal::DegreeMismatch& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const liecal::Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitClaimFail;
  }
  return kExitUsage;
}
