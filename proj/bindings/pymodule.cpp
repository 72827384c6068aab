#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liecal/clifford.hpp"
#include "liecal/grassmann.hpp"
#include "liecal/invforms.hpp"
#include "liecal/principal.hpp"
#include "liecal/report.hpp"
#include "liecal/resultants.hpp"
#include "liecal/rng.hpp"

namespace py = pybind11;
using namespace liecal;

namespace {

Family family_from(const std::string& s) {
  if (s == "su") return Family::su;
  if (s == "so") return Family::so;
  if (s == "sp") return Family::sp;
  throw UnsupportedFamily("family must be su, so or sp");
}

Poly poly_from(const Eigen::VectorXcd& coeffs) {
  Poly p;
  p.coeffs = coeffs;
  return p;
}

py::dict report_to_dict(const SuiteReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["group"] = r.group;
  d["component_index"] = r.component_index;
  d["spin"] = r.spin;
  d["form_label"] = r.form_label;
  if (!r.has_value) {
    d["value"] = py::none();
  } else if (r.mc) {
    py::dict v;
    v["mean"] = r.value;
    v["stderr"] = r.stderr_;
    v["min"] = r.min_observed;
    v["max"] = r.max_observed;
    d["value"] = v;
  } else {
    d["value"] = r.value;
  }
  if (r.has_grad) d["grad_norm"] = r.grad_norm;
  else d["grad_norm"] = py::none();
  d["samples"] = r.samples;
  d["seed"] = r.seed;
  d["pass"] = r.pass;
  d["runtime_ms"] = r.runtime_ms;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_liecal, m) {
  m.doc() = "principal sl(2) subalgebras of compact classical Lie algebras, "
            "Kostant decompositions, bi-invariant forms and their verification suites";

  // ---------------------------------------------------------------- sl2
  py::class_<Irrep>(m, "Irrep")
      .def_readonly("n", &Irrep::n)
      .def_readonly("dim", &Irrep::dim)
      .def_readonly("H", &Irrep::H)
      .def_readonly("E", &Irrep::E)
      .def_readonly("F", &Irrep::F)
      .def_readonly("Eu", &Irrep::Eu)
      .def_readonly("Fu", &Irrep::Fu)
      .def_readonly("X1", &Irrep::X1)
      .def_readonly("X2", &Irrep::X2)
      .def_readonly("X3", &Irrep::X3)
      .def_readonly("weight_scale", &Irrep::weight_scale)
      .def("casimir", &Irrep::casimir);
  m.def("irrep", &irrep, py::arg("n"));

  m.def("clebsch_gordan_spins", &clebsch_gordan_spins, py::arg("m"), py::arg("n"));

  m.def("antilinear_structure", [](const Irrep& r) {
    const AntilinearStructure st = antilinear_structure(r);
    return py::make_tuple(st.S, st.kind == StructureKind::Real ? "real" : "quaternionic");
  });

  m.def("real_form_basis", [](const Irrep& r) {
    const RealForm rf = real_form_basis(r);
    return py::make_tuple(rf.basis,
                          std::vector<Eigen::MatrixXd>(rf.action.begin(), rf.action.end()));
  });

  py::class_<IsotypicComponent>(m, "IsotypicComponent")
      .def_readonly("spin", &IsotypicComponent::spin)
      .def_readonly("basis", &IsotypicComponent::basis)
      .def_property_readonly("dim", &IsotypicComponent::dim);

  m.def("isotypic_decompose",
        [](const Eigen::MatrixXd& x1, const Eigen::MatrixXd& x2, const Eigen::MatrixXd& x3) {
          return isotypic_decompose(x1, x2, x3);
        });
  m.def("isotypic_decompose_complex",
        [](const Eigen::MatrixXcd& x1, const Eigen::MatrixXcd& x2, const Eigen::MatrixXcd& x3) {
          const auto comps = isotypic_decompose(x1, x2, x3);
          py::list out;
          for (const auto& c : comps) out.append(py::make_tuple(c.spin, c.basis));
          return out;
        });

  // ---------------------------------------------------------------- algebra
  py::class_<MatrixLieAlgebra>(m, "MatrixLieAlgebra")
      .def_property_readonly("family",
                             [](const MatrixLieAlgebra& g) { return family_name(g.family); })
      .def_readonly("param", &MatrixLieAlgebra::param)
      .def_readonly("matrix_size", &MatrixLieAlgebra::matrix_size)
      .def_readonly("ambient_dim", &MatrixLieAlgebra::ambient_dim)
      .def_readonly("dim", &MatrixLieAlgebra::dim)
      .def_readonly("basis", &MatrixLieAlgebra::basis)
      .def_readonly("onbasis", &MatrixLieAlgebra::onbasis)
      .def("bracket", &MatrixLieAlgebra::bracket)
      .def_static("inner", &MatrixLieAlgebra::inner)
      .def("coords", &MatrixLieAlgebra::coords)
      .def("element", &MatrixLieAlgebra::element)
      .def("realified", &MatrixLieAlgebra::realified)
      .def("ad_matrix", &MatrixLieAlgebra::ad_matrix)
      .def("defining_residual", &MatrixLieAlgebra::defining_residual);
  m.def(
      "build_algebra",
      [](const std::string& f, int param) { return build_algebra(family_from(f), param); },
      py::arg("family"), py::arg("param"));

  m.def("pfaffian", &pfaffian, py::arg("a"), py::arg("skew_tol") = 1e-12);
  m.def("orientation_involution", &orientation_involution);
  m.def("so_wedge", &so_wedge, py::arg("N"), py::arg("i"), py::arg("j"));

  // ---------------------------------------------------------------- clifford
  py::class_<CliffordModule>(m, "CliffordModule")
      .def_readonly("d", &CliffordModule::d)
      .def_readonly("spin_dim", &CliffordModule::spin_dim)
      .def_readonly("metric_sign", &CliffordModule::metric_sign)
      .def_readonly("gammas", &CliffordModule::gammas);
  m.def("clifford_gammas", &clifford_gammas, py::arg("d"));
  m.def("spin_lift", &spin_lift, py::arg("cm"), py::arg("a"), py::arg("skew_tol") = 1e-12);

  // ---------------------------------------------------------------- principal
  py::class_<PrincipalTriple>(m, "PrincipalTriple")
      .def_property_readonly("X1", [](const PrincipalTriple& t) { return t.X[0]; })
      .def_property_readonly("X2", [](const PrincipalTriple& t) { return t.X[1]; })
      .def_property_readonly("X3", [](const PrincipalTriple& t) { return t.X[2]; })
      .def_readonly("relation_residual", &PrincipalTriple::relation_residual);
  m.def("principal_triple", &principal_triple);

  py::class_<KostantDecomposition>(m, "KostantDecomposition")
      .def_readonly("components", &KostantDecomposition::components)
      .def_readonly("exponents", &KostantDecomposition::exponents)
      .def_property_readonly("spins", [](const KostantDecomposition& kd) {
        std::vector<int> s;
        for (const auto& c : kd.components) s.push_back(c.spin);
        return s;
      });
  m.def("kostant_decompose", &kostant_decompose);

  m.def("split_euler_pontryagin", [](const MatrixLieAlgebra& g, const KostantDecomposition& kd) {
    const EulerPontryaginSplit sp = split_euler_pontryagin(g, kd);
    return py::make_tuple(sp.V, sp.Vprime);
  });

  m.def("exponents", [](const std::string& type, int rank) {
    if (type.size() != 1) throw UnsupportedParam("Cartan type is a single letter A..G");
    return exponents(type[0], rank);
  });
  m.def("exponents_for",
        [](const std::string& f, int param) { return exponents_for(family_from(f), param); });

  py::class_<SpinStructure>(m, "SpinStructure")
      .def_readonly("d", &SpinStructure::d)
      .def_readonly("clifford", &SpinStructure::clifford)
      .def_readonly("so_d", &SpinStructure::so_d)
      .def_readonly("triple", &SpinStructure::triple)
      .def_readonly("summands", &SpinStructure::summands)
      .def_readonly("fixed_spinor", &SpinStructure::fixed_spinor)
      .def_readonly("stabilizer_coords", &SpinStructure::stabilizer_coords)
      .def_property_readonly("lifted", [](const SpinStructure& s) {
        return std::vector<Eigen::MatrixXd>(s.lifted.begin(), s.lifted.end());
      });
  m.def("spin_structure", &spin_structure, py::arg("d"));
  m.def("g2_complement", &g2_complement);
  m.def("spin7_submersion_det", &spin7_submersion_det);
  m.def("subspace_distance", &subspace_distance);

  // ---------------------------------------------------------------- invforms
  py::class_<InvariantPolynomial>(m, "InvariantPolynomial")
      .def_readonly("degree", &InvariantPolynomial::degree)
      .def_readonly("label", &InvariantPolynomial::label)
      .def("__call__", &InvariantPolynomial::operator());
  py::class_<FormSpec>(m, "FormSpec")
      .def_property_readonly("poly", [](const FormSpec& fs) { return fs.poly; })
      .def_readonly("form_degree", &FormSpec::form_degree);
  m.def("form_polynomial", &form_polynomial, py::arg("label"), py::arg("algebra"));
  m.def("make_form", &make_form);
  m.def("trace_power", &trace_power);
  m.def("char_coeff", &char_coeff);
  m.def("pfaffian_poly", &pfaffian_poly);

  m.def("polarize_eval", &polarize_eval);
  m.def("form_eval", &form_eval);
  m.def("sphere_integrand", &sphere_integrand);
  m.def("q_poly_eval", &q_poly_eval);
  m.def(
      "sphere_average",
      [](const std::vector<Eigen::MatrixXd>& actions, std::uint64_t seed, int count) {
        const SphereStats st = sphere_average(actions, Sampler{seed, count});
        py::dict d;
        d["mean"] = st.mean;
        d["stderr"] = st.stderr_;
        d["min"] = st.min_observed;
        d["max"] = st.max_observed;
        d["count"] = st.count;
        d["seed"] = st.seed;
        return d;
      },
      py::arg("actions"), py::arg("seed") = 0, py::arg("count") = 100000);
  m.def("invariance_check", &invariance_check, py::arg("form"), py::arg("algebra"),
        py::arg("trials"), py::arg("seed") = 11);

  // ---------------------------------------------------------------- grassmann
  py::class_<GrassmannFrame>(m, "GrassmannFrame")
      .def_readonly("frame", &GrassmannFrame::frame)
      .def_readonly("complement", &GrassmannFrame::complement);
  py::class_<FrameEvaluator>(m, "FrameEvaluator").def_readonly("degree", &FrameEvaluator::degree);

  m.def("exact_form_evaluator", &exact_form_evaluator, py::keep_alive<0, 1>());
  m.def(
      "mc_form_evaluator",
      [](std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> action, int degree,
         std::uint64_t seed, int count) {
        return mc_form_evaluator(std::move(action), degree, Sampler{seed, count});
      },
      py::arg("action"), py::arg("degree"), py::arg("seed") = 0, py::arg("count") = 100000);
  m.def("frame_from_basis", &frame_from_basis);
  m.def("random_frame", &random_frame);
  m.def("f_value", &f_value);
  m.def("retract", [](const GrassmannFrame& fr, const Eigen::MatrixXd& coeffs, double t) {
    TangentDirection dir;
    dir.coeffs = coeffs;
    return retract(fr, dir, t);
  });
  m.def(
      "grad_fd",
      [](const FrameEvaluator& ev, const GrassmannFrame& fr, double h) {
        const Gradient g = grad_fd(ev, fr, h);
        return py::make_tuple(g.direction.coeffs, g.norm);
      },
      py::arg("evaluator"), py::arg("frame"), py::arg("h") = 1e-4);
  m.def(
      "hessian_probe",
      [](const FrameEvaluator& ev, const GrassmannFrame& fr, int directions, double h,
         double grad_tol, std::uint64_t seed) {
        const HessianProbe p = hessian_probe(ev, fr, directions, h, grad_tol, seed);
        py::dict d;
        d["negative"] = p.negative;
        d["zero"] = p.zero;
        d["positive"] = p.positive;
        return d;
      },
      py::arg("evaluator"), py::arg("frame"), py::arg("directions"), py::arg("h") = 1e-3,
      py::arg("grad_tol") = 1e-6, py::arg("seed") = 5);
  m.def(
      "ascent",
      [](const FrameEvaluator& ev, GrassmannFrame fr, double step, int iters, double h) {
        const auto trace = ascent(ev, fr, step, iters, h);
        py::list out;
        for (const auto& s : trace) out.append(py::make_tuple(s.value, s.grad_norm));
        return py::make_tuple(out, fr);
      },
      py::arg("evaluator"), py::arg("frame"), py::arg("step"), py::arg("iters"),
      py::arg("h") = 1e-4);

  // ---------------------------------------------------------------- resultants
  m.def("sylvester_resultant", [](const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) {
    return sylvester_resultant(poly_from(p), poly_from(q));
  });
  m.def("j_transform",
        [](const Eigen::VectorXcd& p) { return j_transform(poly_from(p)).coeffs; });
  m.def("poly_from_weight_vector",
        [](const Eigen::VectorXcd& v) { return poly_from_weight_vector(v).coeffs; });
  m.def("weight_vector_from_poly",
        [](const Eigen::VectorXcd& c) { return weight_vector_from_poly(poly_from(c)); });
  m.def("sigma_apply", &sigma_apply);
  m.def("vector_to_polys", [](const Eigen::VectorXcd& v) {
    const PolyPair pp = vector_to_polys(v);
    return py::make_tuple(pp.first.coeffs, pp.second.coeffs);
  });
  m.def(
      "proportionality_suite",
      [](const std::string& case_id, int samples, std::uint64_t seed) {
        const ProportionalityResult r = proportionality_suite(case_id, samples, seed);
        py::dict d;
        d["ratio_mean"] = r.ratio_mean;
        d["ratio_rel_spread"] = r.ratio_rel_spread;
        d["zeros_consistent"] = r.zeros_consistent;
        d["accepted"] = r.accepted;
        return d;
      },
      py::arg("case_id"), py::arg("samples") = 1000, py::arg("seed") = 0);
  m.def(
      "sign_suite",
      [](const std::string& case_id, int samples, std::uint64_t seed) {
        const SignSuiteResult r = sign_suite(case_id, samples, seed);
        py::dict d;
        d["min"] = r.min_value;
        d["max"] = r.max_value;
        d["violations"] = r.violations;
        d["samples"] = r.samples;
        d["nonnegative_expected"] = r.nonnegative_expected;
        return d;
      },
      py::arg("case_id"), py::arg("samples") = 100000, py::arg("seed") = 0);

  // ---------------------------------------------------------------- report
  m.def("run_decompose", [](const std::string& f, int param) {
    const DecomposeOutcome o = run_decompose(family_from(f), param);
    py::list rows;
    for (const auto& r : o.rows) rows.append(report_to_dict(r));
    return py::make_tuple(rows, o.pass);
  });
  m.def(
      "run_critical",
      [](const std::string& f, int param, int component, const std::string& form, double h,
         double tol) {
        return report_to_dict(run_critical(family_from(f), param, component, form, h, tol));
      },
      py::arg("family"), py::arg("param"), py::arg("component"), py::arg("form"),
      py::arg("h") = 1e-4, py::arg("tol") = 1e-6);
  m.def(
      "run_average",
      [](const std::string& group, int param, int samples, std::uint64_t seed) {
        return report_to_dict(run_average(group, param, samples, seed));
      },
      py::arg("group"), py::arg("param") = 0, py::arg("samples") = 100000, py::arg("seed") = 0);
  m.def(
      "run_resultant_check",
      [](const std::string& case_id, int samples, std::uint64_t seed) {
        py::list rows;
        for (const auto& r : run_resultant_check(case_id, samples, seed))
          rows.append(report_to_dict(r));
        return rows;
      },
      py::arg("case_id"), py::arg("samples") = 1000, py::arg("seed") = 0);
  m.def(
      "report_json",
      [](int samples, std::uint64_t seed, double h, double tol, int jobs) {
        ReportOptions opts;
        opts.samples = samples;
        opts.seed = seed;
        opts.h = h;
        opts.tol = tol;
        opts.jobs = jobs;
        return to_json(run_full_report(opts));
      },
      py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("h") = 1e-4,
      py::arg("tol") = 1e-6, py::arg("jobs") = 1);

  m.attr("__version__") = "0.1.0";
}
