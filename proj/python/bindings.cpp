#include "sigmagreen/barrier.hpp"
#include "sigmagreen/cone.hpp"
#include "sigmagreen/conformal.hpp"
#include "sigmagreen/greens.hpp"
#include "sigmagreen/io.hpp"
#include "sigmagreen/matrixhull.hpp"
#include "sigmagreen/symfunc.hpp"
#include "sigmagreen/tensorid.hpp"
#include "sigmagreen/volcomp.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sigmagreen;

namespace {

// Reports cross the boundary as plain dicts via the library's JSON form.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(dump_json(j, 0)); }

EigenvalueVector ev(const Eigen::VectorXd& v) { return EigenvalueVector(v); }

RadialBVP make_bvp(const DefiningFunction& f, double eps, double r_in, double r_out, double bc_in, double bc_out,
                   int grid_size, int max_iterations) {
  return RadialBVP{f, eps, r_in, r_out, bc_in, bc_out, grid_size, max_iterations};
}

}  // namespace

PYBIND11_MODULE(_sigmagreen, m) {
  m.doc() = "sigmagreen core bindings";
  m.attr("__version__") = SIGMAGREEN_VERSION;

  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);
  py::register_exception<DecompositionError>(m, "DecompositionError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("sigma", [](int k, const Eigen::VectorXd& lam) { return sigma(k, ev(lam)); }, py::arg("k"), py::arg("lam"));
  m.def("sigma_all", [](const Eigen::VectorXd& lam) { return sigma_all(ev(lam)); }, py::arg("lam"));
  m.def("newton_tensor", [](int k, const Eigen::MatrixXd& A) { return newton_tensor(k, SymmetricMatrix(A)).matrix(); },
        py::arg("k"), py::arg("A"));

  py::class_<Cone>(m, "Cone")
      .def_static("gamma_k", &Cone::gamma_k, py::arg("n"), py::arg("k"))
      .def_static("ball", [](int n, double radius) { return Cone::custom(n, ball_slice(n, radius)); }, py::arg("n"),
                  py::arg("radius"))
      .def("open_up", &Cone::open_up, py::arg("t"))
      .def_property_readonly("dim", &Cone::dim)
      .def_property_readonly("k", &Cone::k)
      .def("describe", &Cone::describe)
      .def(
          "contains",
          [](const Cone& c, const Eigen::VectorXd& lam, double tol) {
            const ConeMembership r = c.contains(ev(lam), tol);
            return py::make_tuple(to_string(r.verdict), r.signed_margin);
          },
          py::arg("lam"), py::arg("tol") = 1e-12)
      .def("__repr__", &Cone::describe);

  m.def("mu_plus", &mu_plus, py::arg("cone"), py::arg("tol") = 1e-13);

  py::class_<DefiningFunction>(m, "DefiningFunction")
      .def_static("build", &DefiningFunction::build, py::arg("cone"), py::arg("alpha") = py::none())
      .def_static("sigma_root", &DefiningFunction::sigma_root, py::arg("cone"), py::arg("normalized") = true)
      .def_property_readonly("alpha", &DefiningFunction::alpha)
      .def_property_readonly("cone", &DefiningFunction::cone)
      .def("describe", &DefiningFunction::describe)
      .def("value", [](const DefiningFunction& f, const Eigen::VectorXd& lam) { return f.value(ev(lam)); })
      .def("gradient", [](const DefiningFunction& f, const Eigen::VectorXd& lam) { return f.gradient(ev(lam)); })
      .def("ellipticity_ratio", &ellipticity_ratio, py::arg("samples") = 1000, py::arg("seed") = 0);

  m.def("eigen_wrt",
        [](const Eigen::MatrixXd& A, const Eigen::MatrixXd& g) {
          return eigen_wrt(SymmetricMatrix(A), SymmetricMatrix(g)).values();
        },
        py::arg("A"), py::arg("metric"));
  m.def("radial_chi",
        [](int n, double r, double u, double du, double d2u) {
          const ChiPair c = radial_chi(n, RadialJet{r, u, du, d2u});
          return py::make_tuple(c.chi1, c.chi2);
        },
        py::arg("n"), py::arg("r"), py::arg("u"), py::arg("du"), py::arg("d2u"));
  m.def("radial_eigenvalues",
        [](int n, double r, double u, double du, double d2u) {
          return radial_eigenvalues(n, RadialJet{r, u, du, d2u}).values();
        },
        py::arg("n"), py::arg("r"), py::arg("u"), py::arg("du"), py::arg("d2u"));

  m.def("verify_supersolution",
        [](const Cone& cone, double mu, double delta, double a, double r1, const std::vector<double>& grid) {
          return to_py(to_json(verify_supersolution({cone.dim(), mu, delta, a, r1}, cone, grid)));
        },
        py::arg("cone"), py::arg("mu"), py::arg("delta"), py::arg("a"), py::arg("r1"), py::arg("grid"));

  m.def("exact_family_value", [](int n, double mm, double c1, double c2, double r) { return ExactFamily{n, mm, c1, c2}.value(r); },
        py::arg("n"), py::arg("m"), py::arg("c1"), py::arg("c2"), py::arg("r"));
  m.def("verify_degenerate",
        [](const Cone& cone, double mm, double c1, double c2, const std::vector<double>& grid) {
          return to_py(to_json(verify_degenerate({cone.dim(), mm, c1, c2}, cone, grid)));
        },
        py::arg("cone"), py::arg("m"), py::arg("c1"), py::arg("c2"), py::arg("grid"));
  m.def("bubble_kappa", &bubble_kappa, py::arg("f"));
  m.def("mass_constant", &mass_constant, py::arg("n"), py::arg("k"), py::arg("f"), py::arg("quad_points") = 64);

  m.def(
      "solve_regularized",
      [](const DefiningFunction& f, double eps, double r_in, double r_out, double bc_in, double bc_out, int grid_size,
         int max_iterations) {
        const SolverReport rep = solve_regularized(make_bvp(f, eps, r_in, r_out, bc_in, bc_out, grid_size, max_iterations));
        py::dict d = to_py(to_json(rep));
        d["r"] = rep.profile.r;
        d["u"] = rep.profile.values;
        return d;
      },
      py::arg("f"), py::arg("eps"), py::arg("r_in"), py::arg("r_out"), py::arg("bc_in"), py::arg("bc_out"),
      py::arg("grid_size") = 400, py::arg("max_iterations") = 200);
  m.def(
      "continuation",
      [](const DefiningFunction& f, const std::vector<double>& ladder, double r_in, double r_out, double mm, double c1,
         double c2, int grid_size) {
        const ExactFamily fam{f.dim(), mm, c1, c2};
        const auto levels = continuation(make_bvp(f, ladder.front(), r_in, r_out, fam.value(r_in), fam.value(r_out),
                                                  grid_size, 200),
                                         ladder, fam);
        py::list out;
        for (const auto& l : levels) {
          py::dict d = to_py(to_json(l.report));
          d["sup_error_rel"] = *l.sup_error_rel;
          d["sup_error_abs"] = *l.sup_error_abs;
          d["r"] = l.report.profile.r;
          d["u"] = l.report.profile.values;
          out.append(d);
        }
        return out;
      },
      py::arg("f"), py::arg("ladder"), py::arg("r_in"), py::arg("r_out"), py::arg("m"), py::arg("c1"), py::arg("c2"),
      py::arg("grid_size") = 400);

  m.def("bvn_decompose",
        [](const Eigen::MatrixXd& S) {
          py::list out;
          for (const auto& it : bvn_decompose(DoublyStochasticMatrix(S))) out.append(py::make_tuple(it.weight, it.perm));
          return out;
        },
        py::arg("S"));
  m.def("midpoint_hull_check",
        [](const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
          return to_py(to_json(midpoint_hull_check(SymmetricMatrix(A), SymmetricMatrix(B))));
        },
        py::arg("A"), py::arg("B"));

  m.def("divergence_residual",
        [](const std::string& field, int n, int k, const Eigen::VectorXd& x, double h) {
          return divergence_residual(field_by_name(field, n), k, x, h);
        },
        py::arg("field"), py::arg("n"), py::arg("k"), py::arg("x"), py::arg("h"));
  m.def("convergence_study",
        [](const std::string& identity, const std::string& field, int n, int k, const Eigen::VectorXd& x,
           const std::vector<double>& hs) {
          if (identity != "div" && identity != "curl") throw ArgumentError("identity must be 'div' or 'curl'");
          return to_py(to_json(convergence_study(identity == "div" ? Identity::Divergence : Identity::Curl,
                                                 field_by_name(field, n), k, x, hs)));
        },
        py::arg("identity"), py::arg("field"), py::arg("n"), py::arg("k"), py::arg("x"), py::arg("hs"));

  m.def("inf_convolution",
        [](const std::vector<double>& grid, const std::vector<double>& values, double eps) {
          const InfConvolution r = inf_convolution(SampledFunction{grid, values}, eps);
          return py::make_tuple(r.result.values, r.argmin);
        },
        py::arg("grid"), py::arg("values"), py::arg("eps"));
  m.def("space_form_volume", &space_form_volume, py::arg("n"), py::arg("kcurv"), py::arg("r"));
  m.def("bishop_gromov_ratio",
        [](const std::string& metric, int n, double kcurv, const std::vector<double>& grid) {
          return to_py(to_json(bishop_gromov_ratio(metric_by_name(metric, n), kcurv, grid)));
        },
        py::arg("metric"), py::arg("n"), py::arg("kcurv"), py::arg("grid"));
}
