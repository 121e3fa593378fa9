// sigmagreen command-line front end.
#include "sigmagreen/barrier.hpp"
#include "sigmagreen/cone.hpp"
#include "sigmagreen/conformal.hpp"
#include "sigmagreen/greens.hpp"
#include "sigmagreen/io.hpp"
#include "sigmagreen/matrixhull.hpp"
#include "sigmagreen/symfunc.hpp"
#include "sigmagreen/tensorid.hpp"
#include "sigmagreen/volcomp.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sigmagreen;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitUsage = 64;

struct Result {
  Json report;
  std::string csv;
  std::string summary;
  int status = 0;
};

// Options are registered here so every artifact can echo its effective configuration.
class Registry {
 public:
  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& name, T& var, const std::string& desc) {
    items_.push_back({app, name, [&var] { return Json(var); }});
    return app->add_option(name, var, desc)->capture_default_str();
  }
  CLI::Option* flag(CLI::App* app, const std::string& name, bool& var, const std::string& desc) {
    items_.push_back({app, name, [&var] { return Json(var); }});
    return app->add_flag(name, var, desc);
  }
  Json echo(const CLI::App* app) const {
    Json out = Json::object();
    for (const auto& it : items_)
      if (it.app == app) out[key(it.name)] = it.get();
    return out;
  }

 private:
  static std::string key(const std::string& name) {
    std::string k = name.substr(name.find_first_not_of('-'));
    std::replace(k.begin(), k.end(), '-', '_');
    return k;
  }
  struct Item {
    const CLI::App* app;
    std::string name;
    std::function<Json()> get;
  };
  std::vector<Item> items_;
};

std::vector<double> parse_grid(const std::string& text, bool linear) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw ArgumentError("grid must be start:stop:count, got '" + text + "'");
  try {
    const double a = std::stod(parts[0]), b = std::stod(parts[1]);
    const int n = std::stoi(parts[2]);
    return linear ? linear_grid(a, b, n) : log_grid(a, b, n);
  } catch (const std::logic_error&) {
    throw ArgumentError("grid must be start:stop:count, got '" + text + "'");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    try {
      out.push_back(std::stod(p));
    } catch (const std::logic_error&) {
      throw ArgumentError("expected a comma-separated list of numbers, got '" + text + "'");
    }
  }
  if (out.empty()) throw ArgumentError("empty number list");
  return out;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct ConeOpts {
  std::string family = "gamma_k";
  int n = 5;
  int k = 2;
  double radius = 0;  // 0: the Gamma_2-equivalent ball
  double open_up = 1;
  std::string json;

  Cone build() const {
    if (!json.empty()) return cone_from_json(Json::parse(json));
    Json j{{"family", family}, {"n", n}};
    if (family == "gamma_k") j["k"] = k;
    if (family == "custom") {
      j["slice"] = "ball";
      if (radius > 0) j["radius"] = radius;
    }
    if (open_up != 1) j["open_up"] = open_up;
    return cone_from_json(j);
  }
};

void add_cone_options(Registry& reg, CLI::App* app, ConeOpts& o) {
  reg.add(app, "--family", o.family, "cone family: gamma_k or custom")->check(CLI::IsMember({"gamma_k", "custom"}));
  reg.add(app, "--n", o.n, "dimension");
  reg.add(app, "--k", o.k, "order k for gamma_k");
  reg.add(app, "--radius", o.radius, "ball radius for a custom cone (0: Gamma_2 ball)");
  reg.add(app, "--open-up", o.open_up, "opening parameter t in [1/2, 1]");
  reg.add(app, "--cone-json", o.json, "cone as a JSON record (overrides the other cone flags)");
}

DefiningFunction make_f(const Cone& cone, const std::string& kind, double alpha) {
  if (kind == "root") return DefiningFunction::sigma_root(cone);
  return DefiningFunction::build(cone, alpha > 0 ? std::optional<double>(alpha) : std::nullopt);
}

std::string csv_path(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.rfind('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return out.substr(0, dot) + ".csv";
  return out + ".csv";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigmagreen: cone calculus, conformal Schouten tensors and radial Green's functions"};
  app.set_version_flag("--version", std::string(SIGMAGREEN_VERSION));
  app.set_config("--config", "", "TOML/INI config file; sections per subcommand, flags override");
  app.require_subcommand(1);

  Registry reg;
  std::string out_path;
  std::uint64_t seed = 0;
  bool linear = false;
  app.add_option("--out", out_path, "write the JSON report here (CSV alongside); summary goes to stdout");
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_flag("--linear", linear, "linear instead of logarithmic grid spacing");

  std::function<Result()> action;
  const CLI::App* active = nullptr;
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->configurable();
    g->fallthrough();
    return g;
  };
  auto command = [&](CLI::App* g, const std::string& name, const std::string& desc) {
    CLI::App* c = g->add_subcommand(name, desc);
    c->configurable();
    c->fallthrough();
    return c;
  };
  auto bind = [&](CLI::App* c, std::function<Result()> fn) {
    c->callback([&, c, fn] {
      active = c;
      action = fn;
    });
  };

  // cone
  CLI::App* cone_g = group("cone", "cone membership and mu_plus");
  ConeOpts cone_o;
  std::string lambda_s = "1,1,1,1,1";
  double tol = 1e-12;
  {
    CLI::App* info = command(cone_g, "info", "describe a cone and compute mu_plus");
    add_cone_options(reg, info, cone_o);
    bind(info, [&] {
      const Cone cone = cone_o.build();
      const double mu = mu_plus(cone);
      Eigen::VectorXd e1 = Eigen::VectorXd::Zero(cone.dim());
      e1[0] = 1;
      Result r;
      r.report = Json{{"cone", cone.describe()},
                      {"n", cone.dim()},
                      {"mu_plus", mu},
                      {"green_threshold_met", mu > 1},
                      {"e1_verdict", to_string(cone.contains(EigenvalueVector(e1), 1e-12).verdict)}};
      if (cone.k()) r.report["mu_plus_closed_form"] = double(cone.dim() - *cone.k()) / *cone.k();
      r.summary = cone.describe() + ": mu_plus = " + fmt(mu);
      return r;
    });
    CLI::App* check = command(cone_g, "check", "classify an eigenvalue vector");
    add_cone_options(reg, check, cone_o);
    reg.add(check, "--lambda", lambda_s, "comma-separated eigenvalues");
    reg.add(check, "--tol", tol, "scale-normalized tolerance");
    bind(check, [&] {
      const Cone cone = cone_o.build();
      const ConeMembership m = cone.contains(EigenvalueVector(to_vector(parse_list(lambda_s))), tol);
      Result r;
      r.report = to_json(m);
      r.report["cone"] = cone.describe();
      r.summary = to_string(m.verdict) + " (margin " + fmt(m.signed_margin) + ")";
      return r;
    });
  }

  // defining
  CLI::App* def_g = group("defining", "concave defining functions");
  std::string f_kind = "slice";
  double alpha = 0;
  int samples = 1000;
  {
    CLI::App* build = command(def_g, "build", "construct f and measure its ellipticity ratio");
    add_cone_options(reg, build, cone_o);
    reg.add(build, "--kind", f_kind, "slice (defining-function construction) or root ((sigma_k/C)^(1/k))")
        ->check(CLI::IsMember({"slice", "root"}));
    reg.add(build, "--alpha", alpha, "exponent override in (0,1]; 0 selects the default");
    reg.add(build, "--samples", samples, "interior samples for the ellipticity ratio");
    bind(build, [&] {
      const DefiningFunction f = make_f(cone_o.build(), f_kind, alpha);
      const double nu = ellipticity_ratio(f, samples, seed);
      Result r;
      r.report = Json{{"f", f.describe()},
                      {"alpha", f.alpha()},
                      {"f_at_e", f.value(EigenvalueVector::constant(f.dim(), 1.0))},
                      {"ellipticity_ratio", nu},
                      {"samples", samples}};
      r.summary = f.describe() + ": ellipticity ratio " + fmt(nu);
      return r;
    });
    CLI::App* probe = command(def_g, "probe", "evaluate f and its gradient at a point");
    add_cone_options(reg, probe, cone_o);
    reg.add(probe, "--kind", f_kind, "slice or root")->check(CLI::IsMember({"slice", "root"}));
    reg.add(probe, "--alpha", alpha, "exponent override in (0,1]; 0 selects the default");
    reg.add(probe, "--lambda", lambda_s, "comma-separated eigenvalues");
    bind(probe, [&] {
      const DefiningFunction f = make_f(cone_o.build(), f_kind, alpha);
      const EigenvalueVector lam(to_vector(parse_list(lambda_s)));
      const double v = f.value(lam);
      Result r;
      r.report = Json{{"f", f.describe()}, {"value", v}};
      const ConeMembership m = f.cone().contains(lam, std::numeric_limits<double>::min());
      if (m.verdict == Verdict::Interior) {
        r.report["gradient"] = vector_to_json(f.gradient(lam));
        r.report["ellipticity"] = ellipticity_at(f, lam);
      } else {
        r.report["gradient"] = nullptr;
        r.report["ellipticity"] = nullptr;
      }
      r.summary = "f = " + fmt(v);
      return r;
    });
  }

  // barrier
  CLI::App* bar_g = group("barrier", "explicit super-solutions");
  SuperSolutionParams sp;
  ConeSuperHarParams hp;
  std::string grid_s = "1e-3:0.2:50";
  std::string a_search;
  std::string lemma = "supersolution";
  {
    CLI::App* check = command(bar_g, "check", "verify cone membership of a barrier on a radial grid");
    add_cone_options(reg, check, cone_o);
    reg.add(check, "--lemma", lemma, "supersolution or conesuperhar")->check(CLI::IsMember({"supersolution", "conesuperhar"}));
    reg.add(check, "--mu", sp.mu, "exponent mu");
    reg.add(check, "--delta", sp.delta, "exponent delta");
    reg.add(check, "--a", sp.a, "shift a (supersolution) or coefficient a (conesuperhar)");
    reg.add(check, "--r1", sp.r1, "gluing radius");
    reg.add(check, "--q", hp.q, "exponent q (conesuperhar)");
    reg.add(check, "--b", hp.b, "coefficient b (conesuperhar)");
    reg.add(check, "--grid", grid_s, "radial grid start:stop:count");
    reg.add(check, "--a-search", a_search, "comma-separated a values; reports the first all-Interior one");
    bind(check, [&] {
      const Cone cone = cone_o.build();
      const auto grid = parse_grid(grid_s, linear);
      Result r;
      if (lemma == "conesuperhar") {
        hp.n = cone.dim();
        hp.a = sp.a;
        const BarrierReport rep = verify_conesuperhar(hp, DefiningFunction::build(cone), grid);
        r.report = to_json(rep);
        r.summary = "conesuperhar: ratio min " + fmt(rep.lower_bound_ratio_min) + ", max " + fmt(rep.lower_bound_ratio_max);
        return r;
      }
      sp.n = cone.dim();
      std::vector<double> candidates = a_search.empty() ? std::vector<double>{sp.a} : parse_list(a_search);
      Json tried = Json::array();
      BarrierReport rep;
      double chosen = std::nan("");
      for (double a : candidates) {
        SuperSolutionParams p = sp;
        p.a = a;
        rep = verify_supersolution(p, cone, grid);
        tried.push_back(Json{{"a", a}, {"all_interior", rep.all_interior}, {"min_margin", rep.min_margin}});
        if (rep.all_interior) {
          chosen = a;
          break;
        }
      }
      r.report = to_json(rep);
      r.report["a_tried"] = tried;
      r.report["a_chosen"] = chosen;
      r.summary = std::isnan(chosen) ? "no all-Interior configuration found"
                                     : "all Interior at a = " + fmt(chosen) + ", min margin " + fmt(rep.min_margin);
      return r;
    });
    CLI::App* glue = command(bar_g, "glue", "sample the glued barrier");
    reg.add(glue, "--n", sp.n, "dimension");
    reg.add(glue, "--mu", sp.mu, "exponent mu");
    reg.add(glue, "--delta", sp.delta, "exponent delta");
    reg.add(glue, "--a", sp.a, "shift a");
    reg.add(glue, "--r1", sp.r1, "gluing radius");
    reg.add(glue, "--grid", grid_s, "radial grid start:stop:count");
    bind(glue, [&] {
      const auto grid = parse_grid(grid_s, linear);
      std::vector<double> u, du, d2u;
      for (double rr : grid) {
        const RadialJet j = glue_barrier(sp, rr);
        u.push_back(j.u);
        du.push_back(j.du);
        d2u.push_back(j.d2u);
      }
      Result r;
      r.report = Json{{"points", grid.size()}, {"u_min", *std::min_element(u.begin(), u.end())},
                      {"u_max", *std::max_element(u.begin(), u.end())}};
      r.csv = format_csv({"r", "u", "du", "d2u"}, {grid, u, du, d2u});
      r.summary = "glued barrier sampled at " + std::to_string(grid.size()) + " radii";
      return r;
    });
  }

  // greens
  CLI::App* gr_g = group("greens", "radial Green's function machinery");
  ExactFamily fam;
  double eps = 1e-6, r_in = 0.05, r_out = 1.0, bc_in = 0, bc_out = 0, lam_scale = 1;
  int grid_size = 400, max_iter = 200, quad_points = 64;
  std::string ladder_s = "1e-1,1e-2,1e-3,1e-4";
  bool sandwich = false;
  double barrier_a = 100, barrier_r1 = 1.0;
  std::string g_kind = "root";
  auto add_bvp = [&](CLI::App* c) {
    add_cone_options(reg, c, cone_o);
    reg.add(c, "--kind", g_kind, "slice or root (default root)")->check(CLI::IsMember({"slice", "root"}));
    reg.add(c, "--r-in", r_in, "inner radius");
    reg.add(c, "--r-out", r_out, "outer radius");
    reg.add(c, "--bc-in", bc_in, "inner Dirichlet value (0: from the exact family)");
    reg.add(c, "--bc-out", bc_out, "outer Dirichlet value (0: from the exact family)");
    reg.add(c, "--m", fam.m, "exact-family exponent");
    reg.add(c, "--c1", fam.C1, "exact-family C1");
    reg.add(c, "--c2", fam.C2, "exact-family C2");
    reg.add(c, "--grid-size", grid_size, "solver grid points");
    reg.add(c, "--max-iter", max_iter, "Newton iteration limit");
  };
  auto make_bvp = [&] {
    const Cone cone = cone_o.build();
    fam.n = cone.dim();
    RadialBVP bvp{make_f(cone, g_kind, alpha), eps, r_in, r_out, bc_in > 0 ? bc_in : fam.value(r_in),
                  bc_out > 0 ? bc_out : fam.value(r_out), grid_size, max_iter};
    return bvp;
  };
  {
    CLI::App* exact = command(gr_g, "exact", "exact radial family and its boundary membership");
    add_cone_options(reg, exact, cone_o);
    reg.add(exact, "--m", fam.m, "exponent m");
    reg.add(exact, "--c1", fam.C1, "coefficient C1");
    reg.add(exact, "--c2", fam.C2, "coefficient C2");
    reg.add(exact, "--grid", grid_s, "radial grid start:stop:count");
    bind(exact, [&] {
      const Cone cone = cone_o.build();
      fam.n = cone.dim();
      const auto grid = parse_grid(grid_s, linear);
      const DegenerateReport rep = verify_degenerate(fam, cone, grid);
      std::vector<double> u;
      for (double rr : grid) u.push_back(fam.value(rr));
      Result r;
      r.report = to_json(rep);
      r.csv = format_csv({"r", "u"}, {grid, u});
      r.summary = std::string(rep.all_boundary ? "Boundary at every radius" : "NOT on the boundary everywhere") +
                  ", max residual " + fmt(rep.max_residual);
      return r;
    });
    CLI::App* bub = command(gr_g, "bubble", "normalized bubble U_lambda");
    add_cone_options(reg, bub, cone_o);
    reg.add(bub, "--kind", f_kind, "slice or root")->check(CLI::IsMember({"slice", "root"}));
    reg.add(bub, "--lam-scale", lam_scale, "bubble scale lambda");
    reg.add(bub, "--grid", grid_s, "radial grid start:stop:count");
    bind(bub, [&] {
      const Cone cone = cone_o.build();
      const DefiningFunction f = make_f(cone, f_kind, alpha);
      const Bubble b = Bubble::make(f);
      const auto grid = parse_grid(grid_s, linear);
      std::vector<double> u, fv;
      double dev = 0;
      for (double rr : grid) {
        const RadialJet j = b.jet(rr, lam_scale);
        u.push_back(j.u);
        fv.push_back(f.value(radial_eigenvalues(cone.dim(), j)));
        dev = std::max(dev, std::abs(fv.back() - 1));
      }
      Result r;
      r.report = Json{{"f", f.describe()}, {"kappa", b.kappa()}, {"c0", b.c0()}, {"max_abs_f_minus_1", dev}};
      r.csv = format_csv({"r", "u", "f"}, {grid, u, fv});
      r.summary = "kappa = " + fmt(b.kappa()) + ", max |f - 1| = " + fmt(dev);
      return r;
    });
    CLI::App* solve = command(gr_g, "solve", "solve f(lambda(A_{g_u})) = eps on an annulus");
    add_bvp(solve);
    reg.add(solve, "--eps", eps, "regularization level");
    bind(solve, [&] {
      const RadialBVP bvp = make_bvp();
      const SolverReport rep = solve_regularized(bvp);
      Result r;
      r.report = to_json(rep, out_path.empty() ? "" : csv_path(out_path));
      r.csv = format_csv({"r", "u"}, {rep.profile.r, rep.profile.values});
      r.summary = std::string(rep.converged ? "converged" : "NOT converged") + " in " +
                  std::to_string(rep.newton_iterations) + " iterations, residual " + fmt(rep.residual_max);
      r.status = rep.converged ? 0 : kExitNumeric;
      return r;
    });
    CLI::App* cont = command(gr_g, "continue", "continuation down an epsilon ladder");
    add_bvp(cont);
    reg.add(cont, "--ladder", ladder_s, "strictly decreasing comma-separated epsilons");
    reg.flag(cont, "--sandwich", sandwich, "check r^{2-n} multiple <= u <= glued barrier at the last level");
    reg.add(cont, "--barrier-a", barrier_a, "glued barrier shift a");
    reg.add(cont, "--barrier-r1", barrier_r1, "glued barrier radius r1");
    reg.add(cont, "--mu", sp.mu, "glued barrier exponent mu");
    reg.add(cont, "--delta", sp.delta, "glued barrier exponent delta");
    bind(cont, [&] {
      const RadialBVP bvp = make_bvp();
      const auto levels = continuation(bvp, parse_list(ladder_s), fam);
      Json lv = Json::array();
      bool all = true;
      for (const auto& l : levels) {
        Json j = to_json(l.report);
        j["sup_error_abs"] = *l.sup_error_abs;
        j["sup_error_rel"] = *l.sup_error_rel;
        lv.push_back(j);
        all = all && l.report.converged;
      }
      const SolverReport& last = levels.back().report;
      Result r;
      r.report = Json{{"levels", lv}, {"all_converged", all && levels.size() == parse_list(ladder_s).size()}};
      if (sandwich) {
        const int n = bvp.n();
        SuperSolutionParams p{n, sp.mu, sp.delta, barrier_a, barrier_r1};
        RadialProfile lower{last.profile.r, {}}, upper{last.profile.r, {}};
        const double c = std::pow(fam.C1, (n - 2) / fam.m);
        for (double rr : last.profile.r) {
          lower.values.push_back(c * std::pow(rr, 2 - n));
          upper.values.push_back(glue_barrier(p, rr).u);
        }
        r.report["sandwich"] = sandwich_check(last, lower, upper);
      }
      r.csv = format_csv({"r", "u"}, {last.profile.r, last.profile.values});
      r.summary = std::to_string(levels.size()) + " levels, final relative sup error " + fmt(*levels.back().sup_error_rel);
      r.status = r.report["all_converged"].get<bool>() ? 0 : kExitNumeric;
      return r;
    });
    CLI::App* mass = command(gr_g, "mass", "mass constant m_{n,k}");
    reg.add(mass, "--n", cone_o.n, "dimension");
    reg.add(mass, "--k", cone_o.k, "order k < n/2");
    reg.add(mass, "--quad-points", quad_points, "initial quadrature panels");
    bind(mass, [&] {
      const DefiningFunction f = DefiningFunction::sigma_root(Cone::gamma_k(cone_o.n, cone_o.k));
      const double m1 = mass_constant(cone_o.n, cone_o.k, f, quad_points);
      const double m2 = mass_constant(cone_o.n, cone_o.k, f, 2 * quad_points);
      Result r;
      r.report = Json{{"n", cone_o.n}, {"k", cone_o.k}, {"mass", m1}, {"mass_doubled", m2},
                      {"relative_change", std::abs(m2 - m1) / std::abs(m1)}, {"kappa", bubble_kappa(f)}};
      r.summary = "m = " + fmt(m1);
      return r;
    });
  }

  // bvn
  CLI::App* bvn_g = group("bvn", "Birkhoff-von Neumann tools");
  std::string input, input_b;
  {
    CLI::App* dec = command(bvn_g, "decompose", "decompose a doubly stochastic matrix");
    reg.add(dec, "--input", input, "JSON file: array of rows")->required();
    bind(dec, [&] {
      const Eigen::MatrixXd S = matrix_from_json(Json::parse(read_text_file(input)));
      const auto items = bvn_decompose(DoublyStochasticMatrix(S));
      const double err = (reconstruct(items, static_cast<int>(S.rows())) - S).cwiseAbs().maxCoeff();
      Result r;
      r.report = Json{{"items", to_json(items)}, {"reconstruction_error", err}};
      r.summary = std::to_string(items.size()) + " permutations, reconstruction error " + fmt(err);
      return r;
    });
    CLI::App* hull = command(bvn_g, "hullcheck", "midpoint eigenvalue hull check");
    reg.add(hull, "--a", input, "JSON file with the matrix A")->required();
    reg.add(hull, "--b", input_b, "JSON file with the matrix B")->required();
    bind(hull, [&] {
      const SymmetricMatrix A(matrix_from_json(Json::parse(read_text_file(input))));
      const SymmetricMatrix B(matrix_from_json(Json::parse(read_text_file(input_b))));
      const HullCheckResult res = midpoint_hull_check(A, B);
      Result r;
      r.report = to_json(res);
      r.summary = std::string(res.feasible ? "feasible" : "INFEASIBLE") + ", constructive residual " +
                  fmt(res.constructive_residual);
      return r;
    });
  }

  // tensorid
  CLI::App* ti_g = group("tensorid", "Newton-tensor identity checks");
  std::string field = "gaussian", x_s = "0.3,0.1,-0.2,0.4", hs_s = "1e-2,5e-3,2.5e-3", identity = "div";
  double h = 1e-3;
  int tn = 4, tk = 1;
  {
    auto add_field = [&](CLI::App* c) {
      reg.add(c, "--field", field, "catalog field: constant, gaussian, power_offset, exp_linear, affine, quadratic");
      reg.add(c, "--n", tn, "dimension");
      reg.add(c, "--x", x_s, "comma-separated evaluation point");
    };
    CLI::App* div = command(ti_g, "div", "divergence identity residual");
    add_field(div);
    reg.add(div, "--k", tk, "Newton tensor order");
    reg.add(div, "--step", h, "difference step");
    bind(div, [&] {
      const Eigen::VectorXd res = divergence_residual(field_by_name(field, tn), tk, to_vector(parse_list(x_s)), h);
      Result r;
      r.report = Json{{"residual", vector_to_json(res)}, {"residual_max", res.cwiseAbs().maxCoeff()}};
      r.summary = "max |R| = " + fmt(res.cwiseAbs().maxCoeff());
      return r;
    });
    CLI::App* curl = command(ti_g, "curl", "w-form commutator identity residual");
    add_field(curl);
    reg.add(curl, "--step", h, "difference step");
    bind(curl, [&] {
      const auto res = curl_residual(field_by_name(field, tn), to_vector(parse_list(x_s)), h);
      Json arr = Json::array();
      double m = 0;
      for (const auto& mat : res) {
        arr.push_back(matrix_to_json(mat));
        m = std::max(m, mat.cwiseAbs().maxCoeff());
      }
      Result r;
      r.report = Json{{"residual", arr}, {"residual_max", m}};
      r.summary = "max |R| = " + fmt(m);
      return r;
    });
    CLI::App* order = command(ti_g, "order", "convergence order over a step ladder");
    add_field(order);
    reg.add(order, "--identity", identity, "div or curl")->check(CLI::IsMember({"div", "curl"}));
    reg.add(order, "--k", tk, "Newton tensor order (div)");
    reg.add(order, "--hs", hs_s, "strictly decreasing comma-separated steps");
    bind(order, [&] {
      const ResidualReport rep = convergence_study(identity == "div" ? Identity::Divergence : Identity::Curl,
                                                   field_by_name(field, tn), tk, to_vector(parse_list(x_s)),
                                                   parse_list(hs_s));
      Result r;
      r.report = to_json(rep);
      r.summary = rep.exact ? "identity exact (order sentinel inf)" : "order " + fmt(rep.order);
      return r;
    });
  }

  // volcomp
  CLI::App* vc_g = group("volcomp", "inf-convolution and volume comparison");
  std::string function = "abs", metric = "sphere";
  double veps = 0.2, kcurv = 1, radius = 1;
  int vn = 3;
  {
    CLI::App* ic = command(vc_g, "infconv", "inf-convolution of a sampled function");
    reg.add(ic, "--function", function, "abs, sin, or a CSV file with columns x,f")->capture_default_str();
    reg.add(ic, "--grid", grid_s, "linear grid start:stop:count for built-in functions");
    reg.add(ic, "--eps", veps, "regularization parameter");
    bind(ic, [&] {
      SampledFunction f;
      if (function == "abs" || function == "sin") {
        f.grid = parse_grid(grid_s, true);
        for (double x : f.grid) f.values.push_back(function == "abs" ? std::abs(x) : std::sin(3 * x));
      } else {
        std::stringstream ss(read_text_file(function));
        std::string line;
        std::getline(ss, line);
        while (std::getline(ss, line)) {
          if (line.empty()) continue;
          const auto v = parse_list(line);
          if (v.size() < 2) throw ArgumentError("infconv CSV rows need x,f");
          f.grid.push_back(v[0]);
          f.values.push_back(v[1]);
        }
      }
      const InfConvolution ic_res = inf_convolution(f, veps);
      double gap = 0, above = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < f.size(); ++i) {
        gap = std::max(gap, std::abs(f.values[i] - ic_res.result.values[i]));
        above = std::max(above, ic_res.result.values[i] - f.values[i]);
      }
      Result r;
      r.report = Json{{"points", f.size()}, {"eps", veps}, {"sup_gap", gap}, {"below_f", above <= 0}};
      r.csv = format_csv({"x", "f", "f_eps", "argmin"}, {f.grid, f.values, ic_res.result.values, ic_res.argmin});
      r.summary = "sup |f - f_eps| = " + fmt(gap);
      return r;
    });
    CLI::App* ric = command(vc_g, "ricci", "Ricci eigenvalues of a radial conformal metric");
    reg.add(ric, "--metric", metric, "flat, sphere, cylinder or growth");
    reg.add(ric, "--n", vn, "dimension");
    reg.add(ric, "--r", radius, "radius");
    bind(ric, [&] {
      const EigenvalueVector e = ricci_conformal_radial(metric_by_name(metric, vn), radius);
      Result r;
      r.report = Json{{"radial", e[0]}, {"tangential", e[1]}, {"eigenvalues", vector_to_json(e.values())}};
      r.summary = "Ric eigenvalues: radial " + fmt(e[0]) + ", tangential " + fmt(e[1]);
      return r;
    });
    CLI::App* vol = command(vc_g, "volume", "space-form ball volume");
    reg.add(vol, "--n", vn, "dimension");
    reg.add(vol, "--kcurv", kcurv, "sectional curvature");
    reg.add(vol, "--r", radius, "radius");
    bind(vol, [&] {
      const double v = space_form_volume(vn, kcurv, radius);
      Result r;
      r.report = Json{{"volume", v}};
      r.summary = "v = " + fmt(v);
      return r;
    });
    CLI::App* ratio = command(vc_g, "ratio", "Bishop-Gromov ratio along a radial grid");
    reg.add(ratio, "--metric", metric, "flat, sphere, cylinder or growth");
    reg.add(ratio, "--n", vn, "dimension");
    reg.add(ratio, "--kcurv", kcurv, "curvature lower bound parameter");
    reg.add(ratio, "--grid", grid_s, "radial grid start:stop:count");
    bind(ratio, [&] {
      const BishopGromovReport rep = bishop_gromov_ratio(metric_by_name(metric, vn), kcurv, parse_grid(grid_s, linear));
      Result r;
      r.report = to_json(rep);
      r.csv = format_csv({"r", "ratio"}, {rep.r, rep.ratio});
      r.summary = "Bishop-Gromov ratio: " + rep.verdict;
      return r;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (!action) {
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    Result res = action();
    Json report{{"tool_version", SIGMAGREEN_VERSION},
                {"command", active->get_parent()->get_name() + " " + active->get_name()},
                {"config_echo", reg.echo(active)},
                {"seed", seed}};
    report["config_echo"]["linear"] = linear;
    for (auto it = res.report.begin(); it != res.report.end(); ++it) report[it.key()] = it.value();
    if (!out_path.empty()) {
      if (!res.csv.empty()) report["csv_path"] = csv_path(out_path);
      write_text_file(out_path, dump_json(report));
      if (!res.csv.empty()) write_text_file(csv_path(out_path), res.csv);
      std::cout << res.summary << '\n';
    } else {
      std::cout << dump_json(report);
      std::cerr << res.summary << '\n';
    }
    return res.status;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DecompositionError& e) {
    std::cerr << "decomposition failed: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << '\n';
    return kExitValidation;
  }
}
