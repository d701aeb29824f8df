// lwsm: construct rotational surfaces in Lorentz-Minkowski 3-space from
// free-elastica profile curves, verify sigma-model / Willmore criticality,
// run the gluing constructor, and check the Gauss-Bonnet identity.
//
// Exit codes: 0 pass, 1 usage error, 2 verification fail, 3 numeric
// degeneracy.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <random>

#include "lw/catalog.hpp"
#include "lw/expr.hpp"
#include "lw/gluing.hpp"
#include "lw/verify.hpp"

using namespace lw;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitDegenerate = 3;

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  write_text_file(tmp, content);
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move output into place: " + path);
}

HalfPlaneModel parse_model(const std::string& name, const std::string& half) {
  HalfPlaneModel m;
  if (name == "ads-a1") m.kind = ModelKind::AdS_A1;
  else if (name == "ds-r") m.kind = ModelKind::DeSitter_R;
  else if (name == "hyp-q") m.kind = ModelKind::Hyperbolic_Q;
  else if (name == "ads-a3") m.kind = ModelKind::AdS_A3;
  else throw CLI::ValidationError("--model", "unknown model " + name);
  m.sign_half = (half == "-") ? HalfSign::Minus : HalfSign::Plus;
  return m;
}

void default_start(const HalfPlaneModel& m, int eps1, Vec2& pos, Vec2& tan) {
  Real h = m.half();
  pos = {0, h};
  switch (m.kind) {
    case ModelKind::AdS_A1: tan = (eps1 < 0) ? Vec2{1, 0} : Vec2{0, h}; break;
    case ModelKind::DeSitter_R: tan = (eps1 > 0) ? Vec2{1, 0} : Vec2{0, h}; break;
    case ModelKind::Hyperbolic_Q: tan = {1, 0}; break;
    default: tan = (eps1 < 0) ? Vec2{1, h} : Vec2{1, -h}; break;
  }
}

Vec2 unit_tangent(const HalfPlaneModel& m, const Vec2& pos, Vec2 tan) {
  Real q = m.dot(tan, tan, pos[1]);
  if (q == 0) throw std::domain_error("null start tangent");
  return {tan[0] / std::sqrt(std::abs(q)), tan[1] / std::sqrt(std::abs(q))};
}

struct ElasticaArgs {
  std::string family = "cn";
  std::string model = "ads-a1";
  std::string half = "+";
  Real C = 1.0, a0 = 0.0;
  int eps1 = 0;  // 0: default per model row
  int eps2 = 9;  // 9: derive from model and eps1
  Real w_lo = -0.5, w_hi = 0.5;
  Real step = 1e-3;
  std::vector<Real> start;  // x y tx ty (optional)
};

void add_elastica_options(CLI::App* cmd, ElasticaArgs& a) {
  cmd->add_option("--family", a.family, "geodesic | cn | const")
      ->check(CLI::IsMember({"geodesic", "cn", "const"}));
  cmd->add_option("--model", a.model, "ads-a1 | ds-r | hyp-q | ads-a3")
      ->check(CLI::IsMember({"ads-a1", "ds-r", "hyp-q", "ads-a3"}));
  cmd->add_option("--half", a.half, "+ | - (half-plane)")->check(CLI::IsMember({"+", "-"}));
  cmd->add_option("--C", a.C, "cn family amplitude");
  cmd->add_option("--a0", a.a0, "arclength offset");
  cmd->add_option("--eps1", a.eps1, "tangent causal sign (+1/-1)");
  cmd->add_option("--eps2", a.eps2, "equation sign (-1/0/+1; default per model)");
  cmd->add_option("--wlo", a.w_lo, "window lower end");
  cmd->add_option("--whi", a.w_hi, "window upper end");
  cmd->add_option("--step", a.step, "arclength step");
  cmd->add_option("--start", a.start, "start as x y tx ty")->expected(4);
}

ElasticaProfile build_profile(const ElasticaArgs& a) {
  HalfPlaneModel m = parse_model(a.model, a.half);
  int eps1 = a.eps1;
  if (eps1 == 0)
    eps1 = (m.kind == ModelKind::DeSitter_R || m.kind == ModelKind::Hyperbolic_Q) ? 1 : -1;
  ElasticaProfile p;
  p.model = m;
  p.eps1 = eps1;
  p.eps2 = (a.eps2 == 9) ? ElasticaProfile::default_eps2(m, eps1) : a.eps2;
  p.C = a.C;
  p.a0 = a.a0;
  if (a.family == "geodesic") p.family = ElasticaFamily::Geodesic;
  else if (a.family == "const") p.family = ElasticaFamily::ConstantCritical;
  else p.family = ElasticaFamily::CnFamily;
  p.validate();
  return p;
}

ProfileCurve trace_profile(const ElasticaProfile& p, const ElasticaArgs& a) {
  Vec2 pos, tan;
  if (a.start.size() == 4) {
    pos = {a.start[0], a.start[1]};
    tan = {a.start[2], a.start[3]};
  } else {
    default_start(p.model, p.eps1, pos, tan);
  }
  tan = unit_tangent(p.model, pos, tan);
  return integrate_profile(p, pos, tan, a.w_lo, a.w_hi, a.step);
}

std::string profile_csv(const ProfileCurve& curve) {
  CsvWriter csv({"s", "x", "y", "Tx", "Ty", "kappa"});
  for (const auto& s : curve.samples)
    csv.row({s.s, s.pos[0], s.pos[1], s.tan[0], s.tan[1], s.kappa});
  return csv.str();
}

int cmd_elastica(const ElasticaArgs& a, const std::string& out_csv,
                 const std::string& out_json, Real tol, bool allow_poles) {
  ElasticaProfile p = build_profile(a);
  ExcludedSet ex = excluded_domain(p, a.w_lo, a.w_hi);
  if (!ex.poles.empty() && !allow_poles) {
    std::fprintf(stderr,
                 "error: %zu curvature pole(s) inside the window (first at s=%s); "
                 "pass --allow-poles to trace between them\n",
                 ex.poles.size(), format_real(ex.poles.front()).c_str());
    return kExitVerification;
  }
  ProfileCurve curve = trace_profile(p, a);
  Real resid = 0;
  for (int i = 0; i < 50; ++i) {
    Real s = a.w_lo + (a.w_hi - a.w_lo) * i / 49.0;
    try {
      resid = std::max(resid, std::abs(el_residual(p, s)));
    } catch (const PoleError&) {
      // sampled onto an excluded abscissa; skip
    }
  }
  Json j = Json::object();
  j.set("family", a.family)
      .set("model", p.model.name())
      .set("half", a.half)
      .set("C", p.C)
      .set("a0", p.a0)
      .set("eps1", static_cast<Real>(p.eps1))
      .set("eps2", static_cast<Real>(p.eps2))
      .set("window", Json::array({a.w_lo, a.w_hi}))
      .set("samples", static_cast<Real>(curve.samples.size()))
      .set("truncated", curve.truncated)
      .set("unit_speed_defect", unit_speed_defect(curve))
      .set("el_residual_max", resid)
      .set("total_squared_curvature", total_squared_curvature(curve))
      .set("excluded", Json::array(ex.poles))
      .set("pole_spacing", ex.spacing);
  if (!out_csv.empty()) write_atomic(out_csv, profile_csv(curve));
  if (!out_json.empty()) write_atomic(out_json, j.dump() + "\n");
  std::printf("%s\n", j.dump().c_str());
  return resid < tol ? kExitPass : kExitVerification;
}

struct SurfaceArgs {
  std::string preset;
  Real A = 2.0, r = 1.0, rho = 1.0;
  std::string piece = "q";
  Real s0 = 0.4, s1 = 2.0, hs = 1e-3;
  Real t0 = -1.0, t1 = 1.0;
  std::size_t nt = 65;
  ElasticaArgs prof;
};

RotationalSurface build_cmd_surface(const SurfaceArgs& sa, bool& closed_t) {
  std::size_t ns = static_cast<std::size_t>(std::lround((sa.s1 - sa.s0) / sa.hs)) + 1;
  if (ns < 5) throw CLI::ValidationError("--hs", "grid too coarse");
  auto t_grid = uniform_grid(sa.t0, sa.t1, sa.nt);
  closed_t = std::abs((sa.t1 - sa.t0) - 2 * kPi) < 1e-12;
  if (sa.preset == "plane")
    return generate_surface(AxisKind::A2, preset_plane(sa.A, sa.s0, sa.s1, ns), t_grid);
  if (sa.preset == "cylinder")
    return generate_surface(AxisKind::A1, preset_cylinder(sa.r, sa.s0, sa.s1, ns), t_grid);
  if (sa.preset == "hyperboloid")
    return generate_surface(AxisKind::A2, preset_hyperboloid_arc(sa.rho, sa.s0, sa.s1, ns),
                            t_grid);
  if (sa.preset == "saddle")
    return generate_surface(AxisKind::A2,
                            sa.piece == "r" ? preset_saddle_R(sa.s0, sa.s1, ns)
                                            : preset_saddle_Q(sa.s0, sa.s1, ns),
                            t_grid);
  if (sa.preset == "twosheet")
    return generate_surface(AxisKind::A2, preset_twosheet(sa.s0, sa.s1, ns), t_grid);
  // from an elastica profile
  ElasticaProfile p = build_profile(sa.prof);
  ElasticaArgs pa = sa.prof;
  pa.w_lo = sa.s0;
  pa.w_hi = sa.s1;
  pa.step = sa.hs;
  ProfileCurve curve = trace_profile(p, pa);
  if (curve.truncated)
    throw std::domain_error("profile curve truncated at the half-plane boundary");
  return generate_surface(p.model.axis_kind(), embed_profile(curve), t_grid);
}

int cmd_surface(const SurfaceArgs& sa, const std::string& out_obj,
                const std::string& out_json, Real tol) {
  bool closed_t = false;
  RotationalSurface surf = build_cmd_surface(sa, closed_t);
  EnergyReport rep = willmore_energy(surf, full_window(surf), closed_t,
                                     QuadraturePolicy::SkipDegenerate);
  rep.residual_field_max = max_abs_residual(willmore_residual(surf));
  bool solution = rep.residual_field_max < tol;
  Json j = energy_report_json(rep);
  j.set("gauss_equation_defect", gauss_equation_defect(surf))
      .set("verdict", solution ? "SOLUTION" : "NOT-SOLUTION");
  if (!out_obj.empty())
    write_atomic(out_obj, obj_export({surface_obj_group(surf, "surface")}));
  if (!out_json.empty()) write_atomic(out_json, j.dump() + "\n");
  std::printf("%s\n", j.dump().c_str());
  return solution ? kExitPass : kExitVerification;
}

struct GlueArgs {
  std::string phi, falpha, fbeta;
  Real delta = 0.9;
  Real smax = 0.0;  // 0: 0.8 * delta
  std::size_t ns = 200, nt = 33;
  Real t0 = -0.8, t1 = 0.8;
  int order = 3;
  Real tol = 1e-8, fit_tol = 1e-6;
  bool check_only = false;
};

int cmd_glue(const GlueArgs& ga, const std::string& out_obj, const std::string& out_json) {
  if (!ga.falpha.empty() || !ga.fbeta.empty()) {
    if (ga.falpha.empty() || ga.fbeta.empty())
      throw CLI::ValidationError("--falpha/--fbeta", "need both branch functions");
    Expr fa = Expr::parse(ga.falpha), fb = Expr::parse(ga.fbeta);
    GluingReport rep = check_local_gluing([fa](Real s) { return fa.eval(s); },
                                          [fb](Real s) { return fb.eval(s); }, ga.delta,
                                          ga.order, ga.tol);
    Json j = gluing_report_json(rep);
    if (!out_json.empty()) write_atomic(out_json, j.dump() + "\n");
    std::printf("%s\n", j.dump().c_str());
    return rep.passed ? kExitPass : kExitVerification;
  }
  if (ga.phi.empty()) throw CLI::ValidationError("--phi", "need a seed function");
  Expr phi = Expr::parse(ga.phi);
  GluingSeed seed;
  seed.phi = [phi](Real u) { return phi.eval(u); };
  seed.delta = ga.delta;
  GluingReport rep = check_local_gluing(seed, ga.order, ga.tol);
  Json j = gluing_report_json(rep);
  if (!ga.check_only) {
    Real smax = ga.smax > 0 ? ga.smax : 0.8 * ga.delta;
    GluedSurface glued =
        build_glued_surface(seed, smax, ga.ns, uniform_grid(ga.t0, ga.t1, ga.nt));
    Classification cls = classify_glued_solution(glued, ga.fit_tol);
    Json cj = Json::object();
    cj.set("kind", glued_class_name(cls.kind))
        .set("center", cls.center)
        .set("radius", cls.radius)
        .set("plane_fit_rms", cls.plane_fit_rms)
        .set("hyperboloid_fit_rms", cls.hyperboloid_fit_rms)
        .set("willmore_residual_max", cls.willmore_residual_max);
    j.set("classification", std::move(cj));
    if (!out_obj.empty()) write_atomic(out_obj, glued_surface_obj(glued));
  }
  if (!out_json.empty()) write_atomic(out_json, j.dump() + "\n");
  std::printf("%s\n", j.dump().c_str());
  return rep.passed ? kExitPass : kExitVerification;
}

struct GbArgs {
  std::string chart = "flat";
  std::vector<Real> rect;
  int random = 0;
  unsigned seed = 7;
  Real tol = 1e-3;
};

int cmd_gaussbonnet(const GbArgs& ga, const std::string& out_json) {
  FlatLorentzChart flat;
  DeSitterChart ds;
  const SurfaceChart& chart = ga.chart == "flat"
                                  ? static_cast<const SurfaceChart&>(flat)
                                  : static_cast<const SurfaceChart&>(ds);
  Json::Array reports;
  Real worst = 0;
  auto push = [&](NonNullPolygon& poly) {
    GaussBonnetReport rep = gauss_bonnet_residual(chart, poly, 12);
    worst = std::max(worst, std::abs(rep.residual));
    Json j = Json::object();
    j.set("intK", rep.intK)
        .set("intKappa", rep.intKappa)
        .set("sumTheta", rep.sumTheta)
        .set("residual", rep.residual)
        .set("excluded_measure", rep.excluded_measure);
    reports.push_back(std::move(j));
  };
  if (ga.random > 0) {
    std::mt19937 rng(ga.seed);
    Vec2 center = ga.chart == "flat" ? Vec2{0, 0} : Vec2{0.05, 0.6};
    Real rmin = ga.chart == "flat" ? 0.4 : 0.2;
    Real rmax = ga.chart == "flat" ? 1.5 : 0.55;
    for (int i = 0; i < ga.random; ++i) {
      auto poly = random_non_null_polygon(chart, rng, center, rmin, rmax);
      push(poly);
    }
  } else {
    std::vector<Real> rc = ga.rect;
    if (rc.size() != 4)
      rc = ga.chart == "flat" ? std::vector<Real>{0, 1, 0, 1}
                              : std::vector<Real>{-0.4, 0.5, 0.2, 1.1};
    NonNullPolygon poly;
    poly.sides = {make_line_side({rc[0], rc[2]}, {rc[0], rc[3]}),
                  make_line_side({rc[0], rc[3]}, {rc[1], rc[3]}),
                  make_line_side({rc[1], rc[3]}, {rc[1], rc[2]}),
                  make_line_side({rc[1], rc[2]}, {rc[0], rc[2]})};
    push(poly);
  }
  Json out = Json::object();
  out.set("chart", ga.chart)
      .set("count", static_cast<Real>(reports.size()))
      .set("max_abs_residual", worst)
      .set("polygons", Json(std::move(reports)));
  if (!out_json.empty()) write_atomic(out_json, out.dump() + "\n");
  std::printf("%s\n", out.dump().c_str());
  return worst < ga.tol ? kExitPass : kExitVerification;
}

int cmd_catalog(const std::string& out_json) {
  Json j = catalog_json();
  if (!out_json.empty()) write_atomic(out_json, j.dump() + "\n");
  std::printf("%-6s %-11s %-11s %-11s %s\n", "group", "axis", "orbits", "character",
              "generating curve");
  for (const auto& row : solution_catalog())
    std::printf("%-6s %-11s %-11s %-11s %s\n", row.group, row.axis, row.orbits,
                row.surface_character, row.generating_curve);
  return kExitPass;
}

int cmd_verify_all(const std::string& out_json) {
  auto results = run_acceptance();
  bool all = true;
  for (const auto& c : results) {
    std::printf("[%s] %d. %s: measured=%s threshold=%s (%.2fs)\n",
                c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                format_real(c.measured).c_str(), format_real(c.threshold).c_str(),
                c.seconds);
    all = all && c.passed;
  }
  if (!out_json.empty()) write_atomic(out_json, acceptance_json(results).dump() + "\n");
  return all ? kExitPass : kExitVerification;
}


/// The optional declarative configuration: key=value lines, '#' comments.
/// Values are appended as --key <value> tokens for any key not already
/// given on the command line, so explicit flags win.
std::vector<std::string> merge_config_tokens(int argc, char** argv) {
  std::vector<std::string> tokens;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    std::string t = argv[i];
    if (t == "--config" && i + 1 < argc) {
      config_path = argv[++i];
      continue;
    }
    if (t.rfind("--config=", 0) == 0) {
      config_path = t.substr(9);
      continue;
    }
    tokens.push_back(std::move(t));
  }
  if (config_path.empty()) return tokens;
  std::ifstream f(config_path);
  if (!f) throw std::invalid_argument("cannot read config file: " + config_path);
  std::string line;
  while (std::getline(f, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string v) {
      std::size_t b = v.find_first_not_of(" \t\r");
      std::size_t e = v.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    std::string flag = "--" + key;
    bool given = false;
    for (const auto& t : tokens)
      if (t == flag || t.rfind(flag + "=", 0) == 0) given = true;
    if (!given) {
      tokens.push_back(flag);
      tokens.push_back(val);
    }
  }
  return tokens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rotational sigma-model / Willmore surfaces in Lorentz-Minkowski 3-space\n"
      "(every subcommand accepts --config <file> with key=value lines; flags win)"};
  app.require_subcommand(1);

  ElasticaArgs ea;
  std::string e_csv, e_json;
  Real e_tol = 1e-6;
  bool e_allow = false;
  auto* el = app.add_subcommand("elastica", "trace a free-elastica profile curve");
  add_elastica_options(el, ea);
  el->add_option("--out-csv", e_csv, "profile CSV path");
  el->add_option("--out-json", e_json, "summary JSON path");
  el->add_option("--tol", e_tol, "Euler-Lagrange residual gate");
  el->add_flag("--allow-poles", e_allow, "permit excluded abscissas inside the window");

  SurfaceArgs sa;
  std::string s_obj, s_json;
  Real s_tol = 1e-4;
  auto* su = app.add_subcommand("surface", "generate a rotational surface and verify it");
  su->add_option("--preset", sa.preset, "plane | cylinder | hyperboloid | saddle | twosheet")
      ->check(CLI::IsMember({"", "plane", "cylinder", "hyperboloid", "saddle", "twosheet"}));
  su->add_option("--A", sa.A, "plane offset");
  su->add_option("--r", sa.r, "cylinder radius");
  su->add_option("--rho", sa.rho, "hyperboloid radius");
  su->add_option("--piece", sa.piece, "saddle piece: r | q")->check(CLI::IsMember({"r", "q"}));
  su->add_option("--s0", sa.s0, "profile parameter start");
  su->add_option("--s1", sa.s1, "profile parameter end");
  su->add_option("--hs", sa.hs, "profile step");
  su->add_option("--t0", sa.t0, "orbit parameter start");
  su->add_option("--t1", sa.t1, "orbit parameter end");
  su->add_option("--nt", sa.nt, "orbit grid points");
  add_elastica_options(su, sa.prof);
  su->add_option("--out-obj", s_obj, "mesh OBJ path");
  su->add_option("--out-json", s_json, "energy report JSON path");
  su->add_option("--tol", s_tol, "Willmore residual threshold for the verdict");

  GlueArgs ga;
  std::string g_obj, g_json;
  auto* gl = app.add_subcommand("glue", "run the gluing constructor / local gluing check");
  gl->add_option("--phi", ga.phi, "seed function of u, e.g. \"sqrt(1+u)\"");
  gl->add_option("--falpha", ga.falpha, "alpha branch function of u (check only)");
  gl->add_option("--fbeta", ga.fbeta, "beta branch function of u (check only)");
  gl->add_option("--delta", ga.delta, "seed half-width");
  gl->add_option("--smax", ga.smax, "profile range (default 0.8 delta)");
  gl->add_option("--ns", ga.ns, "profile samples per piece");
  gl->add_option("--nt", ga.nt, "orbit samples");
  gl->add_option("--t0", ga.t0, "orbit parameter start");
  gl->add_option("--t1", ga.t1, "orbit parameter end");
  gl->add_option("--order", ga.order, "smoothness order to check (1..3)");
  gl->add_option("--tol", ga.tol, "cross-cone jump tolerance");
  gl->add_option("--fit-tol", ga.fit_tol, "classification fit tolerance");
  gl->add_flag("--check-only", ga.check_only, "skip surface construction");
  gl->add_option("--out-obj", g_obj, "mesh OBJ path (region-tagged groups)");
  gl->add_option("--out-json", g_json, "gluing report JSON path");

  GbArgs ba;
  std::string b_json;
  auto* gb = app.add_subcommand("gaussbonnet", "Gauss-Bonnet residual of non-null polygons");
  gb->add_option("--chart", ba.chart, "flat | hyperboloid")
      ->check(CLI::IsMember({"flat", "hyperboloid"}));
  gb->add_option("--rect", ba.rect, "rectangle u0 u1 t0 t1")->expected(4);
  gb->add_option("--random", ba.random, "number of random polygons");
  gb->add_option("--seed", ba.seed, "random seed");
  gb->add_option("--tol", ba.tol, "residual gate");
  gb->add_option("--out-json", b_json, "report JSON path");

  std::string c_json;
  auto* ct = app.add_subcommand("catalog", "the rotational solution catalog");
  ct->add_option("--out-json", c_json, "catalog JSON path");

  std::string v_json;
  auto* va = app.add_subcommand("verify-all", "run the full verification suite");
  va->add_option("--out-json", v_json, "results JSON path");

  std::vector<std::string> tokens;
  try {
    tokens = merge_config_tokens(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  try {
    std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (el->parsed()) return cmd_elastica(ea, e_csv, e_json, e_tol, e_allow);
    if (su->parsed()) return cmd_surface(sa, s_obj, s_json, s_tol);
    if (gl->parsed()) return cmd_glue(ga, g_obj, g_json);
    if (gb->parsed()) return cmd_gaussbonnet(ba, b_json);
    if (ct->parsed()) return cmd_catalog(c_json);
    if (va->parsed()) return cmd_verify_all(v_json);
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const PoleError& e) {
    std::fprintf(stderr, "numeric degeneracy: %s (pole at %s)\n", e.what(),
                 format_real(e.pole).c_str());
    return kExitDegenerate;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "numeric degeneracy: %s\n", e.what());
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  }
  return kExitUsage;
}
