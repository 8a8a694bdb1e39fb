// Command-line surface: separate, verify, render, gen, support, margin, suite.
// Exit codes: 0 separated/verified/ok, 1 verification failure, 2 witness
// (not separable), 3 input or validation error.

#include "sphsep/harness.hpp"
#include "sphsep/io.hpp"
#include "sphsep/linalg.hpp"
#include "sphsep/lp.hpp"
#include "sphsep/rational.hpp"
#include "sphsep/separation.hpp"
#include "sphsep/support.hpp"
#include "sphsep/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace sphsep;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitWitness = 2;
constexpr int kExitInputError = 3;

bool log_enabled() {
  const char* env = std::getenv("SPHSEP_LOG");
  return env != nullptr && *env != '\0' && std::string(env) != "0";
}

void log_line(const std::string& message) {
  if (log_enabled()) std::cerr << "[sphsep] " << message << "\n";
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot write '" + out_path + "'");
  out << content;
}

// Advisory float-mode closed separation: double simplex, lifted certificate.
std::pair<int, Json> separate_closed_float(const InstanceFile& instance, double tolerance) {
  const MatrixXd g1 = to_double(side_as_closed(instance, 1).rays.generators);
  const MatrixXd g2 = to_double(side_as_closed(instance, 2).rays.generators);
  const Index n = instance.dim, k1 = g1.cols(), k2 = g2.cols();
  LinearProgram<double> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXd::Zero(n);
  lp.constraints = MatrixXd(k1 + k2, n);
  lp.constraints.topRows(k1) = g1.transpose();
  lp.constraints.bottomRows(k2) = g2.transpose();
  lp.relations.assign(static_cast<std::size_t>(k1), Relation::GreaterEq);
  lp.relations.insert(lp.relations.end(), static_cast<std::size_t>(k2), Relation::LessEq);
  lp.rhs = VectorXd(k1 + k2);
  lp.rhs.head(k1).setOnes();
  lp.rhs.tail(k2).setConstant(-1.0);
  lp.bounds.assign(static_cast<std::size_t>(n), VariableBound<double>::free());
  SolverOptions<double> options;
  options.tolerance = tolerance;
  const LpOutcome<double> out = solve(lp, options);
  if (out.status == LpStatus::Optimal) {
    Separator sep;
    sep.u = lift_to_rational(out.primal);
    sep.u_hat = normalize_unit(out.primal);
    sep.side1_products = lift_to_rational(VectorXd(g1.transpose() * out.primal));
    sep.side2_products = lift_to_rational(VectorXd(g2.transpose() * out.primal));
    double m1 = std::numeric_limits<double>::infinity(), m2 = m1;
    for (Index j = 0; j < k1; ++j) m1 = std::min(m1, g1.col(j).normalized().dot(sep.u_hat));
    for (Index j = 0; j < k2; ++j) m2 = std::min(m2, -g2.col(j).normalized().dot(sep.u_hat));
    sep.side1_margin = m1;
    sep.side2_margin = m2;
    return {kExitOk, certificate_to_json(sep, /*float_mode=*/true)};
  }
  CommonRayWitness w;
  w.lambda = lift_to_rational(VectorXd(out.dual.head(k1)));
  w.mu = lift_to_rational(VectorXd(-out.dual.tail(k2)));
  w.x = lift_to_rational(VectorXd(g1 * to_double(w.lambda)));
  Json j = certificate_to_json(w);
  j["mode"] = "float";
  return {kExitWitness, j};
}

int cmd_separate(const std::string& instance_path, const std::string& out_path,
                 const std::string& mode_flag, double tolerance, bool lp_debug) {
  const InstanceFile instance = load_instance(instance_path);
  if (!instance.side1 || !instance.side2)
    throw ValidationError("separate needs side1 and side2");
  if (instance.side1->kind != instance.side2->kind)
    throw ValidationError("mixed side kinds: separation is defined for matching kinds only");
  const bool float_mode =
      mode_flag.empty() ? instance.float_mode : (mode_flag == "float");

  if (lp_debug) LpDebug::stream = &std::cerr;
  int exit_code = kExitOk;
  Json certificate;
  if (instance.side1->kind == SideSpec::Kind::Halfspaces) {
    const OpenConeH p1 = side_as_open(instance, 1), p2 = side_as_open(instance, 2);
    const OpenSeparation result = separate_open(p1, p2);
    if (const auto* sep = std::get_if<Separator>(&result)) {
      certificate = certificate_to_json(*sep);
      log_line("separator found (open case)");
    } else {
      certificate = certificate_to_json(std::get<OpenIntersectionWitness>(result));
      exit_code = kExitWitness;
      log_line("cones intersect (open case)");
    }
  } else if (float_mode) {
    std::tie(exit_code, certificate) = separate_closed_float(instance, tolerance);
  } else {
    const ClosedSphericalConvex b1 = side_as_closed(instance, 1);
    const ClosedSphericalConvex b2 = side_as_closed(instance, 2);
    const ClosedSeparation result = separate_closed(b1, b2);
    if (const auto* sep = std::get_if<Separator>(&result)) {
      certificate = certificate_to_json(*sep);
      log_line("separator found (closed case)");
    } else {
      certificate = certificate_to_json(std::get<CommonRayWitness>(result));
      exit_code = kExitWitness;
      log_line("common ray found (closed case)");
    }
  }
  LpDebug::stream = nullptr;
  write_output(out_path, certificate.dump(2));
  return exit_code;
}

int cmd_verify(const std::string& certificate_path, const std::string& instance_path,
               double tolerance) {
  const InstanceFile instance = load_instance(instance_path);
  const CertificateFile certificate = load_certificate(certificate_path);
  const VerifyResult result = verify_certificate(instance, certificate, tolerance);
  if (result.ok) {
    std::cout << "ok\n";
    return kExitOk;
  }
  std::cout << "verification failed: " << result.reason << "\n";
  return kExitVerifyFailure;
}

int cmd_render(const std::string& instance_path, const std::string& certificate_path,
               const std::string& out_path) {
  const InstanceFile instance = load_instance(instance_path);
  std::optional<CertificateFile> certificate;
  if (!certificate_path.empty()) certificate = load_certificate(certificate_path);
  write_output(out_path, render_svg(instance, certificate));
  return kExitOk;
}

int cmd_gen(const std::string& type, Index dim, int gens, const std::string& delta_text,
            std::uint64_t seed, const std::string& out_path) {
  InstanceFile instance;
  instance.dim = dim;
  const Rational delta = parse_rational(delta_text);
  if (type == "disjoint-closed") {
    const auto [b1, b2] = gen_disjoint_closed(dim, gens, delta, seed);
    instance.side1 = SideSpec{SideSpec::Kind::Generators, b1.rays.generators, {}};
    instance.side2 = SideSpec{SideSpec::Kind::Generators, b2.rays.generators, {}};
  } else if (type == "intersecting-closed") {
    const IntersectingPair pair = gen_intersecting_closed(dim, std::max(gens, 2), seed);
    instance.side1 = SideSpec{SideSpec::Kind::Generators, pair.side1.rays.generators, {}};
    instance.side2 = SideSpec{SideSpec::Kind::Generators, pair.side2.rays.generators, {}};
  } else if (type == "open-disjoint" || type == "open-intersecting") {
    const auto [p1, p2] = gen_open_pair(dim, gens, seed, type == "open-disjoint");
    instance.side1 = SideSpec{SideSpec::Kind::Halfspaces, p1.halfspaces, {}};
    instance.side2 = SideSpec{SideSpec::Kind::Halfspaces, p2.halfspaces, {}};
  } else {
    throw ValidationError("unknown --type '" + type + "'");
  }
  write_output(out_path, instance_to_json(instance).dump(2));
  return kExitOk;
}

int cmd_support(const std::string& instance_path, const std::string& out_path) {
  const InstanceFile instance = load_instance(instance_path);
  const Polytope p = side_as_polytope(instance);
  if (instance.queries.empty()) throw ValidationError("support needs at least one query");
  Json report = Json::array();
  for (const VectorXr& xstar : instance.queries) {
    Json entry;
    entry["xstar"] = Json::array();
    for (Index i = 0; i < xstar.size(); ++i) entry["xstar"].push_back(format_rational(xstar[i]));
    entry["sigma"] = format_rational(sigma(p, xstar));
    if (instance.alpha) {
      const DAlphaQuery query{xstar, *instance.alpha};
      const bool member = d_alpha_member(p, query);
      entry["d_alpha_member"] = member;
      if (member && p.kind == PolytopeKind::Compact) {
        const OpennessRadius rad = openness_radius(p, query);
        entry["gamma"] = format_rational(rad.gamma);
        entry["rho"] = rad.rho;
      }
    }
    report.push_back(entry);
  }
  write_output(out_path, report.dump(2));
  return kExitOk;
}

int cmd_margin(const std::string& instance_path, const std::string& out_path) {
  const InstanceFile instance = load_instance(instance_path);
  const ClosedSphericalConvex b1 = side_as_closed(instance, 1);
  const ClosedSphericalConvex b2 = side_as_closed(instance, 2);
  if (std::holds_alternative<CommonRayWitness>(separate_closed(b1, b2))) {
    std::cout << "not separable: caps share a ray\n";
    return kExitWitness;
  }
  const MaxMargin margin = max_margin(b1, b2);
  const double radius = thickening_radius(b1, b2);
  Json report;
  report["u_hat"] = Json::array();
  for (Index i = 0; i < margin.u_hat.size(); ++i) report["u_hat"].push_back(margin.u_hat[i]);
  report["r_star"] = margin.r_lo;
  report["thickening_radius"] = radius;
  report["thickened_disjoint_at_radius"] =
      thickened_disjoint(b1, b2, rational_from_double(radius));
  write_output(out_path, report.dump(2));
  return kExitOk;
}

int cmd_suite(std::uint64_t seed, int trials, const std::vector<int>& dims,
              const std::string& mode, double tolerance, const std::string& delta_text,
              const std::string& out_path, bool self_test) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  if (!dims.empty()) cfg.dims = dims;
  cfg.float_mode = mode == "float";
  cfg.tolerance = tolerance;
  cfg.delta = parse_rational(delta_text);
  cfg.include_failing_self_test = self_test;
  const SuiteReport report = run_suite(cfg);
  report.print(std::cout);
  if (!out_path.empty()) write_output(out_path, suite_report_to_json(report).dump(2));
  return report.all_passed() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical separation toolkit: exact conic separation, support "
               "functions, certificates, rendering"};
  app.require_subcommand(1);

  std::string instance_path, certificate_path, out_path, mode, type = "disjoint-closed";
  std::string delta_text = "1/10";
  double tolerance = 1e-9;
  bool lp_debug = false, self_test = false;
  std::uint64_t seed = 42;
  int trials = 200, gens = 4;
  Index dim = 2;
  std::vector<int> dims;

  auto* separate = app.add_subcommand("separate", "decide separability, emit a certificate");
  separate->add_option("instance", instance_path)->required();
  separate->add_option("--out", out_path, "certificate file (default stdout)");
  separate->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  separate->add_option("--tolerance", tolerance, "float-mode pivot tolerance");
  separate->add_flag("--lp-debug", lp_debug, "dump simplex pivots to stderr");

  auto* verify = app.add_subcommand("verify", "re-check a certificate against an instance");
  verify->add_option("certificate", certificate_path)->required();
  verify->add_option("instance", instance_path)->required();
  verify->add_option("--tolerance", tolerance, "float-mode comparison tolerance");

  auto* render = app.add_subcommand("render", "draw a 2D/3D instance as SVG");
  render->add_option("instance", instance_path)->required();
  render->add_option("--certificate", certificate_path, "separator layer");
  render->add_option("--out", out_path, "output .svg (default stdout)");

  auto* gen = app.add_subcommand("gen", "write a seeded random instance");
  gen->add_option("--type", type)
      ->check(CLI::IsMember(
          {"disjoint-closed", "intersecting-closed", "open-disjoint", "open-intersecting"}));
  gen->add_option("--dim", dim)->check(CLI::Range(Index{2}, Index{16}));
  gen->add_option("--gens", gens, "generators or halfspace rows per side");
  gen->add_option("--delta", delta_text, "planting margin (rational)");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  auto* support = app.add_subcommand("support", "sigma, D_alpha membership, openness radius");
  support->add_option("instance", instance_path)->required();
  support->add_option("--out", out_path);

  auto* margin = app.add_subcommand("margin", "max margin and thickening radius");
  margin->add_option("instance", instance_path)->required();
  margin->add_option("--out", out_path);

  auto* suite = app.add_subcommand("suite", "run the property-verification harness");
  suite->add_option("--seed", seed);
  suite->add_option("--trials", trials)->check(CLI::PositiveNumber);
  suite->add_option("--dim", dims, "dimensions to draw from (repeatable)");
  suite->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  suite->add_option("--tolerance", tolerance);
  suite->add_option("--delta", delta_text);
  suite->add_option("--out", out_path, "JSON report path");
  suite->add_flag("--self-test-fail", self_test, "append the deliberately failing checker");

  CLI11_PARSE(app, argc, argv);

  try {
    if (separate->parsed())
      return cmd_separate(instance_path, out_path, mode, tolerance, lp_debug);
    if (verify->parsed()) return cmd_verify(certificate_path, instance_path, tolerance);
    if (render->parsed()) return cmd_render(instance_path, certificate_path, out_path);
    if (gen->parsed()) return cmd_gen(type, dim, gens, delta_text, seed, out_path);
    if (support->parsed()) return cmd_support(instance_path, out_path);
    if (margin->parsed()) return cmd_margin(instance_path, out_path);
    if (suite->parsed())
      return cmd_suite(seed, trials, dims, mode, tolerance, delta_text, out_path, self_test);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
