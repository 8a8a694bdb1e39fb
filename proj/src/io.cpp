#include "sphsep/io.hpp"

#include "sphsep/linalg.hpp"
#include "sphsep/rational.hpp"

#include <cmath>
#include <fstream>

namespace sphsep {

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

Rational parse_scalar(const Json& j, const std::string& path, bool float_mode) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    if (!float_mode) bad_field(path, "binary64 literal not allowed in exact mode");
    return rational_from_double(j.get<double>());
  }
  bad_field(path, "expected a rational literal");
}

VectorXr parse_vector(const Json& j, const std::string& path, Index dim, bool float_mode) {
  if (!j.is_array()) bad_field(path, "expected an array");
  if (dim >= 0 && static_cast<Index>(j.size()) != dim)
    bad_field(path, "expected " + std::to_string(dim) + " coordinates, got " +
                        std::to_string(j.size()));
  VectorXr v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Index>(i)] = parse_scalar(j[i], path + "[" + std::to_string(i) + "]", float_mode);
  return v;
}

// Vectors as columns.
MatrixXr parse_vector_list(const Json& j, const std::string& path, Index dim, bool float_mode) {
  if (!j.is_array() || j.empty()) bad_field(path, "expected a nonempty array of vectors");
  MatrixXr m(dim, static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    m.col(static_cast<Index>(i)) =
        parse_vector(j[i], path + "[" + std::to_string(i) + "]", dim, float_mode);
  return m;
}

Json vector_to_json(const VectorXr& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v[i]));
  return out;
}

Json vector_to_json(const VectorXd& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json columns_to_json(const MatrixXr& m) {
  Json out = Json::array();
  for (Index j = 0; j < m.cols(); ++j) out.push_back(vector_to_json(VectorXr(m.col(j))));
  return out;
}

Json rows_to_json(const MatrixXr& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(VectorXr(m.row(i).transpose())));
  return out;
}

SideSpec parse_side(const Json& j, const std::string& path, Index dim, bool float_mode) {
  if (!j.is_object()) bad_field(path, "expected an object");
  if (!j.contains("kind")) bad_field(path + ".kind", "missing");
  const std::string kind = j["kind"].get<std::string>();
  SideSpec side;
  if (kind == "generators") {
    side.kind = SideSpec::Kind::Generators;
    if (!j.contains("vectors")) bad_field(path + ".vectors", "missing");
    side.data = parse_vector_list(j["vectors"], path + ".vectors", dim, float_mode);
  } else if (kind == "halfspaces") {
    side.kind = SideSpec::Kind::Halfspaces;
    if (!j.contains("rows")) bad_field(path + ".rows", "missing");
    side.data = parse_vector_list(j["rows"], path + ".rows", dim, float_mode).transpose();
  } else if (kind == "vertices") {
    side.kind = SideSpec::Kind::Vertices;
    if (!j.contains("vertices")) bad_field(path + ".vertices", "missing");
    side.data = parse_vector_list(j["vertices"], path + ".vertices", dim, float_mode);
    const std::string pk = j.value("polytope", "compact");
    if (pk == "compact")
      side.polytope_kind = PolytopeKind::Compact;
    else if (pk == "open-interior")
      side.polytope_kind = PolytopeKind::OpenInterior;
    else
      bad_field(path + ".polytope", "expected 'compact' or 'open-interior'");
  } else {
    bad_field(path + ".kind", "expected 'generators', 'halfspaces' or 'vertices'");
  }
  return side;
}

Json side_to_json(const SideSpec& side) {
  Json out;
  switch (side.kind) {
    case SideSpec::Kind::Generators:
      out["kind"] = "generators";
      out["vectors"] = columns_to_json(side.data);
      break;
    case SideSpec::Kind::Halfspaces:
      out["kind"] = "halfspaces";
      out["rows"] = rows_to_json(side.data);
      break;
    case SideSpec::Kind::Vertices:
      out["kind"] = "vertices";
      out["vertices"] = columns_to_json(side.data);
      out["polytope"] =
          side.polytope_kind == PolytopeKind::Compact ? "compact" : "open-interior";
      break;
  }
  return out;
}

VectorXd parse_double_vector(const Json& j, const std::string& path, Index dim) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim) bad_field(path, "bad float vector");
  VectorXd v(dim);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) bad_field(path, "expected numbers");
    v[static_cast<Index>(i)] = j[i].get<double>();
  }
  return v;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace

InstanceFile parse_instance(const Json& j) {
  if (!j.is_object()) throw ValidationError("instance: expected a JSON object");
  if (!j.contains("dim")) throw ValidationError("instance.dim: missing");
  InstanceFile instance;
  if (!j["dim"].is_number_integer()) throw ValidationError("instance.dim: expected an integer");
  instance.dim = j["dim"].get<Index>();
  if (instance.dim < 2) throw ValidationError("instance.dim: must be at least 2");
  const std::string mode = j.value("mode", "exact");
  if (mode != "exact" && mode != "float")
    throw ValidationError("instance.mode: expected 'exact' or 'float'");
  instance.float_mode = mode == "float";
  if (j.contains("side1"))
    instance.side1 = parse_side(j["side1"], "instance.side1", instance.dim, instance.float_mode);
  if (j.contains("side2"))
    instance.side2 = parse_side(j["side2"], "instance.side2", instance.dim, instance.float_mode);
  if (j.contains("queries")) {
    const Json& q = j["queries"];
    if (!q.is_array()) throw ValidationError("instance.queries: expected an array");
    for (std::size_t i = 0; i < q.size(); ++i)
      instance.queries.push_back(parse_vector(
          q[i], "instance.queries[" + std::to_string(i) + "]", instance.dim, instance.float_mode));
  }
  if (j.contains("alpha"))
    instance.alpha = parse_scalar(j["alpha"], "instance.alpha", instance.float_mode);
  if (j.contains("lp")) instance.lp = {lp_from_json(j["lp"]), true};
  return instance;
}

InstanceFile load_instance(const std::string& path) { return parse_instance(load_json_file(path)); }

Json instance_to_json(const InstanceFile& instance) {
  Json out;
  out["dim"] = instance.dim;
  out["mode"] = instance.float_mode ? "float" : "exact";
  if (instance.side1) out["side1"] = side_to_json(*instance.side1);
  if (instance.side2) out["side2"] = side_to_json(*instance.side2);
  if (!instance.queries.empty()) {
    Json q = Json::array();
    for (const auto& v : instance.queries) q.push_back(vector_to_json(v));
    out["queries"] = q;
  }
  if (instance.alpha) out["alpha"] = format_rational(*instance.alpha);
  if (instance.lp) out["lp"] = lp_to_json(instance.lp->first);
  return out;
}

Json certificate_to_json(const Separator& separator, bool float_mode) {
  Json out;
  out["kind"] = "separator";
  out["mode"] = float_mode ? "float" : "exact";
  out["case"] = separator.open_case ? "open" : "closed";
  out["u"] = vector_to_json(separator.u);
  out["u_hat"] = vector_to_json(separator.u_hat);
  out["side1_margin"] = separator.side1_margin;
  out["side2_margin"] = separator.side2_margin;
  if (separator.open_case) {
    out["lambda"] = vector_to_json(separator.lambda);
    out["mu"] = vector_to_json(separator.mu);
  } else {
    out["side1_products"] = vector_to_json(separator.side1_products);
    out["side2_products"] = vector_to_json(separator.side2_products);
  }
  return out;
}

Json certificate_to_json(const CommonRayWitness& witness) {
  Json out;
  out["kind"] = "common-ray";
  out["mode"] = "exact";
  out["lambda"] = vector_to_json(witness.lambda);
  out["mu"] = vector_to_json(witness.mu);
  out["x"] = vector_to_json(witness.x);
  return out;
}

Json certificate_to_json(const OpenIntersectionWitness& witness) {
  Json out;
  out["kind"] = "open-intersection";
  out["mode"] = "exact";
  out["x"] = vector_to_json(witness.x);
  return out;
}

Json certificate_to_json(const LpOutcome<Rational>& outcome) {
  Json out;
  out["kind"] = "lp";
  out["mode"] = "exact";
  switch (outcome.status) {
    case LpStatus::Optimal: out["status"] = "optimal"; break;
    case LpStatus::Infeasible: out["status"] = "infeasible"; break;
    case LpStatus::Unbounded: out["status"] = "unbounded"; break;
  }
  out["primal"] = vector_to_json(outcome.primal);
  out["dual"] = vector_to_json(outcome.dual);
  out["ray"] = vector_to_json(outcome.ray);
  out["objective_value"] = format_rational(outcome.objective_value);
  return out;
}

Json certificate_to_json(const CertificateFile& certificate) {
  switch (certificate.kind) {
    case CertificateFile::Kind::Separator:
      return certificate_to_json(*certificate.separator, certificate.float_mode);
    case CertificateFile::Kind::CommonRay:
      return certificate_to_json(*certificate.common_ray);
    case CertificateFile::Kind::OpenIntersection:
      return certificate_to_json(*certificate.open_intersection);
    case CertificateFile::Kind::Lp:
      return certificate_to_json(*certificate.lp_outcome);
  }
  throw std::logic_error("unreachable");
}

CertificateFile parse_certificate(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ValidationError("certificate.kind: missing");
  CertificateFile cert;
  cert.float_mode = j.value("mode", "exact") == "float";
  const bool fm = cert.float_mode;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "separator") {
    cert.kind = CertificateFile::Kind::Separator;
    Separator s;
    s.open_case = j.value("case", "closed") == "open";
    s.u = parse_vector(j.at("u"), "certificate.u", -1, fm);
    s.u_hat = parse_double_vector(j.at("u_hat"), "certificate.u_hat", s.u.size());
    s.side1_margin = j.value("side1_margin", 0.0);
    s.side2_margin = j.value("side2_margin", 0.0);
    if (s.open_case) {
      s.lambda = parse_vector(j.at("lambda"), "certificate.lambda", -1, fm);
      s.mu = parse_vector(j.at("mu"), "certificate.mu", -1, fm);
    } else {
      s.side1_products = parse_vector(j.at("side1_products"), "certificate.side1_products", -1, fm);
      s.side2_products = parse_vector(j.at("side2_products"), "certificate.side2_products", -1, fm);
    }
    cert.separator = std::move(s);
  } else if (kind == "common-ray") {
    cert.kind = CertificateFile::Kind::CommonRay;
    CommonRayWitness w;
    w.lambda = parse_vector(j.at("lambda"), "certificate.lambda", -1, fm);
    w.mu = parse_vector(j.at("mu"), "certificate.mu", -1, fm);
    w.x = parse_vector(j.at("x"), "certificate.x", -1, fm);
    cert.common_ray = std::move(w);
  } else if (kind == "open-intersection") {
    cert.kind = CertificateFile::Kind::OpenIntersection;
    cert.open_intersection = OpenIntersectionWitness{parse_vector(j.at("x"), "certificate.x", -1, fm)};
  } else if (kind == "lp") {
    cert.kind = CertificateFile::Kind::Lp;
    LpOutcome<Rational> out;
    const std::string status = j.at("status").get<std::string>();
    if (status == "optimal")
      out.status = LpStatus::Optimal;
    else if (status == "infeasible")
      out.status = LpStatus::Infeasible;
    else if (status == "unbounded")
      out.status = LpStatus::Unbounded;
    else
      throw ValidationError("certificate.status: unknown value '" + status + "'");
    out.primal = parse_vector(j.at("primal"), "certificate.primal", -1, fm);
    out.dual = parse_vector(j.at("dual"), "certificate.dual", -1, fm);
    out.ray = parse_vector(j.at("ray"), "certificate.ray", -1, fm);
    out.objective_value = parse_scalar(j.at("objective_value"), "certificate.objective_value", fm);
    cert.lp_outcome = std::move(out);
  } else {
    throw ValidationError("certificate.kind: unknown value '" + kind + "'");
  }
  return cert;
}

CertificateFile load_certificate(const std::string& path) {
  return parse_certificate(load_json_file(path));
}

// ---- typed side views ------------------------------------------------------

namespace {

const SideSpec& require_side(const InstanceFile& instance, int which, SideSpec::Kind kind,
                             const char* expected) {
  const auto& side = which == 1 ? instance.side1 : instance.side2;
  if (!side)
    throw ValidationError("instance.side" + std::to_string(which) + ": missing");
  if (side->kind != kind)
    throw ValidationError("instance.side" + std::to_string(which) + ": expected kind '" +
                          expected + "'");
  return *side;
}

}  // namespace

ClosedSphericalConvex side_as_closed(const InstanceFile& instance, int which) {
  const SideSpec& side = require_side(instance, which, SideSpec::Kind::Generators, "generators");
  return validate_closed(make_ray_set(instance.dim, side.data));
}

OpenConeH side_as_open(const InstanceFile& instance, int which) {
  const SideSpec& side = require_side(instance, which, SideSpec::Kind::Halfspaces, "halfspaces");
  return validate_open(instance.dim, side.data);
}

Polytope side_as_polytope(const InstanceFile& instance) {
  const SideSpec& side = require_side(instance, 1, SideSpec::Kind::Vertices, "vertices");
  return make_polytope(instance.dim, side.data, side.polytope_kind);
}

// ---- verification ----------------------------------------------------------

namespace {

struct Checker {
  Rational tol;
  std::string reason;

  bool fail(const std::string& why) {
    if (reason.empty()) reason = why;
    return false;
  }
  bool strictly_positive(const Rational& v, const std::string& what) {
    if (v > tol) return true;
    return fail(what + " is not strictly positive");
  }
  bool strictly_negative(const Rational& v, const std::string& what) {
    if (v < -tol) return true;
    return fail(what + " is not strictly negative");
  }
  bool non_negative(const Rational& v, const std::string& what) {
    if (v >= -tol) return true;
    return fail(what + " is negative");
  }
  bool equal(const Rational& a, const Rational& b, const std::string& what) {
    const Rational d = a - b;
    if ((d < 0 ? -d : d) <= tol) return true;
    return fail(what + " identity broken");
  }
};

bool verify_closed_separator_file(const InstanceFile& instance, const Separator& s, Checker& ck) {
  const MatrixXr g1 = require_side(instance, 1, SideSpec::Kind::Generators, "generators").data;
  const MatrixXr g2 = require_side(instance, 2, SideSpec::Kind::Generators, "generators").data;
  if (s.u.size() != instance.dim) return ck.fail("u has the wrong dimension");
  if (is_zero_vector(s.u)) return ck.fail("u is zero");
  if (s.side1_products.size() != g1.cols() || s.side2_products.size() != g2.cols())
    return ck.fail("product list sizes do not match the instance");
  for (Index j = 0; j < g1.cols(); ++j) {
    const Rational p = dot(g1.col(j), s.u);
    if (!ck.equal(p, s.side1_products[j], "side1 product " + std::to_string(j))) return false;
    if (!ck.strictly_positive(p, "side1 product " + std::to_string(j))) return false;
  }
  for (Index j = 0; j < g2.cols(); ++j) {
    const Rational p = dot(g2.col(j), s.u);
    if (!ck.equal(p, s.side2_products[j], "side2 product " + std::to_string(j))) return false;
    if (!ck.strictly_negative(p, "side2 product " + std::to_string(j))) return false;
  }
  // Float fields must mirror the exact data.
  const VectorXd u_hat = normalize_unit(s.u);
  if ((u_hat - s.u_hat).lpNorm<Eigen::Infinity>() > 1e-9)
    return ck.fail("u_hat does not match u");
  double m1 = std::numeric_limits<double>::infinity(), m2 = m1;
  const MatrixXd g1d = to_double(g1), g2d = to_double(g2);
  for (Index j = 0; j < g1d.cols(); ++j) m1 = std::min(m1, g1d.col(j).normalized().dot(u_hat));
  for (Index j = 0; j < g2d.cols(); ++j) m2 = std::min(m2, -g2d.col(j).normalized().dot(u_hat));
  if (std::abs(m1 - s.side1_margin) > 1e-9 || std::abs(m2 - s.side2_margin) > 1e-9)
    return ck.fail("stored margins do not match the generators");
  if (!(s.side1_margin > 0) || !(s.side2_margin > 0)) return ck.fail("margins must be positive");
  return true;
}

bool verify_open_separator_file(const InstanceFile& instance, const Separator& s, Checker& ck) {
  const MatrixXr a1 = require_side(instance, 1, SideSpec::Kind::Halfspaces, "halfspaces").data;
  const MatrixXr a2 = require_side(instance, 2, SideSpec::Kind::Halfspaces, "halfspaces").data;
  if (s.u.size() != instance.dim) return ck.fail("u has the wrong dimension");
  if (is_zero_vector(s.u)) return ck.fail("u is zero");
  if (s.lambda.size() != a1.rows() || s.mu.size() != a2.rows())
    return ck.fail("coefficient sizes do not match the instance");
  for (Index i = 0; i < s.lambda.size(); ++i)
    if (!ck.non_negative(s.lambda[i], "lambda[" + std::to_string(i) + "]")) return false;
  for (Index i = 0; i < s.mu.size(); ++i)
    if (!ck.non_negative(s.mu[i], "mu[" + std::to_string(i) + "]")) return false;
  const VectorXr from1 = a1.transpose() * s.lambda;
  const VectorXr from2 = -(a2.transpose() * s.mu);
  for (Index i = 0; i < instance.dim; ++i) {
    if (!ck.equal(from1[i], s.u[i], "A1^T lambda = u, coordinate " + std::to_string(i)))
      return false;
    if (!ck.equal(from2[i], s.u[i], "-A2^T mu = u, coordinate " + std::to_string(i)))
      return false;
  }
  return true;
}

bool verify_common_ray_file(const InstanceFile& instance, const CommonRayWitness& w, Checker& ck) {
  const MatrixXr g1 = require_side(instance, 1, SideSpec::Kind::Generators, "generators").data;
  const MatrixXr g2 = require_side(instance, 2, SideSpec::Kind::Generators, "generators").data;
  if (w.lambda.size() != g1.cols() || w.mu.size() != g2.cols())
    return ck.fail("coefficient sizes do not match the instance");
  if (w.x.size() != instance.dim) return ck.fail("x has the wrong dimension");
  if (is_zero_vector(w.x)) return ck.fail("x is zero");
  for (Index i = 0; i < w.lambda.size(); ++i)
    if (!ck.non_negative(w.lambda[i], "lambda[" + std::to_string(i) + "]")) return false;
  for (Index i = 0; i < w.mu.size(); ++i)
    if (!ck.non_negative(w.mu[i], "mu[" + std::to_string(i) + "]")) return false;
  const VectorXr from1 = g1 * w.lambda, from2 = g2 * w.mu;
  for (Index i = 0; i < instance.dim; ++i) {
    if (!ck.equal(from1[i], w.x[i], "G1 lambda = x, coordinate " + std::to_string(i)))
      return false;
    if (!ck.equal(from2[i], w.x[i], "G2 mu = x, coordinate " + std::to_string(i))) return false;
  }
  return true;
}

bool verify_open_intersection_file(const InstanceFile& instance, const OpenIntersectionWitness& w,
                                   Checker& ck) {
  const MatrixXr a1 = require_side(instance, 1, SideSpec::Kind::Halfspaces, "halfspaces").data;
  const MatrixXr a2 = require_side(instance, 2, SideSpec::Kind::Halfspaces, "halfspaces").data;
  if (w.x.size() != instance.dim) return ck.fail("x has the wrong dimension");
  const VectorXr r1 = a1 * w.x, r2 = a2 * w.x;
  for (Index i = 0; i < r1.size(); ++i)
    if (r1[i] < 1 - ck.tol) return ck.fail("A1 x >= 1 fails at row " + std::to_string(i));
  for (Index i = 0; i < r2.size(); ++i)
    if (r2[i] < 1 - ck.tol) return ck.fail("A2 x >= 1 fails at row " + std::to_string(i));
  return true;
}

}  // namespace

VerifyResult verify_certificate(const InstanceFile& instance, const CertificateFile& certificate,
                                double tolerance) {
  Checker ck;
  ck.tol = (certificate.float_mode || instance.float_mode) ? rational_from_double(tolerance)
                                                           : Rational(0);
  bool ok = false;
  try {
    switch (certificate.kind) {
      case CertificateFile::Kind::Separator:
        ok = certificate.separator->open_case
                 ? verify_open_separator_file(instance, *certificate.separator, ck)
                 : verify_closed_separator_file(instance, *certificate.separator, ck);
        break;
      case CertificateFile::Kind::CommonRay:
        ok = verify_common_ray_file(instance, *certificate.common_ray, ck);
        break;
      case CertificateFile::Kind::OpenIntersection:
        ok = verify_open_intersection_file(instance, *certificate.open_intersection, ck);
        break;
      case CertificateFile::Kind::Lp: {
        if (!instance.lp) {
          ck.fail("instance has no lp section");
          break;
        }
        std::string why;
        ok = verify_lp_certificate(instance.lp->first, *certificate.lp_outcome, ck.tol, &why);
        if (!ok) ck.fail(why);
        break;
      }
    }
  } catch (const std::exception& e) {
    ck.fail(e.what());
    ok = false;
  }
  return VerifyResult{ok, ok ? "" : ck.reason};
}

// ---- suite report ------------------------------------------------------------

Json suite_report_to_json(const SuiteReport& report) {
  Json properties = Json::array();
  for (const auto& p : report.properties) {
    Json entry;
    entry["name"] = p.name;
    entry["trials"] = p.trials;
    entry["passes"] = p.passes;
    entry["failures"] = p.failures;
    entry["failing_seeds"] = p.failing_seeds;
    properties.push_back(entry);
  }
  Json out;
  out["properties"] = properties;
  out["total_trials"] = report.total_trials();
  out["total_failures"] = report.total_failures();
  out["wall_seconds"] = report.wall_seconds;
  return out;
}

// ---- LP problems -------------------------------------------------------------

Json lp_to_json(const LinearProgram<Rational>& lp) {
  Json out;
  out["sense"] = lp.sense == Sense::Maximize ? "max" : "min";
  out["objective"] = vector_to_json(lp.objective);
  Json rows = Json::array();
  for (Index i = 0; i < lp.num_rows(); ++i)
    rows.push_back(vector_to_json(VectorXr(lp.constraints.row(i).transpose())));
  out["matrix"] = rows;
  Json rels = Json::array();
  for (const Relation r : lp.relations)
    rels.push_back(r == Relation::LessEq ? "<=" : (r == Relation::Equal ? "==" : ">="));
  out["relations"] = rels;
  out["rhs"] = vector_to_json(lp.rhs);
  Json bounds = Json::array();
  for (const auto& vb : lp.bounds) {
    Json b;
    switch (vb.kind) {
      case BoundKind::Free: b["kind"] = "free"; break;
      case BoundKind::NonNegative: b["kind"] = "nonneg"; break;
      case BoundKind::Box:
        b["kind"] = "box";
        b["lower"] = format_rational(vb.lower);
        b["upper"] = format_rational(vb.upper);
        break;
    }
    bounds.push_back(b);
  }
  out["bounds"] = bounds;
  return out;
}

LinearProgram<Rational> lp_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("lp: expected an object");
  LinearProgram<Rational> lp;
  const std::string sense = j.value("sense", "max");
  if (sense == "max")
    lp.sense = Sense::Maximize;
  else if (sense == "min")
    lp.sense = Sense::Minimize;
  else
    throw ValidationError("lp.sense: expected 'max' or 'min'");
  lp.objective = parse_vector(j.at("objective"), "lp.objective", -1, false);
  const Index n = lp.objective.size();
  const Json& rows = j.at("matrix");
  if (!rows.is_array()) throw ValidationError("lp.matrix: expected an array");
  lp.constraints = MatrixXr(static_cast<Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    lp.constraints.row(static_cast<Index>(i)) =
        parse_vector(rows[i], "lp.matrix[" + std::to_string(i) + "]", n, false).transpose();
  for (const auto& r : j.at("relations")) {
    const std::string rel = r.get<std::string>();
    if (rel == "<=")
      lp.relations.push_back(Relation::LessEq);
    else if (rel == "==" || rel == "=")
      lp.relations.push_back(Relation::Equal);
    else if (rel == ">=")
      lp.relations.push_back(Relation::GreaterEq);
    else
      throw ValidationError("lp.relations: expected '<=', '==' or '>='");
  }
  lp.rhs = parse_vector(j.at("rhs"), "lp.rhs", lp.constraints.rows(), false);
  for (const auto& b : j.at("bounds")) {
    const std::string kind = b.at("kind").get<std::string>();
    if (kind == "free")
      lp.bounds.push_back(VariableBound<Rational>::free());
    else if (kind == "nonneg")
      lp.bounds.push_back(VariableBound<Rational>::non_negative());
    else if (kind == "box")
      lp.bounds.push_back(VariableBound<Rational>::box(
          parse_rational(b.at("lower").get<std::string>()),
          parse_rational(b.at("upper").get<std::string>())));
    else
      throw ValidationError("lp.bounds: unknown kind '" + kind + "'");
  }
  lp.validate();
  return lp;
}

}  // namespace sphsep
