#pragma once

#include "sphsep/cone.hpp"
#include "sphsep/harness.hpp"
#include "sphsep/lp.hpp"
#include "sphsep/separation.hpp"
#include "sphsep/support.hpp"
#include "sphsep/types.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace sphsep {

using Json = nlohmann::json;

// ---- instance files --------------------------------------------------------

struct SideSpec {
  enum class Kind { Generators, Halfspaces, Vertices };
  Kind kind = Kind::Generators;
  // Generators/vertices live in columns; halfspaces are stored as rows.
  MatrixXr data;
  PolytopeKind polytope_kind = PolytopeKind::Compact;
};

struct InstanceFile {
  Index dim = 0;
  bool float_mode = false;
  std::optional<SideSpec> side1;
  std::optional<SideSpec> side2;
  std::vector<VectorXr> queries;
  std::optional<Rational> alpha;
  std::optional<std::pair<LinearProgram<Rational>, bool>> lp;  // (program, unused)
};

InstanceFile parse_instance(const Json& j);
InstanceFile load_instance(const std::string& path);
Json instance_to_json(const InstanceFile& instance);

// ---- certificate files -----------------------------------------------------

struct CertificateFile {
  enum class Kind { Separator, CommonRay, OpenIntersection, Lp };
  Kind kind = Kind::Separator;
  bool float_mode = false;
  std::optional<Separator> separator;
  std::optional<CommonRayWitness> common_ray;
  std::optional<OpenIntersectionWitness> open_intersection;
  std::optional<LpOutcome<Rational>> lp_outcome;
};

CertificateFile parse_certificate(const Json& j);
CertificateFile load_certificate(const std::string& path);
Json certificate_to_json(const CertificateFile& certificate);

Json certificate_to_json(const Separator& separator, bool float_mode = false);
Json certificate_to_json(const CommonRayWitness& witness);
Json certificate_to_json(const OpenIntersectionWitness& witness);
Json certificate_to_json(const LpOutcome<Rational>& outcome);

// ---- verification ----------------------------------------------------------

struct VerifyResult {
  bool ok = false;
  std::string reason;  // first failing identity when !ok
};

// Re-checks every identity of the certificate against the instance from
// scratch; exact in exact mode, tolerance-based for float-mode certificates.
VerifyResult verify_certificate(const InstanceFile& instance, const CertificateFile& certificate,
                                double tolerance = 1e-9);

// ---- suite reports ---------------------------------------------------------

Json suite_report_to_json(const SuiteReport& report);

// ---- LP (de)serialization, shared by the lp certificate kind ---------------

Json lp_to_json(const LinearProgram<Rational>& lp);
LinearProgram<Rational> lp_from_json(const Json& j);

// Typed views of instance sides; each throws ValidationError when the side
// is missing or of the wrong kind.
ClosedSphericalConvex side_as_closed(const InstanceFile& instance, int which);
OpenConeH side_as_open(const InstanceFile& instance, int which);
Polytope side_as_polytope(const InstanceFile& instance);

}  // namespace sphsep
