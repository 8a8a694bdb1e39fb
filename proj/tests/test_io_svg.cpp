#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphsep/harness.hpp"
#include "sphsep/io.hpp"
#include "sphsep/rng.hpp"
#include "sphsep/separation.hpp"
#include "sphsep/svg.hpp"

#include <string>

using namespace sphsep;

namespace {

InstanceFile closed_instance(const MatrixXr& g1, const MatrixXr& g2) {
  InstanceFile instance;
  instance.dim = g1.rows();
  instance.side1 = SideSpec{SideSpec::Kind::Generators, g1, {}};
  instance.side2 = SideSpec{SideSpec::Kind::Generators, g2, {}};
  return instance;
}

MatrixXr cols2(std::initializer_list<std::pair<int, int>> entries) {
  MatrixXr m(2, static_cast<Index>(entries.size()));
  Index j = 0;
  for (const auto& [a, b] : entries) {
    m(0, j) = a;
    m(1, j) = b;
    ++j;
  }
  return m;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("instance parse/print round-trip is bit-exact") {
  Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    const Index n = static_cast<Index>(rng.int_in(2, 5));
    const auto [b1, b2] = gen_disjoint_closed(n, 4, Rational(1) / 10, rng.next());
    InstanceFile instance = closed_instance(b1.rays.generators, b2.rays.generators);
    instance.queries.push_back(rng.lattice_vector(n));
    instance.alpha = rng.lattice(-50, 50, 7);
    const InstanceFile replay = parse_instance(instance_to_json(instance));
    CHECK(replay.dim == instance.dim);
    CHECK(replay.side1->data == instance.side1->data);
    CHECK(replay.side2->data == instance.side2->data);
    CHECK(replay.queries[0] == instance.queries[0]);
    CHECK(*replay.alpha == *instance.alpha);
    // Printing twice is byte-identical.
    CHECK(instance_to_json(instance).dump() == instance_to_json(replay).dump());
  }
}

TEST_CASE("halfspace and vertex sides round-trip") {
  const Json j = Json::parse(R"({
    "dim": 2,
    "side1": {"kind": "halfspaces", "rows": [["1","0"], ["0","1"]]},
    "side2": {"kind": "vertices",
              "vertices": [["1","0"], ["0","1"], ["-1","-1"]],
              "polytope": "open-interior"}
  })");
  const InstanceFile instance = parse_instance(j);
  CHECK(instance.side1->kind == SideSpec::Kind::Halfspaces);
  CHECK(instance.side1->data.rows() == 2);
  CHECK(instance.side2->kind == SideSpec::Kind::Vertices);
  CHECK(instance.side2->polytope_kind == PolytopeKind::OpenInterior);
  const Json back = instance_to_json(instance);
  CHECK(parse_instance(back).side1->data == instance.side1->data);
  CHECK(parse_instance(back).side2->data == instance.side2->data);
}

TEST_CASE("parse diagnostics carry the failing field") {
  Json j;
  j["dim"] = 1;
  CHECK_THROWS_WITH_AS(parse_instance(j), "instance.dim: must be at least 2", ValidationError);

  try {
    parse_instance(Json::parse(
        R"({"dim": 2, "side1": {"kind": "generators", "vectors": [["1","x"]]}})"));
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("bad rational literal") != std::string::npos);
  }

  const Json with_float = Json::parse(
      R"({"dim": 2, "side1": {"kind": "generators", "vectors": [["1", 0.25]]}})");
  try {
    parse_instance(with_float);
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("instance.side1.vectors[0][1]") != std::string::npos);
    CHECK(std::string(e.what()).find("binary64") != std::string::npos);
  }

  // Float mode admits binary64 coordinates, lifted exactly.
  Json lifted_json = with_float;
  lifted_json["mode"] = "float";
  const InstanceFile lifted = parse_instance(lifted_json);
  CHECK(lifted.side1->data(1, 0) == Rational(1) / 4);
}

TEST_CASE("certificates of every kind round-trip and verify") {
  const auto b1 = validate_closed(make_ray_set(2, cols2({{1, 0}})));
  const auto b2 = validate_closed(make_ray_set(2, cols2({{-1, 0}})));
  const InstanceFile instance = closed_instance(b1.rays.generators, b2.rays.generators);

  const auto closed = separate_closed(b1, b2);
  const Separator& sep = std::get<Separator>(closed);
  const CertificateFile parsed = parse_certificate(certificate_to_json(sep));
  CHECK(parsed.kind == CertificateFile::Kind::Separator);
  CHECK(parsed.separator->u == sep.u);
  CHECK(verify_certificate(instance, parsed).ok);

  // Flip one sign: the first failing identity is reported.
  Json corrupt = certificate_to_json(sep);
  corrupt["side1_products"][0] = "-1";
  const VerifyResult bad = verify_certificate(instance, parse_certificate(corrupt));
  CHECK_FALSE(bad.ok);
  CHECK(bad.reason.find("side1 product 0") != std::string::npos);

  // Witness kind.
  const auto n1 = validate_closed(make_ray_set(2, cols2({{1, 0}, {0, 1}})));
  const auto n2 = validate_closed(make_ray_set(2, cols2({{1, 1}, {2, 1}})));
  const InstanceFile nested = closed_instance(n1.rays.generators, n2.rays.generators);
  const auto witness = std::get<CommonRayWitness>(separate_closed(n1, n2));
  const CertificateFile wparsed = parse_certificate(certificate_to_json(witness));
  CHECK(verify_certificate(nested, wparsed).ok);
  CHECK_FALSE(verify_certificate(instance, wparsed).ok);  // wrong instance

  // Open kinds.
  InstanceFile open_instance;
  open_instance.dim = 2;
  open_instance.side1 = SideSpec{SideSpec::Kind::Halfspaces, MatrixXr::Identity(2, 2), {}};
  open_instance.side2 = SideSpec{SideSpec::Kind::Halfspaces, MatrixXr(-MatrixXr::Identity(2, 2)), {}};
  const OpenConeH p1 = side_as_open(open_instance, 1), p2 = side_as_open(open_instance, 2);
  const auto osep = std::get<Separator>(separate_open(p1, p2));
  CHECK(verify_certificate(open_instance, parse_certificate(certificate_to_json(osep))).ok);

  InstanceFile overlapping;
  overlapping.dim = 2;
  overlapping.side1 = SideSpec{SideSpec::Kind::Halfspaces, MatrixXr::Identity(2, 2), {}};
  MatrixXr row(1, 2);
  row << 1, 1;
  overlapping.side2 = SideSpec{SideSpec::Kind::Halfspaces, row, {}};
  const auto ow = std::get<OpenIntersectionWitness>(
      separate_open(side_as_open(overlapping, 1), side_as_open(overlapping, 2)));
  CHECK(verify_certificate(overlapping, parse_certificate(certificate_to_json(ow))).ok);
}

TEST_CASE("lp certificates verify through the file layer") {
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Ones(1);
  lp.constraints = MatrixXr::Ones(1, 1);
  lp.relations = {Relation::LessEq};
  lp.rhs = VectorXr::Ones(1);
  lp.bounds = {VariableBound<Rational>::non_negative()};

  InstanceFile instance;
  instance.dim = 2;  // unrelated to the lp payload
  instance.lp = {lp_from_json(lp_to_json(lp)), true};

  const LpOutcome<Rational> out = solve(lp);
  const CertificateFile cert = parse_certificate(certificate_to_json(out));
  CHECK(verify_certificate(instance, cert).ok);

  Json corrupt = certificate_to_json(out);
  corrupt["objective_value"] = "2";
  CHECK_FALSE(verify_certificate(instance, parse_certificate(corrupt)).ok);
}

TEST_CASE("suite report serializes") {
  SuiteConfig cfg;
  cfg.trials = 1;
  cfg.seed = 1;
  const Json j = suite_report_to_json(run_suite(cfg));
  CHECK(j["total_failures"].get<int>() == 0);
  CHECK(j["properties"].is_array());
  CHECK(j["properties"].size() >= 10);
}

TEST_CASE("2D svg: ray and separator element counts, determinism") {
  const InstanceFile instance = closed_instance(cols2({{1, 0}}), cols2({{-1, 0}}));
  const auto b1 = side_as_closed(instance, 1), b2 = side_as_closed(instance, 2);
  const Separator sep = std::get<Separator>(separate_closed(b1, b2));
  const CertificateFile cert = parse_certificate(certificate_to_json(sep));

  const std::string svg = render_svg(instance, cert);
  CHECK(count_occurrences(svg, "class=\"ray") == 2);
  CHECK(count_occurrences(svg, "class=\"separator\"") == 1);
  CHECK(count_occurrences(svg, "class=\"arc-E\"") == 1);
  CHECK(render_svg(instance, cert) == svg);  // byte-identical

  const std::string bare = render_svg(instance);
  CHECK(count_occurrences(bare, "class=\"separator\"") == 0);
}

TEST_CASE("3D svg renders without a certificate; 4D is rejected") {
  InstanceFile instance;
  instance.dim = 3;
  instance.side1 = SideSpec{SideSpec::Kind::Generators, MatrixXr::Identity(3, 3), {}};
  const std::string svg = render_svg(instance);
  CHECK(count_occurrences(svg, "class=\"generator-point") == 3);
  CHECK(count_occurrences(svg, "class=\"separator\"") == 0);

  InstanceFile high;
  high.dim = 4;
  CHECK_THROWS_AS(render_svg(high), ValidationError);
}
