#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sphsep/harness.hpp"
#include "sphsep/rng.hpp"
#include "sphsep/separation.hpp"

#include <cmath>

using namespace sphsep;

namespace {

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

ClosedSphericalConvex cap2(std::initializer_list<std::pair<int, int>> gens) {
  return validate_closed(make_ray_set(2, cols2(gens)));
}

const double kSqrt2Over2 = std::sqrt(2.0) / 2.0;

}  // namespace

TEST_CASE("antipodal rays separate with unit margins") {
  const auto b1 = cap2({{1, 0}}), b2 = cap2({{-1, 0}});
  const auto result = separate_closed(b1, b2);
  const auto* sep = std::get_if<Separator>(&result);
  REQUIRE(sep);
  CHECK(sep->side1_products[0] > 0);
  CHECK(sep->side2_products[0] < 0);
  CHECK(sep->side1_margin == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sep->side2_margin == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e_member_closed(b1, b2, sep->u));
}

TEST_CASE("two-generator wedges separate; u=(1,0) lies in E") {
  const auto b1 = cap2({{1, 0}, {1, 1}}), b2 = cap2({{-1, 1}, {-1, -1}});
  const auto result = separate_closed(b1, b2);
  const auto* sep = std::get_if<Separator>(&result);
  REQUIRE(sep);
  for (Index i = 0; i < 2; ++i) {
    CHECK(sep->side1_products[i] > 0);
    CHECK(sep->side2_products[i] < 0);
  }
  VectorXr e1(2);
  e1 << 1, 0;
  CHECK(e_member_closed(b1, b2, e1));  // four hand-checked dot products
}

TEST_CASE("nested cones yield a common-ray witness") {
  const auto b1 = cap2({{1, 0}, {0, 1}}), b2 = cap2({{1, 1}, {2, 1}});
  const auto result = separate_closed(b1, b2);
  const auto* w = std::get_if<CommonRayWitness>(&result);
  REQUIRE(w);
  CHECK_FALSE(is_zero_vector(w->x));
  CHECK(VectorXr(b1.rays.generators * w->lambda) == w->x);
  CHECK(VectorXr(b2.rays.generators * w->mu) == w->x);
  CHECK(cone_member(b1.rays, w->x).member);
  CHECK(cone_member(b2.rays, w->x).member);
}

TEST_CASE("E membership: strictness excludes the boundary") {
  const auto b1 = cap2({{1, 0}}), b2 = cap2({{-1, 0}});
  VectorXr u(2), v(2), zero(2);
  u << 1, 0;
  v << 0, 1;
  zero << 0, 0;
  CHECK(e_member_closed(b1, b2, u));
  CHECK_FALSE(e_member_closed(b1, b2, v));  // <(1,0),(0,1)> = 0 breaks strictness
  CHECK_THROWS_AS(e_member_closed(b1, b2, zero), ValidationError);
}

TEST_CASE("separators round-trip through e_member_closed") {
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    const Index n = static_cast<Index>(rng.int_in(2, 5));
    const int k = static_cast<int>(rng.int_in(1, 8));
    const auto [b1, b2] = gen_disjoint_closed(n, k, Rational(1) / 10, rng.next());
    const auto result = separate_closed(b1, b2);
    const auto* sep = std::get_if<Separator>(&result);
    REQUIRE(sep);
    CHECK(e_member_closed(b1, b2, sep->u));
    CHECK(e_member_closed(b1, b2, lift_to_rational(sep->u_hat)));
  }
}

TEST_CASE("open separation: opposite quadrants") {
  const OpenConeH p1 = validate_open(2, MatrixXr::Identity(2, 2));
  const OpenConeH p2 = validate_open(2, MatrixXr(-MatrixXr::Identity(2, 2)));
  const auto result = separate_open(p1, p2);
  const auto* sep = std::get_if<Separator>(&result);
  REQUIRE(sep);
  CHECK(sep->open_case);
  CHECK_FALSE(is_zero_vector(sep->u));
  CHECK(VectorXr(p1.halfspaces.transpose() * sep->lambda) == sep->u);
  CHECK(VectorXr(-p2.halfspaces.transpose() * sep->mu) == sep->u);
}

TEST_CASE("open separation: mixed quadrant pair has u along +y") {
  const OpenConeH p1 = validate_open(2, MatrixXr::Identity(2, 2));
  MatrixXr rows(2, 2);
  rows << 1, 0, 0, -1;  // x1 > 0 and x2 < 0
  const OpenConeH p2 = validate_open(2, rows);
  const auto result = separate_open(p1, p2);
  const auto* sep = std::get_if<Separator>(&result);
  REQUIRE(sep);
  CHECK(sep->u[0] == 0);
  CHECK(sep->u[1] > 0);
  CHECK(sep->u_hat[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("open separation: overlapping halfplane reports an interior point") {
  const OpenConeH p1 = validate_open(2, MatrixXr::Identity(2, 2));
  MatrixXr row(1, 2);
  row << 1, 1;
  const OpenConeH p2 = validate_open(2, row);
  const auto result = separate_open(p1, p2);
  const auto* w = std::get_if<OpenIntersectionWitness>(&result);
  REQUIRE(w);
  const VectorXr r1 = p1.halfspaces * w->x, r2 = p2.halfspaces * w->x;
  for (Index i = 0; i < r1.size(); ++i) CHECK(r1[i] >= 1);
  CHECK(r2[0] >= 1);
}

TEST_CASE("R+E membership: quadrant example, apex, round-trip") {
  const OpenConeH p1 = validate_open(2, MatrixXr::Identity(2, 2));
  MatrixXr rows(2, 2);
  rows << 1, 0, 0, -1;
  const OpenConeH p2 = validate_open(2, rows);

  VectorXr up(2), diag(2), zero(2);
  up << 0, 1;
  diag << 1, 1;
  zero << 0, 0;
  CHECK(e_cone_member_open(p1, p2, up));
  CHECK_FALSE(e_cone_member_open(p1, p2, diag));  // (1,1) needs a positive first coordinate from -A2^T mu
  CHECK(e_cone_member_open(p1, p2, zero));

  const auto result = separate_open(p1, p2);
  const auto* sep = std::get_if<Separator>(&result);
  REQUIRE(sep);
  CHECK(e_cone_member_open(p1, p2, sep->u));
}

TEST_CASE("max margin matches the angle-grid oracle on analytic instances") {
  struct Case {
    ClosedSphericalConvex b1, b2;
    double expected;
  };
  const Case cases[] = {
      {cap2({{1, 0}}), cap2({{-1, 0}}), 1.0},
      {cap2({{1, 0}, {0, 1}}), cap2({{-1, 0}, {0, -1}}), kSqrt2Over2},
      {cap2({{1, 0}, {1, 1}}), cap2({{-1, 1}, {-1, -1}}), kSqrt2Over2},
  };
  for (const auto& c : cases) {
    const MaxMargin margin = max_margin(c.b1, c.b2);
    const auto grid = oracles::margin_grid_search_2d(to_double(c.b1.rays.generators),
                                                     to_double(c.b2.rays.generators));
    CHECK(std::abs(margin.r_lo - c.expected) <= 1e-6);
    // The grid maximum sits below r* by at most slope * step / 2.
    CHECK(std::abs(margin.r_lo - grid.r_star) <= 1e-4);
    CHECK(std::abs(margin.u_hat.norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("max margin throws on non-separable input") {
  CHECK_THROWS_AS(max_margin(cap2({{1, 0}, {0, 1}}), cap2({{1, 1}, {2, 1}})), ValidationError);
}

TEST_CASE("thickened disjointness thresholds") {
  const auto b1 = cap2({{1, 0}}), b2 = cap2({{-1, 0}});
  CHECK(thickened_disjoint(b1, b2, Rational(1) / 2));
  CHECK_FALSE(thickened_disjoint(b1, b2, Rational(3) / 2));
  CHECK_THROWS_AS(thickened_disjoint(b1, b2, Rational(0)), ValidationError);

  const auto q1 = cap2({{1, 0}, {0, 1}}), q2 = cap2({{-1, 0}, {0, -1}});
  CHECK(thickened_disjoint(q1, q2, Rational(1) / 2));           // r* ~ 0.7071 > 0.5
  CHECK_FALSE(thickened_disjoint(q1, q2, Rational(3) / 4));     // 0.75 > r*
  CHECK(thickened_disjoint(q1, q2, Rational(1) / 1000));        // r -> 0+ stays disjoint

  // Intersecting caps are never thickened-disjoint.
  CHECK_FALSE(thickened_disjoint(cap2({{1, 0}, {0, 1}}), cap2({{1, 1}, {2, 1}}), Rational(1) / 100));
}

TEST_CASE("thickening radius: analytic halves and round-trip") {
  const auto b1 = cap2({{1, 0}}), b2 = cap2({{-1, 0}});
  CHECK(thickening_radius(b1, b2) == doctest::Approx(0.5).epsilon(1e-6));
  const auto q1 = cap2({{1, 0}, {0, 1}}), q2 = cap2({{-1, 0}, {0, -1}});
  CHECK(thickening_radius(q1, q2) == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-6));

  Rng rng(67);
  for (int t = 0; t < 25; ++t) {
    const auto [c1, c2] =
        gen_disjoint_closed(static_cast<Index>(rng.int_in(2, 4)), 4, Rational(1) / 10, rng.next());
    const double r = thickening_radius(c1, c2);
    CHECK(r > 0);
    CHECK(thickened_disjoint(c1, c2, rational_from_double(r)));
  }
}

TEST_CASE("E is open: margin-ball perturbations stay inside") {
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    const auto [b1, b2] =
        gen_disjoint_closed(static_cast<Index>(rng.int_in(2, 4)), 5, Rational(1) / 10, rng.next());
    const auto result = separate_closed(b1, b2);
    const auto* sep = std::get_if<Separator>(&result);
    REQUIRE(sep);
    const double radius = 0.5 * sep->min_margin();
    REQUIRE(radius > 0);
    for (int s = 0; s < 30; ++s) {
      VectorXd dir(sep->u_hat.size());
      for (Index i = 0; i < dir.size(); ++i) dir[i] = rng.unit() * 2.0 - 1.0;
      if (dir.norm() == 0.0) continue;
      dir *= radius * rng.unit() / dir.norm();
      CHECK(e_member_closed(b1, b2, lift_to_rational(VectorXd(sep->u_hat + dir))));
    }
  }
}

TEST_CASE("PE is convex: sums of members stay members") {
  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    const auto [b1, b2] =
        gen_disjoint_closed(static_cast<Index>(rng.int_in(2, 4)), 4, Rational(1) / 10, rng.next());
    const auto result = separate_closed(b1, b2);
    const auto* sep = std::get_if<Separator>(&result);
    REQUIRE(sep);
    VectorXr u = sep->u;
    VectorXr v = u * Rational(2) + b1.pointedness_witness * Rational(0);  // second member: try a perturbation
    for (int s = 0; s < 5; ++s) {
      const VectorXr candidate = u + rng.lattice_vector(u.size(), -5, 5, 100);
      if (!is_zero_vector(candidate) && e_member_closed(b1, b2, candidate)) {
        v = candidate;
        break;
      }
    }
    CHECK(e_member_closed(b1, b2, VectorXr(u + v)));
  }
}

TEST_CASE("mismatched dimensions are rejected") {
  const auto b1 = cap2({{1, 0}});
  const auto b3 = validate_closed(make_ray_set(3, MatrixXr::Identity(3, 3)));
  CHECK_THROWS_AS(separate_closed(b1, b3), DimensionMismatch);
}
