#pragma once

#include "sphsep/cone.hpp"
#include "sphsep/types.hpp"

#include <optional>
#include <variant>

namespace sphsep {

// A certified element of E: u with <g,u> > 0 on side 1 and <h,u> < 0 on
// side 2. Closed case carries the exact per-generator products; open case
// carries cone-combination coefficients u = A1^T lambda = -A2^T mu.
struct Separator {
  bool open_case = false;
  VectorXr u;      // exact, nonzero, unnormalized
  VectorXd u_hat;  // u / |u|_2
  double side1_margin = 0.0;
  double side2_margin = 0.0;
  VectorXr side1_products;  // closed: <g_i, u>, all > 0
  VectorXr side2_products;  // closed: <h_j, u>, all < 0
  VectorXr lambda;          // open: A1^T lambda = u, lambda >= 0
  VectorXr mu;              // open: -A2^T mu = u, mu >= 0

  double min_margin() const { return std::min(side1_margin, side2_margin); }
};

// lambda >= 0, mu >= 0 with G1 lambda = G2 mu = x != 0: a common ray.
struct CommonRayWitness {
  VectorXr lambda;
  VectorXr mu;
  VectorXr x;
};

// x with A1 x >= 1 and A2 x >= 1: a common interior point of P1 and P2.
struct OpenIntersectionWitness {
  VectorXr x;
};

using ClosedSeparation = std::variant<Separator, CommonRayWitness>;
using OpenSeparation = std::variant<Separator, OpenIntersectionWitness>;

ClosedSeparation separate_closed(const ClosedSphericalConvex& b1,
                                 const ClosedSphericalConvex& b2);

OpenSeparation separate_open(const OpenConeH& p1, const OpenConeH& p2);

// Exact sign test of u in PE for the closed pair; throws on u = 0.
bool e_member_closed(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2,
                     const VectorXr& u);

// Membership of u in R+E = {A1^T l : l >= 0} n {-A2^T m : m >= 0};
// u = 0 is a member (the apex).
bool e_cone_member_open(const OpenConeH& p1, const OpenConeH& p2, const VectorXr& u);

struct MaxMargin {
  VectorXd u_hat;  // unit direction
  double r_lo;     // certified margin of u_hat: min over both sides
};

// Euclidean max-margin direction via a sup-norm box LP plus up to 20
// normalize-and-resolve rounds (box swapped for the tangent plane of the
// previous iterate). Works inside the span of the generators.
// Throws ValidationError when the sides are not separable.
MaxMargin max_margin(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2);

// True iff the margin optimum strictly exceeds r, which matches disjointness
// of the r-thickened projective cones; equality counts as not disjoint.
bool thickened_disjoint(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2,
                        const Rational& r);

// r*/2 for the max-margin value r*; thickened_disjoint holds at this radius.
double thickening_radius(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2);

}  // namespace sphsep
