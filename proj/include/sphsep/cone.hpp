#pragma once

#include "sphsep/lp.hpp"
#include "sphsep/types.hpp"

#include <cstdint>
#include <vector>

namespace sphsep {

// Finite generator list for B = cone(G) n S^{n-1} and P = cone(G) \ {0}.
// Generators are columns; none may be zero. Duplicate directions are legal
// but flagged.
struct RaySet {
  Index dim = 0;
  MatrixXr generators;  // dim x k
  bool has_duplicate_rays = false;

  Index count() const { return generators.cols(); }
  VectorXr ray(Index i) const { return generators.col(i); }
};

// Throws ValidationError on dim < 2, an empty list, or a zero generator.
RaySet make_ray_set(Index dim, MatrixXr generators);

/** Gordan dichotomy: exactly one branch holds, each exactly certified. */
struct PointednessResult {
  bool pointed = false;
  VectorXr witness;       // pointed: u0 with G^T u0 >= 1
  VectorXr coefficients;  // not pointed: lambda >= 0, sum 1, G lambda = 0
};

PointednessResult is_pointed(const RaySet& rays);

// A validated spherically convex closed cap: pointed cone(G), witness kept.
struct ClosedSphericalConvex {
  RaySet rays;
  VectorXr pointedness_witness;

  Index dim() const { return rays.dim; }
};

// Throws ValidationError (with the dependent-coefficient evidence in the
// message) when the cone is not pointed.
ClosedSphericalConvex validate_closed(RaySet rays);

// Open convex cone P = {x : Ax > 0} in H-form, nonemptiness certified.
struct OpenConeH {
  Index dim = 0;
  MatrixXr halfspaces;     // m x dim, rows a_j
  VectorXr interior_point; // A x0 >= 1
};

struct OpenConeCheck {
  bool nonempty = false;
  VectorXr interior_point;  // nonempty: A x0 >= 1
  VectorXr farkas;          // empty: exact infeasibility certificate
};

OpenConeCheck open_cone_nonempty(Index dim, const MatrixXr& halfspaces);

// Throws ValidationError when {Ax > 0} is empty.
OpenConeH validate_open(Index dim, MatrixXr halfspaces);

struct ConeMembership {
  bool member = false;
  VectorXr coefficients;  // member: lambda >= 0 with G lambda = x
  VectorXr separator;     // otherwise: <g,sep> <= 0 for all g, <x,sep> > 0
};

ConeMembership cone_member(const RaySet& rays, const VectorXr& x);

// Unit samples of B (float mode) plus their exact rational cone pre-images:
// samples[i] = normalize(generators * coefficients[i]), all coefficients > 0.
struct SphereSamples {
  std::vector<VectorXd> points;
  std::vector<VectorXr> preimages;
};

SphereSamples sphere_sample(const ClosedSphericalConvex& cap, int count, std::uint64_t seed);

}  // namespace sphsep
