#include "sphsep/cone.hpp"

#include "sphsep/linalg.hpp"
#include "sphsep/rational.hpp"
#include "sphsep/rng.hpp"

#include <string>

namespace sphsep {

namespace {

// Same ray direction: g = t*h for some t > 0, tested exactly.
bool same_direction(const VectorXr& g, const VectorXr& h) {
  Index anchor = -1;
  for (Index i = 0; i < g.size(); ++i)
    if (g[i] != 0) { anchor = i; break; }
  if (anchor < 0 || h[anchor] == 0) return false;
  const Rational t = g[anchor] / h[anchor];
  if (!(t > 0)) return false;
  for (Index i = 0; i < g.size(); ++i)
    if (g[i] != t * h[i]) return false;
  return true;
}

}  // namespace

RaySet make_ray_set(Index dim, MatrixXr generators) {
  if (dim < 2) throw ValidationError("dimension must be at least 2");
  if (generators.rows() != dim) throw DimensionMismatch("generator rows != dim");
  if (generators.cols() < 1) throw ValidationError("a ray set needs at least one generator");
  for (Index j = 0; j < generators.cols(); ++j)
    if (is_zero_vector(generators.col(j)))
      throw ValidationError("zero generator at index " + std::to_string(j));
  RaySet rs{dim, std::move(generators), false};
  for (Index a = 0; a < rs.count() && !rs.has_duplicate_rays; ++a)
    for (Index b = a + 1; b < rs.count(); ++b)
      if (same_direction(rs.generators.col(a), rs.generators.col(b))) {
        rs.has_duplicate_rays = true;
        break;
      }
  return rs;
}

PointednessResult is_pointed(const RaySet& rays) {
  const Index n = rays.dim, k = rays.count();
  // Feasibility of G^T u >= 1 over free u; the Farkas vector of the
  // alternative is exactly the Gordan dependence.
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Zero(n);
  lp.constraints = rays.generators.transpose();
  lp.relations.assign(static_cast<std::size_t>(k), Relation::GreaterEq);
  lp.rhs = VectorXr::Ones(k);
  lp.bounds.assign(static_cast<std::size_t>(n), VariableBound<Rational>::free());

  const LpOutcome<Rational> out = solve(lp);
  PointednessResult result;
  if (out.status == LpStatus::Optimal) {
    result.pointed = true;
    result.witness = out.primal;
    return result;
  }
  if (out.status != LpStatus::Infeasible)
    throw std::logic_error("pointedness feasibility LP cannot be unbounded");
  Rational total(0);
  for (Index i = 0; i < k; ++i) total += out.dual[i];
  result.pointed = false;
  result.coefficients = out.dual / total;  // sum normalized to 1
  return result;
}

ClosedSphericalConvex validate_closed(RaySet rays) {
  PointednessResult p = is_pointed(rays);
  if (!p.pointed)
    throw ValidationError(
        "generators are not spherically convex: cone is not pointed "
        "(a convex combination of the rays vanishes)");
  return ClosedSphericalConvex{std::move(rays), std::move(p.witness)};
}

OpenConeCheck open_cone_nonempty(Index dim, const MatrixXr& halfspaces) {
  if (dim < 2) throw ValidationError("dimension must be at least 2");
  if (halfspaces.cols() != dim) throw DimensionMismatch("halfspace columns != dim");
  if (halfspaces.rows() < 1) throw ValidationError("need at least one halfspace row");
  const Index m = halfspaces.rows();
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Zero(dim);
  lp.constraints = halfspaces;
  lp.relations.assign(static_cast<std::size_t>(m), Relation::GreaterEq);
  lp.rhs = VectorXr::Ones(m);
  lp.bounds.assign(static_cast<std::size_t>(dim), VariableBound<Rational>::free());

  const LpOutcome<Rational> out = solve(lp);
  OpenConeCheck check;
  if (out.status == LpStatus::Optimal) {
    check.nonempty = true;
    check.interior_point = out.primal;
  } else {
    check.nonempty = false;
    check.farkas = out.dual;
  }
  return check;
}

OpenConeH validate_open(Index dim, MatrixXr halfspaces) {
  OpenConeCheck check = open_cone_nonempty(dim, halfspaces);
  if (!check.nonempty) throw ValidationError("open cone {Ax > 0} is empty");
  return OpenConeH{dim, std::move(halfspaces), std::move(check.interior_point)};
}

ConeMembership cone_member(const RaySet& rays, const VectorXr& x) {
  if (x.size() != rays.dim) throw DimensionMismatch("point dimension != ray set dimension");
  const Index n = rays.dim, k = rays.count();
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Zero(k);
  lp.constraints = rays.generators;
  lp.relations.assign(static_cast<std::size_t>(n), Relation::Equal);
  lp.rhs = x;
  lp.bounds.assign(static_cast<std::size_t>(k), VariableBound<Rational>::non_negative());

  const LpOutcome<Rational> out = solve(lp);
  ConeMembership result;
  if (out.status == LpStatus::Optimal) {
    result.member = true;
    result.coefficients = out.primal;
  } else {
    result.member = false;
    result.separator = out.dual;
  }
  return result;
}

SphereSamples sphere_sample(const ClosedSphericalConvex& cap, int count, std::uint64_t seed) {
  Rng rng(seed);
  const Index k = cap.rays.count();
  SphereSamples samples;
  samples.points.reserve(static_cast<std::size_t>(count));
  samples.preimages.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    VectorXr coeffs(k);
    for (Index j = 0; j < k; ++j) coeffs[j] = rng.lattice(1, 100);  // strictly positive
    VectorXr combo = cap.rays.generators * coeffs;
    samples.points.push_back(normalize_unit(combo));
    samples.preimages.push_back(std::move(combo));
  }
  return samples;
}

}  // namespace sphsep
