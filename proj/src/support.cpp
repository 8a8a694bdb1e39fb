#include "sphsep/support.hpp"

#include "sphsep/linalg.hpp"
#include "sphsep/lp.hpp"
#include "sphsep/rational.hpp"

#include <algorithm>
#include <limits>

namespace sphsep {

Polytope make_polytope(Index dim, MatrixXr vertices, PolytopeKind kind) {
  if (dim < 2) throw ValidationError("dimension must be at least 2");
  if (vertices.rows() != dim) throw DimensionMismatch("vertex rows != dim");
  if (vertices.cols() < 1) throw ValidationError("a polytope needs at least one vertex");
  if (kind == PolytopeKind::OpenInterior) {
    MatrixXr spanning(dim, vertices.cols() - 1);
    for (Index j = 1; j < vertices.cols(); ++j)
      spanning.col(j - 1) = vertices.col(j) - vertices.col(0);
    if (exact_rank(std::move(spanning)) != dim)
      throw ValidationError("open-interior polytope must be full-dimensional");
  }
  return Polytope{dim, std::move(vertices), kind};
}

Rational sigma(const Polytope& p, const VectorXr& xstar) {
  if (xstar.size() != p.dim) throw DimensionMismatch("query dimension != polytope dimension");
  Rational best = dot(p.vertices.col(0), xstar);
  for (Index j = 1; j < p.count(); ++j) {
    Rational value = dot(p.vertices.col(j), xstar);
    if (value > best) best = value;
  }
  return best;
}

bool d_alpha_member(const Polytope& p, const DAlphaQuery& q) {
  if (q.xstar.size() != p.dim) throw DimensionMismatch("query dimension != polytope dimension");
  if (p.kind == PolytopeKind::Compact) return sigma(p, q.xstar) < q.alpha;
  // Open interior: the sup over A is not attained, so the boundary of the
  // sublevel set belongs to D_alpha except at the origin.
  if (is_zero_vector(q.xstar)) return q.alpha > 0;
  return sigma(p, q.xstar) <= q.alpha;
}

OpennessRadius openness_radius(const Polytope& p, const DAlphaQuery& q) {
  if (p.kind != PolytopeKind::Compact)
    throw ValidationError("openness radius is defined for the compact kind");
  if (!d_alpha_member(p, q)) throw ValidationError("query is not a member of D_alpha");
  OpennessRadius result;
  result.gamma = (q.alpha - sigma(p, q.xstar)) / 2;
  double max_norm = 0.0;
  for (Index j = 0; j < p.count(); ++j)
    max_norm = std::max(max_norm, to_double(VectorXr(p.vertices.col(j))).norm());
  result.rho = max_norm == 0.0 ? std::numeric_limits<double>::infinity()
                               : to_double(result.gamma) / max_norm;
  return result;
}

ConvexMembership conv_member_primal(const Polytope& p, const VectorXr& x) {
  if (x.size() != p.dim) throw DimensionMismatch("point dimension != polytope dimension");
  const Index n = p.dim, m = p.count();
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Zero(m);
  lp.constraints = MatrixXr(n + 1, m);
  lp.constraints.topRows(n) = p.vertices;
  lp.constraints.row(n).setOnes();
  lp.relations.assign(static_cast<std::size_t>(n + 1), Relation::Equal);
  lp.rhs = VectorXr(n + 1);
  lp.rhs.head(n) = x;
  lp.rhs[n] = 1;
  lp.bounds.assign(static_cast<std::size_t>(m), VariableBound<Rational>::non_negative());

  const LpOutcome<Rational> out = solve(lp);
  ConvexMembership result;
  result.member = out.status == LpStatus::Optimal;
  if (result.member) result.barycentric = out.primal;
  return result;
}

ConvexMembership conv_member_lp_dual(const Polytope& p, const VectorXr& x) {
  if (x.size() != p.dim) throw DimensionMismatch("point dimension != polytope dimension");
  const Index n = p.dim, m = p.count();
  // Variables (x*, t): minimize t - <x,x*> subject to t >= <v_j, x*> and
  // |x*|_inf <= 1. Homogeneity of sigma makes the box restriction lossless.
  LinearProgram<Rational> lp;
  lp.sense = Sense::Minimize;
  lp.objective = VectorXr(n + 1);
  for (Index i = 0; i < n; ++i) lp.objective[i] = -x[i];
  lp.objective[n] = 1;
  lp.constraints = MatrixXr(m, n + 1);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < n; ++i) lp.constraints(j, i) = p.vertices(i, j);
    lp.constraints(j, n) = -1;
  }
  lp.relations.assign(static_cast<std::size_t>(m), Relation::LessEq);
  lp.rhs = VectorXr::Zero(m);
  lp.bounds.assign(static_cast<std::size_t>(n),
                   VariableBound<Rational>::box(Rational(-1), Rational(1)));
  lp.bounds.push_back(VariableBound<Rational>::free());

  const LpOutcome<Rational> out = solve(lp);
  if (out.status != LpStatus::Optimal)
    throw std::logic_error("bounded membership LP must reach an optimum");
  ConvexMembership result;
  result.member = out.objective_value >= 0;
  if (!result.member) result.witness = out.primal.head(p.dim);
  return result;
}

ConvexMembership conv_member_dual(const Polytope& p, const VectorXr& x) {
  ConvexMembership primal = conv_member_primal(p, x);
  ConvexMembership dual = conv_member_lp_dual(p, x);
  if (primal.member != dual.member)
    throw std::logic_error("convex membership routes disagree");
  ConvexMembership result = primal.member ? std::move(primal) : std::move(dual);
  result.routes_agree = true;
  return result;
}

}  // namespace sphsep
