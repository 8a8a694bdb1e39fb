#pragma once

#include "sphsep/types.hpp"

namespace sphsep {

enum class PolytopeKind { Compact, OpenInterior };

// A = conv(V) (Compact) or A = int conv(V) (OpenInterior). OpenInterior
// requires full affine rank so the interior is nonempty.
struct Polytope {
  Index dim = 0;
  MatrixXr vertices;  // dim x m, columns
  PolytopeKind kind = PolytopeKind::Compact;

  Index count() const { return vertices.cols(); }
};

Polytope make_polytope(Index dim, MatrixXr vertices, PolytopeKind kind);

struct DAlphaQuery {
  VectorXr xstar;
  Rational alpha;
};

// Support value: max over vertices of <v, xstar>.
Rational sigma(const Polytope& p, const VectorXr& xstar);

// Strict sublevel membership xstar in D_alpha = {x* : <x,x*> < alpha for all
// x in A}. Compact: sigma < alpha. OpenInterior: the sandwich closed form —
// nonzero x* with sigma <= alpha, or x* = 0 with alpha > 0.
bool d_alpha_member(const Polytope& p, const DAlphaQuery& q);

struct OpennessRadius {
  Rational gamma;  // (alpha - sigma(xstar)) / 2, exact
  double rho;      // gamma / max vertex norm; every rho-perturbation stays in D_alpha
};

// Compact kind with a member query only.
OpennessRadius openness_radius(const Polytope& p, const DAlphaQuery& q);

struct ConvexMembership {
  bool member = false;
  VectorXr barycentric;     // member: lambda >= 0, sum 1, V lambda = x
  VectorXr witness;         // otherwise: x* with <x,x*> > sigma(x*)
  bool routes_agree = true;
};

// Route (a): feasibility of x = V lambda over the simplex.
ConvexMembership conv_member_primal(const Polytope& p, const VectorXr& x);
// Route (b): min over the sup-norm box of sigma(x*) - <x,x*> is >= 0.
ConvexMembership conv_member_lp_dual(const Polytope& p, const VectorXr& x);
// Both routes; throws std::logic_error if they ever disagree.
ConvexMembership conv_member_dual(const Polytope& p, const VectorXr& x);

}  // namespace sphsep
