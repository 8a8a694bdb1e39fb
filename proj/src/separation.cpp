#include "sphsep/separation.hpp"

#include "sphsep/linalg.hpp"
#include "sphsep/lp.hpp"
#include "sphsep/rational.hpp"

#include <algorithm>
#include <cmath>

namespace sphsep {

namespace {

MatrixXd normalized_columns(const MatrixXr& gens) {
  MatrixXd out = to_double(gens);
  for (Index j = 0; j < out.cols(); ++j) out.col(j).normalize();
  return out;
}

double side1_margin_of(const MatrixXd& ghat, const VectorXd& u_hat) {
  double m = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < ghat.cols(); ++j) m = std::min(m, ghat.col(j).dot(u_hat));
  return m;
}

Separator make_closed_separator(const ClosedSphericalConvex& b1,
                                const ClosedSphericalConvex& b2, VectorXr u) {
  Separator sep;
  sep.open_case = false;
  sep.side1_products = b1.rays.generators.transpose() * u;
  sep.side2_products = b2.rays.generators.transpose() * u;
  sep.u_hat = normalize_unit(u);
  sep.u = std::move(u);
  sep.side1_margin = side1_margin_of(normalized_columns(b1.rays.generators), sep.u_hat);
  sep.side2_margin = side1_margin_of(-normalized_columns(b2.rays.generators), sep.u_hat);
  return sep;
}

// Margin LP over given columns: max t s.t. <col_i, u> >= t plus one
// normalization row. Variables (u, t), u free in span coordinates.
LpOutcome<double> solve_margin_lp(const MatrixXd& columns, const VectorXd* tangent,
                                  Index span_dim) {
  const Index k = columns.cols();
  LinearProgram<double> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXd::Zero(span_dim + 1);
  lp.objective[span_dim] = 1.0;
  const Index extra = tangent ? 1 : 0;
  lp.constraints = Eigen::MatrixXd::Zero(k + extra, span_dim + 1);
  for (Index j = 0; j < k; ++j) {
    lp.constraints.row(j).head(span_dim) = columns.col(j).transpose();
    lp.constraints(j, span_dim) = -1.0;
  }
  lp.relations.assign(static_cast<std::size_t>(k), Relation::GreaterEq);
  lp.rhs = VectorXd::Zero(k + extra);
  if (tangent) {
    lp.constraints.row(k).head(span_dim) = tangent->transpose();
    lp.relations.push_back(Relation::LessEq);
    lp.rhs[k] = 1.0;
  }
  if (tangent)
    lp.bounds.assign(static_cast<std::size_t>(span_dim), VariableBound<double>::free());
  else
    lp.bounds.assign(static_cast<std::size_t>(span_dim), VariableBound<double>::box(-1.0, 1.0));
  lp.bounds.push_back(VariableBound<double>::free());
  return solve(lp);
}

std::optional<MaxMargin> max_margin_impl(const ClosedSphericalConvex& b1,
                                         const ClosedSphericalConvex& b2) {
  if (b1.dim() != b2.dim()) throw DimensionMismatch("sides have different dimensions");
  const Index n = b1.dim();
  const MatrixXd ghat1 = normalized_columns(b1.rays.generators);
  const MatrixXd ghat2 = normalized_columns(b2.rays.generators);

  // Margins depend on u only through its projection onto the generator
  // span, so optimize there; this also keeps the tangent-plane LP bounded
  // when the generators are rank-deficient.
  MatrixXd all(n, ghat1.cols() + ghat2.cols());
  all << ghat1, ghat2;
  Eigen::ColPivHouseholderQR<MatrixXd> qr(all);
  qr.setThreshold(1e-9);
  const Index span_dim = std::max<Index>(qr.rank(), 1);
  const MatrixXd basis = qr.householderQ() * MatrixXd::Identity(n, span_dim);

  MatrixXd columns(span_dim, all.cols());
  columns.leftCols(ghat1.cols()) = basis.transpose() * ghat1;
  columns.rightCols(ghat2.cols()) = -(basis.transpose() * ghat2);

  const auto margin_of = [&](const VectorXd& u_hat) {
    return std::min(side1_margin_of(ghat1, u_hat), side1_margin_of(-ghat2, u_hat));
  };

  LpOutcome<double> out = solve_margin_lp(columns, nullptr, span_dim);
  if (out.status != LpStatus::Optimal || !(out.objective_value > 1e-9)) return std::nullopt;

  MaxMargin best;
  best.u_hat = normalize_unit(VectorXd(basis * out.primal.head(span_dim)));
  best.r_lo = margin_of(best.u_hat);

  VectorXd w_prev = out.primal.head(span_dim).normalized();
  for (int round = 0; round < 20; ++round) {
    out = solve_margin_lp(columns, &w_prev, span_dim);
    if (out.status != LpStatus::Optimal || !(out.objective_value > 0)) break;
    VectorXd w = out.primal.head(span_dim);
    if (w.norm() < 1e-12) break;
    w.normalize();
    const VectorXd u_hat = normalize_unit(VectorXd(basis * w));
    const double r = margin_of(u_hat);
    if (r > best.r_lo) {
      best.r_lo = r;
      best.u_hat = u_hat;
    }
    if ((w - w_prev).norm() < 1e-13) break;
    w_prev = w;
  }
  return best;
}

}  // namespace

ClosedSeparation separate_closed(const ClosedSphericalConvex& b1,
                                 const ClosedSphericalConvex& b2) {
  if (b1.dim() != b2.dim()) throw DimensionMismatch("sides have different dimensions");
  const Index n = b1.dim();
  const Index k1 = b1.rays.count(), k2 = b2.rays.count();

  // Homogeneity turns the strict system <g,u> > 0 > <h,u> into
  // G1^T u >= 1, G2^T u <= -1.
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Zero(n);
  lp.constraints = MatrixXr(k1 + k2, n);
  lp.constraints.topRows(k1) = b1.rays.generators.transpose();
  lp.constraints.bottomRows(k2) = b2.rays.generators.transpose();
  lp.relations.assign(static_cast<std::size_t>(k1), Relation::GreaterEq);
  lp.relations.insert(lp.relations.end(), static_cast<std::size_t>(k2), Relation::LessEq);
  lp.rhs = VectorXr(k1 + k2);
  lp.rhs.head(k1).setOnes();
  lp.rhs.tail(k2).setConstant(Rational(-1));
  lp.bounds.assign(static_cast<std::size_t>(n), VariableBound<Rational>::free());

  const LpOutcome<Rational> out = solve(lp);
  if (out.status == LpStatus::Optimal)
    return make_closed_separator(b1, b2, out.primal);
  if (out.status != LpStatus::Infeasible)
    throw std::logic_error("separation feasibility LP cannot be unbounded");

  // Farkas multipliers: y1 >= 0 on the >= rows, y2 <= 0 on the <= rows,
  // G1 y1 + G2 y2 = 0, sum(y1) - sum(y2) > 0.
  CommonRayWitness witness;
  witness.lambda = out.dual.head(k1);
  witness.mu = -out.dual.tail(k2);
  Rational total(0);
  for (Index i = 0; i < k1; ++i) total += witness.lambda[i];
  for (Index j = 0; j < k2; ++j) total += witness.mu[j];
  witness.lambda /= total;
  witness.mu /= total;
  witness.x = b1.rays.generators * witness.lambda;
  if (is_zero_vector(witness.x))
    throw std::logic_error("pointed inputs cannot produce a zero common ray");
  return witness;
}

bool e_member_closed(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2,
                     const VectorXr& u) {
  if (u.size() != b1.dim() || u.size() != b2.dim()) throw DimensionMismatch();
  if (is_zero_vector(u)) throw ValidationError("u must be nonzero");
  for (Index j = 0; j < b1.rays.count(); ++j)
    if (!(dot(b1.rays.generators.col(j), u) > 0)) return false;
  for (Index j = 0; j < b2.rays.count(); ++j)
    if (!(dot(b2.rays.generators.col(j), u) < 0)) return false;
  return true;
}

OpenSeparation separate_open(const OpenConeH& p1, const OpenConeH& p2) {
  if (p1.dim != p2.dim) throw DimensionMismatch("cones have different dimensions");
  const Index n = p1.dim;
  const Index m1 = p1.halfspaces.rows(), m2 = p2.halfspaces.rows();

  {  // Intersection test: A1 x >= 1 and A2 x >= 1.
    LinearProgram<Rational> lp;
    lp.sense = Sense::Maximize;
    lp.objective = VectorXr::Zero(n);
    lp.constraints = MatrixXr(m1 + m2, n);
    lp.constraints.topRows(m1) = p1.halfspaces;
    lp.constraints.bottomRows(m2) = p2.halfspaces;
    lp.relations.assign(static_cast<std::size_t>(m1 + m2), Relation::GreaterEq);
    lp.rhs = VectorXr::Ones(m1 + m2);
    lp.bounds.assign(static_cast<std::size_t>(n), VariableBound<Rational>::free());
    const LpOutcome<Rational> out = solve(lp);
    if (out.status == LpStatus::Optimal) return OpenIntersectionWitness{out.primal};
  }

  // Disjoint: a nonzero u in cone(rows A1) n -cone(rows A2) exists. Scan the
  // 2n signed coordinate objectives until one is strictly positive.
  for (Index k = 0; k < n; ++k) {
    for (const int sign : {+1, -1}) {
      LinearProgram<Rational> lp;
      lp.sense = Sense::Maximize;
      const Index vars = n + m1 + m2;  // u, lambda, mu
      lp.objective = VectorXr::Zero(vars);
      lp.objective[k] = Rational(sign);
      lp.constraints = MatrixXr::Zero(2 * n + 1, vars);
      lp.constraints.block(0, 0, n, n) = MatrixXr::Identity(n, n);
      lp.constraints.block(0, n, n, m1) = -p1.halfspaces.transpose();
      lp.constraints.block(n, 0, n, n) = MatrixXr::Identity(n, n);
      lp.constraints.block(n, n + m1, n, m2) = p2.halfspaces.transpose();
      for (Index c = n; c < vars; ++c) lp.constraints(2 * n, c) = 1;
      lp.relations.assign(static_cast<std::size_t>(2 * n), Relation::Equal);
      lp.relations.push_back(Relation::LessEq);
      lp.rhs = VectorXr::Zero(2 * n + 1);
      lp.rhs[2 * n] = 1;
      lp.bounds.assign(static_cast<std::size_t>(n), VariableBound<Rational>::free());
      lp.bounds.insert(lp.bounds.end(), static_cast<std::size_t>(m1 + m2),
                       VariableBound<Rational>::non_negative());

      const LpOutcome<Rational> out = solve(lp);
      if (out.status != LpStatus::Optimal)
        throw std::logic_error("bounded coordinate-scan LP must reach an optimum");
      if (!(out.objective_value > 0)) continue;

      Separator sep;
      sep.open_case = true;
      sep.u = out.primal.head(n);
      sep.lambda = out.primal.segment(n, m1);
      sep.mu = out.primal.tail(m2);
      sep.u_hat = normalize_unit(sep.u);
      sep.side1_margin = normalize_unit(p1.interior_point).dot(sep.u_hat);
      sep.side2_margin = -normalize_unit(p2.interior_point).dot(sep.u_hat);
      return sep;
    }
  }
  throw std::logic_error("disjoint nonempty open cones must admit a separator");
}

bool e_cone_member_open(const OpenConeH& p1, const OpenConeH& p2, const VectorXr& u) {
  if (u.size() != p1.dim || u.size() != p2.dim) throw DimensionMismatch();
  const auto in_row_cone = [&](const MatrixXr& rows, const VectorXr& target) {
    const Index m = rows.rows(), n = rows.cols();
    LinearProgram<Rational> lp;
    lp.sense = Sense::Maximize;
    lp.objective = VectorXr::Zero(m);
    lp.constraints = rows.transpose();  // n x m, columns are the rows of A
    lp.relations.assign(static_cast<std::size_t>(n), Relation::Equal);
    lp.rhs = target;
    lp.bounds.assign(static_cast<std::size_t>(m), VariableBound<Rational>::non_negative());
    return solve(lp).status == LpStatus::Optimal;
  };
  return in_row_cone(p1.halfspaces, u) && in_row_cone(p2.halfspaces, VectorXr(-u));
}

MaxMargin max_margin(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2) {
  auto result = max_margin_impl(b1, b2);
  if (!result) throw ValidationError("max_margin requires separable inputs");
  return *result;
}

bool thickened_disjoint(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2,
                        const Rational& r) {
  if (!(r > 0)) throw ValidationError("thickening radius must be positive");
  const auto margin = max_margin_impl(b1, b2);
  if (!margin) return false;  // intersecting caps stay intersecting when thickened
  return margin->r_lo > to_double(r);
}

double thickening_radius(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2) {
  return max_margin(b1, b2).r_lo / 2.0;
}

}  // namespace sphsep
