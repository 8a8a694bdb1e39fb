#include "sphsep/harness.hpp"

#include "sphsep/linalg.hpp"
#include "sphsep/lp.hpp"
#include "sphsep/rational.hpp"
#include "sphsep/rng.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>

namespace sphsep {

namespace {

BigInt ceil_rational(const Rational& r) {
  const BigInt num = numerator(r), den = denominator(r);
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q;
}

// Smallest positive integer scale putting u0 on the right side of
// G^T (scale * u0) >= 1; products must all be positive.
VectorXr scaled_witness(const MatrixXr& gens, const VectorXr& u0) {
  Rational min_product(0);
  for (Index j = 0; j < gens.cols(); ++j) {
    const Rational p = dot(gens.col(j), u0);
    if (j == 0 || p < min_product) min_product = p;
  }
  BigInt scale = ceil_rational(Rational(1) / min_product);
  if (scale < 1) scale = 1;
  return VectorXr(u0 * Rational(scale));
}

VectorXd random_unit_direction(Rng& rng, Index n) {
  for (;;) {
    VectorXd d(n);
    for (Index i = 0; i < n; ++i) d[i] = rng.unit() * 2.0 - 1.0;
    const double norm = d.norm();
    if (norm > 1e-3) return VectorXd(d / norm);
  }
}

}  // namespace

std::pair<ClosedSphericalConvex, ClosedSphericalConvex> gen_disjoint_closed(
    Index n, int k, const Rational& delta, std::uint64_t seed) {
  if (n < 2 || k < 1 || !(delta > 0)) throw ValidationError("bad generator parameters");
  Rng rng(seed);
  VectorXr u0 = rng.nonzero_lattice_vector(n);
  // Scale u0 so that u0 itself satisfies the side-1 margin; that keeps the
  // deterministic fallback below valid for any delta.
  {
    const Rational sq = dot(u0, u0);
    BigInt scale = ceil_rational(delta * l1_norm(u0) / sq);
    if (scale < 1) scale = 1;
    u0 *= Rational(scale);
  }

  const auto draw_side = [&](int side_sign) {
    MatrixXr gens(n, k);
    for (int i = 0; i < k; ++i) {
      bool accepted = false;
      for (int attempt = 0; attempt < 200 && !accepted; ++attempt) {
        VectorXr g = rng.nonzero_lattice_vector(n);
        if (Rational(side_sign) * dot(g, u0) >= delta * l1_norm(g)) {
          gens.col(i) = g;
          accepted = true;
        }
      }
      if (!accepted) gens.col(i) = VectorXr(u0 * Rational(side_sign * (i + 1)));
    }
    return gens;
  };

  MatrixXr g1 = draw_side(+1), g2 = draw_side(-1);
  VectorXr w1 = scaled_witness(g1, u0);
  VectorXr w2 = scaled_witness(g2, VectorXr(-u0));
  return {ClosedSphericalConvex{make_ray_set(n, std::move(g1)), std::move(w1)},
          ClosedSphericalConvex{make_ray_set(n, std::move(g2)), std::move(w2)}};
}

IntersectingPair gen_intersecting_closed(Index n, int k, std::uint64_t seed) {
  if (n < 2 || k < 2) throw ValidationError("bad generator parameters");
  Rng rng(seed);
  const VectorXr x = rng.nonzero_lattice_vector(n);
  const Rational sq = dot(x, x);

  const auto draw_side = [&]() {
    VectorXr d = rng.lattice_vector(n);
    const Rational t = dot(d, x) < 0 ? Rational(-dot(d, x)) : dot(d, x);
    if (t >= sq) d /= Rational(ceil_rational(2 * t / sq));
    MatrixXr gens(n, k);
    gens.col(0) = x + d;  // (col0 + col1)/2 = x plants the common ray
    gens.col(1) = x - d;
    for (int i = 2; i < k; ++i) {
      bool accepted = false;
      for (int attempt = 0; attempt < 200 && !accepted; ++attempt) {
        VectorXr g = rng.nonzero_lattice_vector(n);
        if (dot(g, x) > 0) {
          gens.col(i) = g;
          accepted = true;
        }
      }
      if (!accepted) gens.col(i) = VectorXr(x * Rational(i + 2));
    }
    return gens;
  };

  MatrixXr g1 = draw_side(), g2 = draw_side();
  VectorXr w1 = scaled_witness(g1, x);
  VectorXr w2 = scaled_witness(g2, x);
  return IntersectingPair{
      ClosedSphericalConvex{make_ray_set(n, std::move(g1)), std::move(w1)},
      ClosedSphericalConvex{make_ray_set(n, std::move(g2)), std::move(w2)}, x};
}

std::pair<OpenConeH, OpenConeH> gen_open_pair(Index n, int m, std::uint64_t seed, bool disjoint) {
  if (n < 2 || m < 1) throw ValidationError("bad generator parameters");
  Rng rng(seed);

  const auto build_side = [&](const VectorXr& anchor, bool pin_anchor_row) {
    MatrixXr rows(m, n);
    Index start = 0;
    if (pin_anchor_row) {
      rows.row(0) = anchor.transpose();
      start = 1;
    }
    for (Index i = start; i < m; ++i) {
      bool accepted = false;
      for (int attempt = 0; attempt < 200 && !accepted; ++attempt) {
        VectorXr a = rng.nonzero_lattice_vector(n);
        if (dot(a, anchor) > 0) {
          rows.row(i) = a.transpose();
          accepted = true;
        }
      }
      if (!accepted) rows.row(i) = VectorXr(anchor * Rational(i + 1)).transpose();
    }
    Rational min_product(0);
    for (Index i = 0; i < m; ++i) {
      const Rational p = dot(rows.row(i).transpose(), anchor);
      if (i == 0 || p < min_product) min_product = p;
    }
    BigInt scale = ceil_rational(Rational(1) / min_product);
    if (scale < 1) scale = 1;
    return OpenConeH{n, std::move(rows), VectorXr(anchor * Rational(scale))};
  };

  if (disjoint) {
    const VectorXr u0 = rng.nonzero_lattice_vector(n);
    OpenConeH p1 = build_side(u0, /*pin_anchor_row=*/true);
    OpenConeH p2 = build_side(VectorXr(-u0), /*pin_anchor_row=*/true);
    return {std::move(p1), std::move(p2)};
  }
  const VectorXr shared = rng.nonzero_lattice_vector(n);
  OpenConeH p1 = build_side(shared, /*pin_anchor_row=*/false);
  OpenConeH p2 = build_side(shared, /*pin_anchor_row=*/false);
  return {std::move(p1), std::move(p2)};
}

bool e_member_closed_float(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2,
                           const VectorXd& u_hat, double tol) {
  const MatrixXd g1 = to_double(b1.rays.generators), g2 = to_double(b2.rays.generators);
  for (Index j = 0; j < g1.cols(); ++j)
    if (!(g1.col(j).normalized().dot(u_hat) > tol)) return false;
  for (Index j = 0; j < g2.cols(); ++j)
    if (!(g2.col(j).normalized().dot(u_hat) < -tol)) return false;
  return true;
}

namespace {

struct TrialContext {
  const SuiteConfig& cfg;
  Rng rng;

  explicit TrialContext(const SuiteConfig& cfg_, std::uint64_t seed) : cfg(cfg_), rng(seed) {}

  Index dim() {
    return static_cast<Index>(
        cfg.dims[static_cast<std::size_t>(rng.int_in(0, static_cast<std::int64_t>(cfg.dims.size()) - 1))]);
  }
  int gens() { return static_cast<int>(rng.int_in(cfg.gens_min, cfg.gens_max)); }
};

// Lift of a float vector into exact coordinates, for strict sign checks.
VectorXr exact_lift(const VectorXd& v) { return lift_to_rational(v); }

bool exact_or_float_member(const TrialContext& ctx, const ClosedSphericalConvex& b1,
                           const ClosedSphericalConvex& b2, const VectorXd& u) {
  if (ctx.cfg.float_mode) return e_member_closed_float(b1, b2, u, ctx.cfg.tolerance);
  return e_member_closed(b1, b2, exact_lift(u));
}

Polytope random_open_interior_polytope(Rng& rng, Index n) {
  const Index extras = rng.int_in(0, 2);
  MatrixXr vertices(n, n + 1 + extras);
  vertices.col(0) = rng.lattice_vector(n);
  for (Index i = 1; i <= n; ++i) {
    vertices.col(i) = vertices.col(0);
    Rational c = rng.lattice(1, 100);
    if (rng.int_in(0, 1) == 1) c = -c;
    vertices.col(i)[i - 1] += c;  // axis offsets force full affine rank
  }
  for (Index j = n + 1; j < vertices.cols(); ++j)
    vertices.col(j) = vertices.col(0) + rng.lattice_vector(n);
  return make_polytope(n, std::move(vertices), PolytopeKind::OpenInterior);
}

Polytope random_compact_polytope(Rng& rng, Index n) {
  for (;;) {
    const Index m = rng.int_in(3, 6);
    MatrixXr vertices(n, m);
    bool any_nonzero = false;
    for (Index j = 0; j < m; ++j) {
      vertices.col(j) = rng.lattice_vector(n);
      any_nonzero = any_nonzero || !is_zero_vector(vertices.col(j));
    }
    if (any_nonzero) return make_polytope(n, std::move(vertices), PolytopeKind::Compact);
  }
}

// Strictly interior rational point: positive integer weights, normalized.
VectorXr interior_sample(Rng& rng, const Polytope& p) {
  const Index m = p.count();
  VectorXr weights(m);
  Rational total(0);
  for (Index j = 0; j < m; ++j) {
    weights[j] = Rational(rng.int_in(1, 100));
    total += weights[j];
  }
  return VectorXr(p.vertices * weights / total);
}

// For a non-member query of an open-interior polytope, an interior point
// taking <x, xstar> >= alpha exists; build one near the maximizing vertex.
VectorXr violating_interior_point(const Polytope& p, const VectorXr& xstar,
                                  const Rational& alpha) {
  const Index m = p.count();
  const VectorXr centroid = p.vertices.rowwise().sum() / Rational(m);
  if (is_zero_vector(xstar)) return centroid;  // <x,0> = 0 >= alpha whenever alpha <= 0
  const Rational sup = sigma(p, xstar);
  Index best = 0;
  for (Index j = 0; j < m; ++j)
    if (dot(p.vertices.col(j), xstar) == sup) { best = j; break; }
  const Rational at_centroid = dot(centroid, xstar);
  Rational eps(1, 2);
  if (sup > at_centroid) {
    const Rational candidate = (sup - alpha) / (2 * (sup - at_centroid));
    if (candidate < eps) eps = candidate;
  }
  return VectorXr((Rational(1) - eps) * p.vertices.col(best) + eps * centroid);
}

bool prop_sandwich(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const Polytope p = random_open_interior_polytope(rng, n);
  const int samples = 30;
  for (int q = 0; q < 6; ++q) {
    VectorXr xstar;
    Rational alpha;
    switch (q) {
      case 0: xstar = VectorXr::Zero(n); alpha = rng.lattice(1, 100); break;
      case 1: xstar = VectorXr::Zero(n); alpha = -rng.lattice(0, 100); break;
      case 2: xstar = rng.nonzero_lattice_vector(n); alpha = sigma(p, xstar); break;
      case 3: xstar = rng.nonzero_lattice_vector(n); alpha = sigma(p, xstar) + rng.lattice(1, 100); break;
      case 4: xstar = rng.nonzero_lattice_vector(n); alpha = sigma(p, xstar) - rng.lattice(1, 100); break;
      default: xstar = rng.lattice_vector(n); alpha = rng.lattice(-100, 100); break;
    }
    const DAlphaQuery query{xstar, alpha};
    const bool member = d_alpha_member(p, query);
    // Closed form vs. the defining quantifier over interior points.
    if (member) {
      if (is_zero_vector(xstar)) {
        if (!(alpha > 0)) return false;
      } else {
        for (int s = 0; s < samples; ++s)
          if (!(dot(interior_sample(rng, p), xstar) < alpha)) return false;
      }
    } else {
      const VectorXr witness = violating_interior_point(p, xstar, alpha);
      if (dot(witness, xstar) < alpha) return false;
      if (conv_member_primal(p, witness).member == false) return false;  // stays inside conv V
    }
  }
  return true;
}

bool prop_openness_radius(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const Polytope p = random_compact_polytope(rng, n);
  const VectorXr xstar = rng.lattice_vector(n);
  const Rational alpha = sigma(p, xstar) + rng.lattice(1, 100);
  const DAlphaQuery query{xstar, alpha};
  const OpennessRadius rad = openness_radius(p, query);
  if (rad.gamma != (alpha - sigma(p, xstar)) / 2) return false;
  if (!(rad.rho > 0)) return false;
  if (!std::isfinite(rad.rho)) return true;
  const VectorXd base = to_double(xstar);
  for (int t = 0; t < 100; ++t) {
    const VectorXd shifted = base + 0.999 * rad.rho * random_unit_direction(rng, n);
    if (!(sigma(p, exact_lift(shifted)) < alpha)) return false;
  }
  return true;
}

bool prop_conv_duality(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const Polytope p = random_compact_polytope(rng, n);
  for (int t = 0; t < 3; ++t) {
    if (!conv_member_dual(p, interior_sample(rng, p)).member) return false;
    conv_member_dual(p, rng.lattice_vector(n));  // throws on route disagreement
  }
  return conv_member_dual(p, p.vertices.col(0)).member;
}

LinearProgram<Rational> common_ray_system(const ClosedSphericalConvex& b1,
                                          const ClosedSphericalConvex& b2) {
  const Index n = b1.dim(), k1 = b1.rays.count(), k2 = b2.rays.count();
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Zero(k1 + k2);
  lp.constraints = MatrixXr::Zero(n + 1, k1 + k2);
  lp.constraints.block(0, 0, n, k1) = b1.rays.generators;
  lp.constraints.block(0, k1, n, k2) = -b2.rays.generators;
  lp.constraints.row(n).setOnes();
  lp.relations.assign(static_cast<std::size_t>(n + 1), Relation::Equal);
  lp.rhs = VectorXr::Zero(n + 1);
  lp.rhs[n] = 1;
  lp.bounds.assign(static_cast<std::size_t>(k1 + k2), VariableBound<Rational>::non_negative());
  return lp;
}

bool prop_thm1i(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const int k = ctx.gens();
  const auto [b1, b2] = gen_disjoint_closed(n, k, ctx.cfg.delta, rng.next());
  const ClosedSeparation sep = separate_closed(b1, b2);
  if (!std::holds_alternative<Separator>(sep)) return false;
  const Separator& s = std::get<Separator>(sep);
  if (!e_member_closed(b1, b2, s.u)) return false;
  if (solve(common_ray_system(b1, b2)).status != LpStatus::Infeasible) return false;

  const IntersectingPair pair = gen_intersecting_closed(n, std::max(k, 2), rng.next());
  if (!std::holds_alternative<CommonRayWitness>(separate_closed(pair.side1, pair.side2)))
    return false;
  for (int t = 0; t < 10; ++t)
    if (e_member_closed(pair.side1, pair.side2, rng.nonzero_lattice_vector(n))) return false;
  return true;
}

bool verify_closed_separator(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2,
                             const Separator& s) {
  if (is_zero_vector(s.u)) return false;
  const VectorXr p1 = b1.rays.generators.transpose() * s.u;
  const VectorXr p2 = b2.rays.generators.transpose() * s.u;
  if (p1 != s.side1_products || p2 != s.side2_products) return false;
  for (Index i = 0; i < p1.size(); ++i)
    if (!(p1[i] > 0)) return false;
  for (Index j = 0; j < p2.size(); ++j)
    if (!(p2[j] < 0)) return false;
  return s.side1_margin > 0 && s.side2_margin > 0;
}

bool prop_dichotomy(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const int k = ctx.gens();
  {
    const auto [b1, b2] = gen_disjoint_closed(n, k, ctx.cfg.delta, rng.next());
    const ClosedSeparation sep = separate_closed(b1, b2);
    const Separator* s = std::get_if<Separator>(&sep);
    if (!s || !verify_closed_separator(b1, b2, *s)) return false;
  }
  const IntersectingPair pair = gen_intersecting_closed(n, std::max(k, 2), rng.next());
  const ClosedSeparation sep = separate_closed(pair.side1, pair.side2);
  const CommonRayWitness* w = std::get_if<CommonRayWitness>(&sep);
  if (!w) return false;
  if (is_zero_vector(w->x)) return false;
  for (Index i = 0; i < w->lambda.size(); ++i)
    if (w->lambda[i] < 0) return false;
  for (Index j = 0; j < w->mu.size(); ++j)
    if (w->mu[j] < 0) return false;
  if (VectorXr(pair.side1.rays.generators * w->lambda) != w->x) return false;
  if (VectorXr(pair.side2.rays.generators * w->mu) != w->x) return false;
  return cone_member(pair.side1.rays, w->x).member && cone_member(pair.side2.rays, w->x).member;
}

bool prop_openness_of_E(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const auto [b1, b2] = gen_disjoint_closed(ctx.dim(), ctx.gens(), ctx.cfg.delta, rng.next());
  const ClosedSeparation sep = separate_closed(b1, b2);
  const Separator* s = std::get_if<Separator>(&sep);
  if (!s) return false;
  const double radius = 0.5 * s->min_margin();
  if (!(radius > 0)) return false;
  for (int t = 0; t < 100; ++t) {
    const VectorXd shifted =
        s->u_hat + radius * rng.unit() * random_unit_direction(rng, s->u_hat.size());
    if (!exact_or_float_member(ctx, b1, b2, shifted)) return false;
  }
  return true;
}

bool verify_open_separator(const OpenConeH& p1, const OpenConeH& p2, const Separator& s,
                           Rng& rng) {
  if (is_zero_vector(s.u)) return false;
  for (Index i = 0; i < s.lambda.size(); ++i)
    if (s.lambda[i] < 0) return false;
  for (Index j = 0; j < s.mu.size(); ++j)
    if (s.mu[j] < 0) return false;
  if (VectorXr(p1.halfspaces.transpose() * s.lambda) != s.u) return false;
  if (VectorXr(-p2.halfspaces.transpose() * s.mu) != s.u) return false;
  // Spot-check strictness on interior points of each side.
  const auto interior_jitter = [&](const OpenConeH& cone) {
    VectorXr jitter = rng.lattice_vector(cone.dim);
    for (int halvings = 0; halvings < 64; ++halvings) {
      VectorXr x = cone.interior_point + jitter;
      bool inside = true;
      const VectorXr products = cone.halfspaces * x;
      for (Index i = 0; i < products.size(); ++i)
        if (!(products[i] > 0)) { inside = false; break; }
      if (inside) return x;
      jitter /= 2;
    }
    return cone.interior_point;
  };
  for (int t = 0; t < 5; ++t) {
    if (!(dot(interior_jitter(p1), s.u) > 0)) return false;
    if (!(dot(interior_jitter(p2), s.u) < 0)) return false;
  }
  return true;
}

bool prop_open_dichotomy(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const int m = ctx.gens();
  {
    const auto [p1, p2] = gen_open_pair(n, m, rng.next(), /*disjoint=*/true);
    const OpenSeparation sep = separate_open(p1, p2);
    const Separator* s = std::get_if<Separator>(&sep);
    if (!s || !verify_open_separator(p1, p2, *s, rng)) return false;
  }
  const auto [p1, p2] = gen_open_pair(n, m, rng.next(), /*disjoint=*/false);
  const OpenSeparation sep = separate_open(p1, p2);
  const OpenIntersectionWitness* w = std::get_if<OpenIntersectionWitness>(&sep);
  if (!w) return false;
  const VectorXr r1 = p1.halfspaces * w->x, r2 = p2.halfspaces * w->x;
  for (Index i = 0; i < r1.size(); ++i)
    if (r1[i] < 1) return false;
  for (Index i = 0; i < r2.size(); ++i)
    if (r2[i] < 1) return false;
  return true;
}

// Nonzero members of R+E obtained by maximizing random objectives over
// {u = A1^T l = -A2^T m, l,m >= 0, sum <= 1}.
std::vector<VectorXr> cone_member_pool(const OpenConeH& p1, const OpenConeH& p2, Rng& rng,
                                       const VectorXr& seed_member, int extra) {
  const Index n = p1.dim, m1 = p1.halfspaces.rows(), m2 = p2.halfspaces.rows();
  std::vector<VectorXr> pool;
  if (!is_zero_vector(seed_member)) pool.push_back(seed_member);
  for (int t = 0; t < extra; ++t) {
    LinearProgram<Rational> lp;
    lp.sense = Sense::Maximize;
    const Index vars = n + m1 + m2;
    lp.objective = VectorXr::Zero(vars);
    lp.objective.head(n) = rng.nonzero_lattice_vector(n);
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
    if (out.status == LpStatus::Optimal && !is_zero_vector(out.primal.head(n)))
      pool.push_back(out.primal.head(n));
  }
  return pool;
}

bool prop_open_cone_structure(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const auto [p1, p2] = gen_open_pair(n, ctx.gens(), rng.next(), /*disjoint=*/true);
  const OpenSeparation sep = separate_open(p1, p2);
  const Separator* s = std::get_if<Separator>(&sep);
  if (!s) return false;
  if (!e_cone_member_open(p1, p2, VectorXr::Zero(n))) return false;  // the apex
  const std::vector<VectorXr> pool = cone_member_pool(p1, p2, rng, s->u, 3);
  if (pool.empty()) return false;
  for (const VectorXr& u : pool) {
    if (!e_cone_member_open(p1, p2, u)) return false;
    if (e_cone_member_open(p1, p2, VectorXr(-u))) return false;  // pointedness
    if (!e_cone_member_open(p1, p2, VectorXr(u * Rational(3, 2)))) return false;
  }
  for (std::size_t a = 0; a + 1 < pool.size(); ++a)
    if (!e_cone_member_open(p1, p2, VectorXr(pool[a] + pool[a + 1]))) return false;
  return true;
}

bool prop_ple_convexity(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const Index n = ctx.dim();
  const auto [b1, b2] = gen_disjoint_closed(n, ctx.gens(), ctx.cfg.delta, rng.next());
  const ClosedSeparation sep = separate_closed(b1, b2);
  const Separator* s = std::get_if<Separator>(&sep);
  if (!s) return false;
  std::vector<VectorXr> members{s->u};
  for (int t = 0; t < 5; ++t) {
    const VectorXr candidate = s->u + rng.lattice_vector(n, -10, 10, 100);
    if (!is_zero_vector(candidate) && e_member_closed(b1, b2, candidate))
      members.push_back(candidate);
  }
  for (const VectorXr& a : members)
    for (const VectorXr& b : members)
      if (!e_member_closed(b1, b2, VectorXr(a + b))) return false;
  return true;
}

bool prop_margin_consistency(TrialContext& ctx) {
  Rng& rng = ctx.rng;
  const auto [b1, b2] = gen_disjoint_closed(ctx.dim(), ctx.gens(), ctx.cfg.delta, rng.next());
  const ClosedSeparation sep = separate_closed(b1, b2);
  const Separator* s = std::get_if<Separator>(&sep);
  if (!s) return false;
  if (!(s->side1_margin > 0) || !(s->side2_margin > 0)) return false;
  // Margins must match a direct recomputation over normalized generators.
  const MatrixXd g1 = to_double(b1.rays.generators), g2 = to_double(b2.rays.generators);
  double m1 = std::numeric_limits<double>::infinity(), m2 = m1;
  for (Index j = 0; j < g1.cols(); ++j) m1 = std::min(m1, g1.col(j).normalized().dot(s->u_hat));
  for (Index j = 0; j < g2.cols(); ++j) m2 = std::min(m2, -g2.col(j).normalized().dot(s->u_hat));
  if (std::abs(m1 - s->side1_margin) > 1e-12 || std::abs(m2 - s->side2_margin) > 1e-12)
    return false;

  const MaxMargin margin = max_margin(b1, b2);
  if (!(margin.r_lo > 0)) return false;
  const double r = thickening_radius(b1, b2);
  if (std::abs(r - margin.r_lo / 2.0) > 1e-15) return false;
  return thickened_disjoint(b1, b2, rational_from_double(r));
}

}  // namespace

int SuiteReport::total_trials() const {
  int total = 0;
  for (const auto& p : properties) total += p.trials;
  return total;
}

int SuiteReport::total_failures() const {
  int total = 0;
  for (const auto& p : properties) total += p.failures;
  return total;
}

void SuiteReport::print(std::ostream& os) const {
  os << std::left << std::setw(34) << "property" << std::right << std::setw(8) << "trials"
     << std::setw(8) << "pass" << std::setw(8) << "fail" << "\n";
  for (const auto& p : properties) {
    os << std::left << std::setw(34) << p.name << std::right << std::setw(8) << p.trials
       << std::setw(8) << p.passes << std::setw(8) << p.failures << "\n";
    if (!p.failing_seeds.empty()) {
      os << "  failing seeds:";
      for (const auto s : p.failing_seeds) os << " " << s;
      os << "\n";
    }
  }
  os << "total: " << total_trials() << " trials, " << total_failures() << " failures, "
     << wall_seconds << "s\n";
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.trials < 1 || !(cfg.delta > 0)) throw ValidationError("bad suite configuration");
  using CheckFn = bool (*)(TrialContext&);
  const std::pair<const char*, CheckFn> properties[] = {
      {"prop1i-sandwich", &prop_sandwich},
      {"prop1ii-openness-radius", &prop_openness_radius},
      {"conv-member-duality", &prop_conv_duality},
      {"thm1i-separator-excludes-witness", &prop_thm1i},
      {"thm1iii-dichotomy-certificates", &prop_dichotomy},
      {"thm1iii-openness-of-E", &prop_openness_of_E},
      {"thm1ii-open-dichotomy", &prop_open_dichotomy},
      {"thm1ii-cone-structure", &prop_open_cone_structure},
      {"ple-convexity", &prop_ple_convexity},
      {"margin-consistency", &prop_margin_consistency},
  };

  std::vector<std::pair<const char*, CheckFn>> checks(std::begin(properties),
                                                      std::end(properties));
  if (cfg.include_failing_self_test)
    checks.emplace_back("self-test-corrupted-checker", +[](TrialContext&) { return false; });

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  std::uint64_t property_index = 0;
  for (const auto& [name, fn] : checks) {
    PropertyResult result;
    result.name = name;
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed =
          trial_seed(cfg.seed, (property_index << 32) | static_cast<std::uint64_t>(t));
      ++result.trials;
      bool ok = false;
      try {
        TrialContext ctx(cfg, seed);
        ok = fn(ctx);
      } catch (const std::exception&) {
        ok = false;
      }
      if (ok) {
        ++result.passes;
      } else {
        ++result.failures;
        result.failing_seeds.push_back(seed);
      }
    }
    report.properties.push_back(std::move(result));
    ++property_index;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sphsep
