#pragma once

#include "sphsep/types.hpp"

#include <atomic>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sphsep {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEq, Equal, GreaterEq };
enum class BoundKind { Free, NonNegative, Box };

template <typename S>
struct VariableBound {
  BoundKind kind = BoundKind::Free;
  S lower{0};
  S upper{0};  // Box only

  static VariableBound free() { return {BoundKind::Free, S(0), S(0)}; }
  static VariableBound non_negative() { return {BoundKind::NonNegative, S(0), S(0)}; }
  static VariableBound box(S lo, S hi) { return {BoundKind::Box, std::move(lo), std::move(hi)}; }
};

/** General-form LP: sense, objective, row relations, per-variable bounds. */
template <typename S>
struct LinearProgram {
  Sense sense = Sense::Maximize;
  Vec<S> objective;                      // c, size n
  Mat<S> constraints;                    // M, m x n
  std::vector<Relation> relations;       // size m
  Vec<S> rhs;                            // b, size m
  std::vector<VariableBound<S>> bounds;  // size n

  Index num_rows() const { return constraints.rows(); }
  Index num_vars() const { return constraints.cols(); }

  void validate() const {
    if (objective.size() != num_vars() || rhs.size() != num_rows() ||
        static_cast<Index>(relations.size()) != num_rows() ||
        static_cast<Index>(bounds.size()) != num_vars())
      throw DimensionMismatch("inconsistent LP dimensions");
    for (const auto& vb : bounds)
      if (vb.kind == BoundKind::Box && vb.upper < vb.lower)
        throw ValidationError("box bound with upper < lower");
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Optimal: primal + dual + objective value. Infeasible: `dual` is the Farkas
// vector. Unbounded: `primal` is a feasible point, `ray` strictly improves.
template <typename S>
struct LpOutcome {
  LpStatus status = LpStatus::Optimal;
  Vec<S> primal;
  Vec<S> dual;
  Vec<S> ray;
  S objective_value{0};
};

template <typename S>
struct SolverTraits {
  static S tolerance() { return S(0); }
};
template <>
struct SolverTraits<double> {
  static double tolerance() { return 1e-9; }
};

template <typename S>
struct SolverOptions {
  S tolerance = SolverTraits<S>::tolerance();
  std::ostream* debug = nullptr;  // tableau iteration dump
  long max_pivots = 200000;
};

// Process-wide default debug sink; single-threaded use only (the CLI).
struct LpDebug {
  static std::ostream* stream;
};

/** Optional global self-check instrumentation for batch runs. */
struct LpAudit {
  static std::atomic<bool> enabled;
  static std::atomic<std::uint64_t> solves;
  static std::atomic<std::uint64_t> verify_passes;
  static std::atomic<std::uint64_t> verify_failures;
  static std::atomic<std::uint64_t> optimal_outcomes;
  static std::atomic<std::uint64_t> strong_duality_exact;
  static void reset();
};

namespace detail {

template <typename S>
S abs_value(const S& v) {
  return v < S(0) ? S(-v) : v;
}

// Dual objective of a general-form LP at (y, d) where d = c - M^T y.
// Box variables contribute sup (max sense) or inf (min sense) of d_j x_j.
template <typename S>
S dual_objective(const LinearProgram<S>& lp, const Vec<S>& y, const Vec<S>& d) {
  S value = lp.rhs.dot(y);
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const auto& vb = lp.bounds[static_cast<std::size_t>(j)];
    if (vb.kind != BoundKind::Box) continue;
    const S at_lo = d[j] * vb.lower;
    const S at_hi = d[j] * vb.upper;
    if (lp.sense == Sense::Maximize)
      value += (at_lo < at_hi) ? at_hi : at_lo;
    else
      value += (at_lo < at_hi) ? at_lo : at_hi;
  }
  return value;
}

}  // namespace detail

// Checks every certificate identity of `out` against `lp`; exact in rational
// mode. `why`, when given, receives the first failing identity.
template <typename S>
bool verify_lp_certificate(const LinearProgram<S>& lp, const LpOutcome<S>& out,
                           S tol = SolverTraits<S>::tolerance(), std::string* why = nullptr) {
  using detail::abs_value;
  const auto fail = [&](const char* what) {
    if (why) *why = what;
    return false;
  };
  lp.validate();
  const Index m = lp.num_rows(), n = lp.num_vars();

  const auto primal_feasible = [&](const Vec<S>& x, const char** what) {
    *what = nullptr;
    if (x.size() != n) { *what = "primal size"; return false; }
    const Vec<S> residual = lp.constraints * x - lp.rhs;
    for (Index i = 0; i < m; ++i) {
      switch (lp.relations[static_cast<std::size_t>(i)]) {
        case Relation::LessEq:    if (residual[i] > tol)  { *what = "row <= violated"; return false; } break;
        case Relation::GreaterEq: if (residual[i] < -tol) { *what = "row >= violated"; return false; } break;
        case Relation::Equal:     if (abs_value(residual[i]) > tol) { *what = "row == violated"; return false; } break;
      }
    }
    for (Index j = 0; j < n; ++j) {
      const auto& vb = lp.bounds[static_cast<std::size_t>(j)];
      if (vb.kind == BoundKind::NonNegative && x[j] < -tol) { *what = "x >= 0 violated"; return false; }
      if (vb.kind == BoundKind::Box && (x[j] < vb.lower - tol || x[j] > vb.upper + tol)) {
        *what = "box bound violated"; return false;
      }
    }
    return true;
  };

  switch (out.status) {
    case LpStatus::Optimal: {
      const char* what = nullptr;
      if (!primal_feasible(out.primal, &what)) return fail(what);
      if (out.dual.size() != m) return fail("dual size");
      if (abs_value(lp.objective.dot(out.primal) - out.objective_value) > tol)
        return fail("objective value mismatch");
      // Dual sign conditions per row.
      for (Index i = 0; i < m; ++i) {
        const Relation rel = lp.relations[static_cast<std::size_t>(i)];
        if (rel == Relation::Equal) continue;
        const bool wants_nonneg =
            (lp.sense == Sense::Maximize) == (rel == Relation::LessEq);
        if (wants_nonneg && out.dual[i] < -tol) return fail("dual sign");
        if (!wants_nonneg && out.dual[i] > tol) return fail("dual sign");
      }
      const Vec<S> d = lp.objective - lp.constraints.transpose() * out.dual;
      for (Index j = 0; j < n; ++j) {
        const auto& vb = lp.bounds[static_cast<std::size_t>(j)];
        if (vb.kind == BoundKind::Free && abs_value(d[j]) > tol)
          return fail("reduced cost on free variable");
        if (vb.kind == BoundKind::NonNegative) {
          if (lp.sense == Sense::Maximize && d[j] > tol) return fail("reduced cost sign");
          if (lp.sense == Sense::Minimize && d[j] < -tol) return fail("reduced cost sign");
          if (abs_value(d[j] * out.primal[j]) > tol) return fail("variable slackness");
        }
        if (vb.kind == BoundKind::Box) {
          const bool at_hi = abs_value(out.primal[j] - vb.upper) <= tol;
          const bool at_lo = abs_value(out.primal[j] - vb.lower) <= tol;
          const bool positive = d[j] > tol, negative = d[j] < -tol;
          if (lp.sense == Sense::Maximize) {
            if (positive && !at_hi) return fail("box slackness");
            if (negative && !at_lo) return fail("box slackness");
          } else {
            if (positive && !at_lo) return fail("box slackness");
            if (negative && !at_hi) return fail("box slackness");
          }
        }
      }
      // Complementary slackness on rows.
      const Vec<S> residual = lp.constraints * out.primal - lp.rhs;
      for (Index i = 0; i < m; ++i)
        if (abs_value(out.dual[i] * residual[i]) > tol) return fail("row slackness");
      if (abs_value(out.objective_value - detail::dual_objective(lp, out.dual, d)) > tol)
        return fail("strong duality");
      return true;
    }

    case LpStatus::Infeasible: {
      if (out.dual.size() != m) return fail("farkas size");
      for (Index i = 0; i < m; ++i) {
        switch (lp.relations[static_cast<std::size_t>(i)]) {
          case Relation::GreaterEq: if (out.dual[i] < -tol) return fail("farkas sign"); break;
          case Relation::LessEq:    if (out.dual[i] > tol)  return fail("farkas sign"); break;
          case Relation::Equal: break;
        }
      }
      const Vec<S> w = lp.constraints.transpose() * out.dual;
      S sup(0);  // sup of w^T x over the variable bounds
      for (Index j = 0; j < n; ++j) {
        const auto& vb = lp.bounds[static_cast<std::size_t>(j)];
        switch (vb.kind) {
          case BoundKind::Free:
            if (abs_value(w[j]) > tol) return fail("farkas: free column not annihilated");
            break;
          case BoundKind::NonNegative:
            if (w[j] > tol) return fail("farkas: nonnegative column sign");
            break;
          case BoundKind::Box: {
            const S at_lo = w[j] * vb.lower, at_hi = w[j] * vb.upper;
            sup += (at_lo < at_hi) ? at_hi : at_lo;
            break;
          }
        }
      }
      if (!(out.dual.dot(lp.rhs) - sup > tol)) return fail("farkas: certificate not strict");
      return true;
    }

    case LpStatus::Unbounded: {
      const char* what = nullptr;
      if (!primal_feasible(out.primal, &what)) return fail(what);
      if (out.ray.size() != n) return fail("ray size");
      const Vec<S> step = lp.constraints * out.ray;
      for (Index i = 0; i < m; ++i) {
        switch (lp.relations[static_cast<std::size_t>(i)]) {
          case Relation::LessEq:    if (step[i] > tol)  return fail("ray violates <= row"); break;
          case Relation::GreaterEq: if (step[i] < -tol) return fail("ray violates >= row"); break;
          case Relation::Equal:     if (abs_value(step[i]) > tol) return fail("ray violates == row"); break;
        }
      }
      for (Index j = 0; j < n; ++j) {
        const auto& vb = lp.bounds[static_cast<std::size_t>(j)];
        if (vb.kind == BoundKind::NonNegative && out.ray[j] < -tol) return fail("ray sign");
        if (vb.kind == BoundKind::Box && abs_value(out.ray[j]) > tol) return fail("ray moves box variable");
      }
      const S gain = lp.objective.dot(out.ray);
      if (lp.sense == Sense::Maximize ? !(gain > tol) : !(gain < -tol))
        return fail("ray does not improve objective");
      return true;
    }
  }
  return fail("unknown status");
}

// Two-phase dense-tableau simplex, Bland's rule, deterministic. One solve per
// instance; distinct instances are safe to run concurrently.
template <typename S>
class SimplexSolver {
 public:
  explicit SimplexSolver(LinearProgram<S> lp, SolverOptions<S> options = {})
      : lp_(std::move(lp)), opt_(std::move(options)) {
    lp_.validate();
  }

  LpOutcome<S> solve() {
    build_tableau();
    run_phase(/*phase_one=*/true);
    LpOutcome<S> out;
    const S z1 = -obj1_[rhs_];
    if (z1 > opt_.tolerance) {
      out.status = LpStatus::Infeasible;
      out.dual = map_dual_from_phase1();
      return out;
    }
    drive_out_artificials();
    const int phase2 = run_phase(/*phase_one=*/false);
    if (phase2 >= 0) {
      out.status = LpStatus::Unbounded;
      out.primal = map_primal();
      out.ray = map_ray(phase2);
      return out;
    }
    out.status = LpStatus::Optimal;
    out.primal = map_primal();
    out.dual = map_dual_from_phase2();
    out.objective_value = lp_.objective.dot(out.primal);
    return out;
  }

 private:
  LinearProgram<S> lp_;
  SolverOptions<S> opt_;

  Index m0_ = 0;       // original rows
  Index mt_ = 0;       // tableau rows (original + box rows)
  Index nstruct_ = 0;  // internal structural columns
  Index nslack_ = 0;
  Index ncols_ = 0;    // structural + slack + artificial
  Index rhs_ = 0;      // rhs column index

  std::vector<Index> var_col_;   // per original var: internal column
  std::vector<Index> var_neg_;   // per original var: negative part (Free) or -1
  std::vector<Index> box_row_;   // per original var: box row or -1
  std::vector<int> row_sign_;    // per tableau row
  Mat<S> tableau_;               // mt_ x (ncols_ + 1)
  Vec<S> obj1_, obj2_;           // reduced-cost rows, last entry = -z
  std::vector<Index> basis_;
  long pivots_ = 0;

  Index art_col(Index row) const { return nstruct_ + nslack_ + row; }
  bool is_artificial(Index col) const { return col >= nstruct_ + nslack_; }
  S sense_factor() const { return lp_.sense == Sense::Maximize ? S(-1) : S(1); }

  void build_tableau() {
    const Index n0 = lp_.num_vars();
    m0_ = lp_.num_rows();

    var_col_.assign(static_cast<std::size_t>(n0), -1);
    var_neg_.assign(static_cast<std::size_t>(n0), -1);
    box_row_.assign(static_cast<std::size_t>(n0), -1);

    Index col = 0, extra_rows = 0;
    for (Index j = 0; j < n0; ++j) {
      var_col_[static_cast<std::size_t>(j)] = col++;
      switch (lp_.bounds[static_cast<std::size_t>(j)].kind) {
        case BoundKind::Free: var_neg_[static_cast<std::size_t>(j)] = col++; break;
        case BoundKind::Box: box_row_[static_cast<std::size_t>(j)] = m0_ + extra_rows++; break;
        case BoundKind::NonNegative: break;
      }
    }
    nstruct_ = col;
    mt_ = m0_ + extra_rows;

    std::vector<Index> slack_col(static_cast<std::size_t>(mt_), -1);
    Index slack = 0;
    for (Index i = 0; i < m0_; ++i)
      if (lp_.relations[static_cast<std::size_t>(i)] != Relation::Equal)
        slack_col[static_cast<std::size_t>(i)] = nstruct_ + slack++;
    for (Index i = m0_; i < mt_; ++i) slack_col[static_cast<std::size_t>(i)] = nstruct_ + slack++;
    nslack_ = slack;
    ncols_ = nstruct_ + nslack_ + mt_;
    rhs_ = ncols_;

    tableau_ = Mat<S>::Zero(mt_, ncols_ + 1);
    row_sign_.assign(static_cast<std::size_t>(mt_), 1);

    // Original rows, box variables shifted by their lower bound.
    for (Index i = 0; i < m0_; ++i) {
      S b = lp_.rhs[i];
      for (Index j = 0; j < n0; ++j) {
        const S& coef = lp_.constraints(i, j);
        if (coef == S(0)) continue;
        const auto& vb = lp_.bounds[static_cast<std::size_t>(j)];
        tableau_(i, var_col_[static_cast<std::size_t>(j)]) = coef;
        if (vb.kind == BoundKind::Free)
          tableau_(i, var_neg_[static_cast<std::size_t>(j)]) = -coef;
        else if (vb.kind == BoundKind::Box)
          b -= coef * vb.lower;
      }
      const Relation rel = lp_.relations[static_cast<std::size_t>(i)];
      if (rel != Relation::Equal)
        tableau_(i, slack_col[static_cast<std::size_t>(i)]) = (rel == Relation::LessEq) ? S(1) : S(-1);
      tableau_(i, rhs_) = b;
    }
    // Box rows: z_j + s = hi - lo.
    for (Index j = 0; j < n0; ++j) {
      const Index row = box_row_[static_cast<std::size_t>(j)];
      if (row < 0) continue;
      const auto& vb = lp_.bounds[static_cast<std::size_t>(j)];
      tableau_(row, var_col_[static_cast<std::size_t>(j)]) = S(1);
      tableau_(row, slack_col[static_cast<std::size_t>(row)]) = S(1);
      tableau_(row, rhs_) = vb.upper - vb.lower;
    }
    // Normalize rhs signs, then install the artificial basis.
    for (Index i = 0; i < mt_; ++i) {
      if (tableau_(i, rhs_) < S(0)) {
        tableau_.row(i) = -tableau_.row(i);
        row_sign_[static_cast<std::size_t>(i)] = -1;
      }
      tableau_(i, art_col(i)) = S(1);
    }
    basis_.resize(static_cast<std::size_t>(mt_));
    for (Index i = 0; i < mt_; ++i) basis_[static_cast<std::size_t>(i)] = art_col(i);

    // Phase-2 costs (internal minimization).
    obj2_ = Vec<S>::Zero(ncols_ + 1);
    const S s = sense_factor();
    for (Index j = 0; j < n0; ++j) {
      const S cj = s * lp_.objective[j];
      obj2_[var_col_[static_cast<std::size_t>(j)]] = cj;
      if (var_neg_[static_cast<std::size_t>(j)] >= 0) obj2_[var_neg_[static_cast<std::size_t>(j)]] = -cj;
    }
    // Phase-1 reduced costs under the artificial basis.
    obj1_ = Vec<S>::Zero(ncols_ + 1);
    for (Index c = 0; c < ncols_; ++c) {
      if (is_artificial(c)) continue;
      S colsum(0);
      for (Index i = 0; i < mt_; ++i) colsum += tableau_(i, c);
      obj1_[c] = -colsum;
    }
    S bsum(0);
    for (Index i = 0; i < mt_; ++i) bsum += tableau_(i, rhs_);
    obj1_[rhs_] = -bsum;
  }

  void pivot(Index row, Index col, bool update_obj1) {
    ++pivots_;
    if (opt_.debug)
      *opt_.debug << "pivot " << pivots_ << ": col " << col << " enters, row " << row
                  << " (basic " << basis_[static_cast<std::size_t>(row)] << ") leaves\n";
    tableau_.row(row) /= tableau_(row, col);
    for (Index r = 0; r < mt_; ++r) {
      if (r == row || tableau_(r, col) == S(0)) continue;
      tableau_.row(r) -= tableau_(r, col) * tableau_.row(row);
    }
    if (update_obj1 && obj1_[col] != S(0)) obj1_ -= obj1_[col] * tableau_.row(row).transpose();
    if (obj2_[col] != S(0)) obj2_ -= obj2_[col] * tableau_.row(row).transpose();
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Runs one simplex phase. Returns -1 at phase optimum, or the entering
  // column index when no ratio-test row blocks it (unbounded direction).
  int run_phase(bool phase_one) {
    const Vec<S>& obj = phase_one ? obj1_ : obj2_;
    const S& tol = opt_.tolerance;
    for (;;) {
      if (pivots_ > opt_.max_pivots)
        throw std::runtime_error("simplex pivot limit exceeded");
      Index entering = -1;
      for (Index c = 0; c < ncols_; ++c) {
        if (is_artificial(c)) continue;  // artificials may leave, never re-enter
        if (obj[c] < -tol) { entering = c; break; }  // Bland: lowest index
      }
      if (entering < 0) return -1;
      Index leaving = -1;
      S best_ratio(0);
      for (Index r = 0; r < mt_; ++r) {
        if (!(tableau_(r, entering) > tol)) continue;
        const S ratio = tableau_(r, rhs_) / tableau_(r, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return static_cast<int>(entering);
      pivot(leaving, entering, phase_one);
      if (opt_.debug && phase_one)
        *opt_.debug << "  phase-1 objective " << -obj1_[rhs_] << "\n";
    }
  }

  // After a feasible phase 1, pivot basic artificials out where possible;
  // rows that cannot release one are redundant and stay inert.
  void drive_out_artificials() {
    const S& tol = opt_.tolerance;
    for (Index r = 0; r < mt_; ++r) {
      if (!is_artificial(basis_[static_cast<std::size_t>(r)])) continue;
      for (Index c = 0; c < nstruct_ + nslack_; ++c) {
        if (detail::abs_value(tableau_(r, c)) > tol) {
          pivot(r, c, /*update_obj1=*/false);
          break;
        }
      }
    }
  }

  Vec<S> internal_solution() const {
    Vec<S> x = Vec<S>::Zero(ncols_);
    for (Index r = 0; r < mt_; ++r) x[basis_[static_cast<std::size_t>(r)]] = tableau_(r, rhs_);
    return x;
  }

  Vec<S> map_structural(const Vec<S>& internal, bool as_point) const {
    const Index n0 = lp_.num_vars();
    Vec<S> x(n0);
    for (Index j = 0; j < n0; ++j) {
      const auto& vb = lp_.bounds[static_cast<std::size_t>(j)];
      const std::size_t ju = static_cast<std::size_t>(j);
      switch (vb.kind) {
        case BoundKind::Free:
          x[j] = internal[var_col_[ju]] - internal[var_neg_[ju]];
          break;
        case BoundKind::NonNegative:
          x[j] = internal[var_col_[ju]];
          break;
        case BoundKind::Box:
          x[j] = internal[var_col_[ju]] + (as_point ? vb.lower : S(0));
          break;
      }
    }
    return x;
  }

  Vec<S> map_primal() const { return map_structural(internal_solution(), /*as_point=*/true); }

  Vec<S> map_ray(Index entering) const {
    Vec<S> direction = Vec<S>::Zero(ncols_);
    direction[entering] = S(1);
    for (Index r = 0; r < mt_; ++r)
      direction[basis_[static_cast<std::size_t>(r)]] = -tableau_(r, entering);
    return map_structural(direction, /*as_point=*/false);
  }

  Vec<S> map_dual_from_phase1() const {
    Vec<S> y(m0_);
    for (Index i = 0; i < m0_; ++i)
      y[i] = S(row_sign_[static_cast<std::size_t>(i)]) * (S(1) - obj1_[art_col(i)]);
    return y;
  }

  Vec<S> map_dual_from_phase2() const {
    const S s = sense_factor();
    Vec<S> y(m0_);
    for (Index i = 0; i < m0_; ++i)
      y[i] = s * S(row_sign_[static_cast<std::size_t>(i)]) * (-obj2_[art_col(i)]);
    return y;
  }
};

template <typename S>
LpOutcome<S> solve(const LinearProgram<S>& lp, SolverOptions<S> options = {}) {
  if (!options.debug) options.debug = LpDebug::stream;
  LpOutcome<S> out = SimplexSolver<S>(lp, options).solve();
  if (LpAudit::enabled.load(std::memory_order_relaxed)) {
    LpAudit::solves.fetch_add(1, std::memory_order_relaxed);
    if (verify_lp_certificate(lp, out, options.tolerance))
      LpAudit::verify_passes.fetch_add(1, std::memory_order_relaxed);
    else
      LpAudit::verify_failures.fetch_add(1, std::memory_order_relaxed);
    if (out.status == LpStatus::Optimal) {
      LpAudit::optimal_outcomes.fetch_add(1, std::memory_order_relaxed);
      const Vec<S> d = lp.objective - lp.constraints.transpose() * out.dual;
      if (detail::abs_value(out.objective_value - detail::dual_objective(lp, out.dual, d)) <=
          options.tolerance)
        LpAudit::strong_duality_exact.fetch_add(1, std::memory_order_relaxed);
    }
  }
  return out;
}

}  // namespace sphsep
