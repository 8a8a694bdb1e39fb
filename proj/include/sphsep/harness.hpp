#pragma once

#include "sphsep/cone.hpp"
#include "sphsep/separation.hpp"
#include "sphsep/support.hpp"
#include "sphsep/types.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sphsep {

struct SuiteConfig {
  std::vector<int> dims = {2, 3, 4, 5};
  int gens_min = 3;
  int gens_max = 8;
  int trials = 200;  // per property
  std::uint64_t seed = 42;
  bool float_mode = false;
  double tolerance = 1e-9;  // float mode only
  Rational delta = Rational(1) / Rational(10);
  // Harness self-test: appends an always-failing checker, to prove failures
  // surface with replayable seeds.
  bool include_failing_self_test = false;
};

struct PropertyResult {
  std::string name;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  std::vector<std::uint64_t> failing_seeds;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;
  double wall_seconds = 0.0;

  int total_trials() const;
  int total_failures() const;
  bool all_passed() const { return total_failures() == 0; }
  void print(std::ostream& os) const;
};

// Planted-separator pair: every generator of side 1 has <g,u0> >= delta|g|_1,
// side 2 mirrored. Both sides pointed by construction, witness attached.
std::pair<ClosedSphericalConvex, ClosedSphericalConvex> gen_disjoint_closed(
    Index n, int k, const Rational& delta, std::uint64_t seed);

struct IntersectingPair {
  ClosedSphericalConvex side1;
  ClosedSphericalConvex side2;
  VectorXr common_ray;  // planted nonzero x in cone(G1) n cone(G2)
};

IntersectingPair gen_intersecting_closed(Index n, int k, std::uint64_t seed);

// disjoint=true plants u0 as a row of A1 and -u0 as a row of A2;
// disjoint=false builds both sides around one shared interior point.
std::pair<OpenConeH, OpenConeH> gen_open_pair(Index n, int m, std::uint64_t seed, bool disjoint);

SuiteReport run_suite(const SuiteConfig& cfg);

// Float-advisory membership: strict signs of the normalized products with a
// tolerance, for the suite's float mode.
bool e_member_closed_float(const ClosedSphericalConvex& b1, const ClosedSphericalConvex& b2,
                           const VectorXd& u_hat, double tol);

}  // namespace sphsep
