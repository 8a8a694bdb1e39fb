#include "sphsep/lp.hpp"

namespace sphsep {

std::ostream* LpDebug::stream = nullptr;

std::atomic<bool> LpAudit::enabled{false};
std::atomic<std::uint64_t> LpAudit::solves{0};
std::atomic<std::uint64_t> LpAudit::verify_passes{0};
std::atomic<std::uint64_t> LpAudit::verify_failures{0};
std::atomic<std::uint64_t> LpAudit::optimal_outcomes{0};
std::atomic<std::uint64_t> LpAudit::strong_duality_exact{0};

void LpAudit::reset() {
  solves = 0;
  verify_passes = 0;
  verify_failures = 0;
  optimal_outcomes = 0;
  strong_duality_exact = 0;
}

}  // namespace sphsep
