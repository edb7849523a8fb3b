#ifndef AEOS_ORACLE_HPP
#define AEOS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "aeos/core.hpp"
#include "aeos/rear_stage.hpp"

// Brute-force optimal solvers for desk-scale verification. Both refuse
// inputs beyond their stated limits instead of silently degrading.

namespace aeos {

// Exact maximal profit over every subset of the sequence, keeping the given
// order. Limits: at most 7 tasks, horizon span at most 600 s.
std::int64_t brute_force_timing(const RearStageProblem& problem, const std::vector<int>& sequence);

struct OracleSolution {
  std::int64_t profit = 0;
  Schedule schedule;
};

// Exhaustive optimum over assignments, execution orders, and start times.
// Limits: at most 10 tasks, 2 resources, 1200 s scenario span.
OracleSolution brute_force_optimal(const Instance& instance);

}  // namespace aeos

#endif  // AEOS_ORACLE_HPP
