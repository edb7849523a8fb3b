#ifndef AEOS_REAR_STAGE_HPP
#define AEOS_REAR_STAGE_HPP

#include <cstdint>
#include <vector>

#include "aeos/core.hpp"

// Rear-stage solvers: given the tasks assigned to one resource, decide the
// execution order and start times. Three routes are provided: a constructive
// heuristic scoring candidates by residual-task density (sequencing and
// timing together), a greedy window-end sequencing rule, and an exact dynamic
// program for the timing of a fixed sequence.

namespace aeos {

struct RearTask {
  int id = 0;
  Seconds duration = 1;
  std::int64_t profit = 0;
  double lat = 0.0;
  double lon = 0.0;
  std::vector<TimeWindow> windows;  // on this resource; disjoint, sorted
};

struct RearStageProblem {
  int resource_id = 0;
  TimeWindow horizon;
  std::vector<RearTask> tasks;
  TransitionModel transition;
  Seconds latest_end = 0;      // ET: latest window end of the scenario on this resource
  double mean_duration = 1.0;  // average task duration

  // Builds a problem for one resource from the given instance tasks,
  // keeping only tasks with at least one window there.
  static RearStageProblem build(const Instance& instance, int resource_id,
                                const std::vector<int>& task_ids);
};

struct Placement {
  int task_id = 0;
  Seconds es = 0;
  Seconds ee = 0;
};

struct RearStageResult {
  std::vector<Placement> placed;  // chronological
  std::vector<int> skipped;
  std::int64_t profit = 0;
  std::uint64_t ops = 0;  // inner-loop evaluations, for complexity growth checks
};

Seconds transition_time(const RearTask& a, const RearTask& b, const TransitionModel& model);

// Density-of-residual-tasks score f(i) = g(i) + h(i): the scheduled count
// with task i added plus (ET - we_i) / mean duration, where we_i is the end
// of the task's earliest window on this resource.
double hadrt_score(const RearStageProblem& problem, int task_id, int scheduled_count_with_i);

// Constructive heuristic: repeatedly pick the feasible candidate with the
// highest f(i) (ties: lowest id) and append it after the chronologically
// last placed task at max(ws, ee_prev + transition). Tasks that no longer
// fit are skipped.
RearStageResult hadrt(const RearStageProblem& problem);

// Task ids in ascending order of their earliest window end; ties keep
// ascending id order.
std::vector<int> greedy_sequence(const RearStageProblem& problem);

// Exact maximal-profit timing for the given execution order. Tasks may be
// skipped; placed tasks keep the sequence order in time. Throws
// StructuralError if `sequence` is not a permutation of the problem's tasks.
RearStageResult dp_timing(const RearStageProblem& problem, const std::vector<int>& sequence);

// One pass over the sequence placing each task at max(ws, ee_prev +
// transition) in its first fitting window, skipping tasks that do not fit.
RearStageResult place_in_order(const RearStageProblem& problem, const std::vector<int>& sequence);

// Standalone baseline: run the constructive heuristic on every resource in
// chronological order over the whole instance, respecting capacities.
Schedule hadrt_only_schedule(const Instance& instance);

}  // namespace aeos

#endif  // AEOS_REAR_STAGE_HPP
