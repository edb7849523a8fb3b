#ifndef AEOS_ENV_HPP
#define AEOS_ENV_HPP

#include <array>
#include <memory>
#include <vector>

#include "aeos/core.hpp"
#include "aeos/rear_stage.hpp"

// The assignment-stage MDP. Each step either selects a task for the current
// resource (the rear-stage solver is re-run there and the reward is the
// change in total objective) or terminates the current resource and moves
// the cursor to the next one. Resources are visited in chronological order.

namespace aeos {

// Which rear-stage solver prices assignments, and who decides the order:
//   kCh     — constructive heuristic (sequencing + timing)
//   kDp     — window-end greedy sequence + exact DP timing
//   kChSeq  — selection order kept, heuristic timing only
//   kDpSeq  — selection order kept, exact DP timing
enum class RearMode { kCh, kDp, kChSeq, kDpSeq };

std::string rear_mode_name(RearMode mode);
RearMode rear_mode_from_name(const std::string& name);

struct Action {
  enum class Kind { kSelect, kTerminate };
  Kind kind = Kind::kTerminate;
  int task_id = -1;

  static Action select(int task_id) { return Action{Kind::kSelect, task_id}; }
  static Action terminate() { return Action{Kind::kTerminate, -1}; }
  bool operator==(const Action&) const = default;
};

constexpr std::size_t kFeatureCount = 12;
using Features = std::array<double, kFeatureCount>;

struct EnvState {
  std::shared_ptr<const Instance> instance;
  RearMode mode = RearMode::kDp;
  int t = 0;

  // Remaining executable windows, indexed [task][resource]. Selecting a task
  // clears its windows everywhere; terminating a resource clears that
  // resource's windows for every task.
  std::vector<std::vector<std::vector<TimeWindow>>> remaining_windows;

  std::vector<std::vector<int>> assigned;  // per resource, in selection order
  std::vector<std::vector<int>> active;    // per resource: placed survivors, selection order
  std::vector<double> residual_energy;
  std::vector<double> residual_storage;
  std::vector<RearStageResult> rear_results;  // per resource, last re-solve
  std::vector<bool> consumed;                 // task was selected at some step

  std::vector<int> visit_order;  // resource ids, chronological
  int cursor = 0;                // index into visit_order
  std::int64_t last_objective = 0;

  int cursor_resource() const { return visit_order[static_cast<std::size_t>(cursor)]; }
  bool terminal() const;
};

struct StepOutcome {
  std::int64_t reward = 0;
  EnvState next;
  bool done = false;
};

EnvState reset(std::shared_ptr<const Instance> instance, RearMode mode);

// SELECT(i) for every task that was never selected, still has a window on
// the cursor resource, and fits the residual capacities; TERMINATE always.
// Tasks come in ascending id order with TERMINATE last.
std::vector<Action> available_actions(const EnvState& state);

StepOutcome step(const EnvState& state, const Action& action);

// Fixed-length (state, action) encoding, all features in [0, 1]. TERMINATE
// zeroes the task features and sets the final flag.
Features encode(const EnvState& state, const Action& action);

// Materializes the schedule of a terminal state from the per-resource
// rear-stage results.
Schedule extract_schedule(const EnvState& state);

}  // namespace aeos

#endif  // AEOS_ENV_HPP
