#ifndef AEOS_CORE_HPP
#define AEOS_CORE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Domain types for the agile Earth observation satellite scheduling model:
// tasks with per-resource executable time windows, orbital-pass resources
// with energy/storage capacities, and the assignment/start-time solution
// object. All times are whole seconds since the scenario epoch.

namespace aeos {

using Seconds = std::int64_t;

// Contract violations (bad indices, malformed inputs).
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// Instance generation failed to produce a usable scenario.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver was asked to exceed its stated size limits.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure during value-function training.
struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TimeWindow {
  Seconds start = 0;  // inclusive
  Seconds end = 0;    // exclusive upper bound for execution end

  Seconds length() const { return end - start; }
  bool operator==(const TimeWindow&) const = default;
};

struct Task {
  int id = 0;
  double lat = 0.0;
  double lon = 0.0;
  Seconds duration = 1;
  std::int64_t profit = 1;
  double energy_cost = 0.0;   // amp-hours per execution
  double storage_cost = 0.0;  // gigabytes per execution
  // Executable time windows keyed by resource id; disjoint, sorted by start,
  // and each long enough to hold the task (shorter ones are filtered out).
  std::map<int, std::vector<TimeWindow>> windows;
};

struct Resource {
  int id = 0;
  double energy_capacity = 0.0;   // amp-hours
  double storage_capacity = 0.0;  // gigabytes
  TimeWindow horizon;             // orbital-pass span
};

// Minimum slew time between two observations: an affine function of the
// great-circle angle between the task locations, rounded up to whole seconds.
struct TransitionModel {
  Seconds base_seconds = 5;
  double per_degree_seconds = 0.2;
};

struct Instance {
  std::vector<Task> tasks;          // ids 0..n-1
  std::vector<Resource> resources;  // ids 0..m-1
  TransitionModel transition;
  std::uint64_t seed = 0;
  std::string scene_label;

  int task_count() const { return static_cast<int>(tasks.size()); }
  int resource_count() const { return static_cast<int>(resources.size()); }
};

// Assignment vector plus execution times. r[i] == kUnscheduled means task i
// is not scheduled and es/ee are absent; otherwise ee[i] == es[i] + duration.
struct Schedule {
  static constexpr int kUnscheduled = -1;

  std::vector<int> r;
  std::vector<std::optional<Seconds>> es;
  std::vector<std::optional<Seconds>> ee;

  static Schedule empty_for(std::size_t n_tasks);
  void place(int task, int resource, Seconds start, Seconds duration);
  bool scheduled(int task) const { return r[static_cast<std::size_t>(task)] != kUnscheduled; }
};

enum class Constraint {
  kAssignment,   // r/es/ee structurally inconsistent
  kStorage,      // per-resource storage capacity exceeded
  kEnergy,       // per-resource energy capacity exceeded
  kWindow,       // execution not inside any executable time window
  kOverlap,      // two executions overlap on one resource
  kTransition,   // gap between executions shorter than the slew time
};

std::string constraint_name(Constraint c);

struct Violation {
  Constraint constraint;
  std::vector<int> tasks;
  std::string detail;
};

// Sum of profits over scheduled tasks. Pure objective, no feasibility check.
std::int64_t evaluate_objective(const Schedule& schedule, const Instance& instance);

// Checks every model constraint and reports all violations found; an empty
// result certifies feasibility. Never throws on bad schedules: problems are
// reported as data.
std::vector<Violation> validate(const Schedule& schedule, const Instance& instance);

// Great-circle central angle between two task locations, in degrees.
double angular_distance_deg(const Task& a, const Task& b);

// ceil(base + per_degree * angular distance); symmetric in its arguments.
Seconds transition_time(const Task& a, const Task& b, const TransitionModel& model);

// (energy, storage) consumed on resource j by the scheduled tasks.
std::pair<double, double> resource_usage(const Schedule& schedule, const Instance& instance,
                                         int resource_id);

}  // namespace aeos

#endif  // AEOS_CORE_HPP
