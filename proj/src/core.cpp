#include "aeos/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace aeos {

namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out << ",";
    out << ids[k];
  }
  return out.str();
}

}  // namespace

Schedule Schedule::empty_for(std::size_t n_tasks) {
  Schedule s;
  s.r.assign(n_tasks, kUnscheduled);
  s.es.assign(n_tasks, std::nullopt);
  s.ee.assign(n_tasks, std::nullopt);
  return s;
}

void Schedule::place(int task, int resource, Seconds start, Seconds duration) {
  const auto i = static_cast<std::size_t>(task);
  r[i] = resource;
  es[i] = start;
  ee[i] = start + duration;
}

std::string constraint_name(Constraint c) {
  switch (c) {
    case Constraint::kAssignment: return "assignment";
    case Constraint::kStorage: return "storage-capacity";
    case Constraint::kEnergy: return "energy-capacity";
    case Constraint::kWindow: return "time-window";
    case Constraint::kOverlap: return "overlap";
    case Constraint::kTransition: return "transition-gap";
  }
  return "unknown";
}

std::int64_t evaluate_objective(const Schedule& schedule, const Instance& instance) {
  if (schedule.r.size() != instance.tasks.size()) {
    throw StructuralError("schedule/instance task count mismatch");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < schedule.r.size(); ++i) {
    if (schedule.r[i] == Schedule::kUnscheduled) continue;
    total += instance.tasks[i].profit;
  }
  return total;
}

double angular_distance_deg(const Task& a, const Task& b) {
  constexpr double kRad = std::numbers::pi / 180.0;
  const double lat1 = a.lat * kRad;
  const double lat2 = b.lat * kRad;
  const double dlat = (b.lat - a.lat) * kRad;
  const double dlon = (b.lon - a.lon) * kRad;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
  const double clamped = std::min(1.0, std::max(0.0, h));
  return 2.0 * std::asin(std::sqrt(clamped)) / kRad;
}

Seconds transition_time(const Task& a, const Task& b, const TransitionModel& model) {
  const double seconds =
      static_cast<double>(model.base_seconds) + model.per_degree_seconds * angular_distance_deg(a, b);
  return static_cast<Seconds>(std::ceil(seconds));
}

std::pair<double, double> resource_usage(const Schedule& schedule, const Instance& instance,
                                         int resource_id) {
  if (resource_id < 0 || resource_id >= instance.resource_count()) {
    throw StructuralError("resource_usage: invalid resource id");
  }
  double energy = 0.0;
  double storage = 0.0;
  for (std::size_t i = 0; i < schedule.r.size() && i < instance.tasks.size(); ++i) {
    if (schedule.r[i] != resource_id) continue;
    energy += instance.tasks[i].energy_cost;
    storage += instance.tasks[i].storage_cost;
  }
  return {energy, storage};
}

std::vector<Violation> validate(const Schedule& schedule, const Instance& instance) {
  std::vector<Violation> out;
  const auto n = instance.tasks.size();
  const int m = instance.resource_count();

  auto add = [&out](Constraint c, std::vector<int> tasks, std::string detail) {
    out.push_back(Violation{c, std::move(tasks), std::move(detail)});
  };

  if (schedule.r.size() != n || schedule.es.size() != n || schedule.ee.size() != n) {
    add(Constraint::kAssignment, {},
        "schedule arrays sized " + std::to_string(schedule.r.size()) + " for " +
            std::to_string(n) + " tasks");
    return out;
  }

  // Structural consistency of r/es/ee (es,ee null iff unscheduled; ee = es + d).
  for (std::size_t i = 0; i < n; ++i) {
    const int ri = schedule.r[i];
    const int id = static_cast<int>(i);
    if (ri == Schedule::kUnscheduled) {
      if (schedule.es[i] || schedule.ee[i]) {
        add(Constraint::kAssignment, {id}, "unscheduled task has execution times");
      }
      continue;
    }
    if (ri < 0 || ri >= m) {
      add(Constraint::kAssignment, {id}, "assigned resource " + std::to_string(ri) + " does not exist");
      continue;
    }
    if (!schedule.es[i] || !schedule.ee[i]) {
      add(Constraint::kAssignment, {id}, "scheduled task missing execution times");
      continue;
    }
    if (*schedule.ee[i] != *schedule.es[i] + instance.tasks[i].duration) {
      add(Constraint::kAssignment, {id}, "end time is not start + duration");
    }
  }

  // Capacity sums per resource.
  for (const auto& res : instance.resources) {
    double energy = 0.0;
    double storage = 0.0;
    std::vector<int> on_res;
    for (std::size_t i = 0; i < n; ++i) {
      if (schedule.r[i] != res.id) continue;
      energy += instance.tasks[i].energy_cost;
      storage += instance.tasks[i].storage_cost;
      on_res.push_back(static_cast<int>(i));
    }
    if (storage > res.storage_capacity) {
      add(Constraint::kStorage, on_res,
          "resource " + std::to_string(res.id) + " storage " + std::to_string(storage) + " > " +
              std::to_string(res.storage_capacity));
    }
    if (energy > res.energy_capacity) {
      add(Constraint::kEnergy, on_res,
          "resource " + std::to_string(res.id) + " energy " + std::to_string(energy) + " > " +
              std::to_string(res.energy_capacity));
    }
  }

  // Window membership: the whole execution inside one ETW on the assigned resource.
  for (std::size_t i = 0; i < n; ++i) {
    const int ri = schedule.r[i];
    if (ri == Schedule::kUnscheduled || ri < 0 || ri >= m) continue;
    if (!schedule.es[i] || !schedule.ee[i]) continue;
    const Seconds es = *schedule.es[i];
    const Seconds ee = *schedule.ee[i];
    const auto& task = instance.tasks[i];
    bool inside = false;
    if (auto it = task.windows.find(ri); it != task.windows.end()) {
      for (const auto& w : it->second) {
        if (w.start <= es && ee <= w.end) {
          inside = true;
          break;
        }
      }
    }
    if (!inside) {
      add(Constraint::kWindow, {static_cast<int>(i)},
          "execution [" + std::to_string(es) + "," + std::to_string(ee) +
              ") outside every window on resource " + std::to_string(ri));
    }
  }

  // Pairwise overlap and slew-time gaps on a shared resource.
  for (std::size_t a = 0; a < n; ++a) {
    if (schedule.r[a] == Schedule::kUnscheduled || !schedule.es[a] || !schedule.ee[a]) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (schedule.r[b] != schedule.r[a] || !schedule.es[b] || !schedule.ee[b]) continue;
      const Seconds es_a = *schedule.es[a];
      const Seconds ee_a = *schedule.ee[a];
      const Seconds es_b = *schedule.es[b];
      const Seconds ee_b = *schedule.ee[b];
      const std::vector<int> pair = {static_cast<int>(a), static_cast<int>(b)};
      if (es_a < ee_b && es_b < ee_a) {
        add(Constraint::kOverlap, pair, "executions overlap (tasks " + join_ids(pair) + ")");
        continue;
      }
      const Seconds gap = es_a < es_b ? es_b - ee_a : es_a - ee_b;
      const Seconds mst = transition_time(instance.tasks[a], instance.tasks[b], instance.transition);
      if (gap < mst) {
        add(Constraint::kTransition, pair,
            "gap " + std::to_string(gap) + " < slew time " + std::to_string(mst) + " (tasks " +
                join_ids(pair) + ")");
      }
    }
  }

  return out;
}

}  // namespace aeos
