#include "aeos/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace aeos {

namespace {

constexpr std::size_t kTimingTaskLimit = 7;
constexpr Seconds kTimingSpanLimit = 600;
constexpr int kOptimalTaskLimit = 10;
constexpr int kOptimalResourceLimit = 2;
constexpr Seconds kOptimalSpanLimit = 1200;
constexpr std::size_t kOrderLimit = 50000;

// Earliest feasible start of `task` with everything before it ending at
// `gap` (transition already included), or nullopt. Windows are sorted by
// start, so the first fitting window yields the minimal start.
std::optional<Seconds> earliest_start(const RearTask& task, Seconds gap) {
  for (const auto& w : task.windows) {
    const Seconds es = std::max(w.start, gap);
    if (es + task.duration <= w.end) return es;
  }
  return std::nullopt;
}

// Enumerates execution orders restricted to linear extensions of the
// disjoint-window precedence: a before b whenever a's windows all end
// before b's windows begin. That relation is an interval order (acyclic),
// and an order violating it can never place both tasks, so restricting to
// its extensions loses no optimal solution.
struct OrderEnumerator {
  const RearStageProblem& problem;
  std::vector<std::vector<std::size_t>> must_precede;  // per task: required predecessors
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> current;
  std::vector<bool> used;

  explicit OrderEnumerator(const RearStageProblem& p) : problem(p) {
    const std::size_t n = p.tasks.size();
    must_precede.assign(n, {});
    used.assign(n, false);
    std::vector<Seconds> max_end(n), min_start(n);
    for (std::size_t k = 0; k < n; ++k) {
      max_end[k] = std::numeric_limits<Seconds>::min();
      min_start[k] = std::numeric_limits<Seconds>::max();
      for (const auto& w : p.tasks[k].windows) {
        max_end[k] = std::max(max_end[k], w.end);
        min_start[k] = std::min(min_start[k], w.start);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && max_end[a] <= min_start[b]) must_precede[b].push_back(a);
      }
    }
  }

  void run() {
    if (current.size() == problem.tasks.size()) {
      if (orders.size() >= kOrderLimit) {
        throw LimitError("oracle: execution-order enumeration exceeded " +
                         std::to_string(kOrderLimit) + " orders");
      }
      orders.push_back(current);
      return;
    }
    for (std::size_t k = 0; k < problem.tasks.size(); ++k) {
      if (used[k]) continue;
      bool ready = true;
      for (std::size_t pre : must_precede[k]) {
        if (!used[pre]) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      used[k] = true;
      current.push_back(k);
      run();
      current.pop_back();
      used[k] = false;
    }
  }
};

// Best placement over all execution orders of the problem's tasks.
RearStageResult best_over_orders(const RearStageProblem& problem) {
  if (problem.tasks.empty()) return {};
  OrderEnumerator enumerator(problem);
  enumerator.run();

  RearStageResult best;
  best.profit = -1;
  for (const auto& order : enumerator.orders) {
    std::vector<int> sequence;
    sequence.reserve(order.size());
    for (std::size_t k : order) sequence.push_back(problem.tasks[k].id);
    auto result = dp_timing(problem, sequence);
    if (result.profit > best.profit) best = std::move(result);
  }
  return best;
}

}  // namespace

std::int64_t brute_force_timing(const RearStageProblem& problem,
                                const std::vector<int>& sequence) {
  if (problem.tasks.size() > kTimingTaskLimit) {
    throw LimitError("brute_force_timing: more than " + std::to_string(kTimingTaskLimit) +
                     " tasks");
  }
  if (problem.horizon.length() > kTimingSpanLimit) {
    throw LimitError("brute_force_timing: horizon span exceeds " +
                     std::to_string(kTimingSpanLimit) + " s");
  }
  if (sequence.size() != problem.tasks.size()) {
    throw StructuralError("brute_force_timing: sequence is not a permutation");
  }

  std::vector<const RearTask*> ordered;
  for (int id : sequence) {
    const RearTask* found = nullptr;
    for (const auto& task : problem.tasks) {
      if (task.id == id) {
        found = &task;
        break;
      }
    }
    if (!found) throw StructuralError("brute_force_timing: unknown task in sequence");
    ordered.push_back(found);
  }

  // Every subset of the sequence, each checked by placing its members at the
  // earliest feasible start in order. Any feasible placement can be shifted
  // member-by-member down to those earliest starts, so the check is exact.
  const std::size_t n = ordered.size();
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t profit = 0;
    Seconds ee_last = 0;
    const RearTask* last = nullptr;
    bool feasible = true;
    for (std::size_t k = 0; k < n && feasible; ++k) {
      if (!(mask & (1u << k))) continue;
      const RearTask* task = ordered[k];
      const Seconds gap =
          last == nullptr ? std::numeric_limits<Seconds>::min() / 4
                          : ee_last + transition_time(*last, *task, problem.transition);
      const auto es = earliest_start(*task, gap);
      if (!es) {
        feasible = false;
        break;
      }
      profit += task->profit;
      ee_last = *es + task->duration;
      last = task;
    }
    if (feasible) best = std::max(best, profit);
  }
  return best;
}

OracleSolution brute_force_optimal(const Instance& instance) {
  const int n = instance.task_count();
  const int m = instance.resource_count();
  if (n > kOptimalTaskLimit) {
    throw LimitError("brute_force_optimal: more than " + std::to_string(kOptimalTaskLimit) +
                     " tasks");
  }
  if (m > kOptimalResourceLimit) {
    throw LimitError("brute_force_optimal: more than " + std::to_string(kOptimalResourceLimit) +
                     " resources");
  }
  Seconds span_start = std::numeric_limits<Seconds>::max();
  Seconds span_end = std::numeric_limits<Seconds>::min();
  for (const auto& res : instance.resources) {
    span_start = std::min(span_start, res.horizon.start);
    span_end = std::max(span_end, res.horizon.end);
  }
  if (m > 0 && span_end - span_start > kOptimalSpanLimit) {
    throw LimitError("brute_force_optimal: scenario span exceeds " +
                     std::to_string(kOptimalSpanLimit) + " s");
  }

  // Per resource: the optimal placement of every capacity-feasible subset of
  // the tasks visible there, memoized by task bitmask.
  std::vector<std::uint32_t> visible(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      const auto it = instance.tasks[static_cast<std::size_t>(i)].windows.find(j);
      if (it != instance.tasks[static_cast<std::size_t>(i)].windows.end() && !it->second.empty()) {
        visible[static_cast<std::size_t>(j)] |= (1u << i);
      }
    }
  }

  auto subset_feasible = [&](int j, std::uint32_t mask) {
    double energy = 0.0;
    double storage = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      energy += instance.tasks[static_cast<std::size_t>(i)].energy_cost;
      storage += instance.tasks[static_cast<std::size_t>(i)].storage_cost;
    }
    const Resource& res = instance.resources[static_cast<std::size_t>(j)];
    return energy <= res.energy_capacity && storage <= res.storage_capacity;
  };

  std::vector<std::unordered_map<std::uint32_t, RearStageResult>> solved(
      static_cast<std::size_t>(m));
  auto solve_subset = [&](int j, std::uint32_t mask) -> const RearStageResult& {
    auto& cache = solved[static_cast<std::size_t>(j)];
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) ids.push_back(i);
    }
    auto problem = RearStageProblem::build(instance, j, ids);
    return cache.emplace(mask, best_over_orders(problem)).first->second;
  };

  OracleSolution best;
  best.profit = -1;

  // Walk every split of the tasks into (resource sets, unscheduled).
  std::vector<std::uint32_t> chosen(static_cast<std::size_t>(m), 0);
  auto recurse = [&](auto&& self, int j, std::uint32_t taken) -> void {
    if (j == m) {
      std::int64_t total = 0;
      for (int jj = 0; jj < m; ++jj) {
        total += solve_subset(jj, chosen[static_cast<std::size_t>(jj)]).profit;
      }
      if (total > best.profit) {
        best.profit = total;
        best.schedule = Schedule::empty_for(static_cast<std::size_t>(n));
        for (int jj = 0; jj < m; ++jj) {
          for (const auto& pl : solve_subset(jj, chosen[static_cast<std::size_t>(jj)]).placed) {
            best.schedule.place(pl.task_id, jj, pl.es,
                                instance.tasks[static_cast<std::size_t>(pl.task_id)].duration);
          }
        }
      }
      return;
    }
    const std::uint32_t candidates = visible[static_cast<std::size_t>(j)] & ~taken;
    // Enumerate submasks of `candidates`, including the empty set.
    std::uint32_t sub = candidates;
    for (;;) {
      if (subset_feasible(j, sub)) {
        chosen[static_cast<std::size_t>(j)] = sub;
        self(self, j + 1, taken | sub);
      }
      if (sub == 0) break;
      sub = (sub - 1) & candidates;
    }
    chosen[static_cast<std::size_t>(j)] = 0;
  };
  if (m == 0) {
    best.profit = 0;
    best.schedule = Schedule::empty_for(static_cast<std::size_t>(n));
  } else {
    recurse(recurse, 0, 0);
  }

  if (best.profit < 0) {
    best.profit = 0;
    best.schedule = Schedule::empty_for(static_cast<std::size_t>(n));
  }
  return best;
}

}  // namespace aeos
