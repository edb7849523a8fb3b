#include "aeos/rear_stage.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace aeos {

namespace {

constexpr Seconds kNoPredecessor = std::numeric_limits<Seconds>::min() / 4;

Seconds earliest_window_end(const RearTask& task) {
  // Windows are disjoint and sorted, so the first window ends earliest.
  return task.windows.empty() ? std::numeric_limits<Seconds>::max() : task.windows.front().end;
}

std::vector<std::size_t> sequence_to_indices(const RearStageProblem& problem,
                                             const std::vector<int>& sequence) {
  if (sequence.size() != problem.tasks.size()) {
    throw StructuralError("sequence size does not match problem task count");
  }
  std::unordered_map<int, std::size_t> index_of;
  for (std::size_t k = 0; k < problem.tasks.size(); ++k) index_of[problem.tasks[k].id] = k;
  std::vector<std::size_t> indices;
  std::vector<bool> seen(problem.tasks.size(), false);
  indices.reserve(sequence.size());
  for (int id : sequence) {
    auto it = index_of.find(id);
    if (it == index_of.end() || seen[it->second]) {
      throw StructuralError("sequence is not a permutation of the problem tasks");
    }
    seen[it->second] = true;
    indices.push_back(it->second);
  }
  return indices;
}

}  // namespace

Seconds transition_time(const RearTask& a, const RearTask& b, const TransitionModel& model) {
  Task ta;
  ta.lat = a.lat;
  ta.lon = a.lon;
  Task tb;
  tb.lat = b.lat;
  tb.lon = b.lon;
  return transition_time(ta, tb, model);
}

RearStageProblem RearStageProblem::build(const Instance& instance, int resource_id,
                                         const std::vector<int>& task_ids) {
  if (resource_id < 0 || resource_id >= instance.resource_count()) {
    throw StructuralError("RearStageProblem: invalid resource id");
  }
  RearStageProblem problem;
  problem.resource_id = resource_id;
  problem.horizon = instance.resources[static_cast<std::size_t>(resource_id)].horizon;
  problem.transition = instance.transition;

  Seconds latest = problem.horizon.start;
  Seconds duration_sum = 0;
  for (int id : task_ids) {
    if (id < 0 || id >= instance.task_count()) {
      throw StructuralError("RearStageProblem: invalid task id");
    }
    const Task& task = instance.tasks[static_cast<std::size_t>(id)];
    auto it = task.windows.find(resource_id);
    if (it == task.windows.end() || it->second.empty()) continue;
    RearTask rt;
    rt.id = task.id;
    rt.duration = task.duration;
    rt.profit = task.profit;
    rt.lat = task.lat;
    rt.lon = task.lon;
    rt.windows = it->second;
    for (const auto& w : rt.windows) latest = std::max(latest, w.end);
    duration_sum += rt.duration;
    problem.tasks.push_back(std::move(rt));
  }
  problem.latest_end = latest;
  problem.mean_duration = problem.tasks.empty()
                              ? 1.0
                              : static_cast<double>(duration_sum) /
                                    static_cast<double>(problem.tasks.size());
  return problem;
}

double hadrt_score(const RearStageProblem& problem, int task_id, int scheduled_count_with_i) {
  for (const auto& task : problem.tasks) {
    if (task.id != task_id) continue;
    const auto we = static_cast<double>(earliest_window_end(task));
    return static_cast<double>(scheduled_count_with_i) +
           (static_cast<double>(problem.latest_end) - we) / problem.mean_duration;
  }
  throw StructuralError("hadrt_score: task not in problem");
}

RearStageResult hadrt(const RearStageProblem& problem) {
  RearStageResult result;
  std::vector<bool> done(problem.tasks.size(), false);

  Seconds ee_last = kNoPredecessor;
  std::size_t last_placed = problem.tasks.size();  // sentinel: none

  for (;;) {
    // Score every remaining (task, window) candidate that still fits after
    // the chronologically last placed task.
    bool found = false;
    double best_score = 0.0;
    std::size_t best_task = 0;
    Seconds best_es = 0;
    const auto g = static_cast<int>(result.placed.size()) + 1;

    for (std::size_t k = 0; k < problem.tasks.size(); ++k) {
      if (done[k]) continue;
      const RearTask& task = problem.tasks[k];
      const Seconds gap = last_placed == problem.tasks.size()
                              ? kNoPredecessor
                              : ee_last + transition_time(problem.tasks[last_placed], task,
                                                          problem.transition);
      for (const auto& w : task.windows) {
        ++result.ops;
        const Seconds es = std::max(w.start, gap);
        if (es + task.duration > w.end) continue;
        const double score = static_cast<double>(g) +
                             (static_cast<double>(problem.latest_end) - static_cast<double>(w.end)) /
                                 problem.mean_duration;
        const bool better = !found || score > best_score ||
                            (score == best_score && task.id < problem.tasks[best_task].id);
        if (better) {
          found = true;
          best_score = score;
          best_task = k;
          best_es = es;
        }
        break;  // later windows of the same task can only score lower
      }
    }

    if (!found) break;
    const RearTask& task = problem.tasks[best_task];
    result.placed.push_back(Placement{task.id, best_es, best_es + task.duration});
    result.profit += task.profit;
    done[best_task] = true;
    ee_last = best_es + task.duration;
    last_placed = best_task;
  }

  for (std::size_t k = 0; k < problem.tasks.size(); ++k) {
    if (!done[k]) result.skipped.push_back(problem.tasks[k].id);
  }
  std::sort(result.skipped.begin(), result.skipped.end());
  return result;
}

std::vector<int> greedy_sequence(const RearStageProblem& problem) {
  std::vector<std::size_t> order(problem.tasks.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Seconds ea = earliest_window_end(problem.tasks[a]);
    const Seconds eb = earliest_window_end(problem.tasks[b]);
    if (ea != eb) return ea < eb;
    return problem.tasks[a].id < problem.tasks[b].id;
  });
  std::vector<int> sequence;
  sequence.reserve(order.size());
  for (std::size_t k : order) sequence.push_back(problem.tasks[k].id);
  return sequence;
}

RearStageResult dp_timing(const RearStageProblem& problem, const std::vector<int>& sequence) {
  const auto indices = sequence_to_indices(problem, sequence);
  RearStageResult result;

  // One label per feasible (last placed = sequence position p, end time)
  // pair, keeping only the profit-maximal label per end time and pruning
  // labels dominated by an earlier end with at least the same profit.
  struct Label {
    Seconds end;
    std::int64_t profit;
    Seconds es;
    int prev_pos;        // position in `sequence`, -1 for none
    std::size_t prev_label;
  };
  std::vector<std::vector<Label>> labels(indices.size());

  for (std::size_t p = 0; p < indices.size(); ++p) {
    const RearTask& task = problem.tasks[indices[p]];
    std::vector<Label> candidates;

    for (const auto& w : task.windows) {
      // Placement with no predecessor.
      ++result.ops;
      if (w.start + task.duration <= w.end) {
        candidates.push_back(
            Label{w.start + task.duration, task.profit, w.start, -1, 0});
      }
      // Placement after each earlier label.
      for (std::size_t q = 0; q < p; ++q) {
        const RearTask& prev = problem.tasks[indices[q]];
        const Seconds ct = transition_time(prev, task, problem.transition);
        for (std::size_t li = 0; li < labels[q].size(); ++li) {
          ++result.ops;
          const Seconds es = std::max(w.start, labels[q][li].end + ct);
          if (es + task.duration > w.end) continue;
          candidates.push_back(Label{es + task.duration, labels[q][li].profit + task.profit, es,
                                     static_cast<int>(q), li});
        }
      }
    }

    // Pareto prune: sort by end time, keep strictly increasing profit.
    std::sort(candidates.begin(), candidates.end(), [](const Label& a, const Label& b) {
      if (a.end != b.end) return a.end < b.end;
      return a.profit > b.profit;
    });
    std::int64_t best_profit = std::numeric_limits<std::int64_t>::min();
    for (const auto& c : candidates) {
      if (c.profit <= best_profit) continue;
      best_profit = c.profit;
      labels[p].push_back(c);
    }
  }

  // Best label overall (empty placement scores 0).
  int best_pos = -1;
  std::size_t best_label = 0;
  std::int64_t best = 0;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    for (std::size_t li = 0; li < labels[p].size(); ++li) {
      if (labels[p][li].profit > best) {
        best = labels[p][li].profit;
        best_pos = static_cast<int>(p);
        best_label = li;
      }
    }
  }
  result.profit = best;

  std::vector<bool> in_chain(indices.size(), false);
  for (int p = best_pos; p >= 0;) {
    const Label& label = labels[static_cast<std::size_t>(p)][best_label];
    const RearTask& task = problem.tasks[indices[static_cast<std::size_t>(p)]];
    result.placed.push_back(Placement{task.id, label.es, label.end});
    in_chain[static_cast<std::size_t>(p)] = true;
    best_label = label.prev_label;
    p = label.prev_pos;
  }
  std::reverse(result.placed.begin(), result.placed.end());
  for (std::size_t p = 0; p < indices.size(); ++p) {
    if (!in_chain[p]) result.skipped.push_back(problem.tasks[indices[p]].id);
  }
  std::sort(result.skipped.begin(), result.skipped.end());
  return result;
}

RearStageResult place_in_order(const RearStageProblem& problem, const std::vector<int>& sequence) {
  const auto indices = sequence_to_indices(problem, sequence);
  RearStageResult result;

  Seconds ee_last = kNoPredecessor;
  std::size_t last_placed = problem.tasks.size();

  for (std::size_t k : indices) {
    const RearTask& task = problem.tasks[k];
    const Seconds gap = last_placed == problem.tasks.size()
                            ? kNoPredecessor
                            : ee_last + transition_time(problem.tasks[last_placed], task,
                                                        problem.transition);
    bool placed = false;
    for (const auto& w : task.windows) {
      ++result.ops;
      const Seconds es = std::max(w.start, gap);
      if (es + task.duration > w.end) continue;
      result.placed.push_back(Placement{task.id, es, es + task.duration});
      result.profit += task.profit;
      ee_last = es + task.duration;
      last_placed = k;
      placed = true;
      break;
    }
    if (!placed) result.skipped.push_back(task.id);
  }
  return result;
}

Schedule hadrt_only_schedule(const Instance& instance) {
  Schedule schedule = Schedule::empty_for(instance.tasks.size());

  std::vector<int> visit_order;
  for (const auto& res : instance.resources) visit_order.push_back(res.id);
  std::sort(visit_order.begin(), visit_order.end(), [&](int a, int b) {
    const auto& ra = instance.resources[static_cast<std::size_t>(a)];
    const auto& rb = instance.resources[static_cast<std::size_t>(b)];
    if (ra.horizon.start != rb.horizon.start) return ra.horizon.start < rb.horizon.start;
    return a < b;
  });

  std::vector<bool> used(instance.tasks.size(), false);
  for (int res_id : visit_order) {
    const Resource& res = instance.resources[static_cast<std::size_t>(res_id)];
    std::vector<int> candidates;
    for (const auto& task : instance.tasks) {
      if (!used[static_cast<std::size_t>(task.id)] && task.windows.count(res_id) > 0) {
        candidates.push_back(task.id);
      }
    }
    const auto problem = RearStageProblem::build(instance, res_id, candidates);
    auto result = hadrt(problem);

    // The heuristic is capacity-unaware; shed the cheapest-profit placements
    // if the pass would overrun energy or storage. Removals keep the rest of
    // the placement feasible because gaps only grow.
    double energy = 0.0;
    double storage = 0.0;
    for (const auto& pl : result.placed) {
      energy += instance.tasks[static_cast<std::size_t>(pl.task_id)].energy_cost;
      storage += instance.tasks[static_cast<std::size_t>(pl.task_id)].storage_cost;
    }
    while (!result.placed.empty() && (energy > res.energy_capacity || storage > res.storage_capacity)) {
      auto drop = std::min_element(result.placed.begin(), result.placed.end(),
                                   [&](const Placement& a, const Placement& b) {
                                     return instance.tasks[static_cast<std::size_t>(a.task_id)].profit <
                                            instance.tasks[static_cast<std::size_t>(b.task_id)].profit;
                                   });
      energy -= instance.tasks[static_cast<std::size_t>(drop->task_id)].energy_cost;
      storage -= instance.tasks[static_cast<std::size_t>(drop->task_id)].storage_cost;
      result.placed.erase(drop);
    }

    for (const auto& pl : result.placed) {
      schedule.place(pl.task_id, res_id, pl.es,
                     instance.tasks[static_cast<std::size_t>(pl.task_id)].duration);
      used[static_cast<std::size_t>(pl.task_id)] = true;
    }
  }
  return schedule;
}

}  // namespace aeos
