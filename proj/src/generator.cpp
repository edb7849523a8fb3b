#include "aeos/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aeos/rng.hpp"

namespace aeos {

namespace {

constexpr double kEnergyPerSecond = 0.1;   // Ah per execution second
constexpr double kStoragePerSecond = 1.0;  // GB per execution second
constexpr double kEnergyCapacity = 150.0;
constexpr double kStorageCapacity = 2000.0;
constexpr Seconds kTaskDuration = 5;
constexpr Seconds kMinWindowLen = 30;
constexpr Seconds kMaxWindowLen = 120;
// Westward ground-track drift: one revolution per day.
constexpr double kTrackRateDegPerSec = -360.0 / 86400.0;

double wrap_deg(double deg) {
  deg = std::fmod(deg + 180.0, 360.0);
  if (deg < 0) deg += 360.0;
  return deg - 180.0;
}

double circular_distance_deg(double a, double b) { return std::abs(wrap_deg(a - b)); }

double track_longitude(const OrbitConfig& orbit, double t) {
  return wrap_deg(orbit.ground_track_start_lon + kTrackRateDegPerSec * t);
}

double latitude_amplitude(const OrbitConfig& orbit) {
  const double incl = orbit.inclination_deg;
  return incl <= 90.0 ? incl : 180.0 - incl;
}

// Ascending-branch crossing of latitude `lat` within pass k, or -1 if the
// orbit never reaches that latitude.
double latitude_crossing_time(const OrbitConfig& orbit, std::int64_t pass, double lat) {
  const double amplitude = latitude_amplitude(orbit);
  if (std::abs(lat) > amplitude) return -1.0;
  const double period = static_cast<double>(orbit.period_seconds);
  double offset = std::asin(lat / amplitude) * period / (2.0 * std::numbers::pi);
  if (offset < 0) offset += period;  // southern latitudes cross near the pass end
  return static_cast<double>(pass) * period + offset;
}

std::uint64_t mix_u64(std::uint64_t a, std::uint64_t b) {
  SplitMix64 sm(a * 0x9e3779b97f4a7c15ull + b);
  return sm.next();
}

Seconds window_length_for(const Task& task, int resource_id, std::int64_t pass) {
  const std::uint64_t h = mix_u64(mix_u64(static_cast<std::uint64_t>(task.id) + 1,
                                          static_cast<std::uint64_t>(resource_id) + 1),
                                  static_cast<std::uint64_t>(pass) + 1);
  return kMinWindowLen + static_cast<Seconds>(h % (kMaxWindowLen - kMinWindowLen + 1));
}

}  // namespace

bool is_preset_name(const std::string& name) {
  return name == "H_20" || name == "H_50" || name == "C_100" || name == "C_200" ||
         name == "C_400";
}

SceneConfig preset_config(const std::string& name, std::uint64_t seed) {
  SceneConfig cfg;
  cfg.seed = seed;
  cfg.label = name;
  if (name == "H_20" || name == "H_50") {
    cfg.area = SceneArea::kSmall;
    cfg.lat_min = 20.0;
    cfg.lat_max = 30.0;
    cfg.lon_min = 108.0;
    cfg.lon_max = 114.0;
    cfg.n_resources = 3;
    cfg.n_tasks = name == "H_20" ? 20 : 50;
  } else if (name == "C_100" || name == "C_200" || name == "C_400") {
    cfg.area = SceneArea::kLarge;
    cfg.lat_min = 3.0;
    cfg.lat_max = 53.0;
    cfg.lon_min = 73.0;
    cfg.lon_max = 133.0;
    cfg.n_resources = 5;
    cfg.n_tasks = name == "C_100" ? 100 : (name == "C_200" ? 200 : 400);
  } else {
    throw StructuralError("unknown scene preset: " + name);
  }
  return cfg;
}

std::vector<TimeWindow> compute_windows(const Task& task, const Resource& resource,
                                        const OrbitConfig& orbit) {
  std::vector<TimeWindow> out;
  const Seconds period = orbit.period_seconds;
  const std::int64_t first_pass = resource.horizon.start / period;
  const std::int64_t last_pass = (resource.horizon.end - 1) / period;

  for (std::int64_t pass = first_pass; pass <= last_pass; ++pass) {
    const double crossing = latitude_crossing_time(orbit, pass, task.lat);
    if (crossing < 0) continue;
    const double track_lon = track_longitude(orbit, crossing);
    if (circular_distance_deg(track_lon, task.lon) > orbit.swath_half_width_deg) continue;

    const Seconds length = window_length_for(task, resource.id, pass);
    Seconds start = static_cast<Seconds>(std::llround(crossing)) - length / 2;
    Seconds end = start + length;

    // Clip to the pass and to the resource horizon; keep the 1 s grid.
    start = std::max({start, pass * period, resource.horizon.start});
    end = std::min({end, (pass + 1) * period, resource.horizon.end});
    if (end - start < task.duration) continue;
    out.push_back(TimeWindow{start, end});
  }

  std::sort(out.begin(), out.end(),
            [](const TimeWindow& a, const TimeWindow& b) { return a.start < b.start; });
  return out;
}

Instance generate_instance(const SceneConfig& config, const OrbitConfig& orbit,
                           GenerationStats* stats) {
  if (config.n_tasks <= 0 || config.n_resources <= 0 || config.horizon_seconds <= 0 ||
      config.lat_min > config.lat_max || config.lon_min > config.lon_max) {
    throw StructuralError("invalid scene configuration");
  }

  Rng rng(config.seed);

  // Draw the raw task set first so the stream of random values depends only
  // on (n_tasks, seed), not on window filtering.
  std::vector<Task> drafts;
  drafts.reserve(static_cast<std::size_t>(config.n_tasks));
  for (int i = 0; i < config.n_tasks; ++i) {
    Task task;
    task.id = i;
    task.lat = rng.uniform_real(config.lat_min, config.lat_max);
    task.lon = rng.uniform_real(config.lon_min, config.lon_max);
    task.duration = kTaskDuration;
    task.profit = rng.uniform_int(1, 10);
    task.energy_cost = kEnergyPerSecond * static_cast<double>(task.duration);
    task.storage_cost = kStoragePerSecond * static_cast<double>(task.duration);
    drafts.push_back(std::move(task));
  }

  // Pick the passes whose ground track comes closest to the scene centre, so
  // the selected resources actually see the area of interest.
  const Seconds period = orbit.period_seconds;
  const std::int64_t total_passes = config.horizon_seconds / period;
  if (total_passes < config.n_resources) {
    throw GenerationError("horizon holds " + std::to_string(total_passes) + " passes but " +
                          std::to_string(config.n_resources) + " resources requested");
  }
  const double centre_lat = (config.lat_min + config.lat_max) / 2.0;
  const double centre_lon = (config.lon_min + config.lon_max) / 2.0;
  std::vector<std::pair<double, std::int64_t>> ranked;
  for (std::int64_t pass = 0; pass < total_passes; ++pass) {
    const double crossing = latitude_crossing_time(orbit, pass, centre_lat);
    const double dist = crossing < 0
                            ? 360.0
                            : circular_distance_deg(track_longitude(orbit, crossing), centre_lon);
    ranked.emplace_back(dist, pass);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::int64_t> passes;
  for (int j = 0; j < config.n_resources; ++j) passes.push_back(ranked[static_cast<std::size_t>(j)].second);
  std::sort(passes.begin(), passes.end());

  Instance instance;
  instance.seed = config.seed;
  instance.scene_label = config.label;
  for (int j = 0; j < config.n_resources; ++j) {
    Resource res;
    res.id = j;
    res.energy_capacity = kEnergyCapacity;
    res.storage_capacity = kStorageCapacity;
    res.horizon = TimeWindow{passes[static_cast<std::size_t>(j)] * period,
                             (passes[static_cast<std::size_t>(j)] + 1) * period};
    instance.resources.push_back(res);
  }

  GenerationStats local;
  local.requested_tasks = config.n_tasks;
  for (auto& task : drafts) {
    bool visible = false;
    for (const auto& res : instance.resources) {
      auto windows = compute_windows(task, res, orbit);
      if (windows.empty()) continue;
      local.total_windows += static_cast<int>(windows.size());
      task.windows[res.id] = std::move(windows);
      visible = true;
    }
    if (visible) {
      task.id = static_cast<int>(instance.tasks.size());
      instance.tasks.push_back(std::move(task));
    } else {
      ++local.dropped_tasks;
    }
  }
  if (stats) *stats = local;

  if (instance.tasks.empty()) {
    throw GenerationError("scene '" + config.label + "' seed " + std::to_string(config.seed) +
                          ": all " + std::to_string(config.n_tasks) +
                          " tasks fell outside the selected passes");
  }
  return instance;
}

Instance generate_instance(const SceneConfig& config, GenerationStats* stats) {
  return generate_instance(config, OrbitConfig{}, stats);
}

}  // namespace aeos
