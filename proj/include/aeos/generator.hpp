#ifndef AEOS_GENERATOR_HPP
#define AEOS_GENERATOR_HPP

#include <string>
#include <vector>

#include "aeos/core.hpp"

// Synthetic scenario generation. Task attributes follow the benchmark
// distribution rules (uniform locations, constant 5 s duration, integer
// profit in [1,10]); visibility windows come from a transparent analytic
// ground-track sweep instead of real orbit propagation.

namespace aeos {

enum class SceneArea { kSmall, kLarge };

struct SceneConfig {
  int n_tasks = 20;
  SceneArea area = SceneArea::kSmall;
  double lat_min = 20.0, lat_max = 30.0;
  double lon_min = 108.0, lon_max = 114.0;
  int n_resources = 3;
  Seconds horizon_seconds = 86400;
  std::uint64_t seed = 0;
  std::string label = "custom";
};

// Stand-in orbit description. The sub-satellite ground-track longitude
// advances linearly (one westward revolution per day); latitude follows a
// sine of amplitude min(inclination, 180 - inclination) over one period.
struct OrbitConfig {
  Seconds period_seconds = 5760;  // 15 passes per 24 h
  double swath_half_width_deg = 15.0;
  double ground_track_start_lon = 103.0;
  double inclination_deg = 97.0;
};

struct GenerationStats {
  int requested_tasks = 0;
  int dropped_tasks = 0;  // no window on any resource
  int total_windows = 0;
};

// Returns the parameters of a named benchmark scene (H_20, H_50, C_100,
// C_200, C_400) with the given seed. Throws StructuralError on unknown names.
SceneConfig preset_config(const std::string& name, std::uint64_t seed);

bool is_preset_name(const std::string& name);

// Windows of one task on one resource: one per orbital pass covered by the
// resource horizon where the task lies within the swath at its latitude
// crossing time. Window length is a deterministic function of (task id,
// resource id, pass), in [30, 120] s, clipped to the pass and horizon.
std::vector<TimeWindow> compute_windows(const Task& task, const Resource& resource,
                                        const OrbitConfig& orbit);

// Deterministic scenario generation. Tasks with no window anywhere are
// dropped (renumbering the survivors) and counted in `stats`.
Instance generate_instance(const SceneConfig& config, const OrbitConfig& orbit,
                           GenerationStats* stats = nullptr);

Instance generate_instance(const SceneConfig& config, GenerationStats* stats = nullptr);

}  // namespace aeos

#endif  // AEOS_GENERATOR_HPP
