#include "aeos/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace aeos {

namespace {

using nlohmann::json;

json window_list_to_json(const std::vector<TimeWindow>& windows) {
  json arr = json::array();
  for (const auto& w : windows) arr.push_back(json::array({w.start, w.end}));
  return arr;
}

std::vector<TimeWindow> window_list_from_json(const json& arr) {
  std::vector<TimeWindow> out;
  for (const auto& pair : arr) {
    out.push_back(TimeWindow{pair.at(0).get<Seconds>(), pair.at(1).get<Seconds>()});
  }
  return out;
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  json root;
  root["format"] = 1;
  root["scene_label"] = instance.scene_label;
  root["seed"] = instance.seed;
  root["transition"] = {{"base_seconds", instance.transition.base_seconds},
                        {"per_degree_seconds", instance.transition.per_degree_seconds}};

  json resources = json::array();
  for (const auto& res : instance.resources) {
    resources.push_back({{"id", res.id},
                         {"energy_capacity", res.energy_capacity},
                         {"storage_capacity", res.storage_capacity},
                         {"horizon", json::array({res.horizon.start, res.horizon.end})}});
  }
  root["resources"] = resources;

  json tasks = json::array();
  for (const auto& task : instance.tasks) {
    json windows = json::object();
    for (const auto& [res_id, list] : task.windows) {
      windows[std::to_string(res_id)] = window_list_to_json(list);
    }
    tasks.push_back({{"id", task.id},
                     {"lat", task.lat},
                     {"lon", task.lon},
                     {"duration", task.duration},
                     {"profit", task.profit},
                     {"energy_cost", task.energy_cost},
                     {"storage_cost", task.storage_cost},
                     {"windows", windows}});
  }
  root["tasks"] = tasks;
  return root.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  const json root = json::parse(text);
  if (root.at("format").get<int>() != 1) {
    throw StructuralError("unsupported instance format version");
  }
  Instance instance;
  instance.scene_label = root.at("scene_label").get<std::string>();
  instance.seed = root.at("seed").get<std::uint64_t>();
  instance.transition.base_seconds = root.at("transition").at("base_seconds").get<Seconds>();
  instance.transition.per_degree_seconds =
      root.at("transition").at("per_degree_seconds").get<double>();

  for (const auto& res : root.at("resources")) {
    Resource r;
    r.id = res.at("id").get<int>();
    r.energy_capacity = res.at("energy_capacity").get<double>();
    r.storage_capacity = res.at("storage_capacity").get<double>();
    r.horizon = TimeWindow{res.at("horizon").at(0).get<Seconds>(), res.at("horizon").at(1).get<Seconds>()};
    instance.resources.push_back(r);
  }

  for (const auto& t : root.at("tasks")) {
    Task task;
    task.id = t.at("id").get<int>();
    task.lat = t.at("lat").get<double>();
    task.lon = t.at("lon").get<double>();
    task.duration = t.at("duration").get<Seconds>();
    task.profit = t.at("profit").get<std::int64_t>();
    task.energy_cost = t.at("energy_cost").get<double>();
    task.storage_cost = t.at("storage_cost").get<double>();
    for (const auto& [key, list] : t.at("windows").items()) {
      task.windows[std::stoi(key)] = window_list_from_json(list);
    }
    instance.tasks.push_back(std::move(task));
  }
  return instance;
}

std::string schedule_to_json(const Schedule& schedule) {
  json root;
  root["format"] = 1;
  root["r"] = schedule.r;
  json es = json::array();
  json ee = json::array();
  for (std::size_t i = 0; i < schedule.r.size(); ++i) {
    es.push_back(schedule.es[i] ? json(*schedule.es[i]) : json(nullptr));
    ee.push_back(schedule.ee[i] ? json(*schedule.ee[i]) : json(nullptr));
  }
  root["es"] = es;
  root["ee"] = ee;
  return root.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  const json root = json::parse(text);
  if (root.at("format").get<int>() != 1) {
    throw StructuralError("unsupported schedule format version");
  }
  const auto& r = root.at("r");
  Schedule schedule = Schedule::empty_for(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    schedule.r[i] = r.at(i).get<int>();
    const auto& es = root.at("es").at(i);
    const auto& ee = root.at("ee").at(i);
    if (!es.is_null()) schedule.es[i] = es.get<Seconds>();
    if (!ee.is_null()) schedule.ee[i] = ee.get<Seconds>();
  }
  return schedule;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

void save_instance(const Instance& instance, const std::string& path) {
  write_file(path, instance_to_json(instance));
}

Schedule load_schedule(const std::string& path) { return schedule_from_json(read_file(path)); }

void save_schedule(const Schedule& schedule, const std::string& path) {
  write_file(path, schedule_to_json(schedule));
}

}  // namespace aeos
