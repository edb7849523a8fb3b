#ifndef AEOS_IO_HPP
#define AEOS_IO_HPP

#include <iosfwd>
#include <string>

#include "aeos/core.hpp"

// Versioned JSON persistence for instances and schedules ("format": 1).
// Serialization is deterministic: keys are emitted in sorted order and
// doubles use the shortest representation that round-trips exactly.

namespace aeos {

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

Schedule load_schedule(const std::string& path);
void save_schedule(const Schedule& schedule, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace aeos

#endif  // AEOS_IO_HPP
