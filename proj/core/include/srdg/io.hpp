#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "srdg/model.hpp"

namespace srdg {

// Instance documents: {tau, vertices: [{id, capacity}], connections:
// [{tail, head, kind: "edge"|"arc", theta, deadline}], paths: [[id, ...], ...]}.
Instance parse_instance(std::string_view text);
std::string instance_to_json(const Instance& instance);

// Schedule documents: {horizon, departures: [[t, ...], ...]}.
Temporalization parse_schedule(std::string_view text);
std::string schedule_to_json(const Temporalization& schedule);

std::string diagnosis_to_json(const Instance& instance, const Diagnosis& diagnosis);
std::string describe(const Instance& instance, const Violation& violation);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace srdg
