#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srdg/model.hpp"

namespace srdg {

struct PathGenParams {
  std::size_t n = 8;
  double p_star = 1.0;
  double l_star = 0.33;
  double c_star = 1.0;
  double d_star = 1.0;
  std::uint64_t seed = 0;
};

struct StarGenParams {
  std::size_t n = 8;
  double p_star = 1.0;
  double c_star = 1.0;
  double d_star = 1.0;
  std::uint64_t seed = 0;
};

/// floor(x + 1/2), guarded against representation noise.
long round_half_up(double x);

Instance gen_path_instance(const PathGenParams& params);
Instance gen_star_instance(const StarGenParams& params);

/// theta(e) + max(#paths using e, latest no-wait arrival over e); theta(e) + 1
/// for connections no path uses. Paths start at 1 and never wait.
Time d_lb(const DecayingGraph& graph, std::span<const RoutePath> paths, ConnectionIndex e);

struct Point {
  double x = 0;
  double y = 0;
};

struct GeoConnection {
  std::string tail;
  std::string head;
  double length_m = 0;
  bool oneway = false;
};

struct GeoVertex {
  std::string id;
  Point at;
};

struct GeoGraph {
  std::vector<GeoVertex> vertices;
  std::vector<GeoConnection> connections;
  std::vector<std::vector<Point>> rivers;
};

/// {vertices: [{id, x, y}], connections: [{tail, head, length_m, oneway}], rivers: [[{x, y}, ...], ...]}
GeoGraph parse_geo_graph(std::string_view text);

enum class Zone { zero = 0, a = 1, b = 2, c = 3 };

std::string_view to_string(Zone zone);
Zone zone_for_distance(double metres);

/// Euclidean distance from a point to the nearest river polyline.
double river_distance(const GeoGraph& geo, Point p);

std::vector<Zone> assign_zones(const GeoGraph& geo);

/// Paths from zones below target into target and beyond; see the README for the rules.
Instance gen_geo_instance(const GeoGraph& geo, double p_star, Zone target, std::uint64_t seed);

/// Seed of replicate x of a named constellation, stable across platforms.
std::uint64_t derive_seed(std::uint64_t base, std::string_view constellation, unsigned replicate);

}  // namespace srdg
