#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "srdg/errors.hpp"
#include "srdg/generators.hpp"
#include "srdg/io.hpp"

using namespace srdg;
using namespace srdg::testing;

namespace {

void audit(const Instance& inst, double c_star, double d_star) {
  const DecayingGraph& g = inst.graph();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const double want = std::ceil(c_star * static_cast<double>(inst.paths_through(v).size()) - 1e-9);
    CHECK(g.capacity(v) == std::max(1, static_cast<int>(want)));
  }
  Time theta_max = 0, d_max = 0;
  for (ConnectionIndex e = 0; e < g.connections().size(); ++e) {
    const Connection& c = g.connection(e);
    CHECK(c.traversal_time >= 5);
    CHECK(c.traversal_time <= 20);
    const Time want = std::max<Time>(1, static_cast<Time>(round_half_up(d_star * d_lb(g, inst.paths(), e))));
    CHECK(c.deadline == want);
    theta_max = std::max(theta_max, c.traversal_time);
    d_max = std::max(d_max, c.deadline);
  }
  CHECK(inst.lifetime() == std::max(theta_max + 1, d_max));
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("d_lb formula") {
    // e = (v2, v3), theta 5; no-wait arrivals on e are 6, 9 and 11
    const Instance inst = make_instance({{"v0", 1}, {"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}},
                                        {{"v0", "v1", ConnectionKind::edge, 2, 30},
                                         {"v1", "v2", ConnectionKind::edge, 3, 30},
                                         {"v2", "v3", ConnectionKind::edge, 5, 30},
                                         {"v3", "v4", ConnectionKind::edge, 5, 30}},
                                        30, {{"v2", "v3"}, {"v1", "v2", "v3"}, {"v0", "v1", "v2", "v3"}});
    CHECK(d_lb(inst.graph(), inst.paths(), 2) == 16);
    CHECK(d_lb(inst.graph(), inst.paths(), 3) == 6);
    const Instance one = make_instance({{"a", 1}, {"b", 1}}, {{"a", "b", ConnectionKind::edge, 5, 30}}, 30, {{"a", "b"}});
    CHECK(d_lb(one.graph(), one.paths(), 0) == 11);
  }

  TEST_CASE("path family") {
    const PathGenParams params{8, 1.0, 0.33, 1.0, 1.0, 42};
    const Instance a = gen_path_instance(params);
    CHECK(a.path_count() == 8);
    CHECK(a.graph().shape() == GraphShape::path);
    CHECK(instance_to_json(a) == instance_to_json(gen_path_instance(params)));
    for (VertexIndex v = 0; v < a.graph().vertex_count(); ++v)
      if (!a.paths_through(v).empty()) CHECK(a.graph().capacity(v) == static_cast<int>(a.paths_through(v).size()));
    for (double p : {0.5, 0.67, 0.83, 1.0})
      for (std::size_t n : {8u, 12u, 16u})
        for (double c : {0.1, 0.4, 0.7, 1.0})
          for (double d : {0.2, 0.47, 0.73, 1.0}) {
            const Instance inst = gen_path_instance({n, p, 0.44, c, d, n * 1000 + static_cast<std::size_t>(p * 100)});
            CHECK(inst.path_count() == static_cast<std::size_t>(round_half_up(p * static_cast<double>(n))));
            audit(inst, c, d);
          }
    CHECK_THROWS_AS(gen_path_instance({1, 1.0, 0.33, 1.0, 1.0, 1}), InvalidInput);
  }

  TEST_CASE("star family") {
    const StarGenParams params{8, 2.0, 0.4, 0.73, 9};
    const Instance s = gen_star_instance(params);
    CHECK(s.path_count() == 16);
    CHECK(s.graph().shape() == GraphShape::star);
    CHECK(instance_to_json(s) == instance_to_json(gen_star_instance(params)));
    const VertexIndex center = *star_center(s.graph());
    for (const RoutePath& p : s.paths()) CHECK(p.position(center).has_value());
    audit(s, 0.4, 0.73);
  }

  TEST_CASE("zones") {
    CHECK(zone_for_distance(0) == Zone::zero);
    CHECK(zone_for_distance(250.0) == Zone::zero);
    CHECK(zone_for_distance(250.1) == Zone::a);
    CHECK(zone_for_distance(500.0) == Zone::a);
    CHECK(zone_for_distance(1000.0) == Zone::b);
    CHECK(zone_for_distance(1500) == Zone::c);
  }

  TEST_CASE("geo family") {
    const GeoGraph geo = parse_geo_graph(R"({
      "vertices": [{"id": "r", "x": 0, "y": 100}, {"id": "s", "x": 100, "y": 100},
                   {"id": "a", "x": 0, "y": 400}, {"id": "b", "x": 0, "y": 675.8},
                   {"id": "c", "x": 0, "y": 1200}],
      "connections": [{"tail": "r", "head": "s", "length_m": 100, "oneway": false},
                      {"tail": "r", "head": "a", "length_m": 300, "oneway": false},
                      {"tail": "a", "head": "b", "length_m": 275.8, "oneway": true},
                      {"tail": "b", "head": "c", "length_m": 524.2, "oneway": false}],
      "rivers": [[{"x": -1000, "y": 0}, {"x": 1000, "y": 0}]]})");
    CHECK(river_distance(geo, {0, 675.8}) == doctest::Approx(675.8));
    const auto zones = assign_zones(geo);
    CHECK(zones == std::vector<Zone>{Zone::zero, Zone::zero, Zone::a, Zone::b, Zone::c});
    const Instance inst = gen_geo_instance(geo, 1.0, Zone::b, 3);
    const DecayingGraph& g = inst.graph();
    const auto rs = g.traversal(*g.find("r"), *g.find("s"));
    REQUIRE(rs);
    CHECK(g.connection(*rs).traversal_time == 8);
    CHECK(g.connection(*rs).kind == ConnectionKind::edge);
    const auto bc = g.traversal(*g.find("b"), *g.find("c"));
    CHECK(g.connection(*bc).deadline == 676);
    CHECK_FALSE(g.traversal(*g.find("b"), *g.find("a")));
    CHECK(g.capacity(*g.find("r")) == 2);
    // zones 0 and A are inner for target B
    CHECK(inst.path_count() == 3);
    for (const RoutePath& p : inst.paths()) CHECK(zones[p.sink()] >= Zone::b);
    CHECK(gen_geo_instance(geo, 0.0, Zone::a, 1).path_count() == 0);
  }
}
