#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "srdg/model.hpp"

namespace srdg::testing {

struct Link {
  std::string tail, head;
  ConnectionKind kind = ConnectionKind::edge;
  Time theta = 0;
  Time deadline = 1;
};

/// Builds an instance from readable ids; capacities default to 1.
inline Instance make_instance(const std::vector<std::pair<std::string, int>>& vertices, const std::vector<Link>& links,
                              Time tau, const std::vector<std::vector<std::string>>& paths) {
  std::vector<std::string> ids;
  std::vector<int> caps;
  for (const auto& [id, c] : vertices) ids.push_back(id), caps.push_back(c);
  auto at = [&](const std::string& id) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return i;
    throw std::invalid_argument(id);
  };
  std::vector<Connection> cons;
  for (const auto& l : links) cons.push_back({at(l.tail), at(l.head), l.kind, l.theta, l.deadline});
  std::vector<std::vector<VertexIndex>> routes;
  for (const auto& p : paths) {
    routes.emplace_back();
    for (const auto& v : p) routes.back().push_back(at(v));
  }
  return Instance(DecayingGraph(ids, caps, cons, tau), routes);
}

/// Two vertices u, v joined by one edge, with `copies` paths (u, v).
inline Instance twin_edge(Time theta, Time deadline, std::size_t copies, Time tau = 0) {
  std::vector<std::vector<std::string>> paths(copies, {"u", "v"});
  return make_instance({{"u", 10}, {"v", 10}}, {{"u", "v", ConnectionKind::edge, theta, deadline}},
                       tau ? tau : std::max(deadline, theta + 1), paths);
}

}  // namespace srdg::testing
