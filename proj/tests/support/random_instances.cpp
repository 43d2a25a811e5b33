#include "random_instances.hpp"

#include <algorithm>
#include <queue>

namespace srdg::testing {

namespace {

std::vector<std::string> vertex_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v));
  return ids;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Time draw_deadline(std::mt19937_64& rng, Time theta, Time tau) {
  if (uniform(rng, 0, 6) == 0) return uniform(rng, 1, tau);
  return uniform(rng, std::min(tau, theta + 1), tau);
}

void connect(std::mt19937_64& rng, std::vector<Connection>& out, VertexIndex a, VertexIndex b, Time tau,
             Time max_theta) {
  auto one = [&](VertexIndex t, VertexIndex h, ConnectionKind kind) {
    const Time theta = std::min(uniform(rng, 0, max_theta), tau - 1);
    out.push_back({t, h, kind, theta, draw_deadline(rng, theta, tau)});
  };
  switch (uniform(rng, 0, 2)) {
    case 0:
      one(a, b, ConnectionKind::edge);
      break;
    case 1:
      if (uniform(rng, 0, 1)) std::swap(a, b);
      one(a, b, ConnectionKind::arc);
      break;
    default:
      one(a, b, ConnectionKind::arc);
      one(b, a, ConnectionKind::arc);
  }
}

bool traversable(const DecayingGraph& g, const std::vector<VertexIndex>& route) {
  for (std::size_t i = 0; i + 1 < route.size(); ++i)
    if (!g.traversal(route[i], route[i + 1])) return false;
  return true;
}

std::vector<VertexIndex> tree_route(const DecayingGraph& g, VertexIndex s, VertexIndex t) {
  std::vector<VertexIndex> parent(g.vertex_count(), g.vertex_count());
  std::queue<VertexIndex> queue;
  queue.push(s);
  parent[s] = s;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop();
    for (VertexIndex w : g.neighbours(u))
      if (parent[w] == g.vertex_count()) {
        parent[w] = u;
        queue.push(w);
      }
  }
  std::vector<VertexIndex> route{t};
  while (route.back() != s) route.push_back(parent[route.back()]);
  std::reverse(route.begin(), route.end());
  return route;
}

// Draws capacities once the paths are known; "unbounded" is |P(v)|.
Instance finish(std::mt19937_64& rng, std::size_t n, std::vector<Connection> connections, Time tau,
                const std::vector<std::vector<VertexIndex>>& paths) {
  std::vector<int> through(n, 0);
  for (const auto& p : paths)
    for (VertexIndex v : p) ++through[v];
  std::vector<int> caps;
  for (std::size_t v = 0; v < n; ++v) {
    const int pick = uniform(rng, 0, 2);
    caps.push_back(pick == 0 ? 1 : pick == 1 ? 2 : std::max(1, through[v]));
  }
  DecayingGraph graph(vertex_ids(n), caps, std::move(connections), tau);
  return Instance(std::move(graph), paths);
}

template <typename Sampler>
std::vector<std::vector<VertexIndex>> sample_paths(std::mt19937_64& rng, const DecayingGraph& g, std::size_t count,
                                                   Sampler&& sampler) {
  std::vector<std::vector<VertexIndex>> paths;
  for (std::size_t p = 0; p < count; ++p)
    for (int attempt = 0; attempt < 50; ++attempt) {
      auto route = sampler();
      if (route.size() >= 2 && traversable(g, route)) {
        paths.push_back(std::move(route));
        break;
      }
    }
  (void)rng;
  return paths;
}

}  // namespace

Instance random_path_instance(std::mt19937_64& rng, const RandomLimits& limits) {
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<int>(limits.max_vertices)));
  const Time tau = uniform(rng, 1, limits.max_tau);
  std::vector<Connection> connections;
  for (VertexIndex v = 0; v + 1 < n; ++v) connect(rng, connections, v, v + 1, tau, limits.max_theta);
  const DecayingGraph probe(vertex_ids(n), std::vector<int>(n, 1), connections, tau);
  const auto count = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(limits.max_paths)));
  auto paths = sample_paths(rng, probe, count, [&] {
    int a = uniform(rng, 0, static_cast<int>(n) - 1);
    int b = uniform(rng, 0, static_cast<int>(n) - 1);
    std::vector<VertexIndex> route;
    if (a == b) return route;
    const int step = a < b ? 1 : -1;
    for (int v = a; v != b + step; v += step) route.push_back(static_cast<VertexIndex>(v));
    return route;
  });
  return finish(rng, n, std::move(connections), tau, paths);
}

Instance random_star_instance(std::mt19937_64& rng, const RandomLimits& limits) {
  const std::size_t leaves = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(limits.max_vertices)));
  const std::size_t n = leaves + 1;
  const Time tau = uniform(rng, 1, limits.max_tau);
  std::vector<Connection> connections;
  for (VertexIndex v = 1; v < n; ++v) connect(rng, connections, v, 0, tau, limits.max_theta);
  const DecayingGraph probe(vertex_ids(n), std::vector<int>(n, 1), connections, tau);
  const auto count = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(limits.max_paths)));
  auto paths = sample_paths(rng, probe, count, [&] {
    const auto a = static_cast<VertexIndex>(uniform(rng, 1, static_cast<int>(leaves)));
    const auto b = static_cast<VertexIndex>(uniform(rng, 1, static_cast<int>(leaves)));
    switch (uniform(rng, 0, 2)) {
      case 0:
        return std::vector<VertexIndex>{a, 0};
      case 1:
        return std::vector<VertexIndex>{0, a};
      default:
        return a == b ? std::vector<VertexIndex>{} : std::vector<VertexIndex>{a, 0, b};
    }
  });
  return finish(rng, n, std::move(connections), tau, paths);
}

Instance random_tree_instance(std::mt19937_64& rng, const RandomLimits& limits) {
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<int>(limits.max_vertices)));
  const Time tau = uniform(rng, 1, limits.max_tau);
  std::vector<Connection> connections;
  for (VertexIndex v = 1; v < n; ++v)
    connect(rng, connections, static_cast<VertexIndex>(uniform(rng, 0, static_cast<int>(v) - 1)), v, tau,
            limits.max_theta);
  const DecayingGraph probe(vertex_ids(n), std::vector<int>(n, 1), connections, tau);
  const auto count = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(limits.max_paths)));
  auto paths = sample_paths(rng, probe, count, [&] {
    const auto a = static_cast<VertexIndex>(uniform(rng, 0, static_cast<int>(n) - 1));
    const auto b = static_cast<VertexIndex>(uniform(rng, 0, static_cast<int>(n) - 1));
    return a == b ? std::vector<VertexIndex>{} : tree_route(probe, a, b);
  });
  return finish(rng, n, std::move(connections), tau, paths);
}

}  // namespace srdg::testing
