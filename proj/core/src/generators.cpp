#include "srdg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

#include "json.hpp"
#include "srdg/errors.hpp"

namespace srdg {

namespace {

constexpr int kMaxResample = 10000;

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

// Adjacent vertices a, b: a single arc (random direction), two antiparallel
// arcs, or an edge, each with probability 1/3.
void connect(Rng& rng, std::vector<Connection>& out, VertexIndex a, VertexIndex b) {
  auto theta = [&] { return uniform(rng, 5, 20); };
  switch (uniform(rng, 0, 2)) {
    case 0:
      if (coin(rng)) std::swap(a, b);
      out.push_back({a, b, ConnectionKind::arc, theta(), 1});
      break;
    case 1:
      out.push_back({a, b, ConnectionKind::arc, theta(), 1});
      out.push_back({b, a, ConnectionKind::arc, theta(), 1});
      break;
    default:
      out.push_back({a, b, ConnectionKind::edge, theta(), 1});
      break;
  }
}

bool traversable(const std::vector<Connection>& cons, VertexIndex from, VertexIndex to) {
  return std::any_of(cons.begin(), cons.end(), [&](const Connection& c) {
    return (c.tail == from && c.head == to) || (c.kind == ConnectionKind::edge && c.tail == to && c.head == from);
  });
}

// Capacities from the path counts, deadlines from d_lb scaled by d_scale,
// lifetime large enough for every deadline and traversal time.
Instance finish(std::vector<std::string> ids, std::vector<Connection> cons,
                const std::vector<std::vector<VertexIndex>>& paths, double c_star, double d_scale) {
  const std::size_t n = ids.size();
  Time theta_max = 0;
  for (const Connection& c : cons) theta_max = std::max(theta_max, c.traversal_time);
  // Provisional graph: large lifetime, deadlines filled in below.
  DecayingGraph draft(ids, std::vector<int>(n, 1), cons, theta_max + 1);
  std::vector<RoutePath> routes;
  for (const auto& p : paths) routes.emplace_back(draft, p);

  std::vector<std::size_t> through(n, 0);
  for (const auto& p : paths)
    for (VertexIndex v : p) ++through[v];
  std::vector<int> caps(n);
  for (VertexIndex v = 0; v < n; ++v)
    caps[v] = std::max(1, static_cast<int>(std::ceil(c_star * static_cast<double>(through[v]) - 1e-9)));

  Time tau = theta_max + 1;
  for (ConnectionIndex e = 0; e < cons.size(); ++e) {
    const Time lb = d_lb(draft, routes, e);
    cons[e].deadline = std::max<Time>(1, static_cast<Time>(round_half_up(d_scale * lb)));
    tau = std::max(tau, cons[e].deadline);
  }
  DecayingGraph graph(std::move(ids), std::move(caps), std::move(cons), tau);
  return Instance(std::move(graph), paths);
}

}  // namespace

long round_half_up(double x) { return static_cast<long>(std::floor(x + 0.5 + 1e-9)); }

Time d_lb(const DecayingGraph& graph, std::span<const RoutePath> paths, ConnectionIndex e) {
  const Time theta = graph.connection(e).traversal_time;
  Time users = 0;
  Time latest = 0;
  for (const RoutePath& p : paths) {
    Time t = 1;
    for (ConnectionIndex c : p.hops()) {
      t += graph.connection(c).traversal_time;
      if (c == e) {
        ++users;
        latest = std::max(latest, t);
      }
    }
  }
  if (users == 0) return theta + 1;
  return theta + std::max(users, latest);
}

Instance gen_path_instance(const PathGenParams& params) {
  if (params.n < 2) throw InvalidInput("path generator needs n >= 2");
  Rng rng(params.seed);
  const std::size_t n = params.n;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i + 1));
  std::vector<Connection> cons;
  for (VertexIndex i = 0; i + 1 < n; ++i) connect(rng, cons, i, i + 1);

  const long count = round_half_up(params.p_star * static_cast<double>(n));
  const long length = std::max(1L, round_half_up(params.l_star * static_cast<double>(n)));
  std::vector<std::vector<VertexIndex>> paths;
  int retries = 0;
  while (static_cast<long>(paths.size()) < count) {
    const auto s = static_cast<VertexIndex>(uniform(rng, 0, static_cast<int>(n) - 1));
    std::vector<VertexIndex> left{s}, right{s};
    while (static_cast<long>(left.size()) - 1 < length && left.back() > 0 &&
           traversable(cons, left.back(), left.back() - 1))
      left.push_back(left.back() - 1);
    while (static_cast<long>(right.size()) - 1 < length && right.back() + 1 < n &&
           traversable(cons, right.back(), right.back() + 1))
      right.push_back(right.back() + 1);
    if (left.size() == 1 && right.size() == 1) {
      if (++retries > kMaxResample) throw InvalidInput("no traversable path could be sampled");
      continue;
    }
    if (left.size() != right.size())
      paths.push_back(left.size() > right.size() ? left : right);
    else
      paths.push_back(coin(rng) ? left : right);
  }
  return finish(std::move(ids), std::move(cons), paths, params.c_star, params.d_star);
}

Instance gen_star_instance(const StarGenParams& params) {
  if (params.n < 2) throw InvalidInput("star generator needs n >= 2");
  Rng rng(params.seed);
  const std::size_t n = params.n;
  const VertexIndex center = 0;
  std::vector<std::string> ids{"c"};
  for (std::size_t i = 1; i < n; ++i) ids.push_back("l" + std::to_string(i));
  std::vector<Connection> cons;
  for (VertexIndex leaf = 1; leaf < n; ++leaf) connect(rng, cons, center, leaf);

  std::vector<VertexIndex> outward;  // leaves reachable from the center
  std::vector<bool> inward(n, false);
  for (VertexIndex leaf = 1; leaf < n; ++leaf) {
    if (traversable(cons, center, leaf)) outward.push_back(leaf);
    inward[leaf] = traversable(cons, leaf, center);
  }

  const long count = round_half_up(params.p_star * static_cast<double>(n));
  std::vector<std::vector<VertexIndex>> paths;
  int retries = 0;
  auto pick = [&](const std::vector<VertexIndex>& from) {
    return from[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(from.size()) - 1))];
  };
  while (static_cast<long>(paths.size()) < count) {
    const auto s = static_cast<VertexIndex>(uniform(rng, 0, static_cast<int>(n) - 1));
    if (s == center) {
      if (!outward.empty()) {
        paths.push_back({center, pick(outward)});
        continue;
      }
    } else if (inward[s]) {
      std::vector<VertexIndex> others;
      for (VertexIndex w : outward)
        if (w != s) others.push_back(w);
      if (coin(rng) || others.empty())
        paths.push_back({s, center});
      else
        paths.push_back({s, center, pick(others)});
      continue;
    }
    if (++retries > kMaxResample) throw InvalidInput("no traversable star path could be sampled");
  }
  return finish(std::move(ids), std::move(cons), paths, params.c_star, params.d_star);
}

GeoGraph parse_geo_graph(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed geo document: ") + e.what());
  }
  GeoGraph geo;
  try {
    for (const json& v : doc.at("vertices"))
      geo.vertices.push_back({v.at("id").get<std::string>(), {v.at("x").get<double>(), v.at("y").get<double>()}});
    for (const json& c : doc.at("connections")) {
      geo.connections.push_back({c.at("tail").get<std::string>(), c.at("head").get<std::string>(),
                                 c.at("length_m").get<double>(), c.value("oneway", false)});
    }
    for (const json& r : doc.at("rivers")) {
      std::vector<Point> line;
      for (const json& p : r) line.push_back({p.at("x").get<double>(), p.at("y").get<double>()});
      if (line.empty()) throw InvalidInput("empty river polyline");
      geo.rivers.push_back(std::move(line));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed geo document: ") + e.what());
  }
  if (geo.rivers.empty()) throw InvalidInput("geo graph needs at least one river");
  for (const GeoVertex& v : geo.vertices)
    if (!std::isfinite(v.at.x) || !std::isfinite(v.at.y)) throw InvalidInput("non-finite coordinate");
  return geo;
}

std::string_view to_string(Zone zone) {
  switch (zone) {
    case Zone::zero: return "0";
    case Zone::a: return "A";
    case Zone::b: return "B";
    case Zone::c: return "C";
  }
  return "0";
}

Zone zone_for_distance(double metres) {
  if (metres <= 250.0) return Zone::zero;
  if (metres <= 500.0) return Zone::a;
  if (metres <= 1000.0) return Zone::b;
  return Zone::c;
}

double river_distance(const GeoGraph& geo, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& line : geo.rivers) {
    if (line.size() == 1) best = std::min(best, std::hypot(p.x - line[0].x, p.y - line[0].y));
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      const Point a = line[i];
      const Point b = line[i + 1];
      const double dx = b.x - a.x;
      const double dy = b.y - a.y;
      const double len2 = dx * dx + dy * dy;
      double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      best = std::min(best, std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy)));
    }
  }
  return best;
}

std::vector<Zone> assign_zones(const GeoGraph& geo) {
  std::vector<Zone> zones;
  for (const GeoVertex& v : geo.vertices) zones.push_back(zone_for_distance(river_distance(geo, v.at)));
  return zones;
}

Instance gen_geo_instance(const GeoGraph& geo, double p_star, Zone target, std::uint64_t seed) {
  if (target == Zone::zero) throw InvalidInput("target zone must be A, B or C");
  if (p_star < 0 || p_star > 1) throw InvalidInput("p* must lie in [0, 1]");
  Rng rng(seed);
  const std::size_t n = geo.vertices.size();
  std::vector<std::string> ids;
  std::unordered_map<std::string, VertexIndex> index;
  std::vector<double> dist(n);
  for (VertexIndex v = 0; v < n; ++v) {
    ids.push_back(geo.vertices[v].id);
    if (!index.emplace(ids.back(), v).second) throw InvalidInput("duplicate vertex id '" + ids.back() + "'");
    dist[v] = river_distance(geo, geo.vertices[v].at);
  }
  std::vector<Connection> cons;
  std::vector<int> caps(n, 0);
  Time tau = 1;
  for (const GeoConnection& gc : geo.connections) {
    auto t = index.find(gc.tail);
    auto h = index.find(gc.head);
    if (t == index.end() || h == index.end()) throw InvalidInput("unknown vertex in geo connection");
    Connection c;
    c.tail = t->second;
    c.head = h->second;
    c.kind = gc.oneway ? ConnectionKind::arc : ConnectionKind::edge;
    c.traversal_time = static_cast<Time>(std::ceil(gc.length_m / (50.0 / 3.6) - 1e-9));
    c.deadline = static_cast<Time>(std::ceil(std::min(dist[c.tail], dist[c.head]) - 1e-9));
    c.deadline = std::max(c.deadline, c.traversal_time + 1);
    ++caps[c.tail];
    ++caps[c.head];
    tau = std::max({tau, c.deadline, c.traversal_time + 1});
    cons.push_back(c);
  }
  for (int& c : caps) c = std::max(c, 1);
  DecayingGraph graph(ids, caps, cons, tau);

  std::vector<VertexIndex> inner;
  std::vector<bool> outer(n, false);
  for (VertexIndex v = 0; v < n; ++v) {
    const Zone z = zone_for_distance(dist[v]);
    if (static_cast<int>(z) < static_cast<int>(target))
      inner.push_back(v);
    else
      outer[v] = true;
  }
  const long count = round_half_up(p_star * static_cast<double>(inner.size()));
  std::vector<std::vector<VertexIndex>> paths;
  int retries = 0;
  while (static_cast<long>(paths.size()) < count) {
    const VertexIndex s = inner[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(inner.size()) - 1))];
    // Travel-time Dijkstra along traversable connections; the queue settles ties by vertex index.
    std::vector<long> best(n, std::numeric_limits<long>::max());
    std::vector<VertexIndex> parent(n, n);
    using Item = std::pair<long, VertexIndex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    best[s] = 0;
    queue.push({0, s});
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (d != best[u]) continue;
      for (VertexIndex w : graph.neighbours(u)) {
        const auto c = graph.traversal(u, w);
        if (!c) continue;
        const long nd = d + graph.connection(*c).traversal_time;
        if (nd < best[w]) {
          best[w] = nd;
          parent[w] = u;
          queue.push({nd, w});
        }
      }
    }
    std::vector<VertexIndex> eligible;
    for (VertexIndex v = 0; v < n; ++v)
      if (outer[v] && v != s && best[v] != std::numeric_limits<long>::max()) eligible.push_back(v);
    if (eligible.empty()) {
      if (++retries > kMaxResample) throw InvalidInput("no reachable sink in the target zones");
      continue;
    }
    std::sort(eligible.begin(), eligible.end(),
              [&](VertexIndex a, VertexIndex b) { return best[a] != best[b] ? best[a] < best[b] : a < b; });
    const auto keep = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.2 * eligible.size() - 1e-9)));
    const VertexIndex w = eligible[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(keep) - 1))];
    std::vector<VertexIndex> route{w};
    while (route.back() != s) route.push_back(parent[route.back()]);
    std::reverse(route.begin(), route.end());
    paths.push_back(std::move(route));
  }
  return Instance(std::move(graph), paths);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view constellation, unsigned replicate) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : constellation) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = h ^ (base * 0x9e3779b97f4a7c15ULL) ^ (static_cast<std::uint64_t>(replicate) << 32);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace srdg
