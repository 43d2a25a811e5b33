#include "srdg/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "srdg/errors.hpp"

namespace srdg {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

GraphShape classify(const std::vector<std::vector<VertexIndex>>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0) return GraphShape::other;
  std::size_t edges = 0;
  DisjointSets sets(n);
  std::size_t components = n;
  for (VertexIndex v = 0; v < n; ++v) {
    for (VertexIndex w : adjacency[v]) {
      if (v < w) {
        ++edges;
        if (sets.unite(v, w)) --components;
      }
    }
  }
  if (components != 1 || edges != n - 1) return GraphShape::other;
  std::size_t max_degree = 0;
  for (const auto& nb : adjacency) max_degree = std::max(max_degree, nb.size());
  if (max_degree <= 2) return GraphShape::path;
  if (max_degree == n - 1) return GraphShape::star;
  return GraphShape::tree;
}

}  // namespace

std::string_view to_string(GraphShape shape) {
  switch (shape) {
    case GraphShape::path: return "path";
    case GraphShape::star: return "star";
    case GraphShape::tree: return "tree";
    case GraphShape::other: return "other";
  }
  return "other";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::range: return "range";
    case ViolationKind::monotonicity: return "monotonicity";
    case ViolationKind::deadline: return "deadline";
    case ViolationKind::same_connection_clash: return "same-connection-clash";
    case ViolationKind::head_on_clash: return "head-on-clash";
    case ViolationKind::capacity: return "capacity";
  }
  return "range";
}

DecayingGraph::DecayingGraph(std::vector<std::string> vertex_ids, std::vector<int> capacities,
                             std::vector<Connection> connections, Time lifetime)
    : ids_(std::move(vertex_ids)),
      capacities_(std::move(capacities)),
      connections_(std::move(connections)),
      lifetime_(lifetime) {
  if (lifetime_ < 1) throw InvalidInput("lifetime must be positive");
  if (capacities_.size() != ids_.size()) throw InvalidInput("one capacity per vertex required");
  for (VertexIndex v = 0; v < ids_.size(); ++v) {
    if (!index_.emplace(ids_[v], v).second) throw InvalidInput("duplicate vertex id '" + ids_[v] + "'");
    if (capacities_[v] < 1) throw InvalidInput("capacity of '" + ids_[v] + "' must be at least 1");
  }

  // Per unordered pair: which connection kinds exist.
  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<ConnectionIndex>> per_pair;
  for (ConnectionIndex c = 0; c < connections_.size(); ++c) {
    const Connection& con = connections_[c];
    if (con.tail >= ids_.size() || con.head >= ids_.size()) throw InvalidInput("unknown vertex in connection");
    if (con.tail == con.head) throw InvalidInput("self-loop at '" + ids_[con.tail] + "'");
    if (con.traversal_time < 0 || con.traversal_time > lifetime_ - 1)
      throw InvalidInput("traversal time out of range on " + ids_[con.tail] + "-" + ids_[con.head]);
    if (con.deadline < 1 || con.deadline > lifetime_)
      throw InvalidInput("deadline out of range on " + ids_[con.tail] + "-" + ids_[con.head]);
    per_pair[std::minmax(con.tail, con.head)].push_back(c);
  }

  adjacency_.assign(ids_.size(), {});
  for (const auto& [pair, list] : per_pair) {
    const auto describe = ids_[pair.first] + "-" + ids_[pair.second];
    bool has_edge = false;
    std::set<std::pair<VertexIndex, VertexIndex>> arcs;
    for (ConnectionIndex c : list) {
      const Connection& con = connections_[c];
      if (con.kind == ConnectionKind::edge) {
        if (has_edge) throw InvalidInput("duplicate edge " + describe);
        has_edge = true;
        traversal_[{con.tail, con.head}] = c;
        traversal_[{con.head, con.tail}] = c;
      } else {
        if (!arcs.emplace(con.tail, con.head).second) throw InvalidInput("duplicate arc " + describe);
        traversal_[{con.tail, con.head}] = c;
      }
    }
    if (has_edge && !arcs.empty()) throw InvalidInput("conflicting connection kinds on " + describe);
    adjacency_[pair.first].push_back(pair.second);
    adjacency_[pair.second].push_back(pair.first);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  shape_ = classify(adjacency_);
}

std::optional<VertexIndex> DecayingGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ConnectionIndex> DecayingGraph::traversal(VertexIndex from, VertexIndex to) const {
  auto it = traversal_.find({from, to});
  if (it == traversal_.end()) return std::nullopt;
  return it->second;
}

RoutePath::RoutePath(const DecayingGraph& graph, std::vector<VertexIndex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InvalidInput("a path needs at least two vertices");
  std::set<VertexIndex> seen;
  for (VertexIndex v : vertices_) {
    if (v >= graph.vertex_count()) throw InvalidInput("unknown vertex in path");
    if (!seen.insert(v).second) throw InvalidInput("path revisits vertex '" + graph.id(v) + "'");
  }
  hops_.reserve(vertices_.size() - 1);
  for (std::size_t h = 0; h + 1 < vertices_.size(); ++h) {
    auto c = graph.traversal(vertices_[h], vertices_[h + 1]);
    if (!c) {
      throw InvalidInput("untraversable hop " + graph.id(vertices_[h]) + "->" + graph.id(vertices_[h + 1]));
    }
    hops_.push_back(*c);
  }
}

std::optional<std::size_t> RoutePath::position(VertexIndex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Instance::Instance(DecayingGraph graph, std::vector<RoutePath> paths)
    : graph_(std::move(graph)), paths_(std::move(paths)), through_(graph_.vertex_count()) {
  for (PathIndex p = 0; p < paths_.size(); ++p) {
    for (VertexIndex v : paths_[p].vertices()) {
      if (v >= graph_.vertex_count()) throw InvalidInput("path vertex outside graph");
      through_[v].push_back(p);
    }
  }
}

namespace {
std::vector<RoutePath> build_paths(const DecayingGraph& graph,
                                   const std::vector<std::vector<VertexIndex>>& paths) {
  std::vector<RoutePath> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.emplace_back(graph, p);
  return out;
}
}  // namespace

Instance::Instance(DecayingGraph graph, const std::vector<std::vector<VertexIndex>>& paths)
    : Instance(graph, build_paths(graph, paths)) {}

std::size_t Diagnosis::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.kind == kind; }));
}

GraphShape shape(const DecayingGraph& graph) { return graph.shape(); }

bool is_exogenous(const DecayingGraph& graph) {
  const GraphShape s = graph.shape();
  if (s == GraphShape::other) throw InvalidInput("exogeneity is defined for decaying trees only");
  const std::size_t n = graph.vertex_count();
  // Latest deadline over the connections of each unordered pair.
  std::map<std::pair<VertexIndex, VertexIndex>, Time> pair_deadline;
  for (const Connection& c : graph.connections()) {
    auto& d = pair_deadline[std::minmax(c.tail, c.head)];
    d = std::max(d, c.deadline);
  }
  for (Time t = 1; t <= graph.lifetime(); ++t) {
    DisjointSets sets(n);
    std::vector<bool> touched(n, false);
    for (const auto& [pair, deadline] : pair_deadline) {
      if (deadline < t) continue;
      sets.unite(pair.first, pair.second);
      touched[pair.first] = touched[pair.second] = true;
    }
    std::set<std::size_t> roots;
    for (VertexIndex v = 0; v < n; ++v)
      if (touched[v]) roots.insert(sets.find(v));
    if (roots.size() > 1) return false;
  }
  return true;
}

std::optional<VertexIndex> star_center(const DecayingGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (graph.shape() == GraphShape::other || graph.shape() == GraphShape::tree) return std::nullopt;
  if (n == 2) return VertexIndex{0};
  for (VertexIndex v = 0; v < n; ++v)
    if (graph.neighbours(v).size() == n - 1) return v;
  return std::nullopt;
}

std::vector<VertexIndex> path_order(const DecayingGraph& graph) {
  if (graph.shape() != GraphShape::path) throw InvalidInput("graph is not a decaying path");
  const std::size_t n = graph.vertex_count();
  std::vector<VertexIndex> order;
  if (n == 1) return {0};
  VertexIndex start = n;
  for (VertexIndex v = 0; v < n && start == n; ++v)
    if (graph.neighbours(v).size() == 1) start = v;
  order.push_back(start);
  VertexIndex prev = n;
  VertexIndex cur = start;
  while (order.size() < n) {
    for (VertexIndex w : graph.neighbours(cur)) {
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
    order.push_back(cur);
  }
  return order;
}

Interval occupancy_at(const Instance& instance, const RoutePath& path, std::span<const Time> departures,
                      std::size_t position) {
  const auto& graph = instance.graph();
  const std::size_t k = path.hop_count();
  if (position == 0) return {departures[0], departures[0]};
  const Time arrival = departures[position - 1] + graph.connection(path.hop(position - 1)).traversal_time;
  if (position == k) return {arrival, arrival};
  return {arrival, departures[position]};
}

Interval occupancy(const Instance& instance, PathIndex p, const Temporalization& schedule, VertexIndex v) {
  const RoutePath& path = instance.path(p);
  auto pos = path.position(v);
  if (!pos) throw InvalidInput("vertex '" + instance.graph().id(v) + "' is not on the path");
  return occupancy_at(instance, path, schedule.departures.at(p), *pos);
}

namespace {

void check_shape(const Instance& instance, const Temporalization& schedule) {
  if (schedule.departures.size() != instance.path_count())
    throw InvalidInput("schedule has " + std::to_string(schedule.departures.size()) + " paths, instance has " +
                       std::to_string(instance.path_count()));
  for (PathIndex p = 0; p < instance.path_count(); ++p) {
    if (schedule.departures[p].size() != instance.path(p).hop_count())
      throw InvalidInput("schedule misses departures for path " + std::to_string(p));
  }
}

}  // namespace

Diagnosis validate(const Instance& instance, const Temporalization& schedule, Time slack) {
  check_shape(instance, schedule);
  const auto& graph = instance.graph();
  Diagnosis diag;

  // Adequacy.
  for (PathIndex p = 0; p < instance.path_count(); ++p) {
    const RoutePath& path = instance.path(p);
    const auto& dep = schedule.departures[p];
    for (std::size_t h = 0; h < path.hop_count(); ++h) {
      const Connection& con = graph.connection(path.hop(h));
      if (dep[h] < 1 || dep[h] > schedule.horizon) {
        diag.violations.push_back({ViolationKind::range, {p}, path.vertices()[h], path.hop(h), {dep[h], dep[h]}, {dep[h]}});
      }
      const Time arrival = dep[h] + con.traversal_time;
      if (arrival > con.deadline + slack) {
        diag.violations.push_back(
            {ViolationKind::deadline, {p}, std::nullopt, path.hop(h), {arrival, arrival}, {dep[h]}});
      }
      if (h + 1 < path.hop_count() && arrival > dep[h + 1]) {
        diag.violations.push_back({ViolationKind::monotonicity, {p}, path.vertices()[h + 1], path.hop(h),
                                   {dep[h + 1], arrival}, {dep[h], dep[h + 1]}});
      }
    }
  }

  // Temporal edge-disjointness, grouped per connection.
  struct Use {
    PathIndex path;
    VertexIndex from;
    Time departure;
  };
  std::vector<std::vector<Use>> uses(graph.connections().size());
  for (PathIndex p = 0; p < instance.path_count(); ++p) {
    const RoutePath& path = instance.path(p);
    for (std::size_t h = 0; h < path.hop_count(); ++h)
      uses[path.hop(h)].push_back({p, path.vertices()[h], schedule.departures[p][h]});
  }
  for (ConnectionIndex c = 0; c < uses.size(); ++c) {
    const Connection& con = graph.connection(c);
    const auto& list = uses[c];
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        const Use& x = list[a];
        const Use& y = list[b];
        if (x.from == y.from) {
          if (x.departure == y.departure)
            diag.violations.push_back({ViolationKind::same_connection_clash, {x.path, y.path}, x.from, c,
                                       {x.departure, x.departure}, {x.departure, y.departure}});
        } else if (con.kind == ConnectionKind::edge) {
          const Time gap = std::abs(x.departure - y.departure);
          if (gap < std::max(1, con.traversal_time)) {
            diag.violations.push_back({ViolationKind::head_on_clash, {x.path, y.path}, std::nullopt, c,
                                       {std::min(x.departure, y.departure), std::max(x.departure, y.departure)},
                                       {x.departure, y.departure}});
          }
        }
      }
    }
  }

  // Capacities: sweep the occupancy intervals at each vertex.
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    const auto through = instance.paths_through(v);
    if (through.size() <= static_cast<std::size_t>(graph.capacity(v))) continue;
    struct Event {
      Time at;
      int delta;
      PathIndex path;
    };
    std::vector<Event> events;
    for (PathIndex p : through) {
      const Interval occ = occupancy(instance, p, schedule, v);
      if (occ.empty()) continue;
      events.push_back({occ.first, +1, p});
      events.push_back({occ.last + 1, -1, p});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      return a.at != b.at ? a.at < b.at : a.delta < b.delta;
    });
    std::set<PathIndex> active;
    for (std::size_t e = 0; e < events.size();) {
      const Time at = events[e].at;
      for (; e < events.size() && events[e].at == at; ++e) {
        if (events[e].delta > 0)
          active.insert(events[e].path);
        else
          active.erase(events[e].path);
      }
      if (active.size() > static_cast<std::size_t>(graph.capacity(v))) {
        const Time until = e < events.size() ? events[e].at - 1 : at;
        diag.violations.push_back({ViolationKind::capacity, {active.begin(), active.end()}, v, std::nullopt,
                                   {at, until}, {}});
      }
    }
  }
  return diag;
}

VertexLoad vertex_load(const Instance& instance) {
  VertexLoad load;
  load.per_vertex.resize(instance.graph().vertex_count());
  for (VertexIndex v = 0; v < load.per_vertex.size(); ++v) {
    load.per_vertex[v] = instance.paths_through(v).size();
    load.max = std::max(load.max, load.per_vertex[v]);
  }
  return load;
}

Instance with_slack(const Instance& instance, Time slack) {
  if (slack < 0) throw InvalidInput("slack must be nonnegative");
  const auto& g = instance.graph();
  std::vector<std::string> ids;
  std::vector<int> caps;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    ids.push_back(g.id(v));
    caps.push_back(g.capacity(v));
  }
  std::vector<Connection> cons(g.connections().begin(), g.connections().end());
  for (auto& c : cons) c.deadline += slack;
  DecayingGraph graph(std::move(ids), std::move(caps), std::move(cons), g.lifetime() + slack);
  std::vector<std::vector<VertexIndex>> paths;
  for (const auto& p : instance.paths()) paths.emplace_back(p.vertices().begin(), p.vertices().end());
  return Instance(std::move(graph), paths);
}

int max_simultaneous(std::span<const Interval> intervals) {
  std::vector<std::pair<Time, int>> events;
  events.reserve(intervals.size() * 2);
  for (const Interval& iv : intervals) {
    if (iv.empty()) continue;
    events.emplace_back(iv.first, +1);
    events.emplace_back(iv.last + 1, -1);
  }
  // Closings sort before openings at the same step.
  std::sort(events.begin(), events.end());
  int current = 0;
  int best = 0;
  for (const auto& [at, delta] : events) {
    current += delta;
    best = std::max(best, current);
  }
  return best;
}

}  // namespace srdg
