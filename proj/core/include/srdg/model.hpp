#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace srdg {

using VertexIndex = std::size_t;
using PathIndex = std::size_t;
using ConnectionIndex = std::size_t;
using Time = int;

enum class ConnectionKind { edge, arc };

/// A timed connection. Edges are undirected; arcs run from tail to head.
struct Connection {
  VertexIndex tail = 0;
  VertexIndex head = 0;
  ConnectionKind kind = ConnectionKind::edge;
  Time traversal_time = 0;
  Time deadline = 1;
};

enum class GraphShape { path, star, tree, other };

std::string_view to_string(GraphShape shape);

/// Closed interval of time steps.
struct Interval {
  Time first = 0;
  Time last = 0;

  bool empty() const { return last < first; }
  bool contains(Time t) const { return first <= t && t <= last; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Static mixed graph whose connections expire, with vertex capacities and a
/// lifetime. Immutable once built; the constructor enforces every invariant.
class DecayingGraph {
 public:
  DecayingGraph() = default;
  DecayingGraph(std::vector<std::string> vertex_ids, std::vector<int> capacities,
                std::vector<Connection> connections, Time lifetime);

  std::size_t vertex_count() const { return ids_.size(); }
  const std::string& id(VertexIndex v) const { return ids_.at(v); }
  std::optional<VertexIndex> find(std::string_view id) const;
  int capacity(VertexIndex v) const { return capacities_.at(v); }
  Time lifetime() const { return lifetime_; }

  std::span<const Connection> connections() const { return connections_; }
  const Connection& connection(ConnectionIndex c) const { return connections_.at(c); }

  /// Connection a path uses to step from `from` to `to`: the arc (from, to) if
  /// present, otherwise the edge {from, to}.
  std::optional<ConnectionIndex> traversal(VertexIndex from, VertexIndex to) const;

  /// Neighbours in the underlying undirected simple graph U(G).
  const std::vector<VertexIndex>& neighbours(VertexIndex v) const { return adjacency_.at(v); }

  GraphShape shape() const { return shape_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<int> capacities_;
  std::vector<Connection> connections_;
  std::map<std::pair<VertexIndex, VertexIndex>, ConnectionIndex> traversal_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  Time lifetime_ = 1;
  GraphShape shape_ = GraphShape::other;
};

/// A fixed route: distinct vertices, each consecutive pair traversable.
class RoutePath {
 public:
  RoutePath() = default;
  RoutePath(const DecayingGraph& graph, std::vector<VertexIndex> vertices);

  std::span<const VertexIndex> vertices() const { return vertices_; }
  std::size_t hop_count() const { return hops_.size(); }
  VertexIndex source() const { return vertices_.front(); }
  VertexIndex sink() const { return vertices_.back(); }
  /// Connection used by hop h (from vertices()[h] to vertices()[h + 1]).
  ConnectionIndex hop(std::size_t h) const { return hops_.at(h); }
  std::span<const ConnectionIndex> hops() const { return hops_; }
  std::optional<std::size_t> position(VertexIndex v) const;

  friend bool operator==(const RoutePath& a, const RoutePath& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<VertexIndex> vertices_;
  std::vector<ConnectionIndex> hops_;
};

class Instance {
 public:
  Instance() = default;
  Instance(DecayingGraph graph, std::vector<RoutePath> paths);
  /// Builds paths from vertex index sequences, validating each against the graph.
  Instance(DecayingGraph graph, const std::vector<std::vector<VertexIndex>>& paths);

  const DecayingGraph& graph() const { return graph_; }
  std::span<const RoutePath> paths() const { return paths_; }
  const RoutePath& path(PathIndex p) const { return paths_.at(p); }
  std::size_t path_count() const { return paths_.size(); }
  Time lifetime() const { return graph_.lifetime(); }

  /// Indices of the paths containing v, ascending.
  std::span<const PathIndex> paths_through(VertexIndex v) const { return through_.at(v); }

 private:
  DecayingGraph graph_;
  std::vector<RoutePath> paths_;
  std::vector<std::vector<PathIndex>> through_;
};

/// Departure time of every hop of every path, plus the horizon the times live in.
struct Temporalization {
  Time horizon = 0;
  std::vector<std::vector<Time>> departures;

  friend bool operator==(const Temporalization&, const Temporalization&) = default;
};

enum class ViolationKind {
  range,
  monotonicity,
  deadline,
  same_connection_clash,
  head_on_clash,
  capacity,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::range;
  std::vector<PathIndex> paths;
  std::optional<VertexIndex> vertex;
  std::optional<ConnectionIndex> connection;
  /// Time steps involved; a single step when first == last.
  Interval times;
  std::vector<Time> departures;
};

struct Diagnosis {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

struct VertexLoad {
  std::vector<std::size_t> per_vertex;
  std::size_t max = 0;
};

GraphShape shape(const DecayingGraph& graph);

/// True iff for every t, the connections with deadline >= t induce one tree
/// plus isolated vertices. Throws InvalidInput unless U(G) is a tree.
bool is_exogenous(const DecayingGraph& graph);

/// Center of U(G) when it is a star (n >= 3), or vertex 0 when n == 2.
std::optional<VertexIndex> star_center(const DecayingGraph& graph);

/// Vertices of a decaying path from one end to the other, starting at the end
/// with the smaller index. Throws InvalidInput if U(G) is not a path.
std::vector<VertexIndex> path_order(const DecayingGraph& graph);

/// Time steps at which path p is located at v.
Interval occupancy(const Instance& instance, PathIndex p, const Temporalization& schedule,
                   VertexIndex v);

/// Same, by position along the path and a raw departure list.
Interval occupancy_at(const Instance& instance, const RoutePath& path,
                      std::span<const Time> departures, std::size_t position);

/// Full validity check. Deadlines are compared against d(e) + slack; every
/// departure must lie in {1, ..., schedule.horizon}.
Diagnosis validate(const Instance& instance, const Temporalization& schedule, Time slack = 0);

VertexLoad vertex_load(const Instance& instance);

/// Copy of the instance with every deadline and the lifetime raised by slack.
Instance with_slack(const Instance& instance, Time slack);

/// Largest number of intervals sharing a time step (sort-and-sweep).
int max_simultaneous(std::span<const Interval> intervals);

}  // namespace srdg
