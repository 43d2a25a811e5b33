#include "srdg/exact.hpp"

#include <algorithm>
#include <numeric>

#include "srdg/errors.hpp"

namespace srdg {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::feasible ? "feasible" : "infeasible";
}

namespace {

class Search {
 public:
  Search(const Instance& instance, Time slack, std::uint64_t budget)
      : instance_(instance), graph_(instance.graph()), slack_(slack), budget_(budget) {
    horizon_ = graph_.lifetime() + slack_;
    order_.resize(instance.path_count());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](PathIndex a, PathIndex b) {
      const RoutePath& pa = instance.path(a);
      const RoutePath& pb = instance.path(b);
      const auto& ia = graph_.id(pa.source());
      const auto& ib = graph_.id(pb.source());
      if (ia != ib) return ia < ib;
      if (pa.hop_count() != pb.hop_count()) return pa.hop_count() < pb.hop_count();
      if (!std::ranges::equal(pa.vertices(), pb.vertices()))
        return std::ranges::lexicographical_compare(pa.vertices(), pb.vertices());
      return a < b;
    });
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const PathIndex p = order_[k];
      for (std::size_t h = 0; h < instance.path(p).hop_count(); ++h) vars_.push_back({p, h, k});
    }
    departures_.resize(instance.path_count());
    for (PathIndex p = 0; p < instance.path_count(); ++p)
      departures_[p].assign(instance.path(p).hop_count(), 0);
    uses_.resize(graph_.connections().size());
    load_.assign(graph_.vertex_count(), std::vector<int>(static_cast<std::size_t>(horizon_) + 2, 0));
  }

  SolveOutcome run() {
    SolveOutcome out;
    if (dfs(0)) {
      out.verdict = Verdict::feasible;
      out.schedule = Temporalization{horizon_, departures_};
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Var {
    PathIndex path;
    std::size_t hop;
    std::size_t rank;
  };
  struct Use {
    VertexIndex from;
    Time departure;
  };

  bool clashes(ConnectionIndex c, VertexIndex from, Time t) const {
    const Connection& con = graph_.connection(c);
    const Time gap = std::max(1, con.traversal_time);
    for (const Use& u : uses_[c]) {
      if (u.from == from) {
        if (u.departure == t) return true;
      } else if (con.kind == ConnectionKind::edge && std::abs(u.departure - t) < gap) {
        return true;
      }
    }
    return false;
  }

  bool add_interval(VertexIndex v, Interval iv) {
    auto& row = load_[v];
    bool ok = true;
    for (Time t = iv.first; t <= iv.last; ++t)
      if (++row[t] > graph_.capacity(v)) ok = false;
    return ok;
  }

  void remove_interval(VertexIndex v, Interval iv) {
    for (Time t = iv.first; t <= iv.last; ++t) --load_[v][t];
  }

  bool dfs(std::size_t index) {
    if (index == vars_.size()) return true;
    const Var& var = vars_[index];
    const RoutePath& path = instance_.path(var.path);
    const ConnectionIndex c = path.hop(var.hop);
    const Connection& con = graph_.connection(c);
    const VertexIndex from = path.vertices()[var.hop];
    const VertexIndex to = path.vertices()[var.hop + 1];
    auto& dep = departures_[var.path];

    Time lo = 1;
    Time arrival_here = 0;
    if (var.hop > 0) {
      arrival_here = dep[var.hop - 1] + graph_.connection(path.hop(var.hop - 1)).traversal_time;
      lo = arrival_here;
    } else if (var.rank > 0) {
      // Identical routes are interchangeable: order them by first departure.
      const PathIndex prev = order_[var.rank - 1];
      if (std::ranges::equal(instance_.path(prev).vertices(), path.vertices())) lo = departures_[prev][0] + 1;
    }
    const Time hi = std::min(horizon_, con.deadline + slack_ - con.traversal_time);
    const bool last = var.hop + 1 == path.hop_count();

    for (Time t = lo; t <= hi; ++t) {
      if (++nodes_ > budget_) throw ResourceLimit("brute force node budget exceeded");
      if (clashes(c, from, t)) continue;
      const Interval here = var.hop == 0 ? Interval{t, t} : Interval{arrival_here, t};
      const Interval sink{t + con.traversal_time, t + con.traversal_time};
      bool ok = add_interval(from, here);
      if (last) ok = add_interval(to, sink) && ok;
      if (ok) {
        dep[var.hop] = t;
        uses_[c].push_back({from, t});
        if (dfs(index + 1)) return true;
        uses_[c].pop_back();
      }
      remove_interval(from, here);
      if (last) remove_interval(to, sink);
    }
    dep[var.hop] = 0;
    return false;
  }

  const Instance& instance_;
  const DecayingGraph& graph_;
  Time slack_;
  Time horizon_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<PathIndex> order_;
  std::vector<Var> vars_;
  std::vector<std::vector<Time>> departures_;
  std::vector<std::vector<Use>> uses_;
  std::vector<std::vector<int>> load_;
};

}  // namespace

SolveOutcome brute_force_feasible(const Instance& instance, Time slack, const BruteForceOptions& options) {
  if (slack < 0) throw InvalidInput("slack must be nonnegative");
  Search search(instance, slack, options.node_budget);
  return search.run();
}

Time slack_upper_bound(const Instance& instance) {
  Time longest = 0;
  for (const RoutePath& p : instance.paths()) {
    Time total = 1;
    for (ConnectionIndex c : p.hops()) total += instance.graph().connection(c).traversal_time;
    longest = std::max(longest, total);
  }
  return static_cast<Time>(instance.path_count()) * longest;
}

OptimizeOutcome min_slack_oracle(const Instance& instance, const BruteForceOptions& options) {
  const Time bound = slack_upper_bound(instance);
  for (Time s = 0; s <= bound; ++s) {
    SolveOutcome out = brute_force_feasible(instance, s, options);
    if (out.feasible()) return {s, std::move(*out.schedule)};
  }
  throw SolverError("no feasible slack up to the path-count bound");
}

}  // namespace srdg
