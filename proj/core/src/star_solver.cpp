#include "srdg/star_solver.hpp"

#include <algorithm>

#include "srdg/errors.hpp"

namespace srdg {

namespace {

struct StarPath {
  PathIndex index;
  // Hop into the center (absent when the path starts there) and out of it
  // (absent when the path ends there).
  std::optional<ConnectionIndex> in, out;
  VertexIndex first_leaf = 0, last_leaf = 0;
};

class StarSearch {
 public:
  StarSearch(const Instance& instance, VertexIndex center) : instance_(instance), g_(instance.graph()), center_(center) {
    for (PathIndex p = 0; p < instance.path_count(); ++p) {
      const RoutePath& path = instance.path(p);
      const auto pos = path.position(center);
      if (!pos) throw InvalidInput("path " + std::to_string(p) + " misses the star center");
      StarPath sp{p, std::nullopt, std::nullopt, path.source(), path.sink()};
      if (*pos > 0) sp.in = path.hop(*pos - 1);
      if (*pos + 1 < path.vertices().size()) sp.out = path.hop(*pos);
      paths_.push_back(sp);
    }
    times_.resize(paths_.size());
    horizon_ = g_.lifetime();
  }

  SolveOutcome run() {
    SolveOutcome result;
    if (rec(0)) {
      result.verdict = Verdict::feasible;
      Temporalization schedule{horizon_, std::vector<std::vector<Time>>(paths_.size())};
      for (std::size_t k = 0; k < paths_.size(); ++k) {
        const StarPath& sp = paths_[k];
        auto& dep = schedule.departures[sp.index];
        if (sp.in) dep.push_back(times_[k].in_departure);
        if (sp.out) dep.push_back(times_[k].out_departure);
      }
      result.schedule = std::move(schedule);
    }
    result.nodes = tuples_;
    return result;
  }

 private:
  struct Chosen {
    Time in_departure = 0;
    Time out_departure = 0;
    Interval center;
  };

  // Departure times on connection c by path k in direction `from`.
  bool conflict(ConnectionIndex c, VertexIndex from, Time t, std::size_t upto) const {
    const Connection& con = g_.connection(c);
    const Time gap = std::max(1, con.traversal_time);
    for (std::size_t o = 0; o < upto; ++o) {
      const StarPath& sp = paths_[o];
      if (sp.in && *sp.in == c) {
        const VertexIndex f = sp.first_leaf;
        const Time s = times_[o].in_departure;
        if (f == from ? s == t : (con.kind == ConnectionKind::edge && std::abs(s - t) < gap)) return true;
      }
      if (sp.out && *sp.out == c) {
        const Time s = times_[o].out_departure;
        if (center_ == from ? s == t : (con.kind == ConnectionKind::edge && std::abs(s - t) < gap)) return true;
      }
    }
    return false;
  }

  bool capacities_ok(std::size_t upto) const {
    std::vector<Interval> at_center;
    for (std::size_t o = 0; o <= upto; ++o) at_center.push_back(times_[o].center);
    if (max_simultaneous(at_center) > g_.capacity(center_)) return false;
    // Leaves are visited at single steps: departure from a source leaf, arrival at a sink leaf.
    std::vector<std::pair<VertexIndex, Time>> visits;
    for (std::size_t o = 0; o <= upto; ++o) {
      const StarPath& sp = paths_[o];
      if (sp.in) visits.emplace_back(sp.first_leaf, times_[o].in_departure);
      if (sp.out)
        visits.emplace_back(sp.last_leaf, times_[o].out_departure + g_.connection(*sp.out).traversal_time);
    }
    std::sort(visits.begin(), visits.end());
    for (std::size_t a = 0; a < visits.size();) {
      std::size_t b = a;
      while (b < visits.size() && visits[b] == visits[a]) ++b;
      if (static_cast<int>(b - a) > g_.capacity(visits[a].first)) return false;
      a = b;
    }
    return true;
  }

  bool rec(std::size_t k) {
    if (k == paths_.size()) return true;
    const StarPath& sp = paths_[k];
    Chosen& ch = times_[k];
    const bool last = k + 1 == paths_.size();
    auto attempt = [&]() {
      if (last) ++tuples_;
      return capacities_ok(k) && rec(k + 1);
    };
    if (!sp.out) {
      const Connection& in = g_.connection(*sp.in);
      for (Time arrival = 1 + in.traversal_time; arrival <= in.deadline; ++arrival) {
        ch.in_departure = arrival - in.traversal_time;
        ch.center = {arrival, arrival};
        if (conflict(*sp.in, sp.first_leaf, ch.in_departure, k)) continue;
        if (attempt()) return true;
      }
      return false;
    }
    const Connection& out = g_.connection(*sp.out);
    const Time dep_hi = out.deadline - out.traversal_time;
    if (!sp.in) {
      for (Time departure = 1; departure <= dep_hi; ++departure) {
        ch.out_departure = departure;
        ch.center = {departure, departure};
        if (conflict(*sp.out, center_, departure, k)) continue;
        if (attempt()) return true;
      }
      return false;
    }
    const Connection& in = g_.connection(*sp.in);
    for (Time arrival = 1 + in.traversal_time; arrival <= in.deadline; ++arrival) {
      ch.in_departure = arrival - in.traversal_time;
      if (conflict(*sp.in, sp.first_leaf, ch.in_departure, k)) continue;
      for (Time departure = arrival; departure <= dep_hi; ++departure) {
        ch.out_departure = departure;
        ch.center = {arrival, departure};
        if (conflict(*sp.out, center_, departure, k)) continue;
        if (attempt()) return true;
      }
    }
    return false;
  }

  const Instance& instance_;
  const DecayingGraph& g_;
  VertexIndex center_;
  Time horizon_ = 0;
  std::vector<StarPath> paths_;
  std::vector<Chosen> times_;
  std::uint64_t tuples_ = 0;
};

}  // namespace

namespace {

// Hub of a star-shaped U(G); small paths (n <= 3) count as stars too.
std::optional<VertexIndex> hub(const DecayingGraph& g) {
  if (g.shape() == GraphShape::star || g.vertex_count() == 2) return star_center(g);
  if (g.shape() == GraphShape::path && g.vertex_count() == 3) {
    for (VertexIndex v = 0; v < 3; ++v)
      if (g.neighbours(v).size() == 2) return v;
  }
  return std::nullopt;
}

}  // namespace

bool star_precheck_infeasible(const Instance& instance) {
  const auto center = hub(instance.graph());
  if (!center) return false;
  Time max_deadline = 0;
  for (const Connection& c : instance.graph().connections()) max_deadline = std::max(max_deadline, c.deadline);
  return instance.path_count() >
         static_cast<std::size_t>(instance.graph().capacity(*center)) * static_cast<std::size_t>(max_deadline);
}

SolveOutcome solve_star(const Instance& instance) {
  const auto& g = instance.graph();
  const auto center = hub(g);
  if (!center) throw InvalidInput("star solver requires a decaying star");
  if (instance.path_count() == 0) {
    SolveOutcome out;
    out.verdict = Verdict::feasible;
    out.schedule = Temporalization{g.lifetime(), {}};
    return out;
  }
  for (const RoutePath& p : instance.paths())
    if (!p.position(*center)) throw InvalidInput("star path misses the center");
  if (star_precheck_infeasible(instance)) return {};
  StarSearch search(instance, *center);
  SolveOutcome out = search.run();
  if (out.schedule && !validate(instance, *out.schedule).valid())
    throw SolverError("star enumeration produced an invalid schedule");
  return out;
}

}  // namespace srdg
