#include "srdg/dp_path.hpp"

#include <algorithm>
#include <unordered_set>

#include "srdg/errors.hpp"

namespace srdg {

namespace {

struct TimesHash {
  std::size_t operator()(const std::vector<Time>& v) const noexcept {
    std::size_t h = v.size();
    for (Time t : v) h ^= static_cast<std::size_t>(t) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Span {
  std::size_t lo;
  std::size_t hi;
  bool rightward;
};

std::vector<Span> path_spans(const Instance& instance, const std::vector<std::size_t>& position) {
  std::vector<Span> spans;
  for (const RoutePath& p : instance.paths()) {
    const std::size_t a = position[p.source()];
    const std::size_t b = position[p.sink()];
    spans.push_back({std::min(a, b), std::max(a, b), a < b});
  }
  return spans;
}

std::vector<std::size_t> positions_of(const std::vector<VertexIndex>& order) {
  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  return position;
}

}  // namespace

Restriction restrict_to_prefix(const Instance& instance, std::size_t prefix_len) {
  const auto& g = instance.graph();
  const auto order = path_order(g);
  if (prefix_len < 1 || prefix_len > order.size()) throw InvalidInput("prefix length out of range");
  const auto position = positions_of(order);
  const std::size_t last = prefix_len - 1;

  std::vector<std::string> ids;
  std::vector<int> caps;
  std::vector<VertexIndex> local(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < prefix_len; ++i) {
    local[order[i]] = ids.size();
    ids.push_back(g.id(order[i]));
    caps.push_back(g.capacity(order[i]));
  }
  std::vector<Connection> cons;
  for (const Connection& c : g.connections()) {
    if (position[c.tail] < prefix_len && position[c.head] < prefix_len) {
      Connection copy = c;
      copy.tail = local[c.tail];
      copy.head = local[c.head];
      cons.push_back(copy);
    }
  }
  DecayingGraph sub(std::move(ids), std::move(caps), std::move(cons), g.lifetime());

  Restriction out;
  std::vector<std::vector<VertexIndex>> paths;
  for (PathIndex p = 0; p < instance.path_count(); ++p) {
    std::vector<VertexIndex> kept;
    for (VertexIndex v : instance.path(p).vertices())
      if (position[v] < prefix_len) kept.push_back(local[v]);
    if (kept.size() < 2) continue;
    paths.push_back(kept);
    out.original.push_back(p);
    const std::size_t a = position[instance.path(p).source()];
    const std::size_t b = position[instance.path(p).sink()];
    if (a < b && a < last && last <= b) out.arriving.push_back(p);
    if (b < a && b < last && last <= a) out.departing.push_back(p);
  }
  out.instance = Instance(std::move(sub), paths);
  return out;
}

PathDp::PathDp(const Instance& instance, PathDpOptions options)
    : instance_(instance), options_(options), order_(path_order(instance.graph())) {
  const auto& g = instance.graph();
  const std::size_t n = order_.size();
  position_ = positions_of(order_);
  right_.resize(n > 0 ? n - 1 : 0);
  left_.resize(right_.size());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    right_[i] = g.traversal(order_[i], order_[i + 1]);
    left_[i] = g.traversal(order_[i + 1], order_[i]);
  }
  arriving_.assign(n, {});
  departing_.assign(n, {});
  const auto spans = path_spans(instance, position_);
  for (PathIndex p = 0; p < spans.size(); ++p) {
    for (std::size_t i = spans[p].lo + 1; i <= spans[p].hi; ++i) {
      if (spans[p].rightward)
        arriving_[i].push_back(p);
      else
        departing_[i].push_back(p);
    }
  }
}

namespace {

std::ptrdiff_t index_in(const std::vector<PathIndex>& list, PathIndex p) {
  auto it = std::find(list.begin(), list.end(), p);
  return it == list.end() ? -1 : it - list.begin();
}

}  // namespace

bool PathDp::transition_ok(const FrontierState& from, const FrontierState& to) const {
  const std::size_t i = from.position;
  if (to.position != i + 1 || i + 1 >= order_.size()) return false;
  const auto& g = instance_.graph();
  const auto& r0 = arriving_[i];
  const auto& l0 = departing_[i];
  const auto& r1 = arriving_[i + 1];
  const auto& l1 = departing_[i + 1];
  if (from.rho.size() != r0.size() || from.lambda.size() != l0.size() || to.rho.size() != r1.size() ||
      to.lambda.size() != l1.size())
    return false;
  const Time tau = g.lifetime();
  const Connection* right = right_[i] ? &g.connection(*right_[i]) : nullptr;
  const Connection* left = left_[i] ? &g.connection(*left_[i]) : nullptr;
  if ((!r1.empty() && !right) || (!l1.empty() && !left)) return false;

  for (std::size_t a = 0; a < r1.size(); ++a) {
    const Time rho = to.rho[a];
    // Departure on the connection must be a valid time step; (3).
    if (rho - right->traversal_time < 1 || rho > right->deadline || rho > tau) return false;
    const auto k = index_in(r0, r1[a]);
    if (k >= 0 && from.rho[k] > rho - right->traversal_time) return false;  // (1)
    for (std::size_t b = a + 1; b < r1.size(); ++b)
      if (to.rho[b] == rho) return false;  // (5)
  }
  for (std::size_t a = 0; a < l1.size(); ++a) {
    const Time lambda = to.lambda[a];
    if (lambda < 1 || lambda + left->traversal_time > left->deadline) return false;  // (4)
    const auto k = index_in(l0, l1[a]);
    if (k >= 0 && from.lambda[k] < lambda + left->traversal_time) return false;  // (2)
    for (std::size_t b = a + 1; b < l1.size(); ++b)
      if (to.lambda[b] == lambda) return false;  // (6)
  }
  if (right && right->kind == ConnectionKind::edge) {
    const Time gap = std::max(1, right->traversal_time);
    for (Time rho : to.rho)
      for (Time lambda : to.lambda)
        if (std::abs(rho - right->traversal_time - lambda) < gap) return false;  // (7)
  }
  if (g.capacity(order_[i + 1]) == 1) {
    for (Time rho : to.rho)
      for (Time lambda : to.lambda)
        if (rho == lambda) return false;  // (8)
  }

  // (9): occupancy of v_i by every path through it.
  std::vector<Interval> occupied;
  const Time theta_r = right ? right->traversal_time : 0;
  const Time theta_l = left ? left->traversal_time : 0;
  for (std::size_t a = 0; a < r0.size(); ++a) {
    const auto k = index_in(r1, r0[a]);
    if (k >= 0)
      occupied.push_back({from.rho[a], to.rho[k] - theta_r});
    else
      occupied.push_back({from.rho[a], from.rho[a]});
  }
  for (std::size_t a = 0; a < r1.size(); ++a)
    if (index_in(r0, r1[a]) < 0) occupied.push_back({to.rho[a] - theta_r, to.rho[a] - theta_r});
  for (std::size_t a = 0; a < l0.size(); ++a) {
    const auto k = index_in(l1, l0[a]);
    if (k >= 0)
      occupied.push_back({to.lambda[k] + theta_l, from.lambda[a]});
    else
      occupied.push_back({from.lambda[a], from.lambda[a]});
  }
  for (std::size_t a = 0; a < l1.size(); ++a)
    if (index_in(l0, l1[a]) < 0) occupied.push_back({to.lambda[a] + theta_l, to.lambda[a] + theta_l});
  return max_simultaneous(occupied) <= g.capacity(order_[i]);
}

bool PathDp::accepts_last(const FrontierState& state) const {
  std::vector<Interval> occupied;
  for (Time t : state.rho) occupied.push_back({t, t});
  for (Time t : state.lambda) occupied.push_back({t, t});
  return max_simultaneous(occupied) <= instance_.graph().capacity(order_[state.position]);
}

Temporalization PathDp::reconstruct(const std::vector<FrontierState>& states) const {
  const auto& g = instance_.graph();
  Temporalization schedule;
  schedule.horizon = g.lifetime();
  schedule.departures.resize(instance_.path_count());
  for (PathIndex p = 0; p < instance_.path_count(); ++p) {
    const RoutePath& path = instance_.path(p);
    auto& dep = schedule.departures[p];
    dep.resize(path.hop_count());
    const std::size_t a = position_[path.source()];
    const bool rightward = a < position_[path.sink()];
    for (std::size_t h = 0; h < path.hop_count(); ++h) {
      if (rightward) {
        const std::size_t i = a + h + 1;
        const auto k = index_in(arriving_[i], p);
        dep[h] = states[i].rho[k] - g.connection(*right_[i - 1]).traversal_time;
      } else {
        const std::size_t i = a - h;
        const auto k = index_in(departing_[i], p);
        dep[h] = states[i].lambda[k];
      }
    }
  }
  return schedule;
}

SolveOutcome PathDp::solve() {
  const auto& g = instance_.graph();
  const std::size_t n = order_.size();
  const Time tau = g.lifetime();
  SolveOutcome out;
  layer_sizes_.assign(n, 0);

  // Depth first over the layered table. A state met a second time at the same
  // position has already been explored without success, so the search stays
  // exact while feasible instances stop at the first accepting chain.
  // Keys are rho followed by lambda.
  using Seen = std::unordered_set<std::vector<Time>, TimesHash>;
  std::vector<Seen> seen(n);
  std::vector<std::vector<Time>> chain(n);
  seen[0].insert({});
  layer_sizes_[0] = 1;

  auto split = [&](std::size_t i, const std::vector<Time>& key) {
    FrontierState s;
    s.position = i;
    s.rho.assign(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(arriving_[i].size()));
    s.lambda.assign(key.begin() + static_cast<std::ptrdiff_t>(arriving_[i].size()), key.end());
    return s;
  };

  // Per position: for each successor coordinate the index of the same path one position back, or -1.
  std::vector<std::vector<std::ptrdiff_t>> carried(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& r1 = arriving_[i + 1];
    const auto& l1 = departing_[i + 1];
    carried[i + 1].resize(r1.size() + l1.size());
    for (std::size_t a = 0; a < r1.size(); ++a) carried[i + 1][a] = index_in(arriving_[i], r1[a]);
    for (std::size_t a = 0; a < l1.size(); ++a) carried[i + 1][r1.size() + a] = index_in(departing_[i], l1[a]);
  }

  auto descend = [&](auto&& self, std::size_t i) -> bool {
    if (i + 1 == n) return accepts_last(split(i, chain[i]));
    const auto& r1 = arriving_[i + 1];
    const Connection* right = right_[i] ? &g.connection(*right_[i]) : nullptr;
    const Connection* left = left_[i] ? &g.connection(*left_[i]) : nullptr;
    const std::size_t width = r1.size() + departing_[i + 1].size();
    const auto& carry = carried[i + 1];
    const FrontierState from = split(i, chain[i]);
    std::vector<Time> cand(width, 0);
    FrontierState to;
    to.position = i + 1;

    // Coordinate c: domain from deadlines and the predecessor state.
    auto bounds = [&](std::size_t c) -> std::pair<Time, Time> {
      if (c < r1.size()) {
        Time lo = 1 + right->traversal_time;
        Time hi = std::min(right->deadline, tau);
        if (carry[c] >= 0) lo = std::max(lo, from.rho[carry[c]] + right->traversal_time);
        return {lo, hi};
      }
      Time lo = 1;
      Time hi = left->deadline - left->traversal_time;
      if (carry[c] >= 0) hi = std::min(hi, from.lambda[carry[c]] - left->traversal_time);
      return {lo, hi};
    };

    auto pairwise_ok = [&](std::size_t c) {
      const Time t = cand[c];
      for (std::size_t o = 0; o < c; ++o) {
        const bool same_side = (o < r1.size()) == (c < r1.size());
        if (same_side) {
          if (cand[o] == t) return false;
          continue;
        }
        // o is rightward, c leftward.
        const Time rho = cand[o];
        if (right->kind == ConnectionKind::edge &&
            std::abs(rho - right->traversal_time - t) < std::max(1, right->traversal_time))
          return false;
        if (g.capacity(order_[i + 1]) == 1 && rho == t) return false;
      }
      return true;
    };

    auto visit = [&]() -> bool {
      ++out.nodes;
      to.rho.assign(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(r1.size()));
      to.lambda.assign(cand.begin() + static_cast<std::ptrdiff_t>(r1.size()), cand.end());
      if (!transition_ok(from, to)) return false;
      Seen& layer = seen[i + 1];
      if (layer.contains(cand)) return false;
      if (layer.size() >= options_.max_states_per_layer)
        throw ResourceLimit("path DP state cap exceeded at position " + std::to_string(i + 1));
      layer.insert(cand);
      layer_sizes_[i + 1] = layer.size();
      chain[i + 1] = cand;
      return self(self, i + 1);
    };

    auto rec = [&](auto&& rec_self, std::size_t c) -> bool {
      if (c == width) return visit();
      const auto [lo, hi] = bounds(c);
      for (Time t = lo; t <= hi; ++t) {
        cand[c] = t;
        if (pairwise_ok(c) && rec_self(rec_self, c + 1)) return true;
      }
      return false;
    };
    return rec(rec, 0);
  };

  if (!descend(descend, 0)) return out;
  std::vector<FrontierState> states(n);
  for (std::size_t i = 0; i < n; ++i) states[i] = split(i, chain[i]);
  Temporalization schedule = reconstruct(states);
  if (!validate(instance_, schedule).valid()) throw SolverError("path DP produced an invalid schedule");
  out.verdict = Verdict::feasible;
  out.schedule = std::move(schedule);
  return out;
}

SolveOutcome solve_path_dp(const Instance& instance, PathDpOptions options) {
  if (instance.graph().shape() != GraphShape::path) throw InvalidInput("path DP requires a decaying path");
  if (instance.path_count() == 0) {
    SolveOutcome out;
    out.verdict = Verdict::feasible;
    out.schedule = Temporalization{instance.lifetime(), {}};
    return out;
  }
  if (vertex_load(instance).max > 4 * static_cast<std::size_t>(instance.lifetime())) return {};
  PathDp dp(instance, options);
  return dp.solve();
}

}  // namespace srdg
