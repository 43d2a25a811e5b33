#include "srdg/milp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "srdg/errors.hpp"

namespace srdg {

std::size_t MilpModel::add_variable(std::string name, VarType type, std::int64_t lower, std::int64_t upper) {
  variables.push_back({std::move(name), type, lower, upper});
  return variables.size() - 1;
}

void MilpModel::add_constraint(std::string name, std::vector<LinearTerm> terms, Sense sense, std::int64_t rhs) {
  // Merge repeated variables and drop cancelled ones.
  std::map<std::size_t, std::int64_t> merged;
  for (const LinearTerm& t : terms) merged[t.var] += t.coef;
  std::vector<LinearTerm> clean;
  for (const auto& [var, coef] : merged)
    if (coef != 0) clean.push_back({var, coef});
  constraints.push_back({std::move(name), std::move(clean), sense, rhs});
}

std::size_t MilpModel::count(VarType type) const {
  return static_cast<std::size_t>(
      std::count_if(variables.begin(), variables.end(), [&](const MilpVariable& v) { return v.type == type; }));
}

namespace {

Time total_traversal(const Instance& instance, const RoutePath& path) {
  Time total = 0;
  for (ConnectionIndex c : path.hops()) total += instance.graph().connection(c).traversal_time;
  return total;
}

std::vector<std::vector<PathIndex>> greedy_colors(const Instance& instance) {
  std::vector<std::vector<PathIndex>> classes;
  std::vector<std::vector<bool>> used;
  const std::size_t n = instance.graph().vertex_count();
  for (PathIndex p = 0; p < instance.path_count(); ++p) {
    const auto vs = instance.path(p).vertices();
    std::size_t color = 0;
    for (; color < classes.size(); ++color) {
      if (std::none_of(vs.begin(), vs.end(), [&](VertexIndex v) { return used[color][v]; })) break;
    }
    if (color == classes.size()) {
      classes.emplace_back();
      used.emplace_back(n, false);
    }
    classes[color].push_back(p);
    for (VertexIndex v : vs) used[color][v] = true;
  }
  return classes;
}

}  // namespace

std::int64_t compute_big_m(const Instance& instance) {
  std::int64_t m = 0;
  for (const auto& cls : greedy_colors(instance)) {
    std::int64_t widest = 0;
    for (PathIndex p : cls) widest = std::max<std::int64_t>(widest, 1 + total_traversal(instance, instance.path(p)));
    m += widest;
  }
  return m;
}

Temporalization sequential_color_schedule(const Instance& instance) {
  Temporalization schedule;
  schedule.departures.resize(instance.path_count());
  Time start = 1;
  Time makespan = 0;
  for (const auto& cls : greedy_colors(instance)) {
    Time widest = 0;
    for (PathIndex p : cls) {
      const RoutePath& path = instance.path(p);
      Time t = start;
      for (ConnectionIndex c : path.hops()) {
        schedule.departures[p].push_back(t);
        t += instance.graph().connection(c).traversal_time;
      }
      makespan = std::max(makespan, t);
      widest = std::max(widest, 1 + total_traversal(instance, path));
    }
    start += widest;
  }
  schedule.horizon = makespan;
  return schedule;
}

WarmStart warm_start_no_wait(const Instance& instance) {
  WarmStart out;
  out.schedule.departures.resize(instance.path_count());
  Time latest = 0;
  for (PathIndex p = 0; p < instance.path_count(); ++p) {
    Time t = 1;
    for (ConnectionIndex c : instance.path(p).hops()) {
      const Connection& con = instance.graph().connection(c);
      out.schedule.departures[p].push_back(t);
      latest = std::max(latest, t);
      out.slack = std::max(out.slack, t + con.traversal_time - con.deadline);
      t += con.traversal_time;
    }
  }
  out.schedule.horizon = std::max(instance.lifetime(), latest);
  return out;
}

namespace {

// Affine time expression: x variable plus a constant.
struct TimeExpr {
  std::size_t var;
  Time offset;
  Interval window;
};

class Builder {
 public:
  Builder(const Instance& instance, MilpMode mode, const MilpOptions& options)
      : instance_(instance), g_(instance.graph()), options_(options) {
    model_.mode = mode;
    model_.lifetime = g_.lifetime();
    model_.slack_bound = mode == MilpMode::min_slack ? slack_upper_bound(instance) : 0;
    Time theta_max = 0;
    for (const Connection& c : g_.connections()) theta_max = std::max(theta_max, c.traversal_time);
    const std::int64_t colored = compute_big_m(instance);
    model_.big_m = std::max<std::int64_t>(colored, g_.lifetime() + theta_max + 1) + model_.slack_bound;
  }

  MilpModel build() {
    const Time horizon = model_.lifetime + model_.slack_bound;
    model_.dstar = model_.add_variable("dstar", VarType::integer, 0, model_.slack_bound);
    compute_windows();
    model_.x.resize(instance_.path_count());
    for (PathIndex p = 0; p < instance_.path_count(); ++p) {
      for (std::size_t h = 0; h < instance_.path(p).hop_count(); ++h) {
        const Interval w = options_.presolve || options_.time_indexed ? windows_[p][h] : Interval{1, horizon};
        model_.x[p].push_back(model_.add_variable(name_x(p, h), VarType::integer, std::max(1, w.first),
                                                  std::max({1, w.first, w.last})));
      }
    }
    adequacy();
    if (options_.time_indexed && !infeasible_) {
      time_indexed();
    } else {
      disjointness();
      capacities();
    }
    if (infeasible_) model_.add_constraint("infeasible", {{model_.dstar, 1}}, Sense::ge, 1);
    return std::move(model_);
  }

 private:
  static std::string name_x(PathIndex p, std::size_t h) {
    return "x_P" + std::to_string(p) + "_h" + std::to_string(h);
  }
  static std::string triple(char kind, VertexIndex v, PathIndex p, PathIndex q) {
    return std::string(1, kind) + "_v" + std::to_string(v) + "_p" + std::to_string(p) + "_q" + std::to_string(q);
  }

  const Connection& hop(PathIndex p, std::size_t h) const { return g_.connection(instance_.path(p).hop(h)); }

  void compute_windows() {
    const Time slack = model_.slack_bound;
    windows_.resize(instance_.path_count());
    for (PathIndex p = 0; p < instance_.path_count(); ++p) {
      const std::size_t k = instance_.path(p).hop_count();
      auto& w = windows_[p];
      w.resize(k);
      Time earliest = 1;
      for (std::size_t h = 0; h < k; ++h) {
        w[h].first = earliest;
        earliest += hop(p, h).traversal_time;
      }
      Time latest = hop(p, k - 1).deadline + slack - hop(p, k - 1).traversal_time;
      for (std::size_t h = k; h-- > 0;) {
        latest = std::min(latest, hop(p, h).deadline + slack - hop(p, h).traversal_time);
        w[h].last = latest;
        if (h > 0) latest -= hop(p, h - 1).traversal_time;
      }
      for (const Interval& iv : w)
        if (iv.empty() && (options_.presolve || options_.time_indexed)) infeasible_ = true;
    }
  }

  void adequacy() {
    for (PathIndex p = 0; p < instance_.path_count(); ++p) {
      const auto& xs = model_.x[p];
      for (std::size_t h = 0; h < xs.size(); ++h) {
        const Connection& c = hop(p, h);
        const std::string suffix = "_p" + std::to_string(p) + "_h" + std::to_string(h);
        if (h + 1 < xs.size())
          model_.add_constraint("adq" + suffix, {{xs[h], 1}, {xs[h + 1], -1}}, Sense::le, -c.traversal_time);
        model_.add_constraint("dl" + suffix, {{xs[h], 1}, {model_.dstar, -1}}, Sense::le,
                              c.deadline - c.traversal_time);
      }
    }
  }

  void disjointness() {
    struct Use {
      PathIndex path;
      std::size_t hop;
      VertexIndex from;
    };
    std::vector<std::vector<Use>> uses(g_.connections().size());
    for (PathIndex p = 0; p < instance_.path_count(); ++p) {
      const RoutePath& path = instance_.path(p);
      for (std::size_t h = 0; h < path.hop_count(); ++h) uses[path.hop(h)].push_back({p, h, path.vertices()[h]});
    }
    for (ConnectionIndex c = 0; c < uses.size(); ++c) {
      const Connection& con = g_.connection(c);
      for (std::size_t a = 0; a < uses[c].size(); ++a) {
        for (std::size_t b = a + 1; b < uses[c].size(); ++b) {
          const Use& u = uses[c][a];
          const Use& w = uses[c][b];
          const bool same = u.from == w.from;
          if (!same && con.kind != ConnectionKind::edge) continue;
          const std::int64_t sep = same ? 1 : std::max(1, con.traversal_time);
          separate(u.path, u.hop, w.path, w.hop, sep);
        }
      }
    }
  }

  // |x - y| >= sep through one order binary.
  void separate(PathIndex p, std::size_t h, PathIndex q, std::size_t k, std::int64_t sep) {
    const std::size_t x = model_.x[p][h];
    const std::size_t y = model_.x[q][k];
    const std::string tag = "p" + std::to_string(p) + "_h" + std::to_string(h) + "_q" + std::to_string(q) +
                            "_k" + std::to_string(k);
    std::int64_t big = model_.big_m;
    if (options_.presolve) {
      const Interval wx = windows_[p][h];
      const Interval wy = windows_[q][k];
      const bool x_first = wy.last - wx.first >= sep;   // y - x >= sep possible
      const bool y_first = wx.last - wy.first >= sep;   // x - y >= sep possible
      const bool always_x_first = wx.last + sep <= wy.first;
      const bool always_y_first = wy.last + sep <= wx.first;
      if (always_x_first || always_y_first) return;
      if (!x_first && !y_first) {
        infeasible_ = true;
        return;
      }
      if (!y_first) {
        model_.add_constraint("sep_" + tag, {{y, 1}, {x, -1}}, Sense::ge, sep);
        return;
      }
      if (!x_first) {
        model_.add_constraint("sep_" + tag, {{x, 1}, {y, -1}}, Sense::ge, sep);
        return;
      }
      big = sep + std::max(wy.last - wx.first, wx.last - wy.first);
    }
    const std::size_t o = model_.add_variable("o_" + tag, VarType::binary, 0, 1);
    // x - y >= sep - M o  and  y - x >= sep - M (1 - o)
    model_.add_constraint("sepa_" + tag, {{x, 1}, {y, -1}, {o, big}}, Sense::ge, sep);
    model_.add_constraint("sepb_" + tag, {{y, 1}, {x, -1}, {o, -big}}, Sense::ge, sep - big);
  }

  TimeExpr arrival(PathIndex p, std::size_t pos) const {
    if (pos == 0) return {model_.x[p][0], 0, windows_[p][0]};
    const Time theta = hop(p, pos - 1).traversal_time;
    const Interval w = windows_[p][pos - 1];
    return {model_.x[p][pos - 1], theta, {w.first + theta, w.last + theta}};
  }

  TimeExpr departure(PathIndex p, std::size_t pos) const {
    if (pos == instance_.path(p).hop_count()) return arrival(p, pos);
    return {model_.x[p][pos], 0, windows_[p][pos]};
  }

  void capacities() {
    for (VertexIndex v = 0; v < g_.vertex_count(); ++v) {
      const auto through = instance_.paths_through(v);
      if (options_.presolve) {
        if (through.size() > static_cast<std::size_t>(g_.capacity(v))) capacity_presolved(v, through);
      } else {
        capacity_literal(v, through);
      }
    }
  }

  void capacity_literal(VertexIndex v, std::span<const PathIndex> through) {
    const std::int64_t m = model_.big_m;
    for (PathIndex p : through) {
      const TimeExpr ap = arrival(p, *instance_.path(p).position(v));
      std::vector<LinearTerm> load;
      for (PathIndex q : through) {
        const std::size_t pos_q = *instance_.path(q).position(v);
        const TimeExpr aq = arrival(q, pos_q);
        const TimeExpr dq = departure(q, pos_q);
        const std::size_t a = model_.add_variable(triple('a', v, p, q), VarType::binary, 0, 1);
        const std::size_t b = model_.add_variable(triple('b', v, p, q), VarType::binary, 0, 1);
        const std::size_t c = model_.add_variable(triple('g', v, p, q), VarType::binary, 0, 1);
        const std::string tag = "_v" + std::to_string(v) + "_p" + std::to_string(p) + "_q" + std::to_string(q);
        // arr_P <= arr_Q - 1 + M (1 - a)
        model_.add_constraint("before" + tag, {{ap.var, 1}, {aq.var, -1}, {a, m}}, Sense::le,
                              m - 1 - ap.offset + aq.offset);
        // arr_P >= dep_Q + 1 - M (1 - b)
        model_.add_constraint("after" + tag, {{ap.var, 1}, {dq.var, -1}, {b, -m}}, Sense::ge,
                              1 - m - ap.offset + dq.offset);
        model_.add_constraint("pick" + tag, {{a, 1}, {b, 1}, {c, 1}}, Sense::eq, 1);
        load.push_back({c, 1});
      }
      model_.add_constraint("cap_v" + std::to_string(v) + "_p" + std::to_string(p), std::move(load), Sense::le,
                            g_.capacity(v));
    }
  }

  bool fixed(PathIndex p) const {
    return std::all_of(windows_[p].begin(), windows_[p].end(), [](const Interval& w) { return w.first == w.last; });
  }

  void capacity_presolved(VertexIndex v, std::span<const PathIndex> through) {
    // Fixed paths with identical occupancy behave identically: keep one
    // representative with a multiplicity.
    std::map<std::pair<Time, Time>, std::pair<PathIndex, int>> groups;
    std::vector<std::pair<PathIndex, int>> members;
    for (PathIndex p : through) {
      const std::size_t pos = *instance_.path(p).position(v);
      if (!fixed(p)) {
        members.emplace_back(p, 1);
        continue;
      }
      const auto key = std::make_pair(arrival(p, pos).window.first, departure(p, pos).window.first);
      auto [it, fresh] = groups.try_emplace(key, p, 0);
      ++it->second.second;
    }
    for (const auto& [key, group] : groups) members.push_back(group);
    std::sort(members.begin(), members.end());
    if (g_.capacity(v) == 1) {
      capacity_unit(v, members);
      return;
    }

    for (const auto& [p, p_mult] : members) {
      (void)p_mult;
      const TimeExpr ap = arrival(p, *instance_.path(p).position(v));
      std::int64_t forced = 0;
      struct Free {
        PathIndex q;
        int weight;
        bool can_before, can_after;
        std::int64_t m_before, m_after;
        TimeExpr aq, dq;
      };
      std::vector<Free> open;
      for (const auto& [q, q_mult] : members) {
        const std::size_t pos_q = *instance_.path(q).position(v);
        const TimeExpr aq = arrival(q, pos_q);
        const TimeExpr dq = departure(q, pos_q);
        if (ap.window.last < aq.window.first || ap.window.first > dq.window.last) continue;
        const bool can_before = ap.window.first <= aq.window.last - 1;
        const bool can_after = ap.window.last >= dq.window.first + 1;
        if (p == q || (!can_before && !can_after)) {
          forced += q_mult;
          continue;
        }
        open.push_back({q, q_mult, can_before, can_after,
                        std::max<std::int64_t>(1, ap.window.last - aq.window.first + 1),
                        std::max<std::int64_t>(1, dq.window.last - ap.window.first + 1), aq, dq});
      }
      const std::int64_t room = g_.capacity(v) - forced;
      if (room < 0) {
        infeasible_ = true;
        return;
      }
      std::int64_t worst = 0;
      for (const Free& f : open) worst += f.weight;
      if (worst <= room) continue;

      std::vector<LinearTerm> load;
      for (const Free& f : open) {
        const std::string tag = "_v" + std::to_string(v) + "_p" + std::to_string(p) + "_q" + std::to_string(f.q);
        const std::size_t c = model_.add_variable(triple('g', v, p, f.q), VarType::binary, 0, 1);
        std::vector<LinearTerm> pick{{c, 1}};
        if (f.can_before) {
          const std::size_t a = model_.add_variable(triple('a', v, p, f.q), VarType::binary, 0, 1);
          model_.add_constraint("before" + tag, {{ap.var, 1}, {f.aq.var, -1}, {a, f.m_before}}, Sense::le,
                                f.m_before - 1 - ap.offset + f.aq.offset);
          pick.push_back({a, 1});
        }
        if (f.can_after) {
          const std::size_t b = model_.add_variable(triple('b', v, p, f.q), VarType::binary, 0, 1);
          model_.add_constraint("after" + tag, {{ap.var, 1}, {f.dq.var, -1}, {b, -f.m_after}}, Sense::ge,
                                1 - f.m_after - ap.offset + f.dq.offset);
          pick.push_back({b, 1});
        }
        model_.add_constraint("pick" + tag, std::move(pick), Sense::eq, 1);
        load.push_back({c, f.weight});
      }
      model_.add_constraint("cap_v" + std::to_string(v) + "_p" + std::to_string(p), std::move(load), Sense::le,
                            room);
    }
  }

  // Capacity one: occupancy intervals [arr, dep] must be pairwise disjoint.
  void capacity_unit(VertexIndex v, std::span<const std::pair<PathIndex, int>> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].second > 1) {
        infeasible_ = true;
        return;
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const PathIndex p = members[i].first;
      const std::size_t pos_p = *instance_.path(p).position(v);
      const TimeExpr ap = arrival(p, pos_p);
      const TimeExpr dp = departure(p, pos_p);
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const PathIndex q = members[j].first;
        const std::size_t pos_q = *instance_.path(q).position(v);
        const TimeExpr aq = arrival(q, pos_q);
        const TimeExpr dq = departure(q, pos_q);
        if (dp.window.last < aq.window.first || dq.window.last < ap.window.first) continue;
        const bool p_first = dp.window.first + 1 <= aq.window.last;
        const bool q_first = dq.window.first + 1 <= ap.window.last;
        const std::string tag = "_v" + std::to_string(v) + "_p" + std::to_string(p) + "_q" + std::to_string(q);
        if (!p_first && !q_first) {
          infeasible_ = true;
          return;
        }
        // dep_P <= arr_Q - 1 (+ M1 (1 - o))  and  dep_Q <= arr_P - 1 (+ M2 o)
        const std::int64_t m1 = dp.window.last - aq.window.first + 1;
        const std::int64_t m2 = dq.window.last - ap.window.first + 1;
        if (!q_first) {
          model_.add_constraint("unit" + tag, {{dp.var, 1}, {aq.var, -1}}, Sense::le, -1 - dp.offset + aq.offset);
          continue;
        }
        if (!p_first) {
          model_.add_constraint("unit" + tag, {{dq.var, 1}, {ap.var, -1}}, Sense::le, -1 - dq.offset + ap.offset);
          continue;
        }
        const std::size_t o = model_.add_variable(triple('o', v, p, q), VarType::binary, 0, 1);
        model_.add_constraint("unita" + tag, {{dp.var, 1}, {aq.var, -1}, {o, m1}}, Sense::le,
                              m1 - 1 - dp.offset + aq.offset);
        model_.add_constraint("unitb" + tag, {{dq.var, 1}, {ap.var, -1}, {o, -m2}}, Sense::le,
                              -1 - dq.offset + ap.offset);
      }
    }
  }

  // z[p][h][t - window.first] = 1 iff hop h of path p departs at t.
  void time_indexed() {
    z_.resize(instance_.path_count());
    for (PathIndex p = 0; p < instance_.path_count(); ++p) {
      z_[p].resize(model_.x[p].size());
      for (std::size_t h = 0; h < model_.x[p].size(); ++h) {
        const Interval w = windows_[p][h];
        std::vector<LinearTerm> one, link{{model_.x[p][h], -1}};
        for (Time t = w.first; t <= w.last; ++t) {
          const std::size_t var = model_.add_variable(
              "z_P" + std::to_string(p) + "_h" + std::to_string(h) + "_t" + std::to_string(t), VarType::binary, 0, 1);
          z_[p][h].push_back(var);
          one.push_back({var, 1});
          link.push_back({var, t});
        }
        const std::string suffix = "_p" + std::to_string(p) + "_h" + std::to_string(h);
        model_.add_constraint("once" + suffix, std::move(one), Sense::eq, 1);
        model_.add_constraint("link" + suffix, std::move(link), Sense::eq, 0);
      }
      // departing hop h + 1 by t needs hop h departed by t - theta
      for (std::size_t h = 0; h + 1 < model_.x[p].size(); ++h) {
        const Time theta = hop(p, h).traversal_time;
        const Interval next = windows_[p][h + 1];
        for (Time t = next.first; t <= next.last; ++t) {
          std::vector<LinearTerm> row = departed_by(p, h + 1, t, 1);
          for (const LinearTerm& term : departed_by(p, h, t - theta, -1)) row.push_back(term);
          model_.add_constraint("prec_p" + std::to_string(p) + "_h" + std::to_string(h) + "_t" + std::to_string(t),
                                std::move(row), Sense::le, 0);
        }
      }
    }
    indexed_disjointness();
    indexed_capacities();
  }

  std::optional<std::size_t> z_at(PathIndex p, std::size_t h, Time t) const {
    const Interval w = windows_[p][h];
    if (t < w.first || t > w.last) return std::nullopt;
    return z_[p][h][static_cast<std::size_t>(t - w.first)];
  }

  // Terms of coef * [departure of hop h <= t]; the constant part goes to offset.
  std::vector<LinearTerm> departed_by(PathIndex p, std::size_t h, Time t, std::int64_t coef,
                                      std::int64_t* offset = nullptr) const {
    const Interval w = windows_[p][h];
    std::vector<LinearTerm> out;
    if (t >= w.last) {
      if (offset) {
        *offset += coef;
      } else {
        for (std::size_t var : z_[p][h]) out.push_back({var, coef});
      }
      return out;
    }
    for (Time s = w.first; s <= t; ++s) out.push_back({*z_at(p, h, s), coef});
    return out;
  }

  void indexed_disjointness() {
    struct Use {
      PathIndex path;
      std::size_t hop;
      VertexIndex from;
    };
    std::vector<std::vector<Use>> uses(g_.connections().size());
    for (PathIndex p = 0; p < instance_.path_count(); ++p) {
      const RoutePath& path = instance_.path(p);
      for (std::size_t h = 0; h < path.hop_count(); ++h) uses[path.hop(h)].push_back({p, h, path.vertices()[h]});
    }
    for (ConnectionIndex c = 0; c < uses.size(); ++c) {
      if (uses[c].size() < 2) continue;
      const Connection& con = g_.connection(c);
      std::map<VertexIndex, std::vector<Use>> by_tail;
      for (const Use& u : uses[c]) by_tail[u.from].push_back(u);
      const std::string tag = "_c" + std::to_string(c);
      // same direction: distinct departures
      for (const auto& [from, list] : by_tail) {
        if (list.size() < 2) continue;
        std::map<Time, std::vector<LinearTerm>> at;
        for (const Use& u : list)
          for (Time t = windows_[u.path][u.hop].first; t <= windows_[u.path][u.hop].last; ++t)
            at[t].push_back({*z_at(u.path, u.hop, t), 1});
        for (auto& [t, row] : at)
          if (row.size() > 1)
            model_.add_constraint("same" + tag + "_u" + std::to_string(from) + "_t" + std::to_string(t),
                                  std::move(row), Sense::le, 1);
      }
      if (con.kind != ConnectionKind::edge || by_tail.size() < 2) continue;
      // head on: a departure at t from one side excludes departures within sep - 1 of t from the other
      const Time sep = std::max(1, con.traversal_time);
      for (const auto& [from, list] : by_tail) {
        for (const auto& [other, against] : by_tail) {
          if (other == from) continue;
          for (const Use& b : against) {
            const Interval wb = windows_[b.path][b.hop];
            std::map<Time, std::vector<LinearTerm>> at;
            for (const Use& a : list)
              for (Time t = windows_[a.path][a.hop].first; t <= windows_[a.path][a.hop].last; ++t)
                if (t + sep - 1 >= wb.first && t - sep + 1 <= wb.last) at[t].push_back({*z_at(a.path, a.hop, t), 1});
            for (auto& [t, row] : at) {
              for (Time s = std::max(wb.first, t - sep + 1); s <= std::min(wb.last, t + sep - 1); ++s)
                row.push_back({*z_at(b.path, b.hop, s), 1});
              model_.add_constraint("head" + tag + "_p" + std::to_string(b.path) + "_t" + std::to_string(t),
                                    std::move(row), Sense::le, 1);
            }
          }
        }
      }
    }
  }

  // present_p(t) = [arr <= t] - [dep <= t - 1], a single instant at source and sink.
  void indexed_capacities() {
    for (VertexIndex v = 0; v < g_.vertex_count(); ++v) {
      const auto through = instance_.paths_through(v);
      if (through.size() <= static_cast<std::size_t>(g_.capacity(v))) continue;
      Time first = std::numeric_limits<Time>::max(), last = std::numeric_limits<Time>::min();
      for (PathIndex p : through) {
        const std::size_t pos = *instance_.path(p).position(v);
        first = std::min(first, arrival(p, pos).window.first);
        last = std::max(last, departure(p, pos).window.last);
      }
      for (Time t = first; t <= last; ++t) {
        std::vector<LinearTerm> row;
        std::int64_t constant = 0;
        std::size_t touching = 0;
        for (PathIndex p : through) {
          const std::size_t pos = *instance_.path(p).position(v);
          const TimeExpr a = arrival(p, pos);
          const TimeExpr d = departure(p, pos);
          if (t < a.window.first || t > d.window.last) continue;
          ++touching;
          const std::size_t k = instance_.path(p).hop_count();
          if (pos == 0) {
            row.push_back({*z_at(p, 0, t), 1});
            continue;
          }
          const Time theta = hop(p, pos - 1).traversal_time;
          if (pos == k) {
            row.push_back({*z_at(p, pos - 1, t - theta), 1});
            continue;
          }
          for (const LinearTerm& term : departed_by(p, pos - 1, t - theta, 1, &constant)) row.push_back(term);
          for (const LinearTerm& term : departed_by(p, pos, t - 1, -1, &constant)) row.push_back(term);
        }
        if (touching <= static_cast<std::size_t>(g_.capacity(v))) continue;
        model_.add_constraint("load_v" + std::to_string(v) + "_t" + std::to_string(t), std::move(row), Sense::le,
                              g_.capacity(v) - constant);
      }
    }
  }

  const Instance& instance_;
  const DecayingGraph& g_;
  std::vector<std::vector<std::vector<std::size_t>>> z_;
  MilpOptions options_;
  MilpModel model_;
  std::vector<std::vector<Interval>> windows_;
  bool infeasible_ = false;
};

void write_terms(std::ostringstream& out, const MilpModel& model, const std::vector<LinearTerm>& terms) {
  bool first = true;
  for (const LinearTerm& t : terms) {
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (first)
      out << (t.coef < 0 ? "-" : "");
    else
      out << (t.coef < 0 ? " - " : " + ");
    if (mag != 1) out << mag << ' ';
    out << model.variables[t.var].name;
    first = false;
  }
  if (first) out << "0 " << model.variables[model.dstar].name;
}

}  // namespace

MilpModel build_milp(const Instance& instance, MilpMode mode, const MilpOptions& options) {
  return Builder(instance, mode, options).build();
}

std::string export_lp(const MilpModel& model, bool relax) {
  std::ostringstream out;
  out << "\\ srdg " << (model.mode == MilpMode::min_slack ? "min_slack" : "feasibility") << " model\n";
  out << "Minimize\n";
  if (model.mode == MilpMode::min_slack)
    out << " obj: " << model.variables[model.dstar].name << "\n";
  else
    out << " 0\n";
  out << "Subject To\n";
  // CBC crashes on an empty constraint section
  if (model.constraints.empty()) out << " nonempty: " << model.variables[model.dstar].name << " >= 0\n";
  for (const LinearConstraint& c : model.constraints) {
    out << ' ' << c.name << ": ";
    write_terms(out, model, c.terms);
    out << (c.sense == Sense::le ? " <= " : c.sense == Sense::ge ? " >= " : " = ") << c.rhs << '\n';
  }
  out << "Bounds\n";
  for (const MilpVariable& v : model.variables) {
    if (v.lower == v.upper)
      out << ' ' << v.name << " = " << v.lower << '\n';
    else
      out << ' ' << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
  }
  if (!relax) {
    bool header = false;
    for (const MilpVariable& v : model.variables) {
      if (v.type != VarType::integer) continue;
      if (!header) out << "General\n";
      header = true;
      out << ' ' << v.name << '\n';
    }
    header = false;
    for (const MilpVariable& v : model.variables) {
      if (v.type != VarType::binary) continue;
      if (!header) out << "Binary\n";
      header = true;
      out << ' ' << v.name << '\n';
    }
  }
  out << "End\n";
  return out.str();
}

namespace {

Temporalization decode(const Instance& instance, const MilpModel& model, const SolutionFile& solution, Time slack) {
  Temporalization schedule;
  schedule.horizon = instance.lifetime() + slack;
  schedule.departures.resize(instance.path_count());
  for (PathIndex p = 0; p < instance.path_count(); ++p) {
    for (std::size_t var : model.x[p]) {
      const double raw = solution.value(model.variables[var].name);
      const double rounded = std::round(raw);
      if (std::abs(raw - rounded) > 1e-6)
        throw SolverError("non-integral value for " + model.variables[var].name);
      schedule.departures[p].push_back(static_cast<Time>(rounded));
    }
  }
  return schedule;
}

}  // namespace

OptimizeOutcome solve_milp(const Instance& instance, const MilpModel& model, const SolverBackend& backend) {
  if (model.mode != MilpMode::min_slack) throw InvalidInput("solve_milp expects a min_slack model");
  const SolutionFile solution = run_backend(backend, export_lp(model));
  if (solution.status == SolutionStatus::infeasible)
    throw SolverError("backend reports the slack model infeasible");
  const double raw = solution.value(model.variables[model.dstar].name);
  const Time d_star = static_cast<Time>(std::llround(raw));
  if (std::abs(raw - d_star) > 1e-6) throw SolverError("non-integral d*");
  OptimizeOutcome out{d_star, decode(instance, model, solution, d_star)};
  if (!validate(instance, out.schedule, d_star).valid())
    throw SolverError("decoded MILP schedule fails validation");
  return out;
}

SolveOutcome solve_milp_feasibility(const Instance& instance, const MilpModel& model, const SolverBackend& backend) {
  if (model.mode != MilpMode::feasibility) throw InvalidInput("expected a feasibility model");
  const SolutionFile solution = run_backend(backend, export_lp(model));
  SolveOutcome out;
  if (solution.status == SolutionStatus::infeasible) return out;
  Temporalization schedule = decode(instance, model, solution, 0);
  if (!validate(instance, schedule).valid()) throw SolverError("decoded MILP schedule fails validation");
  out.verdict = Verdict::feasible;
  out.schedule = std::move(schedule);
  return out;
}

double solve_relaxation(const MilpModel& model, const SolverBackend& backend) {
  if (model.mode != MilpMode::min_slack) throw InvalidInput("relaxation expects a min_slack model");
  const SolutionFile solution = run_backend(backend, export_lp(model, true));
  if (solution.status == SolutionStatus::infeasible) throw SolverError("relaxation reported infeasible");
  return solution.value(model.variables[model.dstar].name);
}

}  // namespace srdg
