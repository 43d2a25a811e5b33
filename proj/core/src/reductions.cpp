#include "srdg/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "srdg/errors.hpp"

namespace srdg {

namespace {

// Incremental gadget assembly over string vertex ids.
class GadgetBuilder {
 public:
  VertexIndex vertex(const std::string& id, int capacity = 1) {
    auto [it, fresh] = index_.try_emplace(id, ids_.size());
    if (fresh) {
      ids_.push_back(id);
      caps_.push_back(capacity);
      adjacency_.emplace_back();
    }
    return it->second;
  }

  void edge(const std::string& a, const std::string& b, Time theta, Time deadline) {
    const VertexIndex u = index_.at(a);
    const VertexIndex v = index_.at(b);
    connections_.push_back({u, v, ConnectionKind::edge, theta, deadline});
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }

  // Unique route in the tree built so far.
  void path(const std::string& source, const std::string& sink) {
    const VertexIndex s = index_.at(source);
    const VertexIndex t = index_.at(sink);
    std::vector<VertexIndex> parent(ids_.size(), ids_.size());
    std::queue<VertexIndex> queue;
    queue.push(s);
    parent[s] = s;
    while (!queue.empty()) {
      const VertexIndex u = queue.front();
      queue.pop();
      for (VertexIndex w : adjacency_[u]) {
        if (parent[w] != ids_.size()) continue;
        parent[w] = u;
        queue.push(w);
      }
    }
    if (parent[t] == ids_.size()) throw InvalidInput("gadget route " + source + " -> " + sink + " missing");
    std::vector<VertexIndex> route{t};
    while (route.back() != s) route.push_back(parent[route.back()]);
    std::reverse(route.begin(), route.end());
    paths_.push_back(std::move(route));
  }

  void set_capacity(const std::string& id, int capacity) { caps_[index_.at(id)] = capacity; }

  // Every vertex gets capacity max(1, number of paths through it).
  void uncapacitate() {
    std::vector<int> load(ids_.size(), 0);
    for (const auto& p : paths_)
      for (VertexIndex v : p) ++load[v];
    for (VertexIndex v = 0; v < ids_.size(); ++v) caps_[v] = std::max(1, load[v]);
  }

  Instance build(Time tau) const {
    DecayingGraph graph(ids_, caps_, connections_, tau);
    return Instance(std::move(graph), paths_);
  }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, VertexIndex> index_;
  std::vector<int> caps_;
  std::vector<Connection> connections_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::vector<std::vector<VertexIndex>> paths_;
};

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

}  // namespace

void check_simple(const SimpleGraph& g) {
  if (g.n < 0) throw InvalidInput("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.n || b >= g.n) throw InvalidInput("edge endpoint out of range");
    if (a == b) throw InvalidInput("self-loop in source graph");
    if (!seen.insert(std::minmax(a, b)).second) throw InvalidInput("parallel edge in source graph");
  }
}

void check_cubic(const SimpleGraph& g) {
  check_simple(g);
  std::vector<int> degree(static_cast<std::size_t>(g.n), 0);
  for (auto [a, b] : g.edges) ++degree[a], ++degree[b];
  for (int d : degree)
    if (d != 3) throw InvalidInput("graph is not cubic");
}

void check_formula223(const Formula223& f) {
  if (f.variables < 1) throw InvalidInput("formula needs variables");
  std::vector<int> pos(static_cast<std::size_t>(f.variables) + 1, 0), neg(pos);
  for (const auto& clause : f.clauses) {
    std::set<int> vars;
    for (int lit : clause) {
      const int v = std::abs(lit);
      if (v < 1 || v > f.variables) throw InvalidInput("literal out of range");
      if (!vars.insert(v).second) throw InvalidInput("clause repeats a variable");
      ++(lit > 0 ? pos : neg)[v];
    }
  }
  for (int v = 1; v <= f.variables; ++v)
    if (pos[v] != 2 || neg[v] != 2) throw InvalidInput("each variable must occur twice positive and twice negative");
  if (4 * f.variables != 3 * static_cast<int>(f.clauses.size())) throw InvalidInput("4N != 3M");
}

SpacedIntervals space_intervals(const UnitIntervalInstance& src) {
  if (src.colors < 1) throw InvalidInput("need at least one color");
  struct End {
    int value;
    int side;  // 0 = left endpoint, 1 = right endpoint
    std::size_t interval;
  };
  std::vector<End> ends;
  for (std::size_t i = 0; i < src.intervals.size(); ++i) {
    const UnitInterval& iv = src.intervals[i];
    if (iv.color < 0 || iv.color >= src.colors) throw InvalidInput("interval color out of range");
    ends.push_back({iv.start, 0, i});
    ends.push_back({iv.start + 1, 1, i});
  }
  // Left endpoints first on ties keep touching closed intervals intersecting.
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    return a.value != b.value ? a.value < b.value : a.side != b.side ? a.side < b.side : a.interval < b.interval;
  });
  SpacedIntervals out;
  out.colors = src.colors;
  out.bounds.resize(src.intervals.size());
  for (std::size_t r = 0; r < ends.size(); ++r) {
    const int at = 2 * static_cast<int>(r + 1);
    if (ends[r].side == 0)
      out.bounds[ends[r].interval].first = at;
    else
      out.bounds[ends[r].interval].last = at;
  }
  for (const UnitInterval& iv : src.intervals) out.color.push_back(iv.color);
  for (std::size_t i = 0; i < out.bounds.size(); ++i)
    for (std::size_t j = i + 1; j < out.bounds.size(); ++j)
      if (out.color[i] == out.color[j] && out.bounds[i].first <= out.bounds[j].last &&
          out.bounds[j].first <= out.bounds[i].last)
        throw InvalidInput("color class is not an independent set");
  return out;
}

Instance reduce_mis_uig(const UnitIntervalInstance& src) {
  const SpacedIntervals sp = space_intervals(src);
  const int k = sp.colors;
  std::vector<std::set<int>> starts(static_cast<std::size_t>(k)), ends(starts);
  std::vector<int> size(static_cast<std::size_t>(k), 0);
  Time tau = 1;
  for (std::size_t i = 0; i < sp.bounds.size(); ++i) {
    starts[sp.color[i]].insert(sp.bounds[i].first);
    ends[sp.color[i]].insert(sp.bounds[i].last);
    ++size[sp.color[i]];
    tau = std::max(tau, sp.bounds[i].last);
  }
  for (int i = 0; i < k; ++i)
    if (size[i] == 0) throw InvalidInput("every color needs at least one interval");
  // left[i] = L_{i+1}, right[i] = R_{i+1} (0-based colors).
  std::vector<std::set<int>> left(static_cast<std::size_t>(k)), right(left);
  for (int i = 0; i < k; ++i) {
    if (i > 0) left[i] = left[i - 1];
    left[i].insert(starts[i].begin(), starts[i].end());
  }
  for (int i = k - 1; i >= 0; --i) {
    if (i + 1 < k) right[i] = right[i + 1];
    right[i].insert(ends[i].begin(), ends[i].end());
  }

  GadgetBuilder b;
  auto lv = [](int i) { return "l" + std::to_string(i + 1); };
  auto rv = [](int i) { return "r" + std::to_string(i + 1); };
  for (int t = 1; t <= tau; ++t) b.vertex(idx("x", t));
  for (int i = 0; i < k; ++i) b.vertex(lv(i));
  b.vertex("vl");
  b.vertex("vs");
  b.vertex("vr");
  for (int i = 0; i < k; ++i) b.vertex(rv(i));
  for (int t = tau; t >= 1; --t) b.vertex(idx("y", t));

  for (int t = 1; t < tau; ++t) b.edge(idx("x", t), idx("x", t + 1), 0, t);
  b.edge(idx("x", tau), lv(0), 0, tau);
  for (int i = 0; i + 1 < k; ++i) b.edge(lv(i), lv(i + 1), 0, tau);
  b.edge(lv(k - 1), "vl", 0, tau);
  b.edge("vl", "vs", 0, tau);
  b.edge("vs", "vr", 0, tau);
  b.edge("vr", rv(0), 0, tau);
  for (int i = 0; i + 1 < k; ++i) b.edge(rv(i), rv(i + 1), 0, tau);
  b.edge(rv(k - 1), idx("y", tau), 0, tau);
  for (int t = tau - 1; t >= 1; --t) b.edge(idx("y", t + 1), idx("y", t), 0, t);

  for (int i = 0; i < k; ++i) {
    for (int c = 0; c + 1 < size[i]; ++c) b.path(lv(i), "vl");
    for (int c = 0; c + 1 < size[i]; ++c) b.path(rv(i), "vr");
    b.path(lv(i), rv(i));
  }
  for (int t = 1; t <= tau; ++t) {
    std::string from;
    if (left[0].contains(t)) {
      from = idx("x", tau);
    } else if (!left[k - 1].contains(t)) {
      from = "vl";
    } else {
      for (int i = 0; i + 1 < k; ++i)
        if (left[i + 1].contains(t) && !left[i].contains(t)) from = lv(i);
    }
    if (from != idx("x", t)) b.path(from, idx("x", t));
  }
  for (int t = 1; t <= tau; ++t) {
    std::string from;
    if (right[k - 1].contains(t)) {
      from = idx("y", tau);
    } else if (!right[0].contains(t)) {
      from = "vr";
    } else {
      for (int i = 1; i < k; ++i)
        if (right[i - 1].contains(t) && !right[i].contains(t)) from = rv(i);
    }
    if (from != idx("y", t)) b.path(from, idx("y", t));
  }
  return b.build(tau);
}

int cubic_blockers_at(int i, int n, int m, int k) {
  const int c = 2 * m + 3 * n + 4 * k;
  int taken = 0;
  if (i == 1) taken = n;
  else if (i <= 4) taken = k;
  else if (i == 5) taken = 2 * k;
  else if (i == 6) taken = 3 * k;
  else if (i == 7) taken = 4 * k + m;
  else if (i == 8) taken = m;
  else if (i <= 16) taken = 0;
  else if (i == 17) taken = n - k;
  else if (i == 18) taken = 2 * (n - k);
  else if (i == 19) taken = 3 * (n - k);
  else if (i == 20) taken = 3 * (n - k) + m;
  else taken = 3 * (n - k);
  return c - taken;
}

Instance reduce_cubic_is(const SimpleGraph& src, int k) {
  check_cubic(src);
  if (k < 0 || k > src.n) throw InvalidInput("k out of range");
  const int n = src.n;
  const int m = static_cast<int>(src.edges.size());
  constexpr Time tau = 27;
  GadgetBuilder b;
  b.vertex("s", 2 * m + 3 * n + 4 * k);
  for (int v = 0; v < n; ++v) {
    b.vertex(idx("v", v), 2);
    b.edge(idx("v", v), "s", 4, 19);
    b.vertex(idx("v", v) + "'", 2);
    b.edge(idx("v", v) + "'", "s", 0, 1);
  }
  for (int e = 0; e < m; ++e) {
    const std::string base = idx("e", e);
    b.vertex(base, 2);
    b.edge(base, "s", 6, 27);
    b.vertex(base + "''", 2);
    b.edge(base + "''", "s", 0, 7);
    b.vertex(base + "+", 2);
    b.edge(base + "+", "s", 0, 20);
    b.vertex(base + "#", 2);
    b.edge(base + "#", "s", 7, 8);
  }
  // Blockers of B_i sit at the center exactly at step i.
  for (int i = 1; i <= tau; ++i) {
    const int count = cubic_blockers_at(i, n, m, k);
    for (int j = 0; j < count; ++j) {
      const std::string id = "b" + std::to_string(i) + "_" + std::to_string(j);
      b.vertex(id, 2);
      b.edge(id, "s", i - 1, i);
    }
  }
  for (int v = 0; v < n; ++v) b.path(idx("v", v) + "'", idx("v", v));
  for (int e = 0; e < m; ++e) {
    const std::string base = idx("e", e);
    b.path(base, base + "''");
    b.path(base, base + "+");
    b.path(base + "#", base);
    b.path(idx("v", src.edges[e].first), base);
    b.path(idx("v", src.edges[e].second), base);
  }
  for (int i = 1; i <= tau; ++i)
    for (int j = 0; j < cubic_blockers_at(i, n, m, k); ++j) b.path("b" + std::to_string(i) + "_" + std::to_string(j), "s");
  return b.build(tau);
}

Instance reduce_vertex_cover(const SimpleGraph& input, int k) {
  check_simple(input);
  if (k < 0 || k > input.n) throw InvalidInput("k out of range");
  // The gadget needs m >= 3 and 3m - n + k >= 1. Each added disjoint edge
  // needs one more cover vertex, so (G + K2, k + 1) has the same answer.
  SimpleGraph src = input;
  while (src.edges.size() < 3 || 3 * static_cast<int>(src.edges.size()) - src.n + k - 1 < 0) {
    src.edges.emplace_back(src.n, src.n + 1);
    src.n += 2;
    ++k;
  }
  const int n = src.n;
  const int m = static_cast<int>(src.edges.size());
  const Time tau = 7 * m + k + 3;
  const int blockers = 3 * m - n + k - 1;
  GadgetBuilder b;
  b.vertex("s");
  for (int v = 0; v < n; ++v) {
    b.vertex(idx("v", v));
    b.edge(idx("v", v), "s", m + 1, tau);
    b.vertex(idx("v", v) + "'");
    b.edge(idx("v", v) + "'", "s", 0, 4 * m + k);
  }
  for (int i = 1; i <= m; ++i) {
    b.vertex(idx("e", i));
    b.edge(idx("e", i), "s", i, 5 * m + k + 2 + i);
    b.vertex(idx("e", i) + "'");
    b.edge(idx("e", i) + "'", "s", 5 * m + k - i, 5 * m + k - i + 1);
  }
  for (int j = 1; j <= blockers; ++j) {
    b.vertex(idx("b", j));
    b.edge(idx("b", j), "s", m + n - k + j, m + n - k + j + 1);
  }
  for (int v = 0; v < n; ++v) b.path(idx("v", v), idx("v", v) + "'");
  for (int i = 1; i <= m; ++i) {
    b.path(idx("e", i) + "'", idx("e", i));
    b.path(idx("e", i), idx("v", src.edges[i - 1].first));
    b.path(idx("e", i), idx("v", src.edges[i - 1].second));
  }
  for (int j = 1; j <= blockers; ++j) b.path(idx("b", j), "s");
  return b.build(tau);
}

Instance reduce_223sat(const Formula223& src) {
  check_formula223(src);
  GadgetBuilder b;
  b.vertex("z");
  auto name = [](const char* base, int i, const char* suffix = "") {
    return std::string(base) + std::to_string(i) + suffix;
  };
  auto name2 = [](const char* base, int i, int j, const char* suffix = "") {
    return std::string(base) + std::to_string(i) + "_" + std::to_string(j) + suffix;
  };
  for (int i = 1; i <= src.variables; ++i) {
    for (const char* g : {"u", "w"}) {
      b.vertex(name(g, i));
      b.vertex(name(g, i, "'"));
      b.vertex(name(g, i, "''"));
      b.edge("z", name(g, i), 0, 4);
      b.edge(name(g, i), name(g, i, "'"), 0, 3);
      b.edge(name(g, i, "'"), name(g, i, "''"), 0, 1);
    }
    for (int j = 1; j <= 2; ++j) {
      b.vertex(name2("v", i, j));
      b.edge("z", name2("v", i, j), 0, 4);
      for (const char* g : {"t", "f"}) {
        b.vertex(name2(g, i, j));
        b.vertex(name2(g, i, j, "'"));
        b.vertex(name2(g, i, j, "''"));
        b.edge(name2(g, i, j), name2(g, i, j, "'"), 0, 2);
        b.edge(name2(g, i, j, "'"), name2(g, i, j, "''"), 0, 1);
        // Link to the variable hub; used by the validity and verifier routes.
        b.edge(name2("v", i, j), name2(g, i, j), 0, 4);
      }
    }
  }
  for (std::size_t c = 0; c < src.clauses.size(); ++c) {
    b.vertex(name("c", static_cast<int>(c) + 1));
    b.edge("z", name("c", static_cast<int>(c) + 1), 0, 4);
  }

  for (int i = 1; i <= src.variables; ++i) {
    b.path(name("u", i), name("u", i, "''"));
    b.path(name("w", i), name("w", i, "''"));
    b.path(name("u", i, "'"), name("w", i, "'"));
    b.path(name("u", i, "'"), name("w", i, "'"));
    for (int j = 1; j <= 2; ++j) {
      b.path(name2("t", i, j), name2("t", i, j, "''"));
      b.path(name2("f", i, j), name2("f", i, j, "''"));
      b.path(name2("t", i, j, "'"), name2("f", i, j, "'"));
    }
    b.path(name2("t", i, 1), name("u", i));
    b.path(name2("t", i, 2), name("w", i));
    b.path(name2("f", i, 1), name("w", i));
    b.path(name2("f", i, 2), name("u", i));
  }
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(src.variables) + 1), neg(pos);
  for (std::size_t c = 0; c < src.clauses.size(); ++c)
    for (int lit : src.clauses[c]) (lit > 0 ? pos : neg)[std::abs(lit)].push_back(static_cast<int>(c) + 1);
  for (int i = 1; i <= src.variables; ++i) {
    for (int j = 1; j <= 2; ++j) {
      b.path(name2("t", i, j), name("c", pos[i][j - 1]));
      b.path(name2("f", i, j), name("c", neg[i][j - 1]));
    }
  }
  b.uncapacitate();
  return b.build(4);
}

bool oracle_mis_uig(const UnitIntervalInstance& src) {
  const SpacedIntervals sp = space_intervals(src);
  std::vector<std::vector<std::size_t>> by_color(static_cast<std::size_t>(sp.colors));
  for (std::size_t i = 0; i < sp.color.size(); ++i) by_color[sp.color[i]].push_back(i);
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, int c) -> bool {
    if (c == sp.colors) return true;
    for (std::size_t i : by_color[c]) {
      const Interval a = sp.bounds[i];
      const bool free = std::none_of(chosen.begin(), chosen.end(), [&](std::size_t j) {
        return a.first <= sp.bounds[j].last && sp.bounds[j].first <= a.last;
      });
      if (!free) continue;
      chosen.push_back(i);
      if (self(self, c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

namespace {

// Calls f on every vertex subset of size k, stops when f returns true.
template <typename F>
bool any_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (f(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool oracle_is(const SimpleGraph& g, int k) {
  if (g.n > 24) throw ResourceLimit("independent set oracle limited to 24 vertices");
  return any_subset(g.n, k, [&](const std::vector<int>& pick) {
    std::set<int> in(pick.begin(), pick.end());
    return std::none_of(g.edges.begin(), g.edges.end(),
                        [&](const auto& e) { return in.contains(e.first) && in.contains(e.second); });
  });
}

bool oracle_vc(const SimpleGraph& g, int k) {
  if (g.n > 24) throw ResourceLimit("vertex cover oracle limited to 24 vertices");
  return any_subset(g.n, std::min(k, g.n), [&](const std::vector<int>& pick) {
    std::set<int> in(pick.begin(), pick.end());
    return std::all_of(g.edges.begin(), g.edges.end(),
                       [&](const auto& e) { return in.contains(e.first) || in.contains(e.second); });
  });
}

bool oracle_223sat(const Formula223& f) {
  if (f.variables > 24) throw ResourceLimit("SAT oracle limited to 24 variables");
  for (std::uint32_t mask = 0; mask < (1u << f.variables); ++mask) {
    const bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int lit) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1u;
        return lit > 0 ? value : !value;
      });
    });
    if (ok) return true;
  }
  return false;
}

Formula223 sample_formula223(int variables, std::uint64_t seed) {
  if (variables < 3 || variables % 3 != 0) throw InvalidInput("(2,2)-3SAT needs N divisible by 3, N >= 3");
  std::mt19937_64 rng(seed);
  std::vector<int> slots;
  for (int v = 1; v <= variables; ++v) slots.insert(slots.end(), {v, v, -v, -v});
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(slots.begin(), slots.end(), rng);
    Formula223 f{variables, {}};
    bool ok = true;
    for (std::size_t c = 0; c < slots.size() && ok; c += 3) {
      std::array<int, 3> clause{slots[c], slots[c + 1], slots[c + 2]};
      ok = std::abs(clause[0]) != std::abs(clause[1]) && std::abs(clause[0]) != std::abs(clause[2]) &&
           std::abs(clause[1]) != std::abs(clause[2]);
      f.clauses.push_back(clause);
    }
    if (ok) return f;
  }
  throw InvalidInput("could not sample a (2,2)-3SAT formula");
}

namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (row >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] == "c" || tokens[0][0] == '#') continue;
    out.push_back(std::move(tokens));
  }
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("expected an integer, got '" + s + "'");
  }
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  SimpleGraph g;
  bool header = false;
  for (const auto& t : tokenized_lines(text)) {
    if (t[0] == "p") {
      if (t.size() < 3) throw InvalidInput("malformed problem line");
      g.n = to_int(t[2]);
      header = true;
    } else if (t[0] == "e") {
      if (!header || t.size() < 3) throw InvalidInput("edge line before problem line");
      g.edges.emplace_back(to_int(t[1]) - 1, to_int(t[2]) - 1);
    } else {
      throw InvalidInput("unexpected line starting with '" + t[0] + "'");
    }
  }
  if (!header) throw InvalidInput("missing 'p edge n m' line");
  check_simple(g);
  return g;
}

UnitIntervalInstance parse_intervals(std::string_view text) {
  UnitIntervalInstance src;
  for (const auto& t : tokenized_lines(text)) {
    if (t.size() != 2) throw InvalidInput("interval lines are '<color> <start>'");
    const int color = to_int(t[0]);
    if (color < 1) throw InvalidInput("colors are numbered from 1");
    src.intervals.push_back({color - 1, to_int(t[1])});
    src.colors = std::max(src.colors, color);
  }
  return src;
}

Formula223 parse_cnf(std::string_view text) {
  Formula223 f;
  std::vector<int> pending;
  for (const auto& t : tokenized_lines(text)) {
    if (t[0] == "p") {
      if (t.size() < 4) throw InvalidInput("malformed 'p cnf' line");
      f.variables = to_int(t[2]);
      continue;
    }
    for (const auto& tok : t) {
      const int lit = to_int(tok);
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) throw InvalidInput("clauses must have exactly three literals");
      f.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
  }
  if (!pending.empty()) throw InvalidInput("unterminated clause");
  check_formula223(f);
  return f;
}

}  // namespace srdg
