#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "srdg/model.hpp"

namespace srdg {

/// Simple undirected graph on vertices 0 .. n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Interval [start, start + 1] of the given color (0-based).
struct UnitInterval {
  int color = 0;
  int start = 0;
};

struct UnitIntervalInstance {
  int colors = 0;
  std::vector<UnitInterval> intervals;
};

/// Closed intervals after the spacing transform: endpoints 2, 4, 6, ... with
/// the intersection pattern of the input.
struct SpacedIntervals {
  int colors = 0;
  std::vector<int> color;
  std::vector<Interval> bounds;
};

/// Literal +v / -v for variable v in 1 .. variables.
struct Formula223 {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

SpacedIntervals space_intervals(const UnitIntervalInstance& src);

void check_cubic(const SimpleGraph& g);
void check_simple(const SimpleGraph& g);
void check_formula223(const Formula223& f);

Instance reduce_mis_uig(const UnitIntervalInstance& src);
Instance reduce_cubic_is(const SimpleGraph& src, int k);
Instance reduce_vertex_cover(const SimpleGraph& src, int k);
Instance reduce_223sat(const Formula223& src);

/// Blocker count of the cubic independent set gadget at time step i (1 .. 27).
int cubic_blockers_at(int i, int n, int m, int k);

bool oracle_mis_uig(const UnitIntervalInstance& src);
bool oracle_is(const SimpleGraph& g, int k);
bool oracle_vc(const SimpleGraph& g, int k);
bool oracle_223sat(const Formula223& f);

/// Uniformly shuffled literal slots (each variable twice positive, twice
/// negative) grouped into clauses of three distinct variables.
Formula223 sample_formula223(int variables, std::uint64_t seed);

SimpleGraph parse_edge_list(std::string_view text);
UnitIntervalInstance parse_intervals(std::string_view text);
Formula223 parse_cnf(std::string_view text);

}  // namespace srdg
