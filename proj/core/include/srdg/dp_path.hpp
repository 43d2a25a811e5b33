#pragma once

#include <cstdint>
#include <vector>

#include "srdg/exact.hpp"
#include "srdg/model.hpp"

namespace srdg {

/// Paths of the instance restricted to the first prefix_len vertices of the
/// path order (positions 0 .. prefix_len - 1).
struct Restriction {
  Instance instance;
  /// Original index of each restricted path.
  std::vector<PathIndex> original;
  /// Original ids of rightward paths arriving at the last prefix vertex.
  std::vector<PathIndex> arriving;
  /// Original ids of leftward paths departing from the last prefix vertex.
  std::vector<PathIndex> departing;
};

Restriction restrict_to_prefix(const Instance& instance, std::size_t prefix_len);

/// Arrival times (rho) of rightward paths and departure times (lambda) of
/// leftward paths at one vertex of the path order. Both vectors follow the
/// order of PathDp::arriving / PathDp::departing at that position.
struct FrontierState {
  std::size_t position = 0;
  std::vector<Time> rho;
  std::vector<Time> lambda;

  friend bool operator==(const FrontierState&, const FrontierState&) = default;
};

struct PathDpOptions {
  std::size_t max_states_per_layer = 2'000'000;
};

class PathDp {
 public:
  explicit PathDp(const Instance& instance, PathDpOptions options = {});

  const std::vector<VertexIndex>& order() const { return order_; }
  /// Paths arriving at / departing from order()[i] along the path order.
  const std::vector<PathIndex>& arriving(std::size_t i) const { return arriving_[i]; }
  const std::vector<PathIndex>& departing(std::size_t i) const { return departing_[i]; }

  /// Conditions linking consecutive table entries at positions i and i + 1.
  bool transition_ok(const FrontierState& from, const FrontierState& to) const;

  SolveOutcome solve();

  /// Number of distinct states visited per position by solve().
  const std::vector<std::size_t>& layer_sizes() const { return layer_sizes_; }

 private:
  struct Link;
  bool accepts_last(const FrontierState& state) const;
  Temporalization reconstruct(const std::vector<FrontierState>& states) const;

  const Instance& instance_;
  PathDpOptions options_;
  std::vector<VertexIndex> order_;
  std::vector<std::size_t> position_;
  // Connection used rightward / leftward between positions i and i + 1.
  std::vector<std::optional<ConnectionIndex>> right_, left_;
  std::vector<std::vector<PathIndex>> arriving_, departing_;
  std::vector<std::size_t> layer_sizes_;
};

/// Feasibility of a decaying path instance. Short-circuits when vl > 4 * lifetime.
SolveOutcome solve_path_dp(const Instance& instance, PathDpOptions options = {});

}  // namespace srdg
