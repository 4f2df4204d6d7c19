#pragma once

// Exact ex(Q_n, T, H) for small n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeturan/cube.hpp"
#include "cubeturan/numeric.hpp"
#include "cubeturan/pattern.hpp"

namespace cubeturan {

inline constexpr int kMaxSearchDimension = 4;

enum class SearchMethod { Exhaustive, BranchAndBound };
std::string to_string(SearchMethod m);

struct SearchOptions {
  SearchMethod method = SearchMethod::BranchAndBound;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0;       // 0: unlimited
  // Force-delete the first edge at the root (all edges of Q_n form one
  // orbit). Defaults to on for n >= 4 only.
  std::optional<bool> root_orbit_fixing;
  // Decision order as dense edge indices; empty means the default order.
  std::vector<std::size_t> edge_order;
};

struct SearchResult {
  int n = 0;
  Pattern target;
  Pattern forbid;
  BigInt value;
  Subgraph witness;
  BigInt ambient_total;
  Rational density;
  std::uint64_t nodes_explored = 0;
  SearchMethod method = SearchMethod::BranchAndBound;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(BigInt lower, BigInt upper, Subgraph best)
      : Error(ErrorKind::BudgetExceeded, "search budget exhausted; bounds [" + lower.str() + ", " + upper.str() + "]"),
        lower_bound(std::move(lower)), upper_bound(std::move(upper)), best_found(std::move(best)) {}

  BigInt lower_bound;
  BigInt upper_bound;
  Subgraph best_found;
};

// Edge masks (bit t = dense edge index t) of every copy of `pattern` in Q_n.
std::vector<std::uint64_t> pattern_copies(int n, const Pattern& pattern);

// Default decision order: descending number of target copies through the
// edge, ties by dense index.
std::vector<std::size_t> default_edge_order(int n, const Pattern& target);

// The returned witness is H-free, holds exactly `value` target copies, and
// among optimal edge sets has the smallest decision string over the edge
// order when "keep" sorts before "delete". With root orbit fixing the
// minimum is taken over optima that delete the first edge.
SearchResult exact_extremal(int n, const Pattern& target, const Pattern& forbid, const SearchOptions& options = {});

Rational density(int n, const Pattern& target, const Pattern& forbid, const SearchOptions& options = {});

}  // namespace cubeturan
