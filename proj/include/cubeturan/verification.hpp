#pragma once

// Exhaustive H-freeness checks with witnesses, and the k-partite
// representation predicate.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cubeturan/constructions.hpp"
#include "cubeturan/cube.hpp"
#include "cubeturan/cycles.hpp"
#include "cubeturan/pattern.hpp"

namespace cubeturan {

struct FreenessVerdict {
  bool free = true;
  // StarVector for a sub-cube copy, CycleWitness for a cycle.
  std::variant<std::monostate, StarVector, CycleWitness> witness;
  std::uint64_t checked_count = 0;

  bool has_witness() const { return !std::holds_alternative<std::monostate>(witness); }
  std::string witness_string() const;
};

// Candidates are scanned star sets in colex order, then fillings in
// increasing order; the first contained Q_k is the witness.
FreenessVerdict is_qk_free(const Subgraph& g, int k);

// The witness is the first canonical 2k-cycle in enumeration order,
// independent of `threads`.
FreenessVerdict is_c2k_free(const Subgraph& g, int k, unsigned threads = 1);

FreenessVerdict is_free_of(const Subgraph& g, const Pattern& forbidden, unsigned threads = 1);

// True when the witness really lies in g.
bool witness_lies_in(const FreenessVerdict& verdict, const Subgraph& g);

struct PartiteRepresentation {
  int ambient_dimension = 0;
  int k = 0;
  // sigma[i] in [1, k] for every position i; absent when no representation
  // exists.
  std::optional<std::vector<int>> sigma;
};

// Backtracking over the positions used by some edge; unused positions map
// to color 1.
PartiteRepresentation has_k_partite_representation(std::span<const StarVector> h, int k);

// Every edge has exactly k non-zero positions and sigma is injective on each.
bool is_k_partite_representation(std::span<const StarVector> h, int k, const std::vector<int>& sigma);

struct ClaimCheck {
  std::string claim;
  bool holds = false;
  FreenessVerdict verdict;
};

// Re-checks every freeness claim attached to a construction.
std::vector<ClaimCheck> certify(const Construction& c, unsigned threads = 1);

}  // namespace cubeturan
