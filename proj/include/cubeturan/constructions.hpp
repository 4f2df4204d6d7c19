#pragma once

// Deterministic generators for the H-free lower-bound constructions.
//
// Residue predicates read prefix/suffix ones-counts of an edge l*r; an empty
// prefix or suffix has ones-count 0.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubeturan/cube.hpp"
#include "cubeturan/cycles.hpp"
#include "cubeturan/numeric.hpp"
#include "cubeturan/pattern.hpp"

namespace cubeturan {

// Edges whose layer is not congruent to i mod k. Q_k-free.
Subgraph layer_complement(int n, int k, int i);

// Q_n minus the edges l*r with 1(l) = i mod floor((k+1)/2) and
// 1(r) = j mod ceil((k+1)/2). Q_k-free.
bool aks_deletes(const Edge& e, int k, int i, int j);
Subgraph aks_graph(int n, int k, int i, int j);

// Same shape with moduli floor((k-1)/2), ceil((k-1)/2) and residues 0.
bool aks_appendix_deletes(const Edge& e, int k);
Subgraph aks_appendix_graph(int n, int k);

// Q_2's l**r whose first star sits at an even 0-based position (odd in
// 1-based counting) with 1(l) and 1(r) both even. The selected squares are
// edge-disjoint and their union is C_6-free.
bool parity_selects(const StarVector& q2);
struct Q2Packing {
  Subgraph graph;
  std::vector<StarVector> selected;
};
Q2Packing parity_q2_packing(int n);
// Sum over odd 1-based p in [3, n-2] of 2^{p-2} 2^{n-p-2}, plus 2^{n-3}.
// Odd n: equals the selection size. Even n: the selection additionally holds
// the 2^{n-3} squares at the last two positions, which this sum omits.
BigInt parity_packing_sum(int n);

// Edges l*r with 1(l) - 1(r) = 0 mod 3. C_6-free.
bool conder_keeps(const Edge& e);
Subgraph conder_graph(int n);

// Selection rule for Q_l = p_0 * p_1 * ... * p_l.
//   ByLength: l >= 6 needs every 1(p_i) = 0 mod 3; l in {4, 5} needs
//             1(p_0) = 1(p_l) = 0 and 1(p_1) = ... = 1(p_{l-1}) = 1 mod 3.
//   AllZero:  every 1(p_i) = 0 mod 3 for any l.
enum class Mod3Rule { ByLength, AllZero };
std::vector<int> mod3_required_residues(int l, Mod3Rule rule);
bool mod3_selects(const StarVector& q, Mod3Rule rule = Mod3Rule::ByLength);
std::vector<StarVector> mod3_ql_selection(int n, int l, Mod3Rule rule = Mod3Rule::ByLength);
// Exact selection size from residue-class binomial sums; no dimension cap.
BigInt mod3_selection_count(int n, int l, Mod3Rule rule = Mod3Rule::ByLength);

// Values on the star positions of a selected Q_l along its cycle C(Q); bit t
// is the value at the t-th star (t = 0 for the leftmost).
std::vector<Mask> conder_cycle_rows(int l);
CycleWitness conder_cycle(const StarVector& q);

struct CycleFamily {
  int n = 0;
  std::vector<std::pair<StarVector, CycleWitness>> members;
  Subgraph union_graph() const;
};
CycleFamily conder_cycle_family(int n, int l);

// 2^{n-m} vertex-disjoint Q_m's with stars at positions 0..m-1. With
// cycle_half_length, each copy contributes only the lexicographically first
// canonical 2l-cycle of Q_m instead.
Subgraph disjoint_qm_packing(int n, int m, std::optional<int> cycle_half_length = std::nullopt);

// Union of the edge layers congruent to j mod k, or its complement.
Subgraph layer_union_mod(int n, int k, int j, bool complement);
Subgraph even_odd_layers(int n, int parity);

enum class ConstructionKind {
  LayerComplement,
  LayerUnionMod,
  AksGraph,
  AksAppendixGraph,
  ParityQ2Packing,
  ConderGraph,
  Mod3QlSelection,
  ConderCycleFamily,
  DisjointQmPacking,
  EvenOddLayers,
};

// Stable CLI names: layer-complement, aks, aks-appendix, parity-q2, conder,
// mod3-select, conder-cycles, qm-packing, layer-mod, even-odd.
std::string construction_name(ConstructionKind kind);
ConstructionKind parse_construction_kind(const std::string& name);

struct ConstructionSpec {
  ConstructionKind kind;
  std::map<std::string, int> params;
};

struct Construction {
  ConstructionSpec spec;
  Subgraph graph;
  // Patterns the graph is claimed not to contain.
  std::vector<Pattern> free_of;
  // When set, every cycle of the graph has one of these lengths.
  std::optional<std::vector<int>> cycle_lengths_within;
  // Selected sub-cubes, for the selection-based constructions.
  std::vector<StarVector> selected;

  std::vector<std::string> claim_strings() const;
};

// Reads n, k, i, j, m, l, residue, complement, cycles from spec.params as
// the kind requires; a missing parameter is a MissingParam error.
Construction build_construction(const ConstructionSpec& spec);

}  // namespace cubeturan
