#include "cubeturan/constructions.hpp"

#include <algorithm>

#include "cubeturan/counting.hpp"

namespace cubeturan {

namespace {

Error bad_range(const std::string& what) { return Error(ErrorKind::BadRange, what); }

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_dimension(int n) {
  if (n < 1) throw bad_range("dimension must be positive");
  require_materializable(n);
}

// Ones-counts of the segments p_0 .. p_l between consecutive stars.
std::vector<int> segment_ones(const StarVector& q) {
  std::vector<int> out;
  int from = 0;
  for (int s : q.star_positions()) {
    out.push_back(popcount(q.ones() & low_bits(s) & ~low_bits(from)));
    from = s + 1;
  }
  out.push_back(popcount(q.ones() & ~low_bits(from)));
  return out;
}

Mask row_mask(const std::string& row) {
  Mask m = 0;
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (row[t] == '1') m |= Mask{1} << t;
  }
  return m;
}

Mask block(int from, int count) { return low_bits(count) << from; }

}  // namespace

Subgraph layer_complement(int n, int k, int i) {
  if (k < 2 || k > n || i < 0 || i >= k) {
    throw bad_range("layer-complement needs 2 <= k <= n and 0 <= i < k");
  }
  return Subgraph::from_predicate(
      n, [&](const Edge& e) { return edge_layer(e).value % k != i; },
      "layer-complement n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
}

bool aks_deletes(const Edge& e, int k, int i, int j) {
  int left_mod = (k + 1) / 2;
  int right_mod = (k + 2) / 2;
  return e.prefix_ones() % left_mod == i && e.suffix_ones() % right_mod == j;
}

Subgraph aks_graph(int n, int k, int i, int j) {
  require_dimension(n);
  if (k < 2 || i < 0 || i >= (k + 1) / 2 || j < 0 || j >= (k + 2) / 2) {
    throw bad_range("aks needs k >= 2, 0 <= i < floor((k+1)/2), 0 <= j < ceil((k+1)/2)");
  }
  return Subgraph::from_predicate(
      n, [&](const Edge& e) { return !aks_deletes(e, k, i, j); },
      "aks n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
          " j=" + std::to_string(j));
}

bool aks_appendix_deletes(const Edge& e, int k) {
  int left_mod = (k - 1) / 2;
  int right_mod = k / 2;
  return e.prefix_ones() % left_mod == 0 && e.suffix_ones() % right_mod == 0;
}

Subgraph aks_appendix_graph(int n, int k) {
  require_dimension(n);
  if (k < 3) throw bad_range("aks-appendix needs k >= 3 (zero modulus otherwise)");
  return Subgraph::from_predicate(
      n, [&](const Edge& e) { return !aks_appendix_deletes(e, k); },
      "aks-appendix n=" + std::to_string(n) + " k=" + std::to_string(k));
}

bool parity_selects(const StarVector& q2) {
  if (q2.star_count() != 2) return false;
  auto stars = q2.star_positions();
  if (stars[1] != stars[0] + 1 || stars[0] % 2 != 0) return false;
  auto seg = segment_ones(q2);
  return seg[0] % 2 == 0 && seg[2] % 2 == 0;
}

Q2Packing parity_q2_packing(int n) {
  if (n < 3) throw bad_range("parity-q2 needs n >= 3");
  require_materializable(n);
  Q2Packing out{Subgraph(n), {}};
  std::vector<Edge> edges;
  for (int p = 0; p + 1 < n; p += 2) {
    Mask stars = Mask{3} << p;
    Mask free_positions = low_bits(n) & ~stars;
    Mask fill = 0;
    do {
      StarVector q(n, stars, fill);
      if (parity_selects(q)) {
        out.selected.push_back(q);
        for (const Edge& e : expand_edges(q)) edges.push_back(e);
      }
      fill = (fill - free_positions) & free_positions;
    } while (fill != 0);
  }
  out.graph = Subgraph::from_edges(n, edges, "parity-q2 n=" + std::to_string(n));
  return out;
}

BigInt parity_packing_sum(int n) {
  if (n < 3) throw bad_range("parity-q2 needs n >= 3");
  BigInt total = pow2(n - 3);
  for (int p = 3; p <= n - 2; p += 2) total += pow2(p - 2) * pow2(n - p - 2);
  return total;
}

bool conder_keeps(const Edge& e) { return mod(e.prefix_ones() - e.suffix_ones(), 3) == 0; }

Subgraph conder_graph(int n) {
  require_dimension(n);
  return Subgraph::from_predicate(n, conder_keeps, "conder n=" + std::to_string(n));
}

std::vector<int> mod3_required_residues(int l, Mod3Rule rule) {
  if (l < 1) throw bad_range("selection needs l >= 1");
  std::vector<int> residues(static_cast<std::size_t>(l + 1), 0);
  if (rule == Mod3Rule::ByLength && l < 6) {
    if (l < 4) throw bad_range("the length-dependent mod-3 rule needs l >= 4");
    for (int i = 1; i < l; ++i) residues[static_cast<std::size_t>(i)] = 1;
  }
  return residues;
}

bool mod3_selects(const StarVector& q, Mod3Rule rule) {
  int l = q.star_count();
  if (l < 1) return false;
  auto required = mod3_required_residues(l, rule);
  auto seg = segment_ones(q);
  for (std::size_t i = 0; i < seg.size(); ++i) {
    if (seg[i] % 3 != required[i]) return false;
  }
  return true;
}

std::vector<StarVector> mod3_ql_selection(int n, int l, Mod3Rule rule) {
  if (l < 4 || n < l) throw bad_range("mod3-select needs l >= 4 and n >= l");
  require_materializable(n);
  auto required = mod3_required_residues(l, rule);
  std::vector<StarVector> out;
  Mask stars = low_bits(l);
  Mask limit = Mask{1} << n;
  while (stars < limit) {
    // Per-segment fillings with the required residue, already shifted into
    // place; the cartesian product gives the selected Q_l's for these stars.
    std::vector<std::vector<Mask>> choices;
    int from = 0;
    auto positions = StarVector(n, stars, 0).star_positions();
    positions.push_back(n);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      int len = positions[i] - from;
      std::vector<Mask> fills;
      for (Mask f = 0; f < (Mask{1} << len); ++f) {
        if (popcount(f) % 3 == required[i]) fills.push_back(f << from);
      }
      choices.push_back(std::move(fills));
      from = positions[i] + 1;
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    bool empty = std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
    while (!empty) {
      Mask ones = 0;
      for (std::size_t i = 0; i < choices.size(); ++i) ones |= choices[i][idx[i]];
      out.emplace_back(n, stars, ones);
      std::size_t i = choices.size();
      while (i > 0) {
        --i;
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
        if (i == 0) empty = true;
      }
    }
    Mask c = stars & -stars;
    Mask r = stars + c;
    stars = (((r ^ stars) >> 2) / c) | r;
  }
  return out;
}

BigInt mod3_selection_count(int n, int l, Mod3Rule rule) {
  if (l < 4 || n < l) throw bad_range("mod3-select needs l >= 4 and n >= l");
  auto required = mod3_required_residues(l, rule);
  int free_cells = n - l;
  // dp[s]: weighted count of the first segments with total length s.
  std::vector<BigInt> dp(static_cast<std::size_t>(free_cells + 1), 0);
  dp[0] = 1;
  std::vector<std::vector<BigInt>> per_residue(3);
  for (int r = 0; r < 3; ++r) {
    for (int m = 0; m <= free_cells; ++m) per_residue[static_cast<std::size_t>(r)].push_back(binomial_residue_sum(m, 3, r));
  }
  for (int residue : required) {
    const auto& f = per_residue[static_cast<std::size_t>(residue)];
    std::vector<BigInt> next(dp.size(), 0);
    for (int s = 0; s <= free_cells; ++s) {
      if (dp[static_cast<std::size_t>(s)] == 0) continue;
      for (int m = 0; s + m <= free_cells; ++m) {
        next[static_cast<std::size_t>(s + m)] += dp[static_cast<std::size_t>(s)] * f[static_cast<std::size_t>(m)];
      }
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(free_cells)];
}

std::vector<Mask> conder_cycle_rows(int l) {
  if (l == 4) {
    std::vector<Mask> rows;
    for (const char* r : {"0000", "1000", "1100", "1110", "1111", "0111", "0011", "0001"}) rows.push_back(row_mask(r));
    return rows;
  }
  if (l == 5) {
    std::vector<Mask> rows;
    for (const char* r : {"00100", "01100", "01101", "01001", "11001", "11011", "10011", "10010", "10110", "00110"}) {
      rows.push_back(row_mask(r));
    }
    return rows;
  }
  if (l < 4) throw bad_range("C(Q) is defined for l >= 4");
  // A block of three ones slides right, widening to four between steps,
  // until it reaches the last three stars; five closing rows follow.
  std::vector<Mask> rows;
  for (int a = 0; a + 3 <= l; ++a) {
    rows.push_back(block(a, 3));
    if (a + 4 <= l) rows.push_back(block(a, 4));
  }
  Mask b1 = Mask{1} << 1;
  rows.push_back(b1 | block(l - 3, 3));
  rows.push_back(b1 | block(l - 3, 2));
  rows.push_back(b1 | (Mask{1} << (l - 2)));
  rows.push_back(block(1, 2) | (Mask{1} << (l - 2)));
  rows.push_back(block(0, 3) | (Mask{1} << (l - 2)));
  return rows;
}

CycleWitness conder_cycle(const StarVector& q) {
  int l = q.star_count();
  auto positions = q.star_positions();
  std::vector<Mask> walk;
  for (Mask row : conder_cycle_rows(l)) {
    Mask v = q.ones();
    for (int t = 0; t < l; ++t) {
      if ((row >> t) & 1) v |= Mask{1} << positions[static_cast<std::size_t>(t)];
    }
    walk.push_back(v);
  }
  return CycleWitness::canonical(q.dimension(), std::move(walk));
}

Subgraph CycleFamily::union_graph() const {
  std::vector<Edge> edges;
  for (const auto& [q, c] : members) {
    for (const Edge& e : c.edges()) edges.push_back(e);
  }
  return Subgraph::from_edges(n, edges, "conder-cycles n=" + std::to_string(n));
}

CycleFamily conder_cycle_family(int n, int l) {
  if (l < 4 || n < l) throw bad_range("conder-cycles needs l >= 4 and n >= l");
  CycleFamily family{n, {}};
  for (const StarVector& q : mod3_ql_selection(n, l, Mod3Rule::ByLength)) {
    family.members.emplace_back(q, conder_cycle(q));
  }
  return family;
}

Subgraph disjoint_qm_packing(int n, int m, std::optional<int> cycle_half_length) {
  require_dimension(n);
  if (m < 1 || m > n) throw bad_range("qm-packing needs 1 <= m <= n");
  std::string name = "qm-packing n=" + std::to_string(n) + " m=" + std::to_string(m);
  if (!cycle_half_length) {
    Mask stars = low_bits(m);
    return Subgraph::from_predicate(n, [&](const Edge& e) { return ((stars >> e.star) & 1) != 0; }, name);
  }
  int l = *cycle_half_length;
  if (l < 2) throw bad_range("cycle half-length must be >= 2");
  if (min_cycle_dimension(l) > m) {
    throw Error(ErrorKind::CycleDoesNotFit,
                "a " + std::to_string(2 * l) + "-cycle does not fit in Q" + std::to_string(m));
  }
  CycleWitness base;
  if (!find_first_cycle(Subgraph::full_cube(m), 2 * l, base)) {
    throw Error(ErrorKind::CycleDoesNotFit, "no " + std::to_string(2 * l) + "-cycle in Q" + std::to_string(m));
  }
  std::vector<Edge> edges;
  Mask copies = Mask{1} << (n - m);
  for (Mask high = 0; high < copies; ++high) {
    Mask offset = high << m;
    for (const Edge& e : base.edges()) edges.push_back({n, e.star, e.bits | offset});
  }
  return Subgraph::from_edges(n, edges, name + " l=" + std::to_string(l));
}

Subgraph layer_union_mod(int n, int k, int j, bool complement) {
  require_dimension(n);
  if (k < 1 || j < 0 || j >= k) throw bad_range("layer-mod needs k >= 1 and 0 <= j < k");
  return Subgraph::from_predicate(
      n, [&](const Edge& e) { return (edge_layer(e).value % k == j) != complement; },
      "layer-mod n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j) +
          (complement ? " complement" : ""));
}

Subgraph even_odd_layers(int n, int parity) {
  if (parity != 0 && parity != 1) throw bad_range("parity must be 0 or 1");
  return layer_union_mod(n, 2, parity, false).with_name("even-odd n=" + std::to_string(n) + " j=" + std::to_string(parity));
}

std::string construction_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::LayerComplement: return "layer-complement";
    case ConstructionKind::LayerUnionMod: return "layer-mod";
    case ConstructionKind::AksGraph: return "aks";
    case ConstructionKind::AksAppendixGraph: return "aks-appendix";
    case ConstructionKind::ParityQ2Packing: return "parity-q2";
    case ConstructionKind::ConderGraph: return "conder";
    case ConstructionKind::Mod3QlSelection: return "mod3-select";
    case ConstructionKind::ConderCycleFamily: return "conder-cycles";
    case ConstructionKind::DisjointQmPacking: return "qm-packing";
    case ConstructionKind::EvenOddLayers: return "even-odd";
  }
  return "?";
}

ConstructionKind parse_construction_kind(const std::string& name) {
  for (auto kind : {ConstructionKind::LayerComplement, ConstructionKind::LayerUnionMod, ConstructionKind::AksGraph,
                    ConstructionKind::AksAppendixGraph, ConstructionKind::ParityQ2Packing,
                    ConstructionKind::ConderGraph, ConstructionKind::Mod3QlSelection,
                    ConstructionKind::ConderCycleFamily, ConstructionKind::DisjointQmPacking,
                    ConstructionKind::EvenOddLayers}) {
    if (construction_name(kind) == name) return kind;
  }
  throw Error(ErrorKind::BadRange, "unknown construction '" + name + "'");
}

std::vector<std::string> Construction::claim_strings() const {
  std::vector<std::string> out;
  for (const Pattern& p : free_of) out.push_back(p.to_string());
  if (cycle_lengths_within) {
    std::string s = "cycle lengths in {";
    for (std::size_t i = 0; i < cycle_lengths_within->size(); ++i) {
      if (i) s += ",";
      s += std::to_string((*cycle_lengths_within)[i]);
    }
    out.push_back(s + "}");
  }
  return out;
}

Construction build_construction(const ConstructionSpec& spec) {
  auto param = [&](const char* key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
      throw Error(ErrorKind::MissingParam,
                  construction_name(spec.kind) + " needs parameter '" + std::string(key) + "'");
    }
    return it->second;
  };
  auto optional_param = [&](const char* key) -> std::optional<int> {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) return std::nullopt;
    return it->second;
  };

  Construction c{spec, Subgraph(), {}, std::nullopt, {}};
  int n = param("n");
  switch (spec.kind) {
    case ConstructionKind::LayerComplement: {
      int k = param("k");
      c.graph = layer_complement(n, k, param("i"));
      c.free_of = {Pattern::sub_cube(k)};
      break;
    }
    case ConstructionKind::AksGraph: {
      int k = param("k");
      c.graph = aks_graph(n, k, param("i"), param("j"));
      c.free_of = {Pattern::sub_cube(k)};
      break;
    }
    case ConstructionKind::AksAppendixGraph: {
      int k = param("k");
      c.graph = aks_appendix_graph(n, k);
      c.free_of = {Pattern::sub_cube(k)};
      break;
    }
    case ConstructionKind::ParityQ2Packing: {
      auto packing = parity_q2_packing(n);
      c.graph = std::move(packing.graph);
      c.selected = std::move(packing.selected);
      c.free_of = {Pattern::cycle(6)};
      break;
    }
    case ConstructionKind::ConderGraph:
      c.graph = conder_graph(n);
      c.free_of = {Pattern::cycle(6)};
      break;
    case ConstructionKind::Mod3QlSelection: {
      int l = param("l");
      Mod3Rule rule = optional_param("all_zero").value_or(0) ? Mod3Rule::AllZero : Mod3Rule::ByLength;
      c.selected = mod3_ql_selection(n, l, rule);
      std::vector<Edge> edges;
      for (const StarVector& q : c.selected) {
        for (const Edge& e : expand_edges(q)) edges.push_back(e);
      }
      c.graph = Subgraph::from_edges(n, edges, "mod3-select n=" + std::to_string(n) + " l=" + std::to_string(l));
      break;
    }
    case ConstructionKind::ConderCycleFamily: {
      auto family = conder_cycle_family(n, param("l"));
      c.graph = family.union_graph();
      for (const auto& member : family.members) c.selected.push_back(member.first);
      c.free_of = {Pattern::cycle(6)};
      break;
    }
    case ConstructionKind::DisjointQmPacking: {
      int m = param("m");
      auto l = optional_param("l");
      c.graph = disjoint_qm_packing(n, m, l);
      std::vector<int> lengths;
      if (l) {
        lengths.push_back(2 * *l);
      } else {
        for (int len = 4; len <= (1 << m); len += 2) lengths.push_back(len);
      }
      c.cycle_lengths_within = std::move(lengths);
      break;
    }
    case ConstructionKind::LayerUnionMod: {
      int k = param("k");
      bool complement = optional_param("complement").value_or(0) != 0;
      c.graph = layer_union_mod(n, k, param("j"), complement);
      if (complement) {
        c.free_of = {Pattern::sub_cube(k)};
      } else if (k >= 2) {
        c.free_of = {Pattern::cycle(4)};
      }
      break;
    }
    case ConstructionKind::EvenOddLayers:
      c.graph = even_odd_layers(n, param("j"));
      c.free_of = {Pattern::cycle(4)};
      break;
  }
  return c;
}

}  // namespace cubeturan
