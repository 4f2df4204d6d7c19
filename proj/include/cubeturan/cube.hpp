#pragma once

// Hypercube primitives: vertices, star vectors, edges and edge-set subgraphs.
//
// Position convention: positions are 0-based and read left to right in star
// strings. Position i is bit i of every integer encoding (position 0 is the
// least significant bit), so "011" is the vertex 0b110 = 6.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubeturan/error.hpp"

namespace cubeturan {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask low_bits(int count) { return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1; }

// Throws DimensionTooLarge when n exceeds the materialization cap.
void require_materializable(int n);

struct Vertex {
  int n = 0;
  Mask bits = 0;

  std::string to_string() const;
  int ones() const { return popcount(bits); }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct EdgeLayerIndex {
  int value = 0;
  friend auto operator<=>(const EdgeLayerIndex&, const EdgeLayerIndex&) = default;
};

// One star: the edge joining `bits` and `bits | (1 << star)`. The star bit of
// `bits` is always clear.
struct Edge {
  int n = 0;
  int star = 0;
  Mask bits = 0;

  static Edge between(int n, Mask u, Mask v);

  Vertex low() const { return {n, bits}; }
  Vertex high() const { return {n, bits | (Mask{1} << star)}; }
  Mask prefix() const { return bits & low_bits(star); }
  Mask suffix() const { return bits & ~low_bits(star + 1); }
  int prefix_ones() const { return popcount(prefix()); }
  int suffix_ones() const { return popcount(suffix()); }

  std::string to_string() const;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A sub-cube Q_k of Q_n, given as a word over {0, 1, *}.
class StarVector {
 public:
  StarVector() = default;
  StarVector(int n, Mask stars, Mask ones);

  static StarVector from_vertex(const Vertex& v) { return {v.n, 0, v.bits}; }
  static StarVector from_edge(const Edge& e) { return {e.n, Mask{1} << e.star, e.bits}; }

  int dimension() const { return n_; }
  int star_count() const { return popcount(stars_); }
  Mask stars() const { return stars_; }
  Mask ones() const { return ones_; }

  std::vector<int> star_positions() const;
  char cell(int position) const;
  std::string to_string() const;

  bool is_vertex() const { return stars_ == 0; }
  bool is_edge() const { return star_count() == 1; }
  Edge as_edge() const;

  friend bool operator==(const StarVector&, const StarVector&) = default;

 private:
  int n_ = 0;
  Mask stars_ = 0;
  Mask ones_ = 0;
};

// Accepts '*' and the Unicode star U+2605 as star cells.
StarVector parse_star_vector(std::string_view text, int n);
Edge parse_edge(std::string_view text, int n);

std::vector<Edge> expand_edges(const StarVector& sv);
std::vector<Vertex> expand_vertices(const StarVector& sv);

EdgeLayerIndex edge_layer(const Edge& e);

// Dense numbering of the n 2^{n-1} edges of Q_n:
// index = star * 2^{n-1} + (bits with the star bit squeezed out).
std::size_t cube_edge_count(int n);
std::size_t edge_index(const Edge& e);
Edge edge_at(int n, std::size_t index);

// An edge set on the full vertex set of Q_n. Values are immutable; the
// with_/without_ members return modified copies.
class Subgraph {
 public:
  Subgraph() = default;
  explicit Subgraph(int n, std::string name = {});

  static Subgraph full_cube(int n);
  static Subgraph from_edges(int n, std::span<const Edge> edges, std::string name = {});
  static Subgraph from_predicate(int n, const std::function<bool(const Edge&)>& keep,
                                 std::string name = {});

  int dimension() const { return n_; }
  const std::string& name() const { return name_; }
  std::size_t edge_count() const { return count_; }

  bool contains(const Edge& e) const;
  bool contains_index(std::size_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }
  bool contains_all(const StarVector& sv) const;
  bool adjacent(Mask u, Mask v) const;

  // Edges in dense-index order.
  std::vector<Edge> edges() const;
  // Star strings in lexicographic order, as written to files.
  std::vector<std::string> sorted_keys() const;

  Subgraph with_edge(const Edge& e) const;
  Subgraph without_edge(const Edge& e) const;
  Subgraph with_name(std::string name) const;
  Subgraph united(const Subgraph& other) const;
  Subgraph minus(const Subgraph& other) const;
  bool is_subset_of(const Subgraph& other) const;

  // Name is provenance only and does not take part in equality.
  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  void set(std::size_t index, bool value);

  int n_ = 0;
  std::string name_;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

}  // namespace cubeturan
