#pragma once

// Canonical enumeration of even cycles in subgraphs of Q_n.
//
// Each cycle is produced once, in its canonical orientation: the walk starts
// at the cycle's smallest vertex and the second vertex is smaller than the
// last. Neighbors are tried in increasing order, so for a fixed start the
// cycles come out in lexicographic order of their vertex sequences.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubeturan/cube.hpp"

namespace cubeturan {

struct CycleWitness {
  int n = 0;
  std::vector<Mask> vertices;

  // Rotates/reflects an arbitrary closed vertex sequence into canonical form.
  static CycleWitness canonical(int n, std::vector<Mask> closed_walk);

  std::size_t length() const { return vertices.size(); }
  // Star position of edge (v_i, v_{i+1}), indices taken cyclically.
  std::vector<int> star_list() const;
  Mask star_mask() const;
  std::vector<Edge> edges() const;
  // Distinct vertices, Hamming-1 steps (including the closing step),
  // length >= 4 and even.
  bool is_valid() const;
  bool is_canonical() const;
  bool lies_in(const Subgraph& g) const;
  std::string to_string() const;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// Sorted adjacency lists of a subgraph; read-only after construction.
class CycleEnumerator {
 public:
  explicit CycleEnumerator(const Subgraph& g);

  int dimension() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  int max_degree() const { return max_degree_; }

  // Rough node count for a length-`length` scan; used to reject hopeless
  // enumerations up front.
  long double estimated_nodes(int length) const;
  void require_within_cap(int length) const;

  // Visits every canonical cycle of `length` whose smallest vertex is
  // `start`. visit(std::span<const Mask>) returns false to stop early; the
  // function then returns false.
  template <class Visit>
  bool scan_start(Mask start, int length, Visit&& visit) const {
    if (length < 4 || length % 2 != 0) return true;
    std::vector<Mask> path(static_cast<std::size_t>(length));
    std::vector<std::uint32_t> cursor(static_cast<std::size_t>(length));
    path[0] = start;
    cursor[0] = offsets_[start];
    int depth = 0;
    while (depth >= 0) {
      std::size_t d = static_cast<std::size_t>(depth);
      Mask cur = path[d];
      std::uint32_t end = offsets_[cur + 1];
      bool advanced = false;
      while (cursor[d] < end) {
        Mask next = neighbors_[cursor[d]++];
        if (next <= start) continue;
        if (depth + 1 == length - 1) {
          // Last vertex: must close back to start and fix the orientation.
          if (popcount(next ^ start) != 1 || !closes(next, start)) continue;
          if (!(path[1] < next) || on_path(path, depth, next)) continue;
          path[d + 1] = next;
          if (!visit(std::span<const Mask>(path.data(), path.size()))) return false;
          continue;
        }
        int remaining = length - (depth + 1);
        if (popcount(next ^ start) > remaining) continue;
        if (on_path(path, depth, next)) continue;
        path[d + 1] = next;
        cursor[d + 1] = offsets_[next];
        ++depth;
        advanced = true;
        break;
      }
      if (!advanced) --depth;
    }
    return true;
  }

 private:
  static bool on_path(const std::vector<Mask>& path, int depth, Mask v) {
    for (int i = 1; i <= depth; ++i) {
      if (path[static_cast<std::size_t>(i)] == v) return true;
    }
    return false;
  }
  bool closes(Mask last, Mask start) const;

  int n_ = 0;
  int max_degree_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

// Lexicographically first canonical cycle of `length` in g, if any.
bool find_first_cycle(const Subgraph& g, int length, CycleWitness& out, unsigned threads = 1);

}  // namespace cubeturan
