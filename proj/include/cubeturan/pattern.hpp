#pragma once

#include <string>
#include <string_view>

namespace cubeturan {

// A target or forbidden graph: an edge, a sub-cube Q_k or an even cycle C_m.
struct Pattern {
  enum class Kind { Edge, SubCube, Cycle };

  Kind kind = Kind::Edge;
  int order = 1;  // k for Q_k, m for C_m; 1 for Edge

  static Pattern edge() { return {Kind::Edge, 1}; }
  static Pattern sub_cube(int k);
  static Pattern cycle(int length);

  // Grammar: "e", "q<k>" (k >= 1), "c<m>" (m even, >= 4).
  static Pattern parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

}  // namespace cubeturan
