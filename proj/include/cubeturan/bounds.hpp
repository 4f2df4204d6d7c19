#pragma once

// Density bounds of the form lower <= d(Q_n, T, H) <= upper, as exact
// rationals or symbolic records.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubeturan/numeric.hpp"
#include "cubeturan/ztable.hpp"

namespace cubeturan {

// T1: d(Q_n, Q_l, Q_k)      T2: d(Q_n, C_4, C_6)     T3: d(Q_n, C_2l, C_6)
// T4: d(Q_n, Q_l, C_2k)     T5: d(Q_n, C_2l, Q_k)    T6: d(Q_n, C_6, C_4)
// T7: d(Q_n, C_2l, C_2k)    A6: alternative lower bound for T1
// A7: mod-3 lower bound for T3 with every residue 0.
enum class Theorem { T1, T2, T3, T4, T5, T6, T7, A6, A7 };
enum class BoundSide { Lower, Upper };

std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& text);  // BadTheoremId
std::string to_string(BoundSide s);
const std::vector<Theorem>& all_theorems();

struct BoundParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> l;
};

struct BoundValue {
  Theorem theorem = Theorem::T1;
  BoundSide side = BoundSide::Lower;
  std::map<std::string, int> params;
  std::string expression;
  // Present iff no unresolved constant remains.
  std::optional<Rational> value;
  // Holds only for large n.
  bool asymptotic = false;
  std::vector<std::string> unresolved;
  // For a max/min with a symbolic branch: the evaluated numeric branches.
  // Still a valid bound on the same side, only weaker.
  std::optional<Rational> numeric_part;

  // value if present, else numeric_part.
  std::optional<Rational> best_known() const;
};

// Constants: alpha and c_k stay symbolic; z_{l,l} is read from `z`
// (MissingZEntry if absent).
BoundValue eval_bound(Theorem theorem, BoundSide side, const BoundParams& params, const ZTable& z);

// T1 lower: true when the 4 C(l+2,3)/(k(k+2)) branch is strictly larger.
bool t1_second_branch_larger(int l, int k);

struct SandwichReport {
  Theorem theorem = Theorem::T1;
  BoundValue lower;
  BoundValue upper;
  std::optional<Rational> measured;
  std::string measured_label;
  std::vector<std::string> lines;
  // False only when a non-asymptotic numeric side is violated.
  bool consistent = true;
};

SandwichReport bound_sandwich_report(Theorem theorem, const BoundParams& params, const ZTable& z,
                                     std::optional<Rational> measured = std::nullopt,
                                     std::string measured_label = "measured");

}  // namespace cubeturan
