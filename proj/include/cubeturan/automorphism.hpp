#pragma once

#include <random>
#include <vector>

#include "cubeturan/cube.hpp"

namespace cubeturan {

// x -> permute(x) XOR flips, where permute moves the cell at position i to
// position perm[i]. Flips act only on non-star cells of star vectors.
class Automorphism {
 public:
  static Automorphism identity(int n);
  Automorphism(std::vector<int> perm, Mask flips);

  int dimension() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& permutation() const { return perm_; }
  Mask flips() const { return flips_; }

  Mask apply_bits(Mask x) const;
  Vertex apply(const Vertex& v) const;
  Edge apply(const Edge& e) const;
  StarVector apply(const StarVector& sv) const;

  // (a.then(b))(x) == b(a(x))
  Automorphism then(const Automorphism& next) const;
  Automorphism inverse() const;

  static Automorphism random(int n, std::mt19937_64& rng);

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  Mask permute(Mask x) const;

  std::vector<int> perm_;
  Mask flips_ = 0;
};

Subgraph apply_automorphism(const Automorphism& sigma, const Subgraph& g);

// Convenience overload matching the (perm, flips, g) argument order.
Subgraph apply_automorphism(const std::vector<int>& perm, Mask flips, const Subgraph& g);

}  // namespace cubeturan
