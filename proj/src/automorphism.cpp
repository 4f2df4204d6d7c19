#include "cubeturan/automorphism.hpp"

#include <algorithm>
#include <numeric>

namespace cubeturan {

Automorphism Automorphism::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return Automorphism(std::move(perm), 0);
}

Automorphism::Automorphism(std::vector<int> perm, Mask flips) : perm_(std::move(perm)), flips_(flips) {
  int n = static_cast<int>(perm_.size());
  if (n > kMaxStarDimension) throw Error(ErrorKind::DimensionTooLarge, "automorphism dimension");
  std::vector<char> seen(perm_.size(), 0);
  for (int p : perm_) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw Error(ErrorKind::BadRange, "not a permutation of the positions");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
  if (flips_ & ~low_bits(n)) throw Error(ErrorKind::BadRange, "flip mask wider than the dimension");
}

Mask Automorphism::permute(Mask x) const {
  Mask out = 0;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if ((x >> i) & 1) out |= Mask{1} << perm_[i];
  }
  return out;
}

Mask Automorphism::apply_bits(Mask x) const { return permute(x) ^ flips_; }

Vertex Automorphism::apply(const Vertex& v) const {
  if (v.n != dimension()) throw Error(ErrorKind::DimensionMismatch, "vertex dimension");
  return {v.n, apply_bits(v.bits)};
}

Edge Automorphism::apply(const Edge& e) const {
  if (e.n != dimension()) throw Error(ErrorKind::DimensionMismatch, "edge dimension");
  int star = perm_[static_cast<std::size_t>(e.star)];
  Mask star_bit = Mask{1} << star;
  return {e.n, star, (permute(e.bits) ^ flips_) & ~star_bit};
}

StarVector Automorphism::apply(const StarVector& sv) const {
  if (sv.dimension() != dimension()) throw Error(ErrorKind::DimensionMismatch, "star vector dimension");
  Mask stars = permute(sv.stars());
  return StarVector(sv.dimension(), stars, (permute(sv.ones()) ^ flips_) & ~stars);
}

Automorphism Automorphism::then(const Automorphism& next) const {
  if (next.dimension() != dimension()) throw Error(ErrorKind::DimensionMismatch, "automorphism dimension");
  std::vector<int> perm(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    perm[i] = next.perm_[static_cast<std::size_t>(perm_[i])];
  }
  return Automorphism(std::move(perm), next.permute(flips_) ^ next.flips_);
}

Automorphism Automorphism::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  Automorphism back(std::move(inv), 0);
  back.flips_ = back.permute(flips_);
  return back;
}

Automorphism Automorphism::random(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Automorphism(std::move(perm), rng() & low_bits(n));
}

Subgraph apply_automorphism(const Automorphism& sigma, const Subgraph& g) {
  if (sigma.dimension() != g.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "automorphism and subgraph dimensions differ");
  }
  std::vector<Edge> image;
  image.reserve(g.edge_count());
  for (const Edge& e : g.edges()) image.push_back(sigma.apply(e));
  return Subgraph::from_edges(g.dimension(), image, g.name());
}

Subgraph apply_automorphism(const std::vector<int>& perm, Mask flips, const Subgraph& g) {
  return apply_automorphism(Automorphism(perm, flips), g);
}

}  // namespace cubeturan
