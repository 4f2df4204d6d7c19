#include "cubeturan/verification.hpp"

#include <algorithm>
#include <numeric>

#include "cubeturan/counting.hpp"

namespace cubeturan {

std::string FreenessVerdict::witness_string() const {
  if (const auto* sv = std::get_if<StarVector>(&witness)) return sv->to_string();
  if (const auto* c = std::get_if<CycleWitness>(&witness)) return c->to_string();
  return {};
}

FreenessVerdict is_qk_free(const Subgraph& g, int k) {
  int n = g.dimension();
  require_materializable(n);
  if (k < 1) throw Error(ErrorKind::BadRange, "need k >= 1");
  FreenessVerdict verdict;
  if (k > n) return verdict;
  Mask stars = low_bits(k);
  Mask limit = Mask{1} << n;
  while (stars < limit) {
    Mask free_positions = low_bits(n) & ~stars;
    Mask fill = 0;
    do {
      ++verdict.checked_count;
      StarVector q(n, stars, fill);
      if (g.contains_all(q)) {
        verdict.free = false;
        verdict.witness = q;
        return verdict;
      }
      fill = (fill - free_positions) & free_positions;
    } while (fill != 0);
    Mask c = stars & -stars;
    Mask r = stars + c;
    stars = (((r ^ stars) >> 2) / c) | r;
  }
  return verdict;
}

FreenessVerdict is_c2k_free(const Subgraph& g, int k, unsigned threads) {
  if (k < 2) throw Error(ErrorKind::BadRange, "need k >= 2");
  FreenessVerdict verdict;
  verdict.checked_count = std::uint64_t{1} << g.dimension();
  if (static_cast<std::uint64_t>(2 * k) > verdict.checked_count) return verdict;
  CycleWitness c;
  if (find_first_cycle(g, 2 * k, c, threads)) {
    verdict.free = false;
    verdict.checked_count = c.vertices.front() + 1;
    verdict.witness = std::move(c);
  }
  return verdict;
}

FreenessVerdict is_free_of(const Subgraph& g, const Pattern& forbidden, unsigned threads) {
  switch (forbidden.kind) {
    case Pattern::Kind::Edge: {
      FreenessVerdict v;
      v.checked_count = 1;
      auto edges = g.edges();
      if (!edges.empty()) {
        v.free = false;
        v.witness = StarVector::from_edge(edges.front());
      }
      return v;
    }
    case Pattern::Kind::SubCube: return is_qk_free(g, forbidden.order);
    case Pattern::Kind::Cycle: return is_c2k_free(g, forbidden.order / 2, threads);
  }
  return {};
}

bool witness_lies_in(const FreenessVerdict& verdict, const Subgraph& g) {
  if (const auto* sv = std::get_if<StarVector>(&verdict.witness)) {
    return sv->star_count() >= 1 && g.contains_all(*sv);
  }
  if (const auto* c = std::get_if<CycleWitness>(&verdict.witness)) return c->lies_in(g);
  return false;
}

namespace {

Mask nonzero_positions(const StarVector& e) { return e.stars() | e.ones(); }

class PartiteSearch {
 public:
  PartiteSearch(std::vector<Mask> edges, std::vector<int> positions, int k, int ambient)
      : edges_(std::move(edges)), positions_(std::move(positions)), k_(k),
        sigma_(static_cast<std::size_t>(ambient), 1) {}

  bool run() { return assign(0); }
  const std::vector<int>& sigma() const { return sigma_; }

 private:
  // Colors of the already-assigned positions of each edge must stay
  // distinct.
  bool consistent(int position) const {
    int color = sigma_[static_cast<std::size_t>(position)];
    for (Mask e : edges_) {
      if (!((e >> position) & 1)) continue;
      for (std::size_t i = 0; i < assigned_; ++i) {
        int other = positions_[i];
        if (other != position && ((e >> other) & 1) && sigma_[static_cast<std::size_t>(other)] == color) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t index) {
    if (index == positions_.size()) return true;
    int position = positions_[index];
    for (int color = 1; color <= k_; ++color) {
      sigma_[static_cast<std::size_t>(position)] = color;
      assigned_ = index;
      if (consistent(position)) {
        assigned_ = index + 1;
        if (assign(index + 1)) return true;
      }
    }
    sigma_[static_cast<std::size_t>(position)] = 1;
    assigned_ = index;
    return false;
  }

  std::vector<Mask> edges_;
  std::vector<int> positions_;
  int k_;
  std::vector<int> sigma_;
  std::size_t assigned_ = 0;
};

int common_dimension(std::span<const StarVector> h) {
  if (h.empty()) throw Error(ErrorKind::BadRange, "edge list is empty");
  int ambient = h.front().dimension();
  for (const StarVector& e : h) {
    if (e.dimension() != ambient) throw Error(ErrorKind::MixedDimensions, "edges have different dimensions");
    if (e.star_count() != 1) throw Error(ErrorKind::BadRange, "expected edges (one star each), got " + e.to_string());
  }
  return ambient;
}

}  // namespace

bool is_k_partite_representation(std::span<const StarVector> h, int k, const std::vector<int>& sigma) {
  int ambient = common_dimension(h);
  if (static_cast<int>(sigma.size()) != ambient) return false;
  for (const StarVector& e : h) {
    Mask nz = nonzero_positions(e);
    if (popcount(nz) != k) return false;
    Mask colors = 0;
    for (int i = 0; i < ambient; ++i) {
      if (!((nz >> i) & 1)) continue;
      int c = sigma[static_cast<std::size_t>(i)];
      if (c < 1 || c > k || ((colors >> c) & 1)) return false;
      colors |= Mask{1} << c;
    }
  }
  return true;
}

PartiteRepresentation has_k_partite_representation(std::span<const StarVector> h, int k) {
  int ambient = common_dimension(h);
  PartiteRepresentation out{ambient, k, std::nullopt};
  if (k < 1) return out;
  std::vector<Mask> edges;
  Mask used = 0;
  for (const StarVector& e : h) {
    Mask nz = nonzero_positions(e);
    if (popcount(nz) != k) return out;
    edges.push_back(nz);
    used |= nz;
  }
  std::vector<int> positions;
  for (int i = 0; i < ambient; ++i) {
    if ((used >> i) & 1) positions.push_back(i);
  }
  PartiteSearch search(std::move(edges), std::move(positions), k, ambient);
  if (search.run()) out.sigma = search.sigma();
  return out;
}

namespace {

// Upper bound on cycle length: the largest connected component.
std::uint64_t largest_component(const Subgraph& g) {
  std::uint64_t count = std::uint64_t{1} << g.dimension();
  std::vector<std::uint32_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    auto a = find(static_cast<std::uint32_t>(e.low().bits));
    auto b = find(static_cast<std::uint32_t>(e.high().bits));
    if (a != b) parent[a] = b;
  }
  std::vector<std::uint64_t> size(count, 0);
  std::uint64_t best = 0;
  for (std::uint64_t v = 0; v < count; ++v) best = std::max(best, ++size[find(static_cast<std::uint32_t>(v))]);
  return best;
}

}  // namespace

std::vector<ClaimCheck> certify(const Construction& c, unsigned threads) {
  std::vector<ClaimCheck> checks;
  for (const Pattern& p : c.free_of) {
    FreenessVerdict v = is_free_of(c.graph, p, threads);
    checks.push_back({p.to_string() + "-free", v.free, std::move(v)});
  }
  if (c.cycle_lengths_within) {
    const auto& allowed = *c.cycle_lengths_within;
    std::uint64_t longest = largest_component(c.graph);
    for (std::uint64_t len = 4; len <= longest; len += 2) {
      if (std::find(allowed.begin(), allowed.end(), static_cast<int>(len)) != allowed.end()) continue;
      FreenessVerdict v = is_c2k_free(c.graph, static_cast<int>(len / 2), threads);
      checks.push_back({"c" + std::to_string(len) + "-free", v.free, std::move(v)});
    }
  }
  return checks;
}

}  // namespace cubeturan
