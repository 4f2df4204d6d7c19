#include "cubeturan/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace cubeturan {

CycleWitness CycleWitness::canonical(int n, std::vector<Mask> walk) {
  if (walk.empty()) return {n, {}};
  auto smallest = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), smallest, walk.end());
  if (walk.size() > 2 && walk.back() < walk[1]) std::reverse(walk.begin() + 1, walk.end());
  return {n, std::move(walk)};
}

std::vector<int> CycleWitness::star_list() const {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Mask diff = vertices[i] ^ vertices[(i + 1) % vertices.size()];
    out.push_back(diff ? __builtin_ctzll(diff) : -1);
  }
  return out;
}

Mask CycleWitness::star_mask() const {
  Mask m = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) m |= vertices[i] ^ vertices[(i + 1) % vertices.size()];
  return m;
}

std::vector<Edge> CycleWitness::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.push_back(Edge::between(n, vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  return out;
}

bool CycleWitness::is_valid() const {
  std::size_t len = vertices.size();
  if (len < 4 || len % 2 != 0) return false;
  std::vector<Mask> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    Mask v = vertices[i];
    if (n < 64 && (v >> n) != 0) return false;
    if (popcount(v ^ vertices[(i + 1) % len]) != 1) return false;
  }
  return true;
}

bool CycleWitness::is_canonical() const {
  return *this == canonical(n, vertices);
}

bool CycleWitness::lies_in(const Subgraph& g) const {
  if (g.dimension() != n || !is_valid()) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.adjacent(vertices[i], vertices[(i + 1) % vertices.size()])) return false;
  }
  return true;
}

std::string CycleWitness::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ' ';
    s += Vertex{n, vertices[i]}.to_string();
  }
  return s;
}

CycleEnumerator::CycleEnumerator(const Subgraph& g) : n_(g.dimension()) {
  require_materializable(n_);
  std::uint64_t count = vertex_count();
  offsets_.assign(count + 1, 0);
  for (const Edge& e : g.edges()) {
    ++offsets_[e.low().bits + 1];
    ++offsets_[e.high().bits + 1];
  }
  for (std::uint64_t v = 0; v < count; ++v) {
    max_degree_ = std::max<int>(max_degree_, static_cast<int>(offsets_[v + 1]));
    offsets_[v + 1] += offsets_[v];
  }
  neighbors_.assign(offsets_[count], 0);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : g.edges()) {
    auto lo = static_cast<std::uint32_t>(e.low().bits);
    auto hi = static_cast<std::uint32_t>(e.high().bits);
    neighbors_[fill[lo]++] = hi;
    neighbors_[fill[hi]++] = lo;
  }
  for (std::uint64_t v = 0; v < count; ++v) {
    std::sort(neighbors_.begin() + offsets_[v], neighbors_.begin() + offsets_[v + 1]);
  }
}

bool CycleEnumerator::closes(Mask last, Mask start) const {
  auto first = neighbors_.begin() + offsets_[last];
  auto end = neighbors_.begin() + offsets_[last + 1];
  return std::binary_search(first, end, static_cast<std::uint32_t>(start));
}

long double CycleEnumerator::estimated_nodes(int length) const {
  long double branching = std::max(1, max_degree_ - 1);
  return static_cast<long double>(vertex_count()) * std::pow(branching, static_cast<long double>(std::max(0, length - 2)));
}

void CycleEnumerator::require_within_cap(int length) const {
  constexpr long double kNodeCap = 1e13L;
  if (estimated_nodes(length) > kNodeCap) {
    throw Error(ErrorKind::EnumerationTooLarge,
                "enumerating " + std::to_string(length) + "-cycles in Q" + std::to_string(n_) + " is too large");
  }
}

bool find_first_cycle(const Subgraph& g, int length, CycleWitness& out, unsigned threads) {
  CycleEnumerator en(g);
  en.require_within_cap(length);
  std::uint64_t count = en.vertex_count();
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (Mask s = 0; s < count; ++s) {
      bool found = false;
      en.scan_start(s, length, [&](std::span<const Mask> cycle) {
        out = {g.dimension(), {cycle.begin(), cycle.end()}};
        found = true;
        return false;
      });
      if (found) return true;
    }
    return false;
  }
  // Workers claim start vertices in increasing order; the smallest start with
  // a cycle wins, so the result matches the serial scan.
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{count};
  std::mutex mu;
  CycleWitness best_cycle;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint64_t s = next.fetch_add(1);
        if (s >= count || s >= best.load()) return;
        en.scan_start(s, length, [&](std::span<const Mask> cycle) {
          std::lock_guard lock(mu);
          if (s < best.load()) {
            best.store(s);
            best_cycle = {g.dimension(), {cycle.begin(), cycle.end()}};
          }
          return false;
        });
      }
    });
  }
  for (auto& t : pool) t.join();
  if (best.load() == count) return false;
  out = std::move(best_cycle);
  return true;
}

}  // namespace cubeturan
