#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubeturan/automorphism.hpp"
#include "cubeturan/constructions.hpp"
#include "cubeturan/counting.hpp"
#include "cubeturan/verification.hpp"

using namespace cubeturan;

namespace {

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::BadRange;
}

Subgraph from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cube_edge_count(n); ++i) {
    if ((mask >> i) & 1) edges.push_back(edge_at(n, i));
  }
  return Subgraph::from_edges(n, edges);
}

// Exhaustive search over all k^l colorings.
bool brute_partite(const std::vector<StarVector>& h, int k) {
  int l = h.front().dimension();
  std::vector<int> sigma(l, 1);
  while (true) {
    if (is_k_partite_representation(h, k, sigma)) return true;
    int p = 0;
    while (p < l && sigma[p] == k) sigma[p++] = 1;
    if (p == l) return false;
    ++sigma[p];
  }
}

}  // namespace

TEST_CASE("freeness examples") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(!is_qk_free(Subgraph::full_cube(n), k).free);
  }
  CHECK(is_qk_free(aks_graph(6, 3, 0, 0), 3).free);
  CHECK(is_qk_free(layer_complement(5, 2, 0), 2).free);
  CHECK(is_c2k_free(conder_graph(7), 3).free);
  CHECK(is_c2k_free(parity_q2_packing(7).graph, 3).free);

  FreenessVerdict v = is_c2k_free(Subgraph::full_cube(3), 2);
  CHECK(!v.free);
  REQUIRE(std::holds_alternative<CycleWitness>(v.witness));
  CHECK(std::get<CycleWitness>(v.witness).length() == 4);
  CHECK(witness_lies_in(v, Subgraph::full_cube(3)));

  FreenessVerdict q = is_qk_free(Subgraph::full_cube(3), 2);
  REQUIRE(std::holds_alternative<StarVector>(q.witness));
  CHECK(q.witness_string() == "**0");
  CHECK(is_free_of(Subgraph::full_cube(3), Pattern::edge()).free == false);
  CHECK(is_free_of(Subgraph(3), Pattern::edge()).free);
  CHECK(is_free_of(Subgraph::full_cube(3), Pattern::sub_cube(4)).free);
}

TEST_CASE("completeness on every subgraph of Q_3") {
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    Subgraph g = from_mask(3, mask);
    for (int k = 1; k <= 3; ++k) {
      FreenessVerdict v = is_qk_free(g, k);
      CHECK(v.free == (count_copies_qk(g, k) == 0));
      if (!v.free) CHECK(witness_lies_in(v, g));
    }
    for (int k = 2; k <= 4; ++k) {
      FreenessVerdict v = is_c2k_free(g, k);
      CHECK(v.free == (count_cycles(g, 2 * k) == 0));
      if (!v.free) CHECK(witness_lies_in(v, g));
    }
  }
}

TEST_CASE("verdicts are automorphism invariant") {
  std::mt19937_64 rng(99);
  std::bernoulli_distribution coin(0.7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 3;
    Subgraph g = Subgraph::from_predicate(n, [&](const Edge&) { return coin(rng); });
    Subgraph h = apply_automorphism(Automorphism::random(n, rng), g);
    for (int k = 2; k <= 3; ++k) {
      CHECK(is_qk_free(g, k).free == is_qk_free(h, k).free);
      CHECK(is_c2k_free(g, k).free == is_c2k_free(h, k).free);
    }
    CHECK(is_c2k_free(g, 4, 4).free == is_c2k_free(h, 4, 1).free);
  }
}

TEST_CASE("parallel witnesses match sequential ones") {
  Subgraph g = conder_graph(6).united(layer_union_mod(6, 3, 1, false));
  for (int k = 2; k <= 4; ++k) {
    FreenessVerdict a = is_c2k_free(g, k, 1);
    FreenessVerdict b = is_c2k_free(g, k, 8);
    CHECK(a.free == b.free);
    CHECK(a.witness_string() == b.witness_string());
  }
}

TEST_CASE("k-partite representations") {
  auto sv = [](const char* s, int n) { return parse_star_vector(s, n); };
  {
    std::vector<StarVector> h{sv("1*", 2)};
    auto rep = has_k_partite_representation(h, 2);
    REQUIRE(rep.sigma.has_value());
    CHECK((*rep.sigma)[0] != (*rep.sigma)[1]);
  }
  {
    std::vector<StarVector> h{sv("*0", 2), sv("*1", 2), sv("0*", 2), sv("1*", 2)};
    for (int k = 1; k <= 3; ++k) CHECK(!has_k_partite_representation(h, k).sigma.has_value());
  }
  {
    std::vector<StarVector> h{sv("1*0", 3), sv("*10", 3)};
    auto rep = has_k_partite_representation(h, 2);
    REQUIRE(rep.sigma.has_value());
    CHECK(is_k_partite_representation(h, 2, *rep.sigma));
    CHECK((*rep.sigma)[2] == 1);
  }
  {
    std::vector<StarVector> h{sv("1*", 2), sv("1*0", 3)};
    CHECK(error_of([&] { has_k_partite_representation(h, 2); }) == ErrorKind::MixedDimensions);
  }

  std::mt19937_64 rng(2024);
  int agreements = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int l = 2 + trial % 7;
    int k = 1 + static_cast<int>(rng() % std::min(l, 4));
    long long maps = 1;
    for (int i = 0; i < l; ++i) maps *= k;
    if (maps > 70000) k = std::min(k, 3);
    int edges = 1 + static_cast<int>(rng() % 5);
    std::vector<StarVector> h;
    for (int e = 0; e < edges; ++e) {
      // Mostly edges with exactly k non-zero positions.
      int nonzero = (rng() % 8 == 0) ? 1 + static_cast<int>(rng() % l) : k;
      std::vector<int> pos(l);
      for (int i = 0; i < l; ++i) pos[i] = i;
      std::shuffle(pos.begin(), pos.end(), rng);
      Mask ones = 0;
      for (int i = 1; i < nonzero; ++i) ones |= Mask{1} << pos[i];
      h.emplace_back(l, Mask{1} << pos[0], ones);
    }
    auto rep = has_k_partite_representation(h, k);
    bool brute = brute_partite(h, k);
    CHECK(rep.sigma.has_value() == brute);
    if (rep.sigma) CHECK(is_k_partite_representation(h, k, *rep.sigma));
    agreements += brute;
  }
  CHECK(agreements > 0);
}
