#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "cubeturan/automorphism.hpp"
#include "cubeturan/cube.hpp"
#include "cubeturan/subgraph_io.hpp"

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

std::set<std::string> edge_strings(const std::vector<Edge>& edges) {
  std::set<std::string> out;
  for (const Edge& e : edges) out.insert(e.to_string());
  return out;
}

Subgraph random_subgraph(int n, std::mt19937_64& rng, double keep = 0.6) {
  std::bernoulli_distribution coin(keep);
  return Subgraph::from_predicate(n, [&](const Edge&) { return coin(rng); });
}

}  // namespace

TEST_CASE("star vector parsing") {
  StarVector sv = parse_star_vector("01*10", 5);
  CHECK(sv.star_count() == 1);
  CHECK(sv.star_positions() == std::vector<int>{2});
  CHECK(sv.to_string() == "01*10");
  CHECK(parse_star_vector("***", 3).star_count() == 3);
  CHECK(error_of([] { parse_star_vector("0☖10", 5); }) == ErrorKind::BadLength);
  CHECK(error_of([] { parse_star_vector("0★10", 5); }) == ErrorKind::BadLength);
  CHECK(parse_star_vector("0★10", 4).to_string() == "0*10");
  CHECK(error_of([] { parse_star_vector("01x", 3); }) == ErrorKind::BadChar);
  CHECK(error_of([] { parse_star_vector("01", 3); }) == ErrorKind::BadLength);

  // Position 0 is the least significant bit.
  StarVector v = parse_star_vector("011", 3);
  CHECK(v.ones() == 0b110);
  CHECK(v.is_vertex());
}

TEST_CASE("expand edges and vertices") {
  CHECK(edge_strings(expand_edges(parse_star_vector("0**", 3))) ==
        std::set<std::string>{"0*0", "0*1", "00*", "01*"});
  CHECK(edge_strings(expand_edges(parse_star_vector("*", 1))) == std::set<std::string>{"*"});
  CHECK(expand_edges(parse_star_vector("***", 3)).size() == 12);
  CHECK(error_of([] { expand_edges(parse_star_vector("010", 3)); }) == ErrorKind::NoStars);

  std::set<std::string> verts;
  for (const Vertex& v : expand_vertices(parse_star_vector("1*0*", 4))) verts.insert(v.to_string());
  CHECK(verts == std::set<std::string>{"1000", "1001", "1100", "1101"});
  CHECK(expand_vertices(parse_star_vector("00", 2)).size() == 1);
  CHECK(expand_vertices(parse_star_vector("**", 2)).size() == 4);

  // Sizes and endpoint containment for every star vector of Q_4.
  for (Mask stars = 0; stars < 16; ++stars) {
    for (Mask ones = 0; ones < 16; ++ones) {
      if (ones & stars) continue;
      StarVector sv(4, stars, ones);
      auto vs = expand_vertices(sv);
      CHECK(vs.size() == (std::size_t{1} << sv.star_count()));
      if (sv.star_count() == 0) continue;
      auto es = expand_edges(sv);
      CHECK(es.size() == static_cast<std::size_t>(sv.star_count()) << (sv.star_count() - 1));
      CHECK(edge_strings(es).size() == es.size());
      std::set<Mask> vset;
      for (const Vertex& v : vs) vset.insert(v.bits);
      for (const Edge& e : es) {
        CHECK(vset.count(e.low().bits) == 1);
        CHECK(vset.count(e.high().bits) == 1);
      }
    }
  }
}

TEST_CASE("edge layers") {
  CHECK(edge_layer(parse_edge("01*10", 5)).value == 2);
  CHECK(edge_layer(parse_edge("*000", 4)).value == 0);
  CHECK(edge_layer(parse_edge("111*", 4)).value == 3);

  // A flip at a non-star position moves the layer by exactly one.
  for (std::size_t i = 0; i < cube_edge_count(5); ++i) {
    Edge e = edge_at(5, i);
    for (int p = 0; p < 5; ++p) {
      if (p == e.star) continue;
      Edge f{5, e.star, e.bits ^ (Mask{1} << p)};
      CHECK(std::abs(edge_layer(f).value - edge_layer(e).value) == 1);
    }
  }
}

TEST_CASE("dense edge index round trip") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(cube_edge_count(n) == static_cast<std::size_t>(n) << (n - 1));
    for (std::size_t i = 0; i < cube_edge_count(n); ++i) CHECK(edge_index(edge_at(n, i)) == i);
  }
  CHECK(error_of([] { Subgraph::full_cube(31); }) == ErrorKind::DimensionTooLarge);
}

TEST_CASE("subgraph values") {
  Subgraph q3 = Subgraph::full_cube(3);
  CHECK(q3.edge_count() == 12);
  Edge e = parse_edge("0*1", 3);
  Subgraph minus = q3.without_edge(e);
  CHECK(minus.edge_count() == 11);
  CHECK(q3.edge_count() == 12);
  CHECK(!minus.contains(e));
  CHECK(minus.with_edge(e) == q3);
  CHECK(minus.is_subset_of(q3));
  CHECK(!q3.is_subset_of(minus));
  CHECK(q3.minus(minus).edge_count() == 1);
  CHECK(minus.with_name("x") == minus);
  CHECK(q3.contains_all(parse_star_vector("***", 3)));
  CHECK(!minus.contains_all(parse_star_vector("***", 3)));
  CHECK(q3.adjacent(0b000, 0b100));
  CHECK(!q3.adjacent(0b000, 0b110));

  std::vector<Edge> dup{parse_edge("*0", 2), parse_edge("*0", 2)};
  CHECK(Subgraph::from_edges(2, dup).edge_count() == 1);
  std::vector<Edge> wrong{parse_edge("*0", 2)};
  CHECK(error_of([&] { Subgraph::from_edges(3, wrong); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("subgraph file format") {
  Subgraph q3 = Subgraph::full_cube(3);
  std::string text = format_subgraph(q3);
  CHECK(text.rfind("cube v1 n=3\n", 0) == 0);
  std::istringstream in(text);
  CHECK(read_subgraph(in) == q3);

  // Lexicographic order with '*' < '0' < '1'.
  auto keys = q3.sorted_keys();
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(keys.front() == "*00");
  CHECK(keys.back() == "11*");

  auto path = std::filesystem::temp_directory_path() / "cubeturan_io_test.cube";
  save_subgraph(q3, path);
  CHECK(load_subgraph(path) == q3);
  std::filesystem::remove(path);

  std::istringstream dup("cube v1 n=2\n*0\n# comment\n\n*0\n");
  CHECK(error_of([&] { read_subgraph(dup); }) == ErrorKind::DuplicateEdge);
  std::istringstream bad("cube v1 n=5\n01*1\n");
  CHECK(error_of([&] { read_subgraph(bad); }) == ErrorKind::ParseError);
  std::istringstream header("cube v2 n=5\n");
  CHECK(error_of([&] { read_subgraph(header); }) == ErrorKind::ParseError);
  try {
    std::istringstream again("cube v1 n=5\n01*1\n");
    read_subgraph(again, "g.cube");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("g.cube:2") != std::string::npos);
  }
}

TEST_CASE("automorphisms") {
  Subgraph g = Subgraph::from_edges(2, std::vector<Edge>{parse_edge("*0", 2)});
  Subgraph img = apply_automorphism(std::vector<int>{1, 0}, 0, g);
  CHECK(img.sorted_keys() == std::vector<std::string>{"0*"});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 4;
    Subgraph h = random_subgraph(n, rng);
    CHECK(apply_automorphism(Automorphism::identity(n), h) == h);
    Automorphism a = Automorphism::random(n, rng);
    Automorphism b = Automorphism::random(n, rng);
    Automorphism c = Automorphism::random(n, rng);
    Subgraph ah = apply_automorphism(a, h);
    CHECK(ah.edge_count() == h.edge_count());
    CHECK(apply_automorphism(a.inverse(), ah) == h);
    CHECK(apply_automorphism(a.then(b), h) == apply_automorphism(b, ah));
    CHECK(a.then(b).then(c) == a.then(b.then(c)));

    // Permutations alone keep the layer multiset.
    Automorphism p(a.permutation(), 0);
    std::multiset<int> before, after;
    for (const Edge& e : h.edges()) before.insert(edge_layer(e).value);
    for (const Edge& e : apply_automorphism(p, h).edges()) after.insert(edge_layer(e).value);
    CHECK(before == after);
  }
  CHECK(error_of([] { Automorphism(std::vector<int>{0, 0}, 0); }) == ErrorKind::BadRange);
  CHECK(error_of([] {
          apply_automorphism(Automorphism::identity(2), Subgraph::full_cube(3));
        }) == ErrorKind::DimensionMismatch);
}
