#include "cubeturan/cube.hpp"

#include <algorithm>

namespace cubeturan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadChar: return "BadChar";
    case ErrorKind::NoStars: return "NoStars";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::MissingZEntry: return "MissingZEntry";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::CycleDoesNotFit: return "CycleDoesNotFit";
    case ErrorKind::MixedDimensions: return "MixedDimensions";
    case ErrorKind::BadPattern: return "BadPattern";
    case ErrorKind::BadTheoremId: return "BadTheoremId";
    case ErrorKind::MissingParam: return "MissingParam";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

void require_materializable(int n) {
  if (n > kMaxMaterializedDimension) {
    throw Error(ErrorKind::DimensionTooLarge,
                "dimension " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxMaterializedDimension));
  }
}

namespace {

void require_dimension(int n) {
  if (n < 0 || n > kMaxStarDimension) {
    throw Error(ErrorKind::DimensionTooLarge, "unsupported dimension " + std::to_string(n));
  }
}

std::string bits_to_string(int n, Mask bits) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// Inserts a zero bit at `position`, shifting higher bits up.
Mask spread(Mask compact, int position) {
  Mask low = compact & low_bits(position);
  Mask high = compact & ~low_bits(position);
  return low | (high << 1);
}

Mask squeeze(Mask bits, int position) {
  Mask low = bits & low_bits(position);
  Mask high = (bits >> 1) & ~low_bits(position);
  return low | high;
}

}  // namespace

std::string Vertex::to_string() const { return bits_to_string(n, bits); }

Edge Edge::between(int n, Mask u, Mask v) {
  Mask diff = u ^ v;
  if (popcount(diff) != 1) {
    throw Error(ErrorKind::BadRange, "vertices are not adjacent");
  }
  int star = __builtin_ctzll(diff);
  return {n, star, u & ~diff};
}

std::string Edge::to_string() const {
  std::string s = bits_to_string(n, bits);
  s[static_cast<std::size_t>(star)] = '*';
  return s;
}

StarVector::StarVector(int n, Mask stars, Mask ones) : n_(n), stars_(stars), ones_(ones & ~stars) {
  require_dimension(n);
  if ((stars | ones) & ~low_bits(n)) {
    throw Error(ErrorKind::BadRange, "cells outside the dimension");
  }
}

std::vector<int> StarVector::star_positions() const {
  std::vector<int> out;
  for (Mask m = stars_; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
  return out;
}

char StarVector::cell(int position) const {
  if ((stars_ >> position) & 1) return '*';
  return ((ones_ >> position) & 1) ? '1' : '0';
}

std::string StarVector::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = cell(i);
  return s;
}

Edge StarVector::as_edge() const {
  if (star_count() != 1) {
    throw Error(ErrorKind::BadRange, "star vector " + to_string() + " is not an edge");
  }
  return {n_, __builtin_ctzll(stars_), ones_};
}

StarVector parse_star_vector(std::string_view text, int n) {
  require_dimension(n);
  static constexpr std::string_view kUnicodeStar = "\xE2\x98\x85";
  Mask stars = 0;
  Mask ones = 0;
  int length = 0;
  bool bad_char = false;
  for (std::size_t i = 0; i < text.size(); ++length) {
    if (text.substr(i, kUnicodeStar.size()) == kUnicodeStar) {
      if (length < 64) stars |= Mask{1} << length;
      i += kUnicodeStar.size();
      continue;
    }
    char c = text[i++];
    if (length >= 64) continue;
    if (c == '*') {
      stars |= Mask{1} << length;
    } else if (c == '1') {
      ones |= Mask{1} << length;
    } else if (c != '0') {
      bad_char = true;
    }
  }
  if (length != n) {
    throw Error(ErrorKind::BadLength, "expected " + std::to_string(n) + " cells, got " +
                                          std::to_string(length) + " in '" + std::string(text) + "'");
  }
  if (bad_char) {
    throw Error(ErrorKind::BadChar, "cells must be 0, 1 or * in '" + std::string(text) + "'");
  }
  return StarVector(n, stars, ones);
}

Edge parse_edge(std::string_view text, int n) {
  StarVector sv = parse_star_vector(text, n);
  if (sv.star_count() != 1) {
    throw Error(ErrorKind::BadChar, "an edge needs exactly one star: '" + std::string(text) + "'");
  }
  return sv.as_edge();
}

std::vector<Vertex> expand_vertices(const StarVector& sv) {
  require_materializable(sv.star_count());
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << sv.star_count());
  // Enumerate submasks of the star set in increasing order.
  Mask stars = sv.stars();
  Mask sub = 0;
  do {
    out.push_back({sv.dimension(), sv.ones() | sub});
    sub = (sub - stars) & stars;
  } while (sub != 0);
  return out;
}

std::vector<Edge> expand_edges(const StarVector& sv) {
  if (sv.star_count() == 0) {
    throw Error(ErrorKind::NoStars, "star vector " + sv.to_string() + " has no stars");
  }
  require_materializable(sv.star_count());
  std::vector<Edge> out;
  int k = sv.star_count();
  out.reserve(static_cast<std::size_t>(k) << (k - 1));
  for (int star : sv.star_positions()) {
    Mask rest = sv.stars() & ~(Mask{1} << star);
    Mask sub = 0;
    do {
      out.push_back({sv.dimension(), star, sv.ones() | sub});
      sub = (sub - rest) & rest;
    } while (sub != 0);
  }
  return out;
}

EdgeLayerIndex edge_layer(const Edge& e) { return {popcount(e.bits)}; }

std::size_t cube_edge_count(int n) {
  if (n <= 0) return 0;
  require_materializable(n);
  return static_cast<std::size_t>(n) << (n - 1);
}

std::size_t edge_index(const Edge& e) {
  return (static_cast<std::size_t>(e.star) << (e.n - 1)) | squeeze(e.bits, e.star);
}

Edge edge_at(int n, std::size_t index) {
  int star = static_cast<int>(index >> (n - 1));
  Mask compact = index & low_bits(n - 1);
  return {n, star, spread(compact, star)};
}

Subgraph::Subgraph(int n, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 1) throw Error(ErrorKind::BadRange, "dimension must be positive");
  require_materializable(n);
  words_.assign((cube_edge_count(n) + 63) / 64, 0);
}

Subgraph Subgraph::full_cube(int n) {
  Subgraph g(n, "Q" + std::to_string(n));
  std::size_t total = cube_edge_count(n);
  for (std::size_t i = 0; i < total; ++i) g.set(i, true);
  return g;
}

Subgraph Subgraph::from_edges(int n, std::span<const Edge> edges, std::string name) {
  Subgraph g(n, std::move(name));
  for (const Edge& e : edges) {
    if (e.n != n) {
      throw Error(ErrorKind::DimensionMismatch, "edge " + e.to_string() + " is not in Q" + std::to_string(n));
    }
    g.set(edge_index(e), true);
  }
  return g;
}

Subgraph Subgraph::from_predicate(int n, const std::function<bool(const Edge&)>& keep,
                                  std::string name) {
  Subgraph g(n, std::move(name));
  std::size_t total = cube_edge_count(n);
  for (std::size_t i = 0; i < total; ++i) {
    if (keep(edge_at(n, i))) g.set(i, true);
  }
  return g;
}

void Subgraph::set(std::size_t index, bool value) {
  std::uint64_t bit = std::uint64_t{1} << (index & 63);
  std::uint64_t& word = words_[index >> 6];
  bool had = word & bit;
  if (value && !had) {
    word |= bit;
    ++count_;
  } else if (!value && had) {
    word &= ~bit;
    --count_;
  }
}

bool Subgraph::contains(const Edge& e) const {
  if (e.n != n_) {
    throw Error(ErrorKind::DimensionMismatch, "edge " + e.to_string() + " is not in Q" + std::to_string(n_));
  }
  return contains_index(edge_index(e));
}

bool Subgraph::contains_all(const StarVector& sv) const {
  if (sv.dimension() != n_) throw Error(ErrorKind::DimensionMismatch, "star vector dimension");
  for (int star : sv.star_positions()) {
    Mask rest = sv.stars() & ~(Mask{1} << star);
    Mask sub = 0;
    do {
      if (!contains_index(edge_index({n_, star, sv.ones() | sub}))) return false;
      sub = (sub - rest) & rest;
    } while (sub != 0);
  }
  return true;
}

bool Subgraph::adjacent(Mask u, Mask v) const {
  Mask diff = u ^ v;
  if (popcount(diff) != 1) return false;
  int star = __builtin_ctzll(diff);
  return contains_index(edge_index({n_, star, u & ~diff}));
}

std::vector<Edge> Subgraph::edges() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
      out.push_back(edge_at(n_, w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
    }
  }
  return out;
}

std::vector<std::string> Subgraph::sorted_keys() const {
  std::vector<std::string> keys;
  keys.reserve(count_);
  for (const Edge& e : edges()) keys.push_back(e.to_string());
  std::sort(keys.begin(), keys.end());
  return keys;
}

Subgraph Subgraph::with_edge(const Edge& e) const {
  Subgraph g = *this;
  g.set(edge_index(e), true);
  return g;
}

Subgraph Subgraph::without_edge(const Edge& e) const {
  Subgraph g = *this;
  if (e.n != n_) throw Error(ErrorKind::DimensionMismatch, "edge dimension");
  g.set(edge_index(e), false);
  return g;
}

Subgraph Subgraph::with_name(std::string name) const {
  Subgraph g = *this;
  g.name_ = std::move(name);
  return g;
}

Subgraph Subgraph::united(const Subgraph& other) const {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "subgraph dimensions differ");
  Subgraph g = *this;
  g.count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    g.words_[w] |= other.words_[w];
    g.count_ += static_cast<std::size_t>(__builtin_popcountll(g.words_[w]));
  }
  return g;
}

Subgraph Subgraph::minus(const Subgraph& other) const {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "subgraph dimensions differ");
  Subgraph g = *this;
  g.count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    g.words_[w] &= ~other.words_[w];
    g.count_ += static_cast<std::size_t>(__builtin_popcountll(g.words_[w]));
  }
  return g;
}

bool Subgraph::is_subset_of(const Subgraph& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

}  // namespace cubeturan
