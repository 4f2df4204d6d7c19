#include "cubeturan/counting.hpp"

#include <algorithm>
#include <charconv>

#include "cubeturan/cycles.hpp"
#include "cubeturan/parallel.hpp"

namespace cubeturan {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

Rational decimal_rational(const std::string& text) {
  auto dot = text.find('.');
  std::string digits = text;
  int scale = 0;
  if (dot != std::string::npos) {
    digits = text.substr(0, dot) + text.substr(dot + 1);
    scale = static_cast<int>(text.size() - dot - 1);
  }
  // cpp_int reads a leading 0 as octal.
  auto first = digits.find_first_not_of('0');
  BigInt num(first == std::string::npos ? std::string("0") : digits.substr(first));
  BigInt den = 1;
  for (int i = 0; i < scale; ++i) den *= 10;
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Pattern Pattern::sub_cube(int k) {
  if (k < 1) throw Error(ErrorKind::BadPattern, "sub-cube order must be >= 1");
  return {Kind::SubCube, k};
}

Pattern Pattern::cycle(int length) {
  if (length < 4 || length % 2 != 0) {
    throw Error(ErrorKind::BadLength, "cycle length must be even and >= 4, got " + std::to_string(length));
  }
  return {Kind::Cycle, length};
}

Pattern Pattern::parse(std::string_view text) {
  if (text == "e") return edge();
  if (text.size() >= 2 && (text[0] == 'q' || text[0] == 'c')) {
    int value = 0;
    auto rest = text.substr(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) {
      try {
        return text[0] == 'q' ? sub_cube(value) : cycle(value);
      } catch (const Error&) {
      }
    }
  }
  throw Error(ErrorKind::BadPattern, "bad pattern '" + std::string(text) + "' (expected e, q<k> or c<even m>=4>)");
}

std::string Pattern::to_string() const {
  switch (kind) {
    case Kind::Edge: return "e";
    case Kind::SubCube: return "q" + std::to_string(order);
    case Kind::Cycle: return "c" + std::to_string(order);
  }
  return "?";
}

BigInt closed_count_qk(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw Error(ErrorKind::BadRange, "need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return binomial(n, k) * pow2(n - k);
}

int min_cycle_dimension(int l) {
  int k = 0;
  while ((std::int64_t{1} << k) < 2 * static_cast<std::int64_t>(l)) ++k;
  return k;
}

BigInt closed_count_c2l(int n, int l, const ZTable& z) {
  if (l < 2 || n < 1) throw Error(ErrorKind::BadRange, "need l >= 2 and n >= 1");
  if (n - 1 < 62 && static_cast<std::int64_t>(l) > (std::int64_t{1} << (n - 1))) {
    throw Error(ErrorKind::BadRange, "need l <= 2^{n-1}");
  }
  BigInt total = 0;
  for (int k = min_cycle_dimension(l); k <= std::min(l, n); ++k) {
    auto zk = z.get(k, l);
    if (!zk) {
      throw Error(ErrorKind::MissingZEntry,
                  "z-table has no entry z_{" + std::to_string(k) + "," + std::to_string(l) + "}");
    }
    total += binomial(n, k) * pow2(n - k) * *zk;
  }
  return total;
}

BigInt ambient_count(int n, const Pattern& pattern, const ZTable& z) {
  switch (pattern.kind) {
    case Pattern::Kind::Edge: return closed_count_qk(n, 1);
    case Pattern::Kind::SubCube: return pattern.order > n ? BigInt(0) : closed_count_qk(n, pattern.order);
    case Pattern::Kind::Cycle: {
      int l = pattern.order / 2;
      if (n - 1 < 62 && static_cast<std::int64_t>(l) > (std::int64_t{1} << (n - 1))) return 0;
      return closed_count_c2l(n, l, z);
    }
  }
  return 0;
}

namespace {

// Star sets of size l in colexicographic order (Gosper's hack).
template <class Visit>
void for_each_star_set(int n, int l, Visit&& visit) {
  if (l == 0) {
    visit(Mask{0});
    return;
  }
  Mask set = low_bits(l);
  Mask limit = Mask{1} << n;
  while (set < limit) {
    visit(set);
    Mask c = set & -set;
    Mask r = set + c;
    set = (((r ^ set) >> 2) / c) | r;
  }
}

std::uint64_t count_qk_for_stars(const Subgraph& g, Mask stars) {
  int n = g.dimension();
  Mask free_positions = low_bits(n) & ~stars;
  std::uint64_t found = 0;
  Mask fill = 0;
  do {
    if (g.contains_all(StarVector(n, stars, fill))) ++found;
    fill = (fill - free_positions) & free_positions;
  } while (fill != 0);
  return found;
}

}  // namespace

BigInt count_copies_qk(const Subgraph& g, int l, unsigned threads) {
  int n = g.dimension();
  require_materializable(n);
  if (l < 0 || l > n) throw Error(ErrorKind::BadRange, "need 0 <= l <= n");
  if (l == 0) return pow2(n);
  std::vector<Mask> star_sets;
  for_each_star_set(n, l, [&](Mask s) { star_sets.push_back(s); });
  return parallel_sum(star_sets.size(), threads,
                      [&](std::uint64_t i) { return count_qk_for_stars(g, star_sets[i]); });
}

BigInt count_cycles(const Subgraph& g, int length, unsigned threads) {
  if (length < 4 || length % 2 != 0) {
    throw Error(ErrorKind::BadLength, "cycle length must be even and >= 4, got " + std::to_string(length));
  }
  CycleEnumerator en(g);
  if (static_cast<std::uint64_t>(length) > en.vertex_count()) return 0;
  en.require_within_cap(length);
  return parallel_sum(en.vertex_count(), threads, [&](std::uint64_t s) {
    std::uint64_t found = 0;
    en.scan_start(s, length, [&](std::span<const Mask>) {
      ++found;
      return true;
    });
    return found;
  });
}

BigInt count_pattern(const Subgraph& g, const Pattern& pattern, unsigned threads) {
  switch (pattern.kind) {
    case Pattern::Kind::Edge: return g.edge_count();
    case Pattern::Kind::SubCube:
      return pattern.order > g.dimension() ? BigInt(0) : count_copies_qk(g, pattern.order, threads);
    case Pattern::Kind::Cycle: return count_cycles(g, pattern.order, threads);
  }
  return 0;
}

BigInt z_kl(int k, int l, unsigned threads) {
  if (k < 1 || l < 2) throw Error(ErrorKind::BadRange, "need k >= 1 and l >= 2");
  if (k > l || k < min_cycle_dimension(l)) return 0;
  if (k > 10) {
    throw Error(ErrorKind::EnumerationTooLarge, "z_kl enumeration in Q" + std::to_string(k) + " is too large");
  }
  Subgraph cube = Subgraph::full_cube(k);
  CycleEnumerator en(cube);
  int length = 2 * l;
  en.require_within_cap(length);
  Mask all = low_bits(k);
  // Every cycle through all k positions contains a vertex with bit k-1
  // clear and one with it set; its smallest vertex has the top bit clear.
  return parallel_sum(en.vertex_count() / 2, threads, [&](std::uint64_t s) {
    std::uint64_t found = 0;
    en.scan_start(s, length, [&](std::span<const Mask> cycle) {
      Mask used = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) used |= cycle[i] ^ cycle[(i + 1) % cycle.size()];
      if (used == all) ++found;
      return true;
    });
    return found;
  });
}

std::string to_string(CountMethod m) {
  return m == CountMethod::ClosedForm ? "closed-form" : "enumeration";
}

CountReport make_count_report(int n, const Pattern& pattern, BigInt count, BigInt ambient_total,
                              CountMethod method) {
  if (count < 0 || count > ambient_total) {
    throw Error(ErrorKind::BadRange, "count " + count.str() + " outside [0, " + ambient_total.str() + "]");
  }
  Rational density = ambient_total == 0 ? Rational(0) : Rational(count, ambient_total);
  return {n, pattern, std::move(count), std::move(ambient_total), density, method};
}

BigInt binomial_residue_sum(int m, int r, int a) {
  if (m < 0 || r < 1 || a < 0 || a >= r) {
    throw Error(ErrorKind::BadRange, "need m >= 0 and 0 <= a < r");
  }
  BigInt total = 0;
  for (int i = a; i <= m; i += r) total += binomial(m, i);
  return total;
}

}  // namespace cubeturan
