#pragma once

// Exact counts of sub-cubes and even cycles in Q_n and its subgraphs.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cubeturan/cube.hpp"
#include "cubeturan/numeric.hpp"
#include "cubeturan/pattern.hpp"
#include "cubeturan/ztable.hpp"

namespace cubeturan {

// C(n,k) 2^{n-k}. No dimension cap.
BigInt closed_count_qk(int n, int k);

// ceil(log2(2l)), the smallest cube dimension holding a 2l-cycle.
int min_cycle_dimension(int l);

// Sum over ceil(log2 2l) <= k <= min(l, n) of C(n,k) 2^{n-k} z_{k,l}.
BigInt closed_count_c2l(int n, int l, const ZTable& z);

// Number of copies of `pattern` in the whole of Q_n, by closed form.
BigInt ambient_count(int n, const Pattern& pattern, const ZTable& z);

// Copies of Q_l all of whose edges lie in g.
BigInt count_copies_qk(const Subgraph& g, int l, unsigned threads = 1);

// Distinct cycles of the given (even, >= 4) length contained in g.
BigInt count_cycles(const Subgraph& g, int length, unsigned threads = 1);

// Copies of `pattern` in g by enumeration.
BigInt count_pattern(const Subgraph& g, const Pattern& pattern, unsigned threads = 1);

// 2l-cycles of Q_k using all k star positions, by direct enumeration.
// Zero outside ceil(log2 2l) <= k <= l.
BigInt z_kl(int k, int l, unsigned threads = 1);

// A word of length 2l over {1..l}, each symbol exactly twice, with no
// contiguous window of length 2j (1 <= j < l) in which every symbol occurs
// an even number of times.
struct ZWord {
  std::vector<int> symbols;
  std::string to_string() const;
  friend auto operator<=>(const ZWord&, const ZWord&) = default;
};

// Visits Z(l) in lexicographic order; visit returns false to stop.
void for_each_z_word(int l, const std::function<bool(const std::vector<int>&)>& visit);
std::uint64_t count_z_words(int l);
std::vector<ZWord> enumerate_z_words(int l);

// |Z(l)| 2^l / (4l). The identity is established for l >= 4; smaller l
// requires allow_small_l.
BigInt z_ll_via_words(int l, bool allow_small_l = false);

// Sum over j >= 0 of C(m, a + r j).
BigInt binomial_residue_sum(int m, int r, int a);

enum class CountMethod { ClosedForm, Enumeration };
std::string to_string(CountMethod m);

struct CountReport {
  int n = 0;
  Pattern pattern;
  BigInt count;
  BigInt ambient_total;
  Rational density;
  CountMethod method = CountMethod::Enumeration;
};

CountReport make_count_report(int n, const Pattern& pattern, BigInt count, BigInt ambient_total,
                              CountMethod method);

}  // namespace cubeturan
