#include "cubeturan/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "cubeturan/counting.hpp"
#include "cubeturan/cycles.hpp"
#include "cubeturan/verification.hpp"

namespace cubeturan {

std::string to_string(SearchMethod m) {
  return m == SearchMethod::Exhaustive ? "exhaustive" : "branch-and-bound";
}

std::vector<std::uint64_t> pattern_copies(int n, const Pattern& pattern) {
  if (n < 1 || n > kMaxSearchDimension) {
    throw Error(ErrorKind::DimensionTooLarge, "exact search supports 1 <= n <= " + std::to_string(kMaxSearchDimension));
  }
  std::vector<std::uint64_t> out;
  auto bit = [](const Edge& e) { return std::uint64_t{1} << edge_index(e); };
  switch (pattern.kind) {
    case Pattern::Kind::Edge:
      for (std::size_t i = 0; i < cube_edge_count(n); ++i) out.push_back(std::uint64_t{1} << i);
      break;
    case Pattern::Kind::SubCube: {
      int k = pattern.order;
      if (k > n) break;
      Mask stars = low_bits(k);
      while (stars < (Mask{1} << n)) {
        Mask free_positions = low_bits(n) & ~stars;
        Mask fill = 0;
        do {
          std::uint64_t m = 0;
          for (const Edge& e : expand_edges(StarVector(n, stars, fill))) m |= bit(e);
          out.push_back(m);
          fill = (fill - free_positions) & free_positions;
        } while (fill != 0);
        Mask c = stars & -stars;
        Mask r = stars + c;
        stars = (((r ^ stars) >> 2) / c) | r;
      }
      break;
    }
    case Pattern::Kind::Cycle: {
      Subgraph cube = Subgraph::full_cube(n);
      CycleEnumerator en(cube);
      if (static_cast<std::uint64_t>(pattern.order) > en.vertex_count()) break;
      for (Mask s = 0; s < en.vertex_count(); ++s) {
        en.scan_start(s, pattern.order, [&](std::span<const Mask> cycle) {
          std::uint64_t m = 0;
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            m |= bit(Edge::between(n, cycle[i], cycle[(i + 1) % cycle.size()]));
          }
          out.push_back(m);
          return true;
        });
      }
      break;
    }
  }
  return out;
}

std::vector<std::size_t> default_edge_order(int n, const Pattern& target) {
  auto targets = pattern_copies(n, target);
  std::size_t edges = cube_edge_count(n);
  std::vector<std::size_t> through(edges, 0);
  for (auto m : targets) {
    for (std::size_t e = 0; e < edges; ++e) through[e] += (m >> e) & 1;
  }
  std::vector<std::size_t> order(edges);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return through[a] > through[b]; });
  return order;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct Problem {
  int n = 0;
  std::size_t edge_count = 0;
  std::vector<std::uint64_t> targets;
  std::vector<std::uint64_t> forbidden;
  std::vector<std::size_t> order;
};

Subgraph subgraph_of(int n, std::uint64_t kept) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cube_edge_count(n); ++i) {
    if ((kept >> i) & 1) edges.push_back(edge_at(n, i));
  }
  return Subgraph::from_edges(n, edges);
}

std::uint64_t count_within(const std::vector<std::uint64_t>& copies, std::uint64_t kept) {
  std::uint64_t c = 0;
  for (auto m : copies) c += (m & ~kept) == 0;
  return c;
}

// Decision key: larger means a lexicographically smaller decision string
// with keep before delete.
std::uint64_t decision_key(const Problem& p, std::uint64_t kept) {
  std::uint64_t key = 0;
  for (std::size_t t = 0; t < p.order.size(); ++t) {
    key = (key << 1) | ((kept >> p.order[t]) & 1);
  }
  return key;
}

struct Outcome {
  std::uint64_t value = 0;
  std::uint64_t kept = 0;
  std::uint64_t nodes = 0;
};

Outcome solve_exhaustive(const Problem& p, bool fix_root) {
  if (p.edge_count > 20) {
    throw Error(ErrorKind::DimensionTooLarge, "full enumeration supports n <= 3");
  }
  Outcome best;
  bool have = false;
  std::uint64_t best_key = 0;
  std::uint64_t total = std::uint64_t{1} << p.edge_count;
  std::uint64_t root_bit = std::uint64_t{1} << p.order.front();
  for (std::uint64_t kept = 0; kept < total; ++kept) {
    ++best.nodes;
    if (fix_root && (kept & root_bit)) continue;
    if (count_within(p.forbidden, kept) != 0) continue;
    std::uint64_t value = count_within(p.targets, kept);
    std::uint64_t key = decision_key(p, kept);
    if (!have || value > best.value || (value == best.value && key > best_key)) {
      have = true;
      best.value = value;
      best.kept = kept;
      best_key = key;
    }
  }
  return best;
}

class BranchAndBound {
 public:
  BranchAndBound(const Problem& p, const SearchOptions& options)
      : p_(p), options_(options), start_(std::chrono::steady_clock::now()) {
    target_through_.resize(p.edge_count);
    forbid_through_.resize(p.edge_count);
    for (std::size_t t = 0; t < p.targets.size(); ++t) {
      for (std::size_t e = 0; e < p.edge_count; ++e) {
        if ((p.targets[t] >> e) & 1) target_through_[e].push_back(t);
      }
    }
    for (std::size_t f = 0; f < p.forbidden.size(); ++f) {
      for (std::size_t e = 0; e < p.edge_count; ++e) {
        if ((p.forbidden[f] >> e) & 1) forbid_through_[e].push_back(f);
      }
      forbid_size_.push_back(static_cast<int>(__builtin_popcountll(p.forbidden[f])));
    }
    target_deleted_.assign(p.targets.size(), 0);
    forbid_kept_.assign(p.forbidden.size(), 0);
    forbid_deleted_.assign(p.forbidden.size(), 0);
    alive_ = p.targets.size();
    words_ = (p.targets.size() + 63) / 64;
  }

  Outcome run(bool fix_root) {
    if (fix_root) {
      del(p_.order.front());
    }
    descend();
    Outcome out;
    out.value = have_best_ ? best_value_ : 0;
    out.kept = best_kept_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void check_budget() {
    if (options_.max_nodes && nodes_ > options_.max_nodes) abort_search();
    if (options_.max_seconds > 0 && (nodes_ & 1023) == 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > options_.max_seconds) abort_search();
    }
  }

  [[noreturn]] void abort_search() {
    std::uint64_t upper = have_best_ ? best_value_ : 0;
    for (std::uint64_t b : pending_bounds_) upper = std::max(upper, b);
    throw BudgetExceeded(have_best_ ? best_value_ : 0, upper, subgraph_of(p_.n, best_kept_));
  }

  bool decided(std::size_t e) const { return ((kept_ | deleted_) >> e) & 1; }

  void del(std::size_t e) {
    deleted_ |= std::uint64_t{1} << e;
    trail_.push_back({e, false});
    for (std::size_t t : target_through_[e]) {
      if (target_deleted_[t]++ == 0) --alive_;
    }
    for (std::size_t f : forbid_through_[e]) ++forbid_deleted_[f];
  }

  // Returns false if keeping e completes a forbidden copy.
  bool keep(std::size_t e) {
    kept_ |= std::uint64_t{1} << e;
    trail_.push_back({e, true});
    bool ok = true;
    for (std::size_t f : forbid_through_[e]) {
      if (++forbid_kept_[f] == forbid_size_[f]) ok = false;
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [e, was_keep] = trail_.back();
      trail_.pop_back();
      if (was_keep) {
        kept_ &= ~(std::uint64_t{1} << e);
        for (std::size_t f : forbid_through_[e]) --forbid_kept_[f];
      } else {
        deleted_ &= ~(std::uint64_t{1} << e);
        for (std::size_t t : target_through_[e]) {
          if (--target_deleted_[t] == 0) ++alive_;
        }
        for (std::size_t f : forbid_through_[e]) --forbid_deleted_[f];
      }
    }
  }

  // The last undecided edge of an otherwise-kept forbidden copy must go.
  void propagate(std::size_t e) {
    std::vector<std::size_t> queue{e};
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      for (std::size_t f : forbid_through_[cur]) {
        if (forbid_deleted_[f] == 0 && forbid_kept_[f] == forbid_size_[f] - 1) {
          std::uint64_t open = p_.forbidden[f] & ~kept_ & ~deleted_;
          if (open) del(static_cast<std::size_t>(__builtin_ctzll(open)));
        }
      }
    }
  }

  // Alive targets minus a lower bound on unavoidable losses: each untouched
  // forbidden copy still needs one deletion, and copies whose affected
  // target sets are disjoint lose additively.
  std::uint64_t bound() {
    std::uint64_t loss = 0;
    Bits used(words_, 0);
    Bits affected(words_, 0);
    for (std::size_t f = 0; f < p_.forbidden.size(); ++f) {
      if (forbid_deleted_[f] != 0) continue;
      std::uint64_t open = p_.forbidden[f] & ~kept_ & ~deleted_;
      std::fill(affected.begin(), affected.end(), 0);
      std::uint64_t cheapest = ~std::uint64_t{0};
      for (std::uint64_t m = open; m; m &= m - 1) {
        std::size_t e = static_cast<std::size_t>(__builtin_ctzll(m));
        std::uint64_t through = 0;
        for (std::size_t t : target_through_[e]) {
          if (target_deleted_[t] == 0) {
            ++through;
            affected[t >> 6] |= std::uint64_t{1} << (t & 63);
          }
        }
        cheapest = std::min(cheapest, through);
      }
      if (cheapest == 0 || cheapest == ~std::uint64_t{0}) continue;
      bool disjoint = true;
      for (std::size_t w = 0; w < words_ && disjoint; ++w) disjoint = (affected[w] & used[w]) == 0;
      if (!disjoint) continue;
      for (std::size_t w = 0; w < words_; ++w) used[w] |= affected[w];
      loss += cheapest;
    }
    return alive_ - std::min<std::uint64_t>(loss, alive_);
  }

  std::size_t next_undecided() const {
    for (std::size_t e : p_.order) {
      if (!decided(e)) return e;
    }
    return p_.edge_count;
  }

  void descend() {
    ++nodes_;
    check_budget();
    std::size_t e = next_undecided();
    if (e == p_.edge_count) {
      std::uint64_t value = alive_;
      if (!have_best_ || value > best_value_) {
        have_best_ = true;
        best_value_ = value;
        best_kept_ = kept_;
      }
      return;
    }
    std::uint64_t b = bound();
    if (have_best_ && b <= best_value_) return;

    std::size_t mark = trail_.size();
    pending_bounds_.push_back(b);
    if (keep(e)) {
      propagate(e);
      descend();
    }
    undo_to(mark);
    pending_bounds_.pop_back();

    del(e);
    if (!have_best_ || bound() > best_value_) descend();
    undo_to(mark);
  }

  const Problem& p_;
  const SearchOptions& options_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<std::size_t>> target_through_;
  std::vector<std::vector<std::size_t>> forbid_through_;
  std::vector<int> forbid_size_;
  std::vector<int> target_deleted_;
  std::vector<int> forbid_kept_;
  std::vector<int> forbid_deleted_;
  std::vector<std::pair<std::size_t, bool>> trail_;
  std::vector<std::uint64_t> pending_bounds_;
  std::size_t words_ = 0;
  std::uint64_t alive_ = 0;
  std::uint64_t kept_ = 0;
  std::uint64_t deleted_ = 0;
  std::uint64_t nodes_ = 0;
  bool have_best_ = false;
  std::uint64_t best_value_ = 0;
  std::uint64_t best_kept_ = 0;
};

}  // namespace

SearchResult exact_extremal(int n, const Pattern& target, const Pattern& forbid, const SearchOptions& options) {
  if (target == forbid) throw Error(ErrorKind::BadPattern, "target and forbidden pattern must differ");
  Problem p;
  p.n = n;
  p.targets = pattern_copies(n, target);
  p.forbidden = pattern_copies(n, forbid);
  p.edge_count = cube_edge_count(n);
  std::size_t ambient = p.targets.size();
  // A target copy that contains a forbidden copy never survives.
  std::erase_if(p.targets, [&](std::uint64_t t) {
    return std::any_of(p.forbidden.begin(), p.forbidden.end(), [&](std::uint64_t f) { return (f & ~t) == 0; });
  });
  p.order = options.edge_order.empty() ? default_edge_order(n, target) : options.edge_order;
  {
    std::vector<std::size_t> check = p.order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i) {
      if (check.size() != p.edge_count || check[i] != i) {
        throw Error(ErrorKind::BadRange, "edge order must be a permutation of the dense edge indices");
      }
    }
  }
  // Orbit fixing is sound only when some edge must be deleted.
  bool fix_root = options.root_orbit_fixing.value_or(n >= 4) && !p.forbidden.empty();

  Outcome outcome = options.method == SearchMethod::Exhaustive ? solve_exhaustive(p, fix_root)
                                                                : BranchAndBound(p, options).run(fix_root);

  SearchResult result;
  result.n = n;
  result.target = target;
  result.forbid = forbid;
  result.value = outcome.value;
  result.witness = subgraph_of(n, outcome.kept)
                       .with_name("ex(Q" + std::to_string(n) + "," + target.to_string() + "," + forbid.to_string() + ")");
  result.ambient_total = ambient;
  result.density = ambient == 0 ? Rational(0) : Rational(result.value, result.ambient_total);
  result.nodes_explored = outcome.nodes;
  result.method = options.method;

  // Certify the witness independently of the search bookkeeping.
  if (!is_free_of(result.witness, forbid).free || count_pattern(result.witness, target) != result.value) {
    throw Error(ErrorKind::BadRange, "internal error: search witness failed certification");
  }
  return result;
}

Rational density(int n, const Pattern& target, const Pattern& forbid, const SearchOptions& options) {
  return exact_extremal(n, target, forbid, options).density;
}

}  // namespace cubeturan
