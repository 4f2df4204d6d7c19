#include <string>

#include "cubeturan/counting.hpp"

namespace cubeturan {

namespace {

class ZWordSearch {
 public:
  ZWordSearch(int l, const std::function<bool(const std::vector<int>&)>& visit)
      : l_(l),
        visit_(visit),
        word_(static_cast<std::size_t>(2 * l)),
        parity_(static_cast<std::size_t>(2 * l + 1), 0),
        remaining_(static_cast<std::size_t>(l + 1), 2) {}

  bool run() { return place(0); }

 private:
  // A window (i, p] has all-even multiplicities exactly when the prefix
  // parities at i and p agree.
  bool closes_short_window(int end) const {
    Mask p = parity_[static_cast<std::size_t>(end)];
    for (int i = end - 2; i >= 0; i -= 2) {
      if (end - i >= 2 * l_) break;
      if (parity_[static_cast<std::size_t>(i)] == p) return true;
    }
    return false;
  }

  bool place(int pos) {
    if (pos == 2 * l_) return visit_(word_);
    for (int s = 1; s <= l_; ++s) {
      auto& left = remaining_[static_cast<std::size_t>(s)];
      if (left == 0) continue;
      --left;
      word_[static_cast<std::size_t>(pos)] = s;
      parity_[static_cast<std::size_t>(pos + 1)] = parity_[static_cast<std::size_t>(pos)] ^ (Mask{1} << s);
      bool ok = !closes_short_window(pos + 1);
      if (ok && !place(pos + 1)) return false;
      ++left;
    }
    return true;
  }

  int l_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> word_;
  std::vector<Mask> parity_;
  std::vector<int> remaining_;
};

}  // namespace

std::string ZWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i && symbols.size() > 18) s += ',';
    s += std::to_string(symbols[i]);
  }
  return s;
}

void for_each_z_word(int l, const std::function<bool(const std::vector<int>&)>& visit) {
  if (l < 2) throw Error(ErrorKind::BadRange, "Z(l) needs l >= 2");
  if (l > 30) throw Error(ErrorKind::EnumerationTooLarge, "Z(l) enumeration too large");
  ZWordSearch(l, visit).run();
}

std::uint64_t count_z_words(int l) {
  std::uint64_t count = 0;
  for_each_z_word(l, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<ZWord> enumerate_z_words(int l) {
  std::vector<ZWord> out;
  for_each_z_word(l, [&](const std::vector<int>& w) {
    out.push_back({w});
    return true;
  });
  return out;
}

BigInt z_ll_via_words(int l, bool allow_small_l) {
  if (l < 2 || (l < 4 && !allow_small_l)) {
    throw Error(ErrorKind::BadRange, "z_ll_via_words needs l >= 4 (got " + std::to_string(l) + ")");
  }
  BigInt numerator = BigInt(count_z_words(l)) * pow2(l);
  BigInt denominator = 4 * l;
  if (numerator % denominator != 0) {
    throw Error(ErrorKind::NonIntegralResult, "|Z(l)| 2^l is not divisible by 4l for l=" + std::to_string(l));
  }
  return numerator / denominator;
}

}  // namespace cubeturan
