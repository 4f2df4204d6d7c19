#include "cubeturan/bounds.hpp"

#include <algorithm>

#include "cubeturan/error.hpp"

namespace cubeturan {

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
    case Theorem::T5: return "T5";
    case Theorem::T6: return "T6";
    case Theorem::T7: return "T7";
    case Theorem::A6: return "A6";
    case Theorem::A7: return "A7";
  }
  return "?";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all{Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4, Theorem::T5,
                                        Theorem::T6, Theorem::T7, Theorem::A6, Theorem::A7};
  return all;
}

Theorem parse_theorem(const std::string& text) {
  std::string up = text;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Theorem t : all_theorems()) {
    if (to_string(t) == up) return t;
  }
  throw Error(ErrorKind::BadTheoremId, "unknown theorem id '" + text + "' (expected T1..T7, A6, A7)");
}

std::string to_string(BoundSide s) { return s == BoundSide::Lower ? "lower" : "upper"; }

std::optional<Rational> BoundValue::best_known() const { return value ? value : numeric_part; }

bool t1_second_branch_larger(int l, int k) {
  // 1 - l/k < 1 - 4 C(l+2,3)/(k(k+2))  <=>  4 C(l+2,3) < l (k+2).
  return 4 * binomial(l + 2, 3) < BigInt(l) * (k + 2);
}

namespace {

int need(const std::optional<int>& v, const char* name, Theorem t) {
  if (!v) throw Error(ErrorKind::MissingParam, to_string(t) + " needs parameter " + name);
  return *v;
}

void require(bool ok, Theorem t, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadRange, to_string(t) + ": " + what);
}

Rational z_ll(const ZTable& z, int l) {
  auto v = z.get(l, l);
  if (!v) throw Error(ErrorKind::MissingZEntry, "z_{" + std::to_string(l) + "," + std::to_string(l) + "} not in table");
  if (*v == 0) throw Error(ErrorKind::BadRange, "z_{l,l} is zero");
  return Rational(*v);
}

// ceil(log2(x)) for x >= 1.
int ceil_log2(long long x) {
  int c = 0;
  while ((1LL << c) < x) ++c;
  return c;
}

Rational frac(const BigInt& a, const BigInt& b) { return Rational(a, b); }

}  // namespace

BoundValue eval_bound(Theorem theorem, BoundSide side, const BoundParams& p, const ZTable& z) {
  BoundValue b;
  b.theorem = theorem;
  b.side = side;
  if (p.n) b.params["n"] = *p.n;
  if (p.k) b.params["k"] = *p.k;
  if (p.l) b.params["l"] = *p.l;
  bool lower = side == BoundSide::Lower;

  switch (theorem) {
    case Theorem::T1: {
      int l = need(p.l, "l", theorem), k = need(p.k, "k", theorem);
      require(2 <= l && l < k, theorem, "needs 2 <= l < k");
      b.asymptotic = true;
      if (lower) {
        b.expression = "max{1 - l/k, 1 - 4*C(l+2,3)/(k*(k+2))}";
        Rational first = 1 - frac(l, k);
        Rational second = 1 - frac(4 * binomial(l + 2, 3), BigInt(k) * (k + 2));
        b.value = std::max(first, second);
      } else {
        b.expression = "min{1 - l*2^l/(k*2^k), 1 - alpha*log(k)/(k*2^k)}";
        b.numeric_part = 1 - frac(BigInt(l) * pow2(l), BigInt(k) * pow2(k));
        b.unresolved = {"alpha"};
      }
      break;
    }
    case Theorem::T2: {
      int n = need(p.n, "n", theorem);
      require(n >= 1, theorem, "needs n >= 1");
      b.asymptotic = true;
      if (lower) {
        b.expression = "0.25/n";
        b.value = decimal_rational("0.25") / n;
      } else {
        b.expression = "0.36578/n";
        b.value = decimal_rational("0.36578") / n;
      }
      break;
    }
    case Theorem::T3: {
      int l = need(p.l, "l", theorem);
      require(l >= 4, theorem, "needs l >= 4");
      b.asymptotic = true;
      if (lower) {
        b.expression = "1/(4^(l+1)*z_{l,l})";
        b.value = 1 / (Rational(pow2(2 * (l + 1))) * z_ll(z, l));
      } else {
        b.expression = "0.36577";
        b.value = decimal_rational("0.36577");
      }
      break;
    }
    case Theorem::A7: {
      int l = need(p.l, "l", theorem);
      require(l >= 4, theorem, "needs l >= 4");
      b.asymptotic = true;
      if (lower) {
        b.expression = "1/(3^(l+1)*z_{l,l})";
        BigInt three = 1;
        for (int i = 0; i <= l; ++i) three *= 3;
        b.value = 1 / (Rational(three) * z_ll(z, l));
      } else {
        b.expression = "0.36577";
        b.value = decimal_rational("0.36577");
      }
      break;
    }
    case Theorem::T4: {
      int l = need(p.l, "l", theorem), k = need(p.k, "k", theorem);
      require(l >= 1 && k >= 2, theorem, "needs l >= 1, k >= 2");
      b.asymptotic = false;
      // l >= log2(2k)  <=>  2^l >= 2k.
      if (l >= 62 || (1LL << l) >= 2LL * k) {
        b.expression = "0";
        b.value = Rational(0);
        break;
      }
      int n = need(p.n, "n", theorem);
      require(k >= 4 && k != 5 && l >= 2, theorem, "needs k >= 4, k != 5, l >= 2");
      require((1LL << std::min(n, 62)) >= 2LL * k, theorem, "needs log2(2k) <= n");
      if (lower) {
        int m = ceil_log2(2LL * k) - 1;
        b.expression = "C(m,l)/C(n,l), m = ceil(log2(2k)) - 1";
        b.params["m"] = m;
        b.value = frac(binomial(m, l), binomial(n, l));
      } else {
        b.expression = "c_k*n^(-1/16)";
        b.unresolved = {"c_k"};
      }
      break;
    }
    case Theorem::T5: {
      int l = need(p.l, "l", theorem), k = need(p.k, "k", theorem);
      require(k >= 2 && l >= 2, theorem, "needs k >= 2, l >= 2");
      b.asymptotic = true;
      if (lower) {
        b.expression = "max{(1 - 1/k)*(l-1)!/(2*z_{l,l}), 1 - l/k}";
        BigInt fact = 1;
        for (int i = 2; i < l; ++i) fact *= i;
        Rational first = (1 - frac(1, k)) * Rational(fact) / (2 * z_ll(z, l));
        Rational second = 1 - frac(l, k);
        b.value = std::max(first, second);
      } else {
        b.expression = "1 - alpha*log(k)/(k*2^k)";
        b.unresolved = {"alpha"};
      }
      break;
    }
    case Theorem::T6: {
      b.asymptotic = true;
      if (lower) {
        b.expression = "0.03125";
        b.value = decimal_rational("0.03125");
      } else {
        b.expression = "0.1625";
        b.value = decimal_rational("0.1625");
      }
      break;
    }
    case Theorem::T7: {
      int l = need(p.l, "l", theorem), k = need(p.k, "k", theorem);
      require(k >= 4 && k != 5 && l >= 2 && l != k, theorem, "needs k >= 4, k != 5, l >= 2, l != k");
      if (lower) {
        int n = need(p.n, "n", theorem);
        require(n >= l, theorem, "needs n >= l");
        b.asymptotic = true;
        b.expression = "2^(l - ceil(log2(2l)))/(C(n,l)*z_{l,l})";
        b.value = Rational(pow2(l - ceil_log2(2LL * l))) / (Rational(binomial(n, l)) * z_ll(z, l));
      } else {
        b.asymptotic = false;
        b.expression = "c_k*n^(-1/16)";
        b.unresolved = {"c_k"};
      }
      break;
    }
    case Theorem::A6: {
      int l = need(p.l, "l", theorem), k = need(p.k, "k", theorem);
      require(2 <= l && l < k && k >= 3, theorem, "needs 2 <= l < k, k >= 3");
      b.asymptotic = true;
      if (lower) {
        b.expression = "1 - 4*C(l+2,3)/(k^2 - 2k)";
        b.value = 1 - frac(4 * binomial(l + 2, 3), BigInt(k) * k - 2 * k);
      } else {
        b.expression = "min{1 - l*2^l/(k*2^k), 1 - alpha*log(k)/(k*2^k)}";
        b.numeric_part = 1 - frac(BigInt(l) * pow2(l), BigInt(k) * pow2(k));
        b.unresolved = {"alpha"};
      }
      break;
    }
  }
  return b;
}

SandwichReport bound_sandwich_report(Theorem theorem, const BoundParams& params, const ZTable& z,
                                     std::optional<Rational> measured, std::string measured_label) {
  SandwichReport r;
  r.theorem = theorem;
  r.lower = eval_bound(theorem, BoundSide::Lower, params, z);
  r.upper = eval_bound(theorem, BoundSide::Upper, params, z);
  r.measured = measured;
  r.measured_label = measured_label;

  auto describe = [](const BoundValue& b) {
    std::string s = b.side == BoundSide::Lower ? "lower bound " : "upper bound ";
    if (b.value) return s + to_string(*b.value) + " = " + b.expression;
    std::string u;
    for (const auto& c : b.unresolved) u += (u.empty() ? "" : ", ") + c;
    s += "symbolic: " + b.expression + " (unresolved: " + u + ")";
    if (b.numeric_part) s += ", numeric branch " + to_string(*b.numeric_part);
    return s;
  };
  r.lines.push_back(describe(r.lower) + (r.lower.asymptotic ? " [asymptotic, advisory only]" : ""));
  r.lines.push_back(describe(r.upper) + (r.upper.asymptotic ? " [asymptotic, advisory only]" : ""));

  auto lo = r.lower.best_known();
  auto hi = r.upper.best_known();
  if (lo && hi && !r.lower.asymptotic && !r.upper.asymptotic && *lo > *hi) {
    r.consistent = false;
    r.lines.push_back("lower exceeds upper");
  }
  if (measured) {
    std::string m = measured_label + " " + to_string(*measured);
    if (lo) {
      bool ok = *lo <= *measured;
      r.lines.push_back(to_string(*lo) + (ok ? " <= " : " > ") + m +
                        (ok ? "" : (r.lower.asymptotic ? " (permitted: asymptotic)" : " (VIOLATED)")));
      if (!ok && !r.lower.asymptotic) r.consistent = false;
    }
    if (hi) {
      bool ok = *measured <= *hi;
      r.lines.push_back(m + (ok ? " <= " : " > ") + to_string(*hi) +
                        (ok ? "" : (r.upper.asymptotic ? " (permitted: asymptotic)" : " (VIOLATED)")));
      if (!ok && !r.upper.asymptotic) r.consistent = false;
    } else {
      r.lines.push_back("upper bound symbolic");
    }
  }
  return r;
}

}  // namespace cubeturan
