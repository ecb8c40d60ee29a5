// Monomials in a fixed variable order x0 > x1 > ... and degreewise
// enumeration in descending lexicographic order.
#ifndef MACGREEN_MONOMIAL_HPP
#define MACGREEN_MONOMIAL_HPP

#include <cstdint>
#include <numeric>

#include "macgreen/binomial.hpp"

namespace macgreen {

struct Monomial {
  std::vector<int> exps;

  int degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
  }
  int nvars() const { return static_cast<int>(exps.size()); }

  /// 0-based index of the largest variable dividing the monomial; -1 for 1.
  int max_index() const {
    for (int i = nvars() - 1; i >= 0; --i)
      if (exps[i] > 0) return i;
    return -1;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (exps[i] > m.exps[i]) return false;
    return true;
  }

  Monomial times_var(int v) const {
    Monomial m = *this;
    ++m.exps[v];
    return m;
  }

  /// x_i * this / x_j; requires exps[j] > 0.
  Monomial swap_var(int i, int j) const {
    Monomial m = *this;
    --m.exps[j];
    ++m.exps[i];
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (exps[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i);
      if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
  }
};

/// Number of degree-d monomials in n variables.
inline Int monomial_count(int n, int d) {
  if (d < 0) return 0;
  return binom(Int(n) + d - 1, d);
}

/// Visit all degree-d monomials in descending lex order (x0-heavy first).
template <typename F>
void for_each_monomial(int nvars, int deg, F&& visit) {
  Monomial m;
  m.exps.assign(nvars, 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      m.exps[var] = rem;
      visit(const_cast<const Monomial&>(m));
      m.exps[var] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      m.exps[var] = e;
      self(self, var + 1, rem - e);
    }
    m.exps[var] = 0;
  };
  if (nvars == 0) {
    if (deg == 0) visit(const_cast<const Monomial&>(m));
    return;
  }
  rec(rec, 0, deg);
}

/// The half-open descending-lex rank slice [from, to) of degree-d monomials.
inline std::vector<Monomial> monomial_slice(int nvars, int deg, long long from,
                                            long long to) {
  std::vector<Monomial> out;
  long long rank = 0;
  for_each_monomial(nvars, deg, [&](const Monomial& m) {
    if (rank >= from && rank < to) out.push_back(m);
    ++rank;
  });
  return out;
}

}  // namespace macgreen

#endif  // MACGREEN_MONOMIAL_HPP
