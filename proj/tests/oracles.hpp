// Test-only brute-force oracles, independent of the library implementation.
// Monomials are kept as ascending index multisets so that plain vector
// comparison is descending lex order on monomials (x0 > x1 > ...).
#ifndef MACGREEN_TESTS_ORACLES_HPP
#define MACGREEN_TESTS_ORACLES_HPP

#include <set>
#include <vector>

#include "macgreen/binomial.hpp"

namespace oracles {

using IndexMono = std::vector<int>;

inline void gen_monos_rec(int nvars, int deg, int from, IndexMono& cur,
                          std::vector<IndexMono>& out) {
  if (deg == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v < nvars; ++v) {
    cur.push_back(v);
    gen_monos_rec(nvars, deg - 1, v, cur, out);
    cur.pop_back();
  }
}

// All degree-d monomials in nvars variables, descending lex.
inline std::vector<IndexMono> all_monos(int nvars, int deg) {
  std::vector<IndexMono> out;
  IndexMono cur;
  gen_monos_rec(nvars, deg, 0, cur, out);
  return out;
}

inline long long count_monos(int nvars, int deg) {
  macgreen::Int c = macgreen::binom(macgreen::Int(nvars) + deg - 1, deg);
  return c.convert_to<long long>();
}

// Maximum possible quotient dimension in degree d+1 when the quotient has
// dimension r in degree d: realized by the lex segment ideal, measured by
// direct shadow enumeration.  nvars must satisfy dim R_d >= r.
inline long long brute_max_growth(long long r, int d, int nvars) {
  auto monos = all_monos(nvars, d);
  long long seg = static_cast<long long>(monos.size()) - r;
  if (seg < 0) throw std::invalid_argument("brute_max_growth: r too large");
  std::set<IndexMono> shadow;
  for (long long i = 0; i < seg; ++i) {
    for (int v = 0; v < nvars; ++v) {
      IndexMono m = monos[i];
      m.insert(std::lower_bound(m.begin(), m.end(), v), v);
      shadow.insert(std::move(m));
    }
  }
  return count_monos(nvars, d + 1) -
         static_cast<long long>(shadow.size());
}

// Smallest variable count in which a quotient of dimension r in degree d
// exists at all.
inline int min_vars_for(long long r, int d) {
  int n = 1;
  while (count_monos(n, d) < r) ++n;
  return n;
}

}  // namespace oracles

#endif  // MACGREEN_TESTS_ORACLES_HPP
