// Binomial-expansion arithmetic: Macaulay representations of integers,
// the shifted-sum operators built on them, and the growth bounds for
// Hilbert functions of standard graded algebras that follow.
#ifndef MACGREEN_BINOMIAL_HPP
#define MACGREEN_BINOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace macgreen {

using Int = boost::multiprecision::cpp_int;

/// C(n, k) with the vanishing convention: 0 whenever n < k or k < 0.
/// Exact at every intermediate step.
inline Int binom(const Int& n, long long k) {
  if (k < 0 || n < k) return 0;
  if (k == 0) return 1;
  Int r = 1;
  for (long long j = 0; j < k; ++j) {
    r *= n - j;
    r /= j + 1;  // exact: product of j+1 consecutive integers
  }
  return r;
}

struct BinomialTerm {
  Int top;      // r_i
  int bottom;   // i
};

inline bool operator==(const BinomialTerm& a, const BinomialTerm& b) {
  return a.top == b.top && a.bottom == b.bottom;
}

/// The d-binomial expansion of a nonnegative integer: the unique greedy sum
/// value = C(top_d, d) + C(top_{d-1}, d-1) + ... with strictly decreasing
/// tops, bottoms stepping down by one, and top >= bottom >= 1 for each term.
/// The expansion of 0 has no terms.
struct BinomialExpansion {
  std::vector<BinomialTerm> terms;  // bottoms degree, degree-1, ..., e
  Int value;
  int degree = 1;

  bool empty() const { return terms.empty(); }
};

namespace detail {

// Largest t with C(t, b) <= r, given r >= 1, b >= 1.  Doubling + bisection.
inline Int greedy_top(const Int& r, int b) {
  Int lo = b;  // C(b, b) = 1 <= r
  Int hi = b + 1;
  while (binom(hi, b) <= r) {
    lo = hi;
    hi *= 2;
  }
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (binom(mid, b) <= r) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace detail

/// The i-binomial expansion of r.  Always exists and is unique; greedy
/// construction.  Rejects i < 1 and r < 0.
inline BinomialExpansion expand(const Int& r, int i) {
  if (i < 1) throw std::invalid_argument("expand: degree must be >= 1");
  if (r < 0) throw std::invalid_argument("expand: value must be >= 0");
  BinomialExpansion e;
  e.value = r;
  e.degree = i;
  Int rem = r;
  int b = i;
  while (rem > 0) {
    if (b < 1) throw std::logic_error("expand: ran past bottom index 1");
    Int t = detail::greedy_top(rem, b);
    e.terms.push_back({t, b});
    rem -= binom(t, b);
    --b;
  }
  return e;
}

/// Sum of C(top + top_shift, bottom + bottom_shift) over the terms, with
/// vanished coefficients contributing 0.  Never negative.
inline Int shift(const BinomialExpansion& e, long long bottom_shift,
                 long long top_shift) {
  Int s = 0;
  for (const auto& t : e.terms)
    s += binom(t.top + top_shift, t.bottom + bottom_shift);
  return s;
}

/// Per-term values of the shifted sum; vanished terms are kept as zeros so
/// the term count matches the expansion.
inline std::vector<Int> shift_terms(const BinomialExpansion& e,
                                    long long bottom_shift,
                                    long long top_shift) {
  std::vector<Int> out;
  out.reserve(e.terms.size());
  for (const auto& t : e.terms)
    out.push_back(binom(t.top + top_shift, t.bottom + bottom_shift));
  return out;
}

/// Maximal h_{d+1} given h_d = h: both indices of the expansion bumped up.
inline Int macaulay_bound(const Int& h, int d) {
  if (d < 1) throw std::invalid_argument("macaulay_bound: degree must be >= 1");
  return shift(expand(h, d), +1, +1);
}

/// Maximal dimension in degree d of the restriction modulo a general linear
/// form, given h_d = h: tops dropped by one, bottoms kept.
inline Int green_bound(const Int& h, int d) {
  if (d < 1) throw std::invalid_argument("green_bound: degree must be >= 1");
  return shift(expand(h, d), 0, -1);
}

/// Bottom index of the last term (the e of the expansion).
inline int last_bottom(const BinomialExpansion& e) {
  if (e.empty()) throw std::invalid_argument("last_bottom: empty expansion");
  return e.terms.back().bottom;
}

struct OSequenceReport {
  bool valid = true;
  // First degree d with h_{d+1} exceeding the growth bound, and the bound.
  int violation_degree = -1;
  Int violating_value;
  Int bound;
};

/// Degree-by-degree growth check.  h must start with h_0 = 1.
inline OSequenceReport is_o_sequence(const std::vector<Int>& h) {
  if (h.empty()) throw std::invalid_argument("is_o_sequence: empty sequence");
  if (h.front() != 1)
    throw std::invalid_argument("is_o_sequence: h_0 must be 1");
  OSequenceReport rep;
  for (std::size_t d = 1; d + 1 < h.size(); ++d) {
    if (h[d] < 0 || h[d + 1] < 0)
      throw std::invalid_argument("is_o_sequence: negative entry");
    Int bound = macaulay_bound(h[d], static_cast<int>(d));
    if (h[d + 1] > bound) {
      rep.valid = false;
      rep.violation_degree = static_cast<int>(d);
      rep.violating_value = h[d + 1];
      rep.bound = bound;
      return rep;
    }
  }
  return rep;
}

/// True iff h_{d+1} attains the Macaulay bound from h_d.
inline bool max_growth_at(const std::vector<Int>& h, int d) {
  if (d < 1 || static_cast<std::size_t>(d) + 1 >= h.size())
    throw std::out_of_range("max_growth_at: degree out of range");
  return h[d + 1] == macaulay_bound(h[d], d);
}

}  // namespace macgreen

#endif  // MACGREEN_BINOMIAL_HPP
