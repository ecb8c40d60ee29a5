// Extremal behavior of the restriction bound: recognizing values whose
// expansion is the Hilbert function of a hypersurface inside a linear
// space, the polynomial and backward recursion such a value forces, the
// successive sharp restriction targets, and the report relating sharp
// restriction to maximal Hilbert-function growth.
#ifndef MACGREEN_EXTREMAL_HPP
#define MACGREEN_EXTREMAL_HPP

#include "macgreen/decomposition.hpp"

namespace macgreen {

/// A degree-d value of the shape C(d+c,d) + C(d+c-1,d-1) + ... + C(d+c-k,d-k):
/// the Hilbert function, in degree d, of a hypersurface of degree k+1 inside
/// a linear subspace of projective dimension c+1.
struct ExtremalForm {
  int d = 0;
  Int c;
  int k = 0;

  Int lambda_dim() const { return c + 1; }   // projective dim of the span
  int hypersurface_degree() const { return k + 1; }
};

/// Match the expansion of h in degree d against the hypersurface shape:
/// consecutive bottoms d, d-1, ..., d-k with constant top-bottom offset c,
/// terminating exactly at bottom d-k >= 1.
inline std::optional<ExtremalForm> recognize_hypersurface_form(const Int& h,
                                                               int d) {
  if (h < 1) return std::nullopt;
  auto e = expand(h, d);
  const Int c = e.terms.front().top - e.terms.front().bottom;
  for (std::size_t j = 0; j < e.terms.size(); ++j) {
    if (e.terms[j].top - e.terms[j].bottom != c) return std::nullopt;
  }
  // bottoms are consecutive by construction of the expansion; the form just
  // needs the run to be unbroken, which the constant offset already forces
  ExtremalForm f;
  f.d = d;
  f.c = c;
  f.k = static_cast<int>(e.terms.size()) - 1;
  return f;
}

/// Hilbert function at degree t of a degree-(k+1) hypersurface inside a
/// linear space of projective dimension c+1.
inline Int predicted_scheme_hf(const ExtremalForm& f, int t) {
  Int s = 0;
  for (int j = 0; j <= f.k; ++j) s += binom(f.c + (t - j), t - j);
  return s;
}

/// Evaluator for the Hilbert polynomial determined by a degree-d expansion:
/// P(d+t) = sum of C(a_i + t, i + t) over the expansion terms.
struct HilbertPolynomialEval {
  int d = 0;
  std::vector<BinomialTerm> terms;

  Int at(int degree) const {
    if (degree < d)
      throw std::invalid_argument("HilbertPolynomialEval: degree below base");
    const int t = degree - d;
    Int s = 0;
    for (const auto& tm : terms) s += binom(tm.top + t, tm.bottom + t);
    return s;
  }
};

inline HilbertPolynomialEval hilbert_polynomial(const BinomialExpansion& e,
                                                int d) {
  if (e.empty())
    throw std::invalid_argument("hilbert_polynomial: empty expansion");
  return HilbertPolynomialEval{d, e.terms};
}

struct BackwardRecursion {
  std::vector<Int> hf;  // h_1 .. h_d
  Int span_projective_dim;
};

/// Backward recursion h_{k-1} = h_k - (restriction bound of h_k) from degree
/// d down to 1.  Requires the expansion of h to end strictly above its
/// bottom index (a_e > e); asserts the closed form h_1 = a_d - d + 2.
inline BackwardRecursion backward_hf_recursion(const Int& h, int d) {
  auto e = expand(h, d);
  if (e.empty())
    throw std::invalid_argument("backward_hf_recursion: zero value");
  if (e.terms.back().top == e.terms.back().bottom)
    throw std::invalid_argument(
        "backward_hf_recursion: hypothesis a_e > e fails for this value");
  BackwardRecursion out;
  std::vector<Int> rev;  // h_d, h_{d-1}, ..., h_1
  Int cur = h;
  rev.push_back(cur);
  for (int k = d; k >= 2; --k) {
    cur = cur - green_bound(cur, k);
    rev.push_back(cur);
  }
  out.hf.assign(rev.rbegin(), rev.rend());
  // closed form for the bottom value: a_d - d + 2 once the expansion has a
  // second term; the pure single-term family (a linear space) stays one lower
  const Int a_d = e.terms.front().top;
  const Int expected_h1 = e.terms.size() >= 2 ? a_d - d + 2 : a_d - d + 1;
  if (out.hf.front() != expected_h1)
    throw std::logic_error("backward_hf_recursion: closed form check failed");
  out.span_projective_dim = out.hf.front() - 1;
  return out;
}

/// Successive sharp restriction values: the expansion of h with its tops
/// dropped by 1, 2, ..., s.  Requires the expansion to end at bottom >= 2.
inline std::vector<Int> sequential_green_targets(const Int& h, int d, int s) {
  auto e = expand(h, d);
  if (e.empty() || last_bottom(e) < 2)
    throw std::invalid_argument(
        "sequential_green_targets: expansion must end at bottom >= 2");
  std::vector<Int> out;
  out.reserve(s);
  for (int j = 1; j <= s; ++j) out.push_back(shift(e, 0, -j));
  return out;
}

/// Numeric profile of an algebra and its restriction data.  Rows are indexed
/// by degree from 0; an empty row means the data was not supplied.  h/b/l
/// describe R/I, R/(I:L), R/(I,L); the j-rows describe the ideal generated
/// by the components of degree <= d and its colon/restriction.
struct ProfileRows {
  std::vector<Int> h, b, l;
  std::vector<Int> jh, jb, jl;
};

/// One evaluated condition of the equivalence report.
struct ConditionValue {
  std::string condition;
  bool data_sufficient = false;
  bool value = false;
};

struct RelateReport {
  int d = 0;

  // hypothesis flags
  bool data_for_injectivity_at_d = false;
  bool injective_at_d = false;        // part (a) hypothesis
  bool data_for_injectivity_at_dm1 = false;
  bool injective_at_d_minus_1 = false;  // part (b) hypothesis
  bool gate_e_ge_2 = false;           // expansion of h_d ends at bottom >= 2
  int last_bottom_of_hd = 0;

  std::vector<ConditionValue> part_a;  // (i)..(iv)
  std::vector<ConditionValue> part_b;  // (i)..(iii)

  // minimal degrees, within the supplied window, from which the restriction
  // bound is sharp / growth is maximal at every later degree of the window
  int window_end = 0;
  std::optional<int> m_sharp_from;
  std::optional<int> g_max_from;

  // equality violations among a part's conditions when its hypotheses hold
  std::vector<std::string> violations;

  bool part_a_hypotheses_hold() const {
    return data_for_injectivity_at_d && injective_at_d && gate_e_ge_2;
  }
  bool part_b_hypotheses_hold() const {
    return data_for_injectivity_at_dm1 && injective_at_d_minus_1 &&
           gate_e_ge_2;
  }
};

namespace detail {

inline bool row_has(const std::vector<Int>& row, int i) {
  return i >= 0 && static_cast<std::size_t>(i) < row.size();
}

inline ConditionValue green_sharp_cond(const char* name,
                                       const std::vector<Int>& h,
                                       const std::vector<Int>& l, int d) {
  ConditionValue cv{name, false, false};
  if (row_has(h, d) && row_has(l, d)) {
    cv.data_sufficient = true;
    cv.value = (l[d] == green_bound(h[d], d));
  }
  return cv;
}

inline ConditionValue max_growth_cond(const char* name,
                                      const std::vector<Int>& row, int from) {
  ConditionValue cv{name, false, false};
  if (from >= 1 && row_has(row, from + 1)) {
    cv.data_sufficient = true;
    cv.value = (row[from + 1] == macaulay_bound(row[from], from));
  }
  return cv;
}

}  // namespace detail

/// Evaluate every condition of the sharp-restriction / maximal-growth
/// equivalence that the supplied rows support, record the hypothesis flags,
/// and list equality violations for any part whose hypotheses hold.
inline RelateReport relate_report(const ProfileRows& p, int d) {
  if (d < 1) throw std::invalid_argument("relate_report: degree must be >= 1");
  if (!detail::row_has(p.h, d))
    throw std::invalid_argument("relate_report: h row does not reach degree d");
  RelateReport r;
  r.d = d;

  auto e = expand(p.h[d], d);
  r.last_bottom_of_hd = e.empty() ? 0 : last_bottom(e);
  r.gate_e_ge_2 = (r.last_bottom_of_hd >= 2);

  if (detail::row_has(p.h, d + 1) && detail::row_has(p.l, d + 1)) {
    r.data_for_injectivity_at_d = true;
    r.injective_at_d = (p.h[d] - p.h[d + 1] + p.l[d + 1] == 0);
  }
  if (detail::row_has(p.h, d) && detail::row_has(p.l, d)) {
    r.data_for_injectivity_at_dm1 = true;
    r.injective_at_d_minus_1 = (p.h[d - 1] - p.h[d] + p.l[d] == 0);
  }

  r.part_a.push_back(detail::green_sharp_cond("a.i", p.h, p.l, d));
  r.part_a.push_back(detail::max_growth_cond("a.ii", p.b, d - 1));
  r.part_a.push_back(detail::max_growth_cond("a.iii", p.jb, d - 1));
  r.part_a.push_back(detail::max_growth_cond("a.iv", p.jh, d));

  r.part_b.push_back(detail::green_sharp_cond("b.i", p.h, p.l, d));
  r.part_b.push_back(detail::max_growth_cond("b.ii", p.h, d - 1));
  r.part_b.push_back(detail::max_growth_cond("b.iii", p.jb, d - 1));

  // window scan for first degrees from which sharpness / maximal growth
  // persist through the end of the supplied rows
  int hl_end = static_cast<int>(std::min(p.h.size(), p.l.size())) - 1;
  r.window_end = hl_end;
  if (hl_end >= 1) {
    for (int t = 1; t <= hl_end; ++t) {
      bool all = true;
      for (int k = t; k <= hl_end; ++k)
        if (p.l[k] != green_bound(p.h[k], k)) {
          all = false;
          break;
        }
      if (all) {
        r.m_sharp_from = t;
        break;
      }
    }
    int h_end = static_cast<int>(p.h.size()) - 1;
    for (int t = 1; t < h_end; ++t) {
      bool all = true;
      for (int k = t; k < h_end; ++k)
        if (p.h[k + 1] != macaulay_bound(p.h[k], k)) {
          all = false;
          break;
        }
      if (all) {
        r.g_max_from = t;
        break;
      }
    }
  }

  auto collect_violations = [&r](const std::vector<ConditionValue>& part,
                                 const char* label) {
    std::optional<bool> ref;
    for (const auto& cv : part) {
      if (!cv.data_sufficient) continue;
      if (!ref) {
        ref = cv.value;
        continue;
      }
      if (cv.value != *ref)
        r.violations.push_back(std::string(label) + ": " + cv.condition +
                               " disagrees with earlier conditions");
    }
  };
  if (r.part_a_hypotheses_hold()) collect_violations(r.part_a, "part a");
  if (r.part_b_hypotheses_hold()) collect_violations(r.part_b, "part b");
  return r;
}

}  // namespace macgreen

#endif  // MACGREEN_EXTREMAL_HPP
