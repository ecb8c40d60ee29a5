// Three-row decompositions of an h-vector under restriction by a linear
// form, enumeration of the Gorenstein-compatible ones, and the two socle
// detection rules (maximal growth, single-degree injectivity).
#ifndef MACGREEN_DECOMPOSITION_HPP
#define MACGREEN_DECOMPOSITION_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>

#include "macgreen/binomial.hpp"

namespace macgreen {

/// Finite Hilbert function of an Artinian graded algebra, h_0..h_e.
struct HVector {
  std::vector<Int> entries;

  HVector() = default;
  explicit HVector(std::vector<Int> v) : entries(std::move(v)) {
    if (entries.empty()) throw std::invalid_argument("HVector: empty");
    if (entries.front() != 1)
      throw std::invalid_argument("HVector: h_0 must be 1");
    if (entries.back() <= 0)
      throw std::invalid_argument("HVector: h_e must be positive");
    for (const auto& v2 : entries)
      if (v2 < 0) throw std::invalid_argument("HVector: negative entry");
  }

  int socle_degree() const { return static_cast<int>(entries.size()) - 1; }
  const Int& operator[](int i) const { return entries.at(i); }
};

inline HVector hvector(std::initializer_list<long long> xs) {
  std::vector<Int> v;
  for (auto x : xs) v.emplace_back(x);
  return HVector(std::move(v));
}

/// Rows of the restriction diagram: top row h (the algebra), middle row b
/// (the colon by the linear form, shifted one step), bottom row l (the
/// restriction).  h_i = b_{i-1} + l_i.
struct Decomposition {
  HVector h;
  std::vector<Int> b;  // b_0 .. b_{e-1}
  std::vector<Int> l;  // l_0 .. l_e
};

struct ValidationReport {
  bool ok = true;
  bool length_mismatch = false;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// Checks additivity h_i = b_{i-1} + l_i, nonnegativity, the growth bound on
/// the l row, and l_d never exceeding the general-hyperplane restriction
/// bound from h_d.  With gorenstein=true additionally requires b_{e-1} =
/// h_e = 1 and a symmetric b row.
inline ValidationReport validate_decomposition(const Decomposition& D,
                                               bool gorenstein) {
  ValidationReport rep;
  const int e = D.h.socle_degree();
  if (static_cast<int>(D.b.size()) != e ||
      static_cast<int>(D.l.size()) != e + 1) {
    rep.length_mismatch = true;
    std::ostringstream os;
    os << "row lengths (b=" << D.b.size() << ", l=" << D.l.size()
       << ") inconsistent with socle degree " << e;
    rep.fail(os.str());
    return rep;
  }
  if (D.l[0] != 1) rep.fail("l_0 must be 1");
  for (int i = 0; i < e; ++i)
    if (D.b[i] < 0) rep.fail("b_" + std::to_string(i) + " negative");
  for (int i = 0; i <= e; ++i)
    if (D.l[i] < 0) rep.fail("l_" + std::to_string(i) + " negative");
  if (!rep.ok) return rep;

  for (int i = 1; i <= e; ++i) {
    if (D.h[i] != D.b[i - 1] + D.l[i]) {
      std::ostringstream os;
      os << "additivity fails at degree " << i << ": h=" << D.h[i]
         << " but b+l=" << (D.b[i - 1] + D.l[i]);
      rep.fail(os.str());
    }
  }
  auto lrep = is_o_sequence(D.l);
  if (!lrep.valid) {
    std::ostringstream os;
    os << "l row is not an O-sequence: l_" << (lrep.violation_degree + 1)
       << "=" << lrep.violating_value << " exceeds growth bound "
       << lrep.bound;
    rep.fail(os.str());
  }
  for (int d = 1; d <= e; ++d) {
    Int gb = green_bound(D.h[d], d);
    if (D.l[d] > gb) {
      std::ostringstream os;
      os << "l_" << d << "=" << D.l[d]
         << " exceeds restriction bound " << gb << " from h_" << d;
      rep.fail(os.str());
    }
  }
  if (gorenstein && e >= 1) {
    if (D.h[e] != 1) rep.fail("h_e must be 1 for a Gorenstein candidate");
    if (D.b[e - 1] != 1) rep.fail("b_{e-1} must equal h_e = 1");
    for (int i = 0; i < e; ++i)
      if (D.b[i] != D.b[e - 1 - i]) {
        rep.fail("b row not symmetric");
        break;
      }
    if (rep.ok && e >= 2) {
      std::vector<Int> brow = D.b;
      auto brep = is_o_sequence(brow);
      if (!brep.valid) rep.fail("b row is not an O-sequence");
    }
  }
  return rep;
}

/// All decompositions compatible with a Gorenstein algebra having Hilbert
/// function H: middle row symmetric with b_{e-1} = 1, both rows O-sequences,
/// restriction bounds respected.  Ordered by the b row, ascending.
inline std::vector<Decomposition> enumerate_gorenstein_decompositions(
    const HVector& H) {
  const int e = H.socle_degree();
  if (H[e] != 1)
    throw std::invalid_argument(
        "enumerate_gorenstein_decompositions: h_e must be 1");
  std::vector<Decomposition> out;
  if (e == 0) {
    Decomposition D;
    D.h = H;
    D.l = {Int(1)};
    out.push_back(std::move(D));
    return out;
  }

  // Symmetric b rows with b_0 = b_{e-1} = 1; free middle entries bounded by
  // the h entries they sit under.
  const int nfree = (e - 1) / 2;  // b_1 .. b_nfree determine the row
  std::vector<Int> b(e, Int(1));
  std::vector<long long> caps(nfree + 1, 0);
  for (int i = 1; i <= nfree; ++i) {
    Int cap = H[i + 1] < H[e - i] ? H[i + 1] : H[e - i];
    caps[i] = cap.convert_to<long long>();
  }

  std::vector<long long> choice(nfree + 1, 0);
  auto emit = [&]() {
    for (int i = 1; i <= nfree; ++i) {
      b[i] = choice[i];
      b[e - 1 - i] = choice[i];
    }
    Decomposition D;
    D.h = H;
    D.b = b;
    D.l.assign(e + 1, Int(0));
    D.l[0] = 1;
    for (int i = 1; i <= e; ++i) {
      Int li = H[i] - b[i - 1];
      if (li < 0) return;
      D.l[i] = li;
    }
    if (validate_decomposition(D, true).ok) out.push_back(std::move(D));
  };

  // Odd-length middle: e even leaves no center entry beyond the mirror.
  std::function<void(int)> rec = [&](int i) {
    if (i > nfree) {
      emit();
      return;
    }
    for (long long v = 0; v <= caps[i]; ++v) {
      choice[i] = v;
      rec(i + 1);
    }
  };
  rec(1);

  std::sort(out.begin(), out.end(),
            [](const Decomposition& x, const Decomposition& y) {
              return x.b < y.b;
            });
  return out;
}

/// Where a socle element was detected, and by which rule.
struct SocleWitness {
  enum class Rule { maximal_growth, injectivity };
  int degree = 0;
  Int dimension;
  Rule rule = Rule::maximal_growth;
};

/// Socle from maximal growth: if h_{d+1} attains the Macaulay bound from h_d
/// and h_{d-1} exceeds the down-shifted expansion of h_d by eps > 0, the
/// algebra has an eps-dimensional socle in degree d-1.
inline std::optional<SocleWitness> zanello_socle(const HVector& h, int d) {
  if (d < 1 || d + 1 > h.socle_degree())
    throw std::out_of_range("zanello_socle: degree out of range");
  if (h[d + 1] != macaulay_bound(h[d], d)) return std::nullopt;
  Int eps = h[d - 1] - shift(expand(h[d], d), -1, -1);
  if (eps <= 0) return std::nullopt;
  return SocleWitness{d - 1, eps, SocleWitness::Rule::maximal_growth};
}

/// Kernel dimension of multiplication by the linear form from degree d-1 to
/// degree d, read off the rows: h_{d-1} - h_d + l_d.  Zero means injective.
inline Int injectivity_defect(const std::vector<Int>& h,
                              const std::vector<Int>& l, int d) {
  if (d < 1 || static_cast<std::size_t>(d) >= h.size() ||
      static_cast<std::size_t>(d) >= l.size())
    throw std::out_of_range("injectivity_defect: degree out of range");
  return h[d - 1] - h[d] + l[d];
}

/// Socle from one-degree injectivity: multiplication by the form injective
/// from degree d to d+1 and an s-dimensional kernel from d-1 to d force an
/// s-dimensional socle in degree d-1.
inline std::optional<SocleWitness> injectivity_socle(const std::vector<Int>& h,
                                                     const std::vector<Int>& l,
                                                     int d) {
  if (injectivity_defect(h, l, d + 1) != 0) return std::nullopt;
  Int s = injectivity_defect(h, l, d);
  if (s <= 0) return std::nullopt;
  return SocleWitness{d - 1, s, SocleWitness::Rule::injectivity};
}

}  // namespace macgreen

#endif  // MACGREEN_DECOMPOSITION_HPP
