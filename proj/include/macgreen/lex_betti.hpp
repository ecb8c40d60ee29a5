// Lex-segment ideals realizing a prescribed finite Hilbert function,
// truncation, the minimal-resolution Betti numbers of stable monomial
// ideals, and the consecutive-cancellation socle bound.
#ifndef MACGREEN_LEX_BETTI_HPP
#define MACGREEN_LEX_BETTI_HPP

#include <map>

#include "macgreen/monomial.hpp"

namespace macgreen {

/// A monomial ideal held by its minimal generators.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;  // pairwise non-dividing

  bool contains(const Monomial& m) const {
    for (const auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  }

  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
  }
};

/// Drop generators divisible by another generator.
inline void minimalize(MonomialIdeal& I) {
  std::stable_sort(I.gens.begin(), I.gens.end(),
                   [](const Monomial& a, const Monomial& b) {
                     return a.degree() < b.degree();
                   });
  std::vector<Monomial> keep;
  for (const auto& g : I.gens) {
    bool redundant = false;
    for (const auto& k : keep)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) keep.push_back(g);
  }
  I.gens = std::move(keep);
}

/// The unique lex-segment ideal whose quotient has exactly the given finite
/// Hilbert function (and vanishes beyond it).  Variable order x0 > x1 > ...
/// Rejects sequences violating the growth bound and h_1 > nvars.
inline MonomialIdeal lex_ideal(const std::vector<Int>& h, int nvars) {
  auto rep = is_o_sequence(h);
  if (!rep.valid) {
    std::ostringstream os;
    os << "lex_ideal: not an O-sequence (value " << rep.violating_value
       << " in degree " << rep.violation_degree + 1 << " exceeds bound "
       << rep.bound << ")";
    throw std::invalid_argument(os.str());
  }
  if (h.size() > 1 && h[1] > nvars)
    throw std::invalid_argument("lex_ideal: h_1 exceeds variable count");

  auto hf_at = [&](int d) -> Int {
    return d < static_cast<int>(h.size()) ? h[d] : Int(0);
  };

  MonomialIdeal I;
  I.nvars = nvars;
  const int top_degree = static_cast<int>(h.size());  // gens live in 1..e+1
  for (int d = 1; d <= top_degree; ++d) {
    Int total = monomial_count(nvars, d);
    Int seg = total - hf_at(d);  // lex-largest monomials spanned by the ideal
    if (seg < 0)
      throw std::invalid_argument("lex_ideal: Hilbert value exceeds ring");
    // the multiples of lower-degree pieces fill the lex segment of size
    // total - (growth bound of the previous quotient value)
    Int shadow = d == 1 ? Int(0) : total - macaulay_bound(hf_at(d - 1), d - 1);
    if (shadow < 0) shadow = 0;
    long long from = shadow.convert_to<long long>();
    long long to = seg.convert_to<long long>();
    if (to > from) {
      auto gens = monomial_slice(nvars, d, from, to);
      I.gens.insert(I.gens.end(), gens.begin(), gens.end());
    }
  }
  return I;
}

/// Adds every degree-(d+1) monomial outside I as a generator, so the
/// quotient Hilbert function vanishes beyond degree d.  Re-minimalized.
inline MonomialIdeal truncate_ideal(const MonomialIdeal& I, int d) {
  MonomialIdeal T;
  T.nvars = I.nvars;
  for (const auto& g : I.gens)
    if (g.degree() <= d + 1) T.gens.push_back(g);
  for_each_monomial(I.nvars, d + 1, [&](const Monomial& m) {
    if (!I.contains(m)) T.gens.push_back(m);
  });
  return T;
}

/// Quotient Hilbert function: number of degree-t monomials outside I.
inline std::vector<Int> hf_of_monomial_ideal(const MonomialIdeal& I,
                                             int up_to) {
  std::vector<Int> h;
  h.reserve(up_to + 1);
  for (int t = 0; t <= up_to; ++t) {
    long long cnt = 0;
    for_each_monomial(I.nvars, t, [&](const Monomial& m) {
      if (!I.contains(m)) ++cnt;
    });
    h.emplace_back(cnt);
  }
  return h;
}

struct StabilityReport {
  bool stable = true;
  std::optional<Monomial> witness;  // a swap that left the ideal
};

/// A monomial ideal is stable when x_i * u / x_j stays inside for every
/// generator u, every x_j dividing u, and every i < j.
inline StabilityReport is_stable(const MonomialIdeal& I) {
  for (const auto& u : I.gens) {
    for (int j = 0; j < I.nvars; ++j) {
      if (u.exps[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial v = u.swap_var(i, j);
        if (!I.contains(v)) return {false, v};
      }
    }
  }
  return {true, std::nullopt};
}

/// Graded Betti numbers, quotient convention: entry(0,0) = 1 and
/// entry(i, j) for i >= 1 counts the degree-j syzygies at homological
/// step i of the minimal free resolution of R/I.
struct BettiTable {
  int nvars = 0;
  std::map<std::pair<int, int>, Int> entries;

  Int entry(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Int(0) : it->second;
  }

  int max_homological() const {
    int m = 0;
    for (const auto& [ij, v] : entries)
      if (v != 0) m = std::max(m, ij.first);
    return m;
  }
  int max_strand() const {  // regularity rows j - i
    int m = 0;
    for (const auto& [ij, v] : entries)
      if (v != 0) m = std::max(m, ij.second - ij.first);
    return m;
  }
};

/// Minimal-resolution Betti numbers of a stable ideal: each generator u
/// contributes C(max_index(u), i) in homological degree i and internal
/// degree i + deg u on the ideal side; shifted by one to the quotient.
inline BettiTable ek_betti(const MonomialIdeal& I) {
  auto st = is_stable(I);
  if (!st.stable)
    throw std::invalid_argument("ek_betti: ideal is not stable; witness " +
                                st.witness->str());
  BettiTable B;
  B.nvars = I.nvars;
  B.entries[{0, 0}] = 1;
  // histogram per (degree, max variable index) so huge generator sets
  // aggregate without touching each generator once per column
  std::map<std::pair<int, int>, long long> hist;
  for (const auto& g : I.gens) ++hist[{g.degree(), g.max_index()}];
  for (const auto& [key, count] : hist) {
    const auto [deg, maxi] = key;
    for (int i = 0; i <= maxi; ++i) {
      Int c = binom(maxi, i) * count;
      if (c != 0) B.entries[{i + 1, i + deg}] += c;
    }
  }
  return B;
}

/// max(0, entry(i,j) - entry(i-1,j) - entry(i+1,j)): survives every
/// sequence of consecutive cancellations at internal degree j, so it lower
/// bounds the same entry for any module with this Hilbert function.
inline Int cancellation_socle_lower_bound(const BettiTable& B, int i, int j) {
  Int v = B.entry(i, j) - B.entry(i - 1, j) - B.entry(i + 1, j);
  return v > 0 ? v : Int(0);
}

/// Betti table in the displayed layout: columns are homological degrees,
/// rows are the strands j - i.
inline std::string render_betti(const BettiTable& B) {
  const int cols = B.max_homological();
  const int rows = B.max_strand();
  std::vector<std::vector<std::string>> cells(rows + 2);
  cells[0].push_back("");
  for (int i = 0; i <= cols; ++i) cells[0].push_back(std::to_string(i));
  for (int r = 0; r <= rows; ++r) {
    cells[r + 1].push_back(std::to_string(r));
    for (int i = 0; i <= cols; ++i) {
      Int v = B.entry(i, i + r);
      cells[r + 1].push_back(v == 0 ? "." : v.str());
    }
  }
  std::vector<std::size_t> w(cols + 2, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      w[c] = std::max(w[c], row[c].size());
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      os << std::string(w[c] - cells[r][c].size(), ' ') << cells[r][c];
      os << (c + 1 < cells[r].size() ? " " : "");
      if (c == 0) os << "|";
    }
    os << "\n";
    if (r == 0) {
      std::size_t total = 1;
      for (std::size_t c = 0; c < w.size(); ++c) total += w[c] + 1;
      os << std::string(total, '-') << "\n";
    }
  }
  return os.str();
}

}  // namespace macgreen

#endif  // MACGREEN_LEX_BETTI_HPP
