// Degree-capped graded ideals over a prime field: per-degree row spaces in
// the monomial basis, restriction and colon by linear forms, truncation,
// saturation probing, forced growth tails, and catalecticant ranks.
#ifndef MACGREEN_GRADED_ENGINE_HPP
#define MACGREEN_GRADED_ENGINE_HPP

#include <random>
#include <unordered_map>

#include "macgreen/extremal.hpp"
#include "macgreen/fp_linalg.hpp"
#include "macgreen/monomial.hpp"

namespace macgreen {

/// Sparse polynomial with integer coefficients over a fixed variable count.
struct SparsePoly {
  struct Term {
    long long coef;
    std::vector<int> exps;
  };
  std::vector<Term> terms;

  int degree() const {
    int d = -1;
    for (const auto& t : terms) {
      int td = 0;
      for (int e : t.exps) td += e;
      d = std::max(d, td);
    }
    return d;
  }
  bool homogeneous() const {
    int d = -1;
    for (const auto& t : terms) {
      int td = 0;
      for (int e : t.exps) td += e;
      if (t.coef == 0) continue;
      if (d < 0) d = td;
      else if (td != d) return false;
    }
    return true;
  }
};

namespace enginedetail {

struct ExpHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Monomial basis of one degree with index lookup.
struct DegreeBasis {
  std::vector<Monomial> monos;  // descending lex
  std::unordered_map<std::vector<int>, int, ExpHash> index;

  static DegreeBasis make(int nvars, int deg) {
    DegreeBasis b;
    for_each_monomial(nvars, deg, [&](const Monomial& m) {
      b.index.emplace(m.exps, static_cast<int>(b.monos.size()));
      b.monos.push_back(m);
    });
    return b;
  }
};

}  // namespace enginedetail

/// Graded pieces [I]_t for t <= cap as canonical row spaces over F_p,
/// together with the generators that produced them.  Immutable once built.
class GradedIdealModel {
 public:
  int nvars = 0;
  PrimeField field;
  int cap = 0;
  std::vector<RowSpace> pieces;        // index t = 0..cap
  std::vector<SparsePoly> generators;  // defining data when applicable

  const RowSpace& piece(int t) const {
    if (t < 0 || t > cap)
      throw std::out_of_range("GradedIdealModel: degree beyond cap");
    return pieces[t];
  }
  /// dim [R/I]_t
  Int quotient_dim(int t) const {
    return monomial_count(nvars, t) - piece(t).dim();
  }
  std::vector<Int> quotient_hf(int up_to) const {
    std::vector<Int> h;
    for (int t = 0; t <= up_to; ++t) h.push_back(quotient_dim(t));
    return h;
  }

  const enginedetail::DegreeBasis& basis(int t) const {
    if (t < 0) throw std::out_of_range("GradedIdealModel: negative degree");
    while (static_cast<int>(bases_.size()) <= t)
      bases_.push_back(enginedetail::DegreeBasis::make(
          nvars, static_cast<int>(bases_.size())));
    return bases_[t];
  }

 private:
  mutable std::vector<enginedetail::DegreeBasis> bases_;
};

using LinearForm = FpRow;  // coefficients on x0..x_{n-1}

namespace enginedetail {

inline FpRow poly_to_row(const GradedIdealModel& M, const SparsePoly& f,
                         int deg) {
  const auto& B = M.basis(deg);
  FpRow row(B.monos.size(), 0);
  for (const auto& t : f.terms) {
    auto it = B.index.find(t.exps);
    if (it == B.index.end())
      throw std::invalid_argument("poly_to_row: term of wrong degree");
    row[it->second] =
        M.field.add(row[it->second], M.field.from_signed(t.coef));
  }
  return row;
}

// row of x_v * m for every basis monomial m of degree t-1, as columns in
// degree t
inline FpRow shift_row_by_var(const GradedIdealModel& M, const FpRow& row,
                              int t_from, int v) {
  const auto& Bfrom = M.basis(t_from);
  const auto& Bto = M.basis(t_from + 1);
  FpRow out(Bto.monos.size(), 0);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    auto m = Bfrom.monos[i].times_var(v);
    out[Bto.index.at(m.exps)] = M.field.add(out[Bto.index.at(m.exps)], row[i]);
  }
  return out;
}

inline FpRow multiply_by_linear(const GradedIdealModel& M, const FpRow& row,
                                int t_from, const LinearForm& L) {
  const auto& Bto = M.basis(t_from + 1);
  FpRow out(Bto.monos.size(), 0);
  for (int v = 0; v < M.nvars; ++v) {
    if (L[v] == 0) continue;
    FpRow shifted = shift_row_by_var(M, row, t_from, v);
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = M.field.add(out[i], M.field.mul(L[v], shifted[i]));
  }
  return out;
}

}  // namespace enginedetail

/// Build per-degree row spaces from homogeneous generators: each degree is
/// the span of the variable-multiples of the previous degree plus the new
/// generators.  Inhomogeneous input is rejected with its index.
inline GradedIdealModel build_ideal(const std::vector<SparsePoly>& gens,
                                    int nvars, std::uint64_t p, int cap) {
  if (nvars < 1) throw std::invalid_argument("build_ideal: nvars must be >= 1");
  if (cap < 0) throw std::invalid_argument("build_ideal: negative cap");
  GradedIdealModel M;
  M.nvars = nvars;
  M.field = PrimeField(p);
  M.cap = cap;
  M.generators = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].homogeneous())
      throw std::invalid_argument("build_ideal: generator " +
                                  std::to_string(i) + " is not homogeneous");
    if (gens[i].degree() > cap)
      throw std::invalid_argument("build_ideal: generator " +
                                  std::to_string(i) + " exceeds the cap");
  }
  M.pieces.resize(cap + 1);
  for (int t = 0; t <= cap; ++t) {
    RowSpace S;
    S.ncols = static_cast<int>(M.basis(t).monos.size());
    if (t > 0) {
      for (const auto& row : M.pieces[t - 1].rows)
        for (int v = 0; v < nvars; ++v)
          insert_row(M.field, S,
                     enginedetail::shift_row_by_var(M, row, t - 1, v));
    }
    for (const auto& g : gens)
      if (g.degree() == t)
        insert_row(M.field, S, enginedetail::poly_to_row(M, g, t));
    M.pieces[t] = std::move(S);
  }
  return M;
}

inline bool linear_form_in_ideal(const GradedIdealModel& M,
                                 const LinearForm& L) {
  bool zero = true;
  for (auto c : L)
    if (c != 0) zero = false;
  if (zero) return true;  // treat 0 as inadmissible
  return member(M.field, M.piece(1), L);
}

/// The ideal (I, L): every piece extended by the multiples of L.
inline GradedIdealModel restrict_by(const GradedIdealModel& M,
                                    const LinearForm& L) {
  if (linear_form_in_ideal(M, L))
    throw std::invalid_argument("restrict_by: linear form lies in the ideal");
  GradedIdealModel R;
  R.nvars = M.nvars;
  R.field = M.field;
  R.cap = M.cap;
  R.pieces.resize(M.cap + 1);
  for (int t = 0; t <= M.cap; ++t) {
    RowSpace S = M.piece(t);
    if (t >= 1) {
      // L * (monomial basis of degree t-1)
      const auto& Bprev = R.basis(t - 1);
      for (std::size_t i = 0; i < Bprev.monos.size(); ++i) {
        FpRow unit(Bprev.monos.size(), 0);
        unit[i] = 1;
        insert_row(M.field, S,
                   enginedetail::multiply_by_linear(M, unit, t - 1, L));
      }
    }
    R.pieces[t] = std::move(S);
  }
  return R;
}

/// The ideal (I : L), valid up to cap-1: degree-t piece is the kernel of
/// f -> (L*f mod [I]_{t+1}).
inline GradedIdealModel colon_linear(const GradedIdealModel& M,
                                     const LinearForm& L) {
  if (linear_form_in_ideal(M, L))
    throw std::invalid_argument("colon_linear: linear form lies in the ideal");
  GradedIdealModel C;
  C.nvars = M.nvars;
  C.field = M.field;
  C.cap = M.cap - 1;
  if (C.cap < 0) throw std::invalid_argument("colon_linear: cap too small");
  C.pieces.resize(C.cap + 1);
  for (int t = 0; t <= C.cap; ++t) {
    const auto& B = M.basis(t);
    const int n = static_cast<int>(B.monos.size());
    // matrix rows indexed by degree-(t+1) monomials after reduction by I
    std::vector<FpRow> cols;
    cols.reserve(n);
    for (int i = 0; i < n; ++i) {
      FpRow unit(n, 0);
      unit[i] = 1;
      FpRow img = enginedetail::multiply_by_linear(M, unit, t, L);
      reduce_by(M.field, M.piece(t + 1), img);
      cols.push_back(std::move(img));
    }
    // kernel of the transposed map: vectors x with sum x_i * cols[i] = 0
    const int m = static_cast<int>(M.basis(t + 1).monos.size());
    std::vector<FpRow> mat(m, FpRow(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) mat[j][i] = cols[i][j];
    auto ker = kernel_basis(M.field, std::move(mat), n);
    C.pieces[t] = row_space(M.field, std::move(ker), n);
  }
  return C;
}

/// The ideal generated by the pieces of degree <= d: identical up to d,
/// regenerated by multiplication above.
inline GradedIdealModel truncation_generated(const GradedIdealModel& M,
                                             int d) {
  if (d < 0 || d > M.cap)
    throw std::out_of_range("truncation_generated: degree out of range");
  GradedIdealModel J;
  J.nvars = M.nvars;
  J.field = M.field;
  J.cap = M.cap;
  J.pieces.resize(M.cap + 1);
  for (int t = 0; t <= M.cap; ++t) {
    if (t <= d) {
      J.pieces[t] = M.piece(t);
      continue;
    }
    RowSpace S;
    S.ncols = static_cast<int>(J.basis(t).monos.size());
    for (const auto& row : J.pieces[t - 1].rows)
      for (int v = 0; v < J.nvars; ++v)
        insert_row(J.field, S, enginedetail::shift_row_by_var(J, row, t - 1, v));
    J.pieces[t] = std::move(S);
  }
  return J;
}

/// Restriction rows of a model for one linear form.
struct RestrictionProfile {
  std::vector<Int> h;  // dim [R/I]_t,     t <= cap
  std::vector<Int> b;  // dim [R/(I:L)]_t, t <= cap-1
  std::vector<Int> l;  // dim [R/(I,L)]_t, t <= cap
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;

  ProfileRows rows() const {
    ProfileRows p;
    p.h = h;
    p.b = b;
    p.l = l;
    return p;
  }
};

inline LinearForm random_linear_form(const GradedIdealModel& M,
                                     std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    LinearForm L(M.nvars);
    for (auto& c : L) c = rng() % M.field.p;
    if (!linear_form_in_ideal(M, L)) return L;
  }
  throw std::runtime_error("random_linear_form: could not avoid the ideal");
}

/// h, b, l rows for a seeded random linear form; additivity is asserted.
inline RestrictionProfile restriction_profile(const GradedIdealModel& M,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LinearForm L = random_linear_form(M, rng);
  auto R = restrict_by(M, L);
  auto C = colon_linear(M, L);
  RestrictionProfile P;
  P.prime = M.field.p;
  P.seed = seed;
  for (int t = 0; t <= M.cap; ++t) {
    P.h.push_back(M.quotient_dim(t));
    P.l.push_back(R.quotient_dim(t));
  }
  for (int t = 0; t <= C.cap; ++t) P.b.push_back(C.quotient_dim(t));
  for (int t = 1; t <= M.cap && t - 1 <= C.cap; ++t)
    if (P.h[t] != P.b[t - 1] + P.l[t])
      throw std::logic_error("restriction_profile: additivity violated");
  return P;
}

/// Probabilistic saturation probe: true when (I:L) agrees with I in every
/// degree of [m, cap-1] for `trials` independent random forms.  A false
/// verdict can only come from an unlucky form.
inline bool is_saturated_from(const GradedIdealModel& M, int m, int trials,
                              std::uint64_t seed) {
  if (m >= M.cap)
    throw std::invalid_argument("is_saturated_from: m must be below the cap");
  std::mt19937_64 rng(seed);
  for (int s = 0; s < trials; ++s) {
    LinearForm L = random_linear_form(M, rng);
    auto C = colon_linear(M, L);
    for (int t = std::max(m, 0); t <= C.cap; ++t)
      if (C.piece(t).dim() != M.piece(t).dim()) return false;
  }
  return true;
}

/// The growth tail forced by persistence once maximal growth is reached at
/// degree d with value h_d: iterated growth bounds.
inline std::vector<Int> gotzmann_predict(const Int& h_d, int d, int horizon) {
  std::vector<Int> out;
  Int cur = h_d;
  for (int t = d; t < d + horizon; ++t) {
    cur = macaulay_bound(cur, t);
    out.push_back(cur);
  }
  return out;
}

/// Hilbert function of the apolar algebra of a form F of degree d: entry i
/// is the rank of the i-th catalecticant (contraction) matrix.
inline std::vector<Int> apolar_hf(const SparsePoly& F, int nvars,
                                  std::uint64_t p = kDefaultPrime) {
  if (!F.homogeneous())
    throw std::invalid_argument("apolar_hf: form must be homogeneous");
  const int d = F.degree();
  if (d < 0) throw std::invalid_argument("apolar_hf: zero form");
  PrimeField field(p);

  // coefficient lookup
  std::unordered_map<std::vector<int>, std::uint64_t, enginedetail::ExpHash>
      coef;
  for (const auto& t : F.terms) {
    std::vector<int> e = t.exps;
    e.resize(nvars, 0);
    auto [it, fresh] = coef.try_emplace(e, 0);
    it->second = field.add(it->second, field.from_signed(t.coef));
  }

  std::vector<Int> h;
  for (int i = 0; i <= d; ++i) {
    std::vector<Monomial> rows, cols;
    for_each_monomial(nvars, i, [&](const Monomial& m) { rows.push_back(m); });
    for_each_monomial(nvars, d - i,
                      [&](const Monomial& m) { cols.push_back(m); });
    std::vector<FpRow> cat(rows.size(), FpRow(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> e(nvars);
        for (int v = 0; v < nvars; ++v)
          e[v] = rows[r].exps[v] + cols[c].exps[v];
        auto it = coef.find(e);
        if (it != coef.end()) cat[r][c] = it->second;
      }
    h.emplace_back(rank(field, std::move(cat), static_cast<int>(cols.size())));
  }
  return h;
}

}  // namespace macgreen

#endif  // MACGREEN_GRADED_ENGINE_HPP
