// Dense exact linear algebra over a prime field: reduced row echelon form
// with canonical pivots, rank, and kernels.  Primes are kept below 2^31 so
// products fit in 64 bits.
#ifndef MACGREEN_FP_LINALG_HPP
#define MACGREEN_FP_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace macgreen {

inline constexpr std::uint64_t kDefaultPrime = 2147483629ULL;  // 2^31 - 19

struct PrimeField {
  std::uint64_t p = kDefaultPrime;

  explicit PrimeField(std::uint64_t prime = kDefaultPrime) : p(prime) {
    if (p < 2 || p >= (1ULL << 31))
      throw std::invalid_argument("PrimeField: prime must be in [2, 2^31)");
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % p;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % p == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p - 2);
  }
  std::uint64_t from_signed(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
  }
};

using FpRow = std::vector<std::uint64_t>;

/// Row space in reduced echelon form with sorted pivot columns; the
/// canonical representation of a subspace.
struct RowSpace {
  std::vector<FpRow> rows;    // each begins with a 1 in its pivot column
  std::vector<int> pivots;    // strictly increasing
  int ncols = 0;

  int dim() const { return static_cast<int>(rows.size()); }
};

namespace fpdetail {

inline void axpy(const PrimeField& F, FpRow& dst, std::uint64_t c,
                 const FpRow& src) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = F.add(dst[i], F.mul(c, src[i]));
}

}  // namespace fpdetail

/// Reduce v against the space; v is altered in place to its normal form.
inline void reduce_by(const PrimeField& F, const RowSpace& S, FpRow& v) {
  for (std::size_t k = 0; k < S.rows.size(); ++k) {
    std::uint64_t c = v[S.pivots[k]];
    if (c != 0) fpdetail::axpy(F, v, F.neg(c), S.rows[k]);
  }
}

/// Insert v into the space unless it reduces to zero.  Returns whether the
/// dimension grew.  Keeps the space fully reduced.
inline bool insert_row(const PrimeField& F, RowSpace& S, FpRow v) {
  if (S.ncols == 0) S.ncols = static_cast<int>(v.size());
  reduce_by(F, S, v);
  int piv = -1;
  for (int i = 0; i < S.ncols; ++i)
    if (v[i] != 0) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  std::uint64_t c = F.inv(v[piv]);
  for (auto& x : v) x = F.mul(x, c);
  // clear the new pivot column from existing rows
  for (std::size_t k = 0; k < S.rows.size(); ++k) {
    std::uint64_t t = S.rows[k][piv];
    if (t != 0) fpdetail::axpy(F, S.rows[k], F.neg(t), v);
  }
  auto pos = std::lower_bound(S.pivots.begin(), S.pivots.end(), piv);
  std::size_t idx = pos - S.pivots.begin();
  S.pivots.insert(pos, piv);
  S.rows.insert(S.rows.begin() + idx, std::move(v));
  return true;
}

inline RowSpace row_space(const PrimeField& F, std::vector<FpRow> rows,
                          int ncols) {
  RowSpace S;
  S.ncols = ncols;
  for (auto& r : rows) insert_row(F, S, std::move(r));
  return S;
}

inline bool member(const PrimeField& F, const RowSpace& S, FpRow v) {
  reduce_by(F, S, v);
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

/// Basis of { x : M x = 0 } for M given by rows of length ncols.
inline std::vector<FpRow> kernel_basis(const PrimeField& F,
                                       std::vector<FpRow> M, int ncols) {
  RowSpace S = row_space(F, std::move(M), ncols);
  std::vector<char> is_pivot(ncols, 0);
  for (int piv : S.pivots) is_pivot[piv] = 1;
  std::vector<FpRow> basis;
  for (int j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    FpRow v(ncols, 0);
    v[j] = 1;
    for (std::size_t k = 0; k < S.rows.size(); ++k)
      v[S.pivots[k]] = F.neg(S.rows[k][j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int rank(const PrimeField& F, std::vector<FpRow> M, int ncols) {
  return row_space(F, std::move(M), ncols).dim();
}

}  // namespace macgreen

#endif  // MACGREEN_FP_LINALG_HPP
