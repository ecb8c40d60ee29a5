#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "macgreen/graded_engine.hpp"
#include "macgreen/lex_betti.hpp"

using namespace macgreen;
using Rational = boost::multiprecision::cpp_rational;

namespace {

SparsePoly poly(std::vector<SparsePoly::Term> ts) {
  SparsePoly p;
  p.terms = std::move(ts);
  return p;
}

// dense random form of the given degree, coefficients from the seeded rng
SparsePoly random_form(int nvars, int deg, std::mt19937_64& rng,
                       std::uint64_t p) {
  SparsePoly f;
  for_each_monomial(nvars, deg, [&](const Monomial& m) {
    f.terms.push_back(
        {static_cast<long long>(rng() % p), m.exps});
  });
  return f;
}

// rational-arithmetic rank, independent of the prime-field path
int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[row][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<Int> rational_apolar(const SparsePoly& F, int nvars) {
  const int d = F.degree();
  std::map<std::vector<int>, Rational> coef;
  for (const auto& t : F.terms) {
    auto e = t.exps;
    e.resize(nvars, 0);
    coef[e] += t.coef;
  }
  std::vector<Int> h;
  for (int i = 0; i <= d; ++i) {
    std::vector<Monomial> rows, cols;
    for_each_monomial(nvars, i, [&](const Monomial& m) { rows.push_back(m); });
    for_each_monomial(nvars, d - i,
                      [&](const Monomial& m) { cols.push_back(m); });
    std::vector<std::vector<Rational>> cat(
        rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> e(nvars);
        for (int v = 0; v < nvars; ++v)
          e[v] = rows[r].exps[v] + cols[c].exps[v];
        auto it = coef.find(e);
        if (it != coef.end()) cat[r][c] = it->second;
      }
    h.emplace_back(rational_rank(std::move(cat)));
  }
  return h;
}

}  // namespace

TEST_CASE("prime field basics") {
  PrimeField F;
  CHECK(F.p == 2147483629ULL);
  CHECK(F.mul(F.p - 1, F.p - 1) == 1);
  CHECK(F.mul(F.inv(12345), 12345) == 1);
  CHECK(F.from_signed(-1) == F.p - 1);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(1ULL << 32), std::invalid_argument);
}

TEST_CASE("row spaces are canonical") {
  PrimeField F(101);
  RowSpace S = row_space(F, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
  CHECK(S.dim() == 2);
  RowSpace S2 = row_space(F, {{0, 1, 1}, {3, 6, 9}}, 3);
  CHECK(S.rows == S2.rows);
  CHECK(member(F, S, {1, 3, 4}));
  CHECK_FALSE(member(F, S, {1, 0, 0}));
}

TEST_CASE("kernels") {
  PrimeField F(101);
  auto K = kernel_basis(F, {{1, 1, 0}, {0, 0, 1}}, 3);
  REQUIRE(K.size() == 1);
  CHECK(K[0] == FpRow{100, 1, 0});  // (-1, 1, 0)
}

TEST_CASE("principal ideal model") {
  auto M = build_ideal({poly({{1, {1, 0}}})}, 2, kDefaultPrime, 3);
  CHECK(M.quotient_hf(3) == std::vector<Int>{1, 1, 1, 1});
}

TEST_CASE("inhomogeneous and oversized generators are rejected by index") {
  auto bad = poly({{1, {1, 0}}, {1, {2, 0}}});
  try {
    build_ideal({poly({{1, {1, 0}}}), bad}, 2, kDefaultPrime, 4);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("generator 1") != std::string::npos);
  }
}

TEST_CASE("three random sextics in 3 variables behave like a complete "
          "intersection") {
  std::mt19937_64 rng(20160707);
  std::vector<SparsePoly> gens;
  for (int i = 0; i < 3; ++i)
    gens.push_back(random_form(3, 6, rng, kDefaultPrime));
  auto M = build_ideal(gens, 3, kDefaultPrime, 8);
  CHECK(M.quotient_hf(8) ==
        std::vector<Int>{1, 3, 6, 10, 15, 21, 25, 27, 27});
  CHECK(M.quotient_dim(6) == 25);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto P = restriction_profile(M, seed);
    CHECK(P.l[6] == 4);
    for (int t = 1; t <= 7; ++t) REQUIRE(P.h[t] == P.b[t - 1] + P.l[t]);
  }
}

TEST_CASE("hyperplane plus generic cubic in 5 variables") {
  std::mt19937_64 rng(7);
  std::vector<SparsePoly> gens;
  gens.push_back(poly({{1, {1, 0, 0, 0, 0}}}));
  gens.push_back(random_form(5, 3, rng, kDefaultPrime));
  auto M = build_ideal(gens, 5, kDefaultPrime, 5);
  CHECK(M.quotient_dim(3) == 19);
  ExtremalForm f{3, 2, 2};
  for (int t = 1; t <= 5; ++t)
    REQUIRE(M.quotient_dim(t) == predicted_scheme_hf(f, t));

  // the sharp-restriction instance: the bound is attained for random forms
  auto P = restriction_profile(M, 99);
  CHECK(P.l[3] == green_bound(19, 3));
}

TEST_CASE("colon by a generic form is trivial on a reduced hypersurface") {
  auto M = build_ideal({poly({{1, {1, 1}}})}, 2, kDefaultPrime, 5);
  std::mt19937_64 rng(5);
  auto L = random_linear_form(M, rng);
  auto C = colon_linear(M, L);
  for (int t = 0; t <= C.cap; ++t)
    REQUIRE(C.piece(t).dim() == M.piece(t).dim());
}

TEST_CASE("restriction rejects forms inside the ideal") {
  auto M = build_ideal({poly({{1, {1, 0}}})}, 2, kDefaultPrime, 3);
  LinearForm inside{1, 0};
  CHECK_THROWS_AS(restrict_by(M, inside), std::invalid_argument);
  CHECK_THROWS_AS(colon_linear(M, inside), std::invalid_argument);
}

TEST_CASE("truncation-generated subideal") {
  // two quadrics in 3 variables: generated in degree 2 already
  auto M = build_ideal({poly({{1, {0, 2, 0}}, {-1, {1, 0, 1}}}),
                        poly({{1, {0, 0, 2}}, {-1, {1, 1, 0}}})},
                       3, kDefaultPrime, 5);
  auto J = truncation_generated(M, 2);
  for (int t = 0; t <= 5; ++t)
    REQUIRE(J.piece(t).dim() == M.piece(t).dim());

  // at the cap the truncation is the identity
  auto Jcap = truncation_generated(M, 5);
  for (int t = 0; t <= 5; ++t)
    REQUIRE(Jcap.piece(t).dim() == M.piece(t).dim());
}

TEST_CASE("truncation drops the late generator of an artinian lex ideal") {
  // monomial ideal (x^2, xy, y^3): generated in degrees 2 and 3
  auto M = build_ideal({poly({{1, {2, 0}}}), poly({{1, {1, 1}}}),
                        poly({{1, {0, 3}}})},
                       2, kDefaultPrime, 4);
  auto J = truncation_generated(M, 2);
  // degreewise dimensions against direct monomial multiplication
  auto I = lex_ideal({1, 2, 1}, 2);
  for (int t = 0; t <= 4; ++t) {
    long long expect = 0;
    // J_t = R_{t-2} * {x^2, xy}
    std::set<std::vector<int>> span;
    for_each_monomial(2, t, [&](const Monomial& m) {
      Monomial x2{{2, 0}}, xy{{1, 1}};
      if (x2.divides(m) || xy.divides(m)) span.insert(m.exps);
    });
    expect = static_cast<long long>(span.size());
    REQUIRE(J.piece(t).dim() == expect);
  }
  CHECK(J.piece(3).dim() == M.piece(3).dim() - 1);  // y^3 missing
}

TEST_CASE("saturation probing") {
  // a point in the plane: saturated from degree 0
  auto pt = build_ideal({poly({{1, {1, 0, 0}}}), poly({{1, {0, 1, 0}}})}, 3,
                        kDefaultPrime, 4);
  CHECK(is_saturated_from(pt, 0, 3, 11));

  // an artinian ideal has growing colon at the top
  auto art = build_ideal({poly({{1, {2, 0}}}), poly({{1, {0, 2}}})}, 2,
                         kDefaultPrime, 4);
  CHECK_FALSE(is_saturated_from(art, 0, 3, 11));

  // truncating a saturated ideal destroys saturation exactly up to the
  // truncation degree
  auto M = build_ideal({poly({{1, {1, 1, 0}}})}, 3, kDefaultPrime, 6);
  auto J = truncation_generated(M, 2);  // same as M: degree-2 generator
  CHECK(is_saturated_from(J, 0, 3, 11));
}

TEST_CASE("profiles are deterministic given seed and prime") {
  std::mt19937_64 rng(20160707);
  std::vector<SparsePoly> gens;
  for (int i = 0; i < 2; ++i) gens.push_back(random_form(3, 2, rng, 32003));
  auto M = build_ideal(gens, 3, 32003, 5);
  auto P1 = restriction_profile(M, 4242);
  auto P2 = restriction_profile(M, 4242);
  CHECK(P1.h == P2.h);
  CHECK(P1.b == P2.b);
  CHECK(P1.l == P2.l);
}

TEST_CASE("additivity holds for random monomial ideals and forms") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    int nvars = 2 + static_cast<int>(rng() % 3);
    std::vector<SparsePoly> gens;
    int ngens = 1 + static_cast<int>(rng() % 4);
    for (int g = 0; g < ngens; ++g) {
      int deg = 1 + static_cast<int>(rng() % 4);
      std::vector<int> exps(nvars, 0);
      for (int k = 0; k < deg; ++k) ++exps[rng() % nvars];
      gens.push_back(poly({{1, exps}}));
    }
    auto M = build_ideal(gens, nvars, kDefaultPrime, 6);
    if (monomial_count(nvars, 1) == M.piece(1).dim()) continue;
    auto P = restriction_profile(M, rng());
    for (int t = 1; t < static_cast<int>(P.h.size()) &&
                    t - 1 < static_cast<int>(P.b.size());
         ++t)
      REQUIRE(P.h[t] == P.b[t - 1] + P.l[t]);
  }
}

TEST_CASE("forced growth tails") {
  auto tail = gotzmann_predict(19, 3, 2);
  CHECK(tail == std::vector<Int>{31, 46});
  // the hypersurface tail keeps matching the predicted scheme values
  ExtremalForm f{3, 2, 2};
  auto longer = gotzmann_predict(19, 3, 6);
  for (int s = 0; s < 6; ++s)
    REQUIRE(longer[s] == predicted_scheme_hf(f, 4 + s));

  CHECK(gotzmann_predict(1, 2, 5) == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(gotzmann_predict(28, 4, 1) == std::vector<Int>{40});
}

TEST_CASE("apolar Hilbert functions") {
  auto h1 = apolar_hf(poly({{1, {4}}}), 1);
  CHECK(h1 == std::vector<Int>{1, 1, 1, 1, 1});

  auto h3 = apolar_hf(poly({{1, {4, 0, 0}}, {1, {0, 4, 0}}, {1, {0, 0, 4}}}),
                      3);
  CHECK(h3 == std::vector<Int>{1, 3, 3, 3, 1});

  auto hxy = apolar_hf(poly({{1, {2, 2}}}), 2);
  CHECK(hxy == std::vector<Int>{1, 2, 3, 2, 1});

  CHECK_THROWS_AS(apolar_hf(poly({{1, {1, 0}}, {1, {2, 0}}}), 2),
                  std::invalid_argument);
}

TEST_CASE("apolar output is symmetric, an O-sequence, and matches the "
          "rational-arithmetic rank") {
  std::mt19937_64 rng(17);
  std::vector<SparsePoly> forms;
  forms.push_back(poly({{1, {4, 0, 0}}, {1, {0, 4, 0}}, {1, {0, 0, 4}}}));
  forms.push_back(poly({{1, {2, 2}}}));
  forms.push_back(poly({{1, {3, 1, 0}}, {2, {1, 1, 2}}, {-1, {0, 2, 2}}}));
  forms.push_back(poly({{1, {2, 1}}, {3, {0, 3}}}));
  for (const auto& F : forms) {
    int nvars = static_cast<int>(F.terms[0].exps.size());
    auto h = apolar_hf(F, nvars);
    auto hr = rational_apolar(F, nvars);
    REQUIRE(h == hr);
    for (std::size_t i = 0; i < h.size(); ++i)
      REQUIRE(h[i] == h[h.size() - 1 - i]);
    REQUIRE(is_o_sequence(h).valid);
  }
}
