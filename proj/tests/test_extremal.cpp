#include <catch2/catch_amalgamated.hpp>

#include "macgreen/extremal.hpp"

using namespace macgreen;

TEST_CASE("hypersurface form recognition") {
  auto f = recognize_hypersurface_form(19, 3);
  REQUIRE(f.has_value());
  CHECK(f->c == 2);
  CHECK(f->k == 2);
  CHECK(f->lambda_dim() == 3);
  CHECK(f->hypersurface_degree() == 3);

  CHECK_FALSE(recognize_hypersurface_form(17, 2).has_value());
  CHECK_FALSE(recognize_hypersurface_form(0, 3).has_value());

  // plane curves of degree m: h_d = m*d + 1 - C(m-1,2) for m <= d
  for (int d = 2; d <= 9; ++d) {
    for (int m = 1; m <= d; ++m) {
      long long h = 1LL * m * d + 1 - (1LL * (m - 1) * (m - 2)) / 2;
      auto pc = recognize_hypersurface_form(h, d);
      REQUIRE(pc.has_value());
      CHECK(pc->c == 1);
      CHECK(pc->k == m - 1);
    }
  }
}

TEST_CASE("recognition round-trips through the predicted Hilbert function") {
  for (int d = 1; d <= 6; ++d) {
    for (long long h = 1; h <= 5000; ++h) {
      auto f = recognize_hypersurface_form(h, d);
      if (f) REQUIRE(predicted_scheme_hf(*f, d) == h);
    }
    // completeness: every form value is recognized back
    for (long long c = 0; c <= 12; ++c) {
      for (int k = 0; k <= d - 1; ++k) {
        ExtremalForm f{d, c, k};
        Int h = predicted_scheme_hf(f, d);
        if (h > 5000 || h < 1) continue;
        auto got = recognize_hypersurface_form(h, d);
        REQUIRE(got.has_value());
        REQUIRE(got->c == c);
        REQUIRE(got->k == k);
      }
    }
  }
}

TEST_CASE("predicted scheme Hilbert function values") {
  ExtremalForm cubic_in_p3{3, 2, 2};
  CHECK(predicted_scheme_hf(cubic_in_p3, 4) == 31);
  CHECK(predicted_scheme_hf(cubic_in_p3, 3) == 19);
  ExtremalForm quadric_in_p3{2, 2, 1};
  CHECK(predicted_scheme_hf(quadric_in_p3, 2) == 9);
}

TEST_CASE("predicted scheme growth is maximal at every later degree") {
  for (long long c = 0; c <= 6; ++c) {
    for (int k = 0; k <= 3; ++k) {
      for (int d = k + 1; d <= k + 4; ++d) {
        ExtremalForm f{d, c, k};
        std::vector<Int> hf{1};
        for (int t = 1; t <= d + 6; ++t) hf.push_back(predicted_scheme_hf(f, t));
        for (int t = d; t <= d + 5; ++t) REQUIRE(max_growth_at(hf, t));
      }
    }
  }
}

TEST_CASE("hilbert polynomial evaluator") {
  auto p19 = hilbert_polynomial(expand(19, 3), 3);
  CHECK(p19.at(3) == 19);
  CHECK(p19.at(4) == 31);
  auto p28 = hilbert_polynomial(expand(28, 4), 4);
  CHECK(p28.at(5) == 40);
  CHECK(p28.at(4) == 28);
  CHECK_THROWS_AS(hilbert_polynomial(expand(0, 3), 3), std::invalid_argument);

  // agrees with the predicted scheme values on recognized forms
  for (long long h : {19, 31, 9, 13}) {
    for (int d = 2; d <= 4; ++d) {
      auto f = recognize_hypersurface_form(h, d);
      if (!f) continue;
      auto pe = hilbert_polynomial(expand(h, d), d);
      for (int t = 0; t <= 10; ++t)
        REQUIRE(pe.at(d + t) == predicted_scheme_hf(*f, d + t));
    }
  }
}

TEST_CASE("backward recursion") {
  auto r = backward_hf_recursion(19, 3);
  CHECK(r.hf == std::vector<Int>{4, 10, 19});
  CHECK(r.span_projective_dim == 3);

  // single-term expansion C(d+1, d): a line
  for (int d = 2; d <= 6; ++d) {
    auto line = backward_hf_recursion(d + 1, d);
    std::vector<Int> want;
    for (int i = 2; i <= d + 1; ++i) want.emplace_back(i);
    CHECK(line.hf == want);
    CHECK(line.span_projective_dim == 1);
  }

  auto r28 = backward_hf_recursion(28, 4);
  CHECK(r28.hf == std::vector<Int>{4, 10, 18, 28});
  CHECK(r28.span_projective_dim == 3);

  // hypothesis gate: expansion ending with top == bottom is rejected
  // (29 in degree 7 ends with C(1,1))
  CHECK_THROWS_AS(backward_hf_recursion(29, 7), std::invalid_argument);
}

TEST_CASE("backward recursion output is an O-sequence obeying the step rule") {
  for (long long h : {19, 28, 31, 46, 100}) {
    for (int d = 2; d <= 5; ++d) {
      auto e = expand(h, d);
      if (e.terms.back().top == e.terms.back().bottom) continue;
      auto r = backward_hf_recursion(h, d);
      std::vector<Int> full{1};
      full.insert(full.end(), r.hf.begin(), r.hf.end());
      REQUIRE(is_o_sequence(full).valid);
      for (int k = d; k >= 2; --k)
        REQUIRE(r.hf[k - 2] == r.hf[k - 1] - green_bound(r.hf[k - 1], k));
    }
  }
}

TEST_CASE("sequential sharp restriction targets") {
  CHECK_THROWS_AS(sequential_green_targets(19, 3, 2), std::invalid_argument);
  auto t = sequential_green_targets(28, 4, 2);
  CHECK(t == std::vector<Int>{10, 2});
  auto none = sequential_green_targets(28, 4, 0);
  CHECK(none.empty());
}

namespace {
// smooth rational quartic curve in P^3: the counterexample profile
ProfileRows rational_quartic() {
  ProfileRows p;
  p.h = {1, 4, 9, 13, 17, 21, 25, 29, 33};
  p.b = {1, 4, 9, 13, 17, 21, 25, 29};
  p.l = {1, 3, 5, 4, 4, 4, 4, 4, 4};
  return p;
}
}  // namespace

TEST_CASE("relate report on the rational quartic profile at degree 7") {
  auto r = relate_report(rational_quartic(), 7);
  CHECK(r.data_for_injectivity_at_d);
  CHECK(r.injective_at_d);
  CHECK(r.last_bottom_of_hd == 1);
  CHECK_FALSE(r.gate_e_ge_2);  // the equivalence's hypothesis fails here

  REQUIRE(r.part_a.size() == 4);
  CHECK(r.part_a[0].data_sufficient);
  CHECK(r.part_a[0].value);  // restriction bound is sharp at 7
  CHECK(r.part_a[1].data_sufficient);
  CHECK_FALSE(r.part_a[1].value);  // colon row growth 6 -> 7 is not maximal
  // with the gate failed, no violation is reported despite the disagreement
  CHECK(r.violations.empty());
}

TEST_CASE("relate report flags sharpness window on the quartic") {
  auto r = relate_report(rational_quartic(), 7);
  REQUIRE(r.m_sharp_from.has_value());
  CHECK(*r.m_sharp_from == 7);  // restriction sharp from degree 7 on
  REQUIRE(r.g_max_from.has_value());
  CHECK(*r.g_max_from == 7);  // growth maximal from degree 7 on
  CHECK(r.window_end == 8);
}

TEST_CASE("relate report with insufficient rows reports per condition") {
  ProfileRows p;
  p.h = {1, 4, 9, 13};
  p.l = {1, 3, 5, 4};
  auto r = relate_report(p, 3);
  CHECK_FALSE(r.data_for_injectivity_at_d);  // no degree-4 data
  CHECK(r.part_a[0].data_sufficient);
  CHECK_FALSE(r.part_a[1].data_sufficient);  // no colon row
  CHECK_FALSE(r.part_a[3].data_sufficient);  // no truncated-ideal rows
  CHECK_THROWS_AS(relate_report(p, 5), std::invalid_argument);
}

TEST_CASE("relate report on the quartic at degree 8 where the gate holds") {
  // from degree 8 on the expansion ends at bottom 2, so the equivalence
  // applies; sharp restriction must accompany maximal colon-row growth
  auto p = rational_quartic();
  // extend rows one degree: h_9 = 37, l_9 = 4, b_8 = 33
  p.h.push_back(37);
  p.b.push_back(33);
  p.l.push_back(4);
  auto r = relate_report(p, 8);
  CHECK(r.gate_e_ge_2);
  CHECK(r.injective_at_d);
  CHECK(r.part_a[0].value);       // sharp at 8
  CHECK(r.part_a[1].value);       // colon row maximal growth 7 -> 8
  CHECK(r.violations.empty());
}
