// Construction of the elimination trace for (1,19,17,19,1).  Included from
// prover.hpp; not a standalone header.
#ifndef MACGREEN_PROVER_TRACE_HPP
#define MACGREEN_PROVER_TRACE_HPP

namespace macgreen {

inline ProofTrace prove_not_gorenstein_19() {
  using proverdetail::int_list;
  proverdetail::TraceBuilder tb;
  tb.trace.claim = "(1,19,17,19,1) is not a Gorenstein sequence";

  auto ll = [](const Int& v) { return v.convert_to<long long>(); };
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("trace construction: ") + what);
  };

  // Throughout, J is the ideal generated by the degree <= 3 part of a
  // hypothetical Gorenstein ideal with h-vector (1,19,17,19,1); its
  // quotient agrees with (1,19,17,19) through degree 3.

  // -- degree-4 ceiling and elimination of the top three values ------------
  Int cap4 = macaulay_bound(19, 3);
  require(cap4 == 31, "degree-4 growth cap");
  tb.add("", "macaulay_bound", json{{"h", 19}, {"d", 3}},
         json{{"bound", ll(cap4)}},
         "the degree-4 value of R/J is capped by the growth bound from 19");

  {
    HVector h31(std::vector<Int>{1, 19, 17, 19, 31});
    auto w = zanello_socle(h31, 3);
    require(w && w->degree == 2 && w->dimension == 7, "socle at value 31");
    tb.add("value-31", "socle_from_maximal_growth",
           json{{"h", int_list(h31.entries)}, {"d", 3}},
           json{{"degree", w->degree}, {"dimension", ll(w->dimension)}},
           "value 31 attains the cap, forcing socle below the top degree; a "
           "Gorenstein quotient allows socle only in degree 4");
  }

  for (long long v : {30, 29}) {
    std::vector<Int> hf{1, 19, 17, 19, v};
    auto T = truncate_ideal(lex_ideal(hf, 19), 4);
    auto B = ek_betti(T);
    long long deg5 = 0;
    for (const auto& g : T.gens)
      if (g.degree() == 5) ++deg5;
    std::string branch = v == 30 ? "value-30" : "value-29";
    tb.add(branch, "lex_betti_pipeline",
           json{{"hf", int_list(hf)}, {"nvars", 19}, {"truncate_at", 4}},
           json{{"beta_1_2", ll(B.entry(1, 2))},
                {"beta_19_21", ll(B.entry(19, 21))},
                {"beta_18_21", ll(B.entry(18, 21))},
                {"beta_20_21", ll(B.entry(20, 21))},
                {"top_degree_generators", deg5}},
           "resolution data of the truncated lex ideal sharing the Hilbert "
           "function of R/J through degree 4");
    Int lower = cancellation_socle_lower_bound(B, 19, 21);
    require(lower > 0, "cancellation bound must force a socle");
    tb.add(branch, "cancellation_socle",
           json{{"i", 19},
                {"j", 21},
                {"beta", ll(B.entry(19, 21))},
                {"beta_below", ll(B.entry(18, 21))},
                {"beta_above", ll(B.entry(20, 21))}},
           json{{"lower_bound", ll(lower)},
                {"socle_degree", 2},
                {"forces_socle", true}},
           "consecutive cancellation cannot clear the top column entry, so "
           "any module with this Hilbert function keeps a socle element in "
           "degree 2");
  }

  tb.add("", "interval_conclusion",
         json{{"upper", 31}, {"eliminated", json::array({31, 30, 29})}},
         json{{"bound", 28}},
         "the degree-4 value of R/J is at most 28");

  // -- the three candidate decompositions ----------------------------------
  HVector H(std::vector<Int>{1, 19, 17, 19, 1});
  auto decs = enumerate_gorenstein_decompositions(H);
  require(decs.size() == 3, "exactly three decompositions");
  {
    json rows = json::array();
    for (const auto& D : decs)
      rows.push_back(json{{"b", int_list(D.b)}, {"l", int_list(D.l)}});
    tb.add("", "enumerate_gorenstein_decompositions",
           json{{"h", int_list(H.entries)}},
           json{{"count", decs.size()}, {"decompositions", rows}},
           "restriction rows compatible with a Gorenstein algebra: symmetric "
           "colon row, both rows within the growth and restriction bounds");
  }
  require(decs[0].b[1] == 10 && decs[1].b[1] == 11 && decs[2].b[1] == 12,
          "expected middle values 10, 11, 12");

  // -- case 1: colon row (1,10,10,1), restriction row (1,18,7,9,0) ---------
  {
    Int gb = green_bound(19, 3);
    require(gb == 9 && decs[0].l[3] == 9, "restriction sharp in case 1");
    tb.add("case-1", "green_sharp_check", json{{"h", 19}, {"d", 3}, {"l", 9}},
           json{{"bound", ll(gb)}, {"sharp", true}},
           "the restriction row attains the bound in degree 3");
    auto f = recognize_hypersurface_form(19, 3);
    require(f && f->c == 2 && f->k == 2, "hypersurface form of 19 in degree 3");
    tb.add("case-1", "hypersurface_recognition", json{{"h", 19}, {"d", 3}},
           json{{"c", 2}, {"k", 2}},
           "sharp restriction on this expansion shape means the degree-3 "
           "part cuts out a cubic surface inside a 3-dimensional linear "
           "subspace (characteristic zero)");
    Int p4 = predicted_scheme_hf(*f, 4);
    require(p4 == 31, "cubic surface value in degree 4");
    tb.add("case-1", "predicted_scheme_hf",
           json{{"c", 2}, {"k", 2}, {"d", 3}, {"t", 4}},
           json{{"value", ll(p4)}},
           "a cubic surface forces this degree-4 value for R/J");
    tb.add("case-1", "exceeds_bound", json{{"value", 31}, {"bound", 28}},
           json{{"contradiction", true}},
           "31 exceeds the degree-4 ceiling of 28");
  }

  // -- case 2: colon row (1,11,11,1), restriction row (1,18,6,8,0) ---------
  // L1, L2 are general linear forms; the rows of R/(J,L1) are (1,18,6,8)
  // with double restriction R/(J,L1,L2).
  {
    Int g62 = green_bound(6, 2);
    require(g62 == 3, "double restriction cap in degree 2");
    tb.add("case-2", "green_bound", json{{"h", 6}, {"d", 2}},
           json{{"bound", ll(g62)}},
           "the double restriction in degree 2 is at most 3");
    Int g83 = green_bound(8, 3);
    require(g83 == 2, "double restriction cap in degree 3");
    tb.add("case-2", "restriction_squeeze",
           json{{"lower_from", 8}, {"l_prev", 6}, {"l_val", 8}, {"d", 3}},
           json{{"value", 2}},
           "8 - 6 forces at least 2 in degree 3 of the double restriction, "
           "and the restriction bound of 8 allows at most 2; the squeeze "
           "also forces the degree-2 colon of (J,L1) by L2 to be trivial");
    tb.add("case-2", "growth_floor",
           json{{"next", 2}, {"d", 2}, {"upper", 3}},
           json{{"candidates", json::array({2, 3})}},
           "a degree-2 value of 1 could not grow to 2, so the double "
           "restriction takes value 2 or 3 in degree 2");
  }

  // case 2(a): double restriction value 2 in degree 2
  {
    std::vector<Int> dbl{1, 17, 2, 2};
    require(max_growth_at(dbl, 2), "double restriction maximal growth");
    tb.add("case-2a", "max_growth_check",
           json{{"row", int_list(dbl)}, {"d", 2}},
           json{{"bound", 2}, {"max", true}},
           "the double restriction row (1,17,2,2) grows maximally from "
           "degree 2, so it persists and its ideal is 2-regular");
    auto tail = gotzmann_predict(2, 3, 2);
    require(tail == std::vector<Int>{2, 2}, "persistent double restriction");
    tb.add("case-2a", "gotzmann_tail",
           json{{"h", 2}, {"d", 3}, {"horizon", 2}},
           json{{"tail", int_list(tail)}},
           "persistence keeps the double restriction at 2 onward");
    std::vector<Int> h2a{1, 18, 6, 8};
    std::vector<Int> l2a{1, 17, 2, 2};
    require(injectivity_defect(h2a, l2a, 3) == 0, "injectivity 2 -> 3");
    tb.add("case-2a", "injectivity_propagation",
           json{{"h", int_list(h2a)}, {"l", int_list(l2a)}, {"d", 3},
                {"tail_next", 2}},
           json{{"defect", 0}, {"forced_next", 10}},
           "multiplication by L2 is injective into degree 3, and the "
           "2-regular degree-2 scheme transfers injectivity one degree up: "
           "the row of R/(J,L1) extends to (1,18,6,8,10)");
    Int g28 = green_bound(28, 4), g27 = green_bound(27, 4);
    require(g28 == 10 && g27 == 9, "restriction bounds at 28 and 27");
    tb.add("case-2a", "forced_value_by_green",
           json{{"l", 10}, {"upper", 28}, {"d", 4}},
           json{{"value", 28},
                {"bound_at_value", ll(g28)},
                {"bound_below", ll(g27)}},
           "the restriction row of R/J reaches 10 in degree 4, and only a "
           "degree-4 value of 28 admits that; the decomposition extends to "
           "(1,19,17,19,28) / (1,11,11,18) / (1,18,6,8,10)");
    tb.add("case-2a", "scheme_candidate_elimination",
           json{{"candidates",
                 json::array(
                     {json{{"name", "two planes spanning 4-space"},
                           {"h4_base", 29}},
                      json{{"name", "quadric surface and a line"},
                           {"h4_base", 28}}})},
                {"bound", 28}},
           json{{"survivors",
                 json::array({json{{"name", "quadric surface and a line"},
                                   {"m", 0}}})}},
           "persistence makes R/(J,L1) the coordinate row of a degree-2 "
           "curve section; of the two possible unions only the quadric-and-"
           "line value fits under 28, with no extra points, so J is "
           "saturated in degree 4");
    auto t28 = gotzmann_predict(28, 4, 1);
    require(t28 == std::vector<Int>{40}, "persistent tail from 28");
    tb.add("case-2a", "gotzmann_tail",
           json{{"h", 28}, {"d", 4}, {"horizon", 1}},
           json{{"tail", int_list(t28)}},
           "saturation in degree 4 with no new generators forces maximal "
           "growth onward");
    HVector h40(std::vector<Int>{1, 19, 17, 19, 28, 40});
    auto w = zanello_socle(h40, 4);
    require(w && w->degree == 3 && w->dimension == 1, "socle in case 2(a)");
    tb.add("case-2a", "socle_from_maximal_growth",
           json{{"h", int_list(h40.entries)}, {"d", 4}},
           json{{"degree", w->degree}, {"dimension", ll(w->dimension)}},
           "maximal growth at degree 4 forces a 1-dimensional socle in "
           "degree 3 of R/J, contradicting the Gorenstein shape");
  }

  // case 2(b): double restriction value 3 in degree 2
  {
    Int g62 = green_bound(6, 2);
    tb.add("case-2b", "green_sharp_check", json{{"h", 6}, {"d", 2}, {"l", 3}},
           json{{"bound", ll(g62)}, {"sharp", true}},
           "value 3 attains the restriction bound of 6 in degree 2");
    auto f = recognize_hypersurface_form(6, 2);
    require(f && f->c == 2 && f->k == 0, "linear-space recognition");
    tb.add("case-2b", "hypersurface_recognition", json{{"h", 6}, {"d", 2}},
           json{{"c", 2}, {"k", 0}},
           "sharp restriction on the single-term expansion identifies the "
           "degree-2 part of (J,L1) with that of a plane (a 2-dimensional "
           "linear space)");
    Int amb = monomial_count(3, 3);
    require(amb == 10, "plane cubics");
    tb.add("case-2b", "complement_count",
           json{{"nvars", 3}, {"degree", 3}, {"value", 8}},
           json{{"ambient", 10}, {"extra", 2}},
           "the plane has 10 independent cubics; a degree-3 value of 8 "
           "means (J,L1) adds exactly two cubic forms F1, F2 on the plane");

    const char* models[] = {"ci_cubics_3v", "linear_factor_3v",
                            "quadratic_factor_3v"};
    const char* meanings[] = {
        "F1, F2 a complete intersection on the plane",
        "F1, F2 with a common linear factor",
        "F1, F2 with a common quadratic factor"};
    std::vector<std::vector<Int>> tails;
    for (int i = 0; i < 3; ++i) {
      auto M = proverdetail::fixed_model(models[i]);
      auto hf = M.quotient_hf(6);
      tails.push_back(hf);
      tb.add("case-2b", "engine_hf",
             json{{"model", models[i]}, {"up_to", 6}},
             json{{"hf", int_list(hf)}},
             std::string("structure tail for R/(J,L1) when ") + meanings[i] +
                 "; computed on a fixed witness ideal over the default prime");
    }
    require(tails[0][4] == 9 && tails[1][4] == 9 && tails[2][4] == 10,
            "degree-4 structural values");

    tb.add("case-2b", "degree4_candidates",
           json{{"b3_candidates", json::array({18, 19})},
                {"l4_candidates", json::array({9, 10})},
                {"cap", 28}},
           json{{"rows",
                 json::array({json{{"h4", 27}, {"b3", 18}, {"l4", 9}},
                              json{{"h4", 28}, {"b3", 18}, {"l4", 10}},
                              json{{"h4", 28}, {"b3", 19}, {"l4", 9}}})}},
           "the saturation chain pins the degree-3 value of R/((J:L2),L1) "
           "at 8, so the degree-3 colon value is 18 or 19; the structural "
           "tails allow 9 or 10 in degree 4 of the restriction; the ceiling "
           "28 leaves exactly three extended decompositions");

    {
      std::vector<Int> h{1, 19, 17, 19, 28}, l{1, 18, 6, 8, 9};
      auto w = injectivity_socle(h, l, 3);
      require(w && w->degree == 2 && w->dimension == 6,
              "first extended row socle");
      tb.add("case-2b", "socle_from_injectivity",
             json{{"h", int_list(h)}, {"l", int_list(l)}, {"d", 3}},
             json{{"degree", w->degree}, {"dimension", ll(w->dimension)}},
             "the extended row with colon value 19 and restriction value 9 "
             "has injective multiplication into degree 4 and a 6-dimensional "
             "kernel one degree down: socle in degree 2, contradiction");
    }
    tb.add("case-2b", "row_equality",
           json{{"left", json{{"h4", 28}, {"l4", 10}}},
                {"right", json{{"h4", 28}, {"l4", 10}}}},
           json{{"matches", true}},
           "the extended row with restriction value 10 is the row already "
           "eliminated in case 2(a)");
    tb.add("case-2b", "tail_match",
           json{{"l4", 9},
                {"structures",
                 json::array(
                     {json{{"name", "ci"}, {"value_deg4", ll(tails[0][4])}},
                      json{{"name", "linear_factor"},
                           {"value_deg4", ll(tails[1][4])}},
                      json{{"name", "quadratic_factor"},
                           {"value_deg4", ll(tails[2][4])}}})}},
           json{{"remaining", json::array({"ci", "linear_factor"})}},
           "the remaining decomposition has restriction value 9 in degree "
           "4, ruling out the common-quadratic-factor structure");

    // case 2(b)(i): complete intersection structure
    tb.add("case-2b-i", "geometric_classification", json::object(),
           json{{"statement",
                 "a degree-9 curve in projective 3-space whose general "
                 "plane section is a complete intersection of two cubics "
                 "is itself a complete intersection of two cubic surfaces; "
                 "consequently the saturated ideal follows its Hilbert "
                 "polynomial from degree 4 on and multiplication by a "
                 "general linear form is injective from degree 4 upward"}},
           "classification of space curves by their general plane section; "
           "see also the liaison-theoretic treatment in migliore1998",
           StepStatus::cited_axiom, "strano1988");
    {
      auto M = proverdetail::fixed_model("ci_cubics_4v");
      auto hf = M.quotient_hf(6);
      require(hf[4] == 27 && hf[5] == 36, "ci tail in 4 variables");
      tb.add("case-2b-i", "engine_hf",
             json{{"model", "ci_cubics_4v"}, {"up_to", 6}},
             json{{"hf", int_list(hf)}},
             "row of a complete intersection of two cubic surfaces; degrees "
             "4 and 5 give 27 and 36");
      std::vector<Int> h{1, 19, 17, 19, 27, 36}, l{1, 18, 6, 8, 9, 9};
      auto w = injectivity_socle(h, l, 4);
      require(w && w->degree == 3 && w->dimension == 1, "case 2(b)(i) socle");
      tb.add("case-2b-i", "socle_from_injectivity",
             json{{"h", int_list(h)}, {"l", int_list(l)}, {"d", 4}},
             json{{"degree", w->degree}, {"dimension", ll(w->dimension)}},
             "with the complete-intersection tail, multiplication is "
             "injective into degree 5 but has a 1-dimensional kernel into "
             "degree 4: socle in degree 3, contradiction");
    }

    // case 2(b)(ii): common linear factor structure
    tb.add("case-2b-ii", "geometric_classification", json::object(),
           json{{"statement",
                 "when the two plane cubics share a linear factor, the "
                 "curve cut out is the union of a plane conic pair "
                 "structure whose saturated ideal has the shape (L*Q1, "
                 "L*Q2); its degree-4 value 27 forces J to be saturated in "
                 "degree 4 with injective multiplication from degree 4 up"}},
           "union structure of the underlying scheme; liaison-theoretic "
           "arguments as in migliore1998",
           StepStatus::cited_axiom, "migliore1998");
    {
      auto M = proverdetail::fixed_model("linear_factor_4v");
      auto hf = M.quotient_hf(6);
      require(hf[4] == 27 && hf[5] == 37, "linear-factor tail in 4 variables");
      tb.add("case-2b-ii", "engine_hf",
             json{{"model", "linear_factor_4v"}, {"up_to", 6}},
             json{{"hf", int_list(hf)}},
             "row of the (L*Q1, L*Q2) structure; degrees 4 and 5 give 27 "
             "and 37");
      std::vector<Int> h{1, 19, 17, 19, 27, 37}, l{1, 18, 6, 8, 9, 10};
      auto w = injectivity_socle(h, l, 4);
      require(w && w->degree == 3 && w->dimension == 1, "case 2(b)(ii) socle");
      tb.add("case-2b-ii", "socle_from_injectivity",
             json{{"h", int_list(h)}, {"l", int_list(l)}, {"d", 4}},
             json{{"degree", w->degree}, {"dimension", ll(w->dimension)}},
             "same finish as the complete-intersection branch: socle in "
             "degree 3, contradiction");
    }
  }

  // -- case 3: colon row (1,12,12,1), restriction row (1,18,5,7,0) ---------
  {
    std::vector<Int> lrow{1, 18, 5, 7};
    require(max_growth_at(lrow, 2), "restriction row maximal growth");
    tb.add("case-3", "max_growth_check",
           json{{"row", int_list(lrow)}, {"d", 2}},
           json{{"bound", 7}, {"max", true}},
           "the restriction row (1,18,5,7) grows maximally from degree 2; "
           "its ideal is generated in degrees <= 3, so persistence applies "
           "and the restriction cuts out a conic");
    auto tail = gotzmann_predict(7, 3, 1);
    require(tail == std::vector<Int>{9}, "conic tail");
    tb.add("case-3", "gotzmann_tail",
           json{{"h", 7}, {"d", 3}, {"horizon", 1}},
           json{{"tail", int_list(tail)}},
           "the restriction row continues 9 in degree 4");
    Int g28 = green_bound(28, 4), g27 = green_bound(27, 4);
    tb.add("case-3", "case3_alpha_squeeze",
           json{{"colon_upper", 19}, {"structural_base", 19}, {"l4", 9}},
           json{{"b3", 19},
                {"h4", 28},
                {"green_at_h4", ll(g28)},
                {"green_below", ll(g27)}},
           "the conic persistence makes the saturated ideal a quadric "
           "surface inside a 3-space together with finitely many points, "
           "which writes the degree-3 colon value as 19 plus a nonnegative "
           "excess; colon monotonicity caps it at the degree-3 value 19, so "
           "the excess vanishes and the row extends to (1,19,17,19,28) / "
           "(1,12,12,19) / (1,18,5,7,9)");
    std::vector<Int> h{1, 19, 17, 19, 28}, l{1, 18, 5, 7, 9};
    auto w = injectivity_socle(h, l, 3);
    require(w && w->degree == 2 && w->dimension == 5, "case 3 socle");
    tb.add("case-3", "socle_from_injectivity",
           json{{"h", int_list(h)}, {"l", int_list(l)}, {"d", 3}},
           json{{"degree", w->degree}, {"dimension", ll(w->dimension)}},
           "multiplication is injective into degree 4 with a 5-dimensional "
           "kernel one degree down: socle in degree 2, contradiction");
  }

  // -- wrap up --------------------------------------------------------------
  json closed;
  auto find_closing = [&](const std::string& branch) {
    for (auto it = tb.trace.steps.rbegin(); it != tb.trace.steps.rend(); ++it)
      if (it->branch == branch) return it->id;
    throw std::logic_error("no steps in branch " + branch);
  };
  for (const char* b : {"value-31", "value-30", "value-29", "case-1",
                        "case-2a", "case-2b-i", "case-2b-ii", "case-3"})
    closed[b] = find_closing(b);
  tb.add("", "conclusion", json{{"closed_branches", closed}},
         json{{"conclusion", "not_gorenstein"}},
         "every admissible decomposition ends in a socle element below the "
         "top degree or a value above the growth ceiling");
  tb.trace.conclusion = "not_gorenstein";
  return tb.trace;
}

}  // namespace macgreen

#endif  // MACGREEN_PROVER_TRACE_HPP
