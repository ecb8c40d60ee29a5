// Classification of socle-degree-4 symmetric h-vectors (1,a,b,a,1) from a
// versioned fact base: seed examples, extension rules, and the literature
// results they cite.
#ifndef MACGREEN_FACTS_HPP
#define MACGREEN_FACTS_HPP

#include <fstream>
#include <set>

#include <json.hpp>

#include "macgreen/binomial.hpp"

namespace macgreen {

using json = nlohmann::ordered_json;

inline const char* kBundledFacts = R"FACTS({
  "version": 1,
  "gorenstein_socle4_seeds": [
    {"a": 13, "b": 12, "citation": "stanley1978"},
    {"a": 20, "b": 18, "citation": "mz-optimal"}
  ],
  "not_gorenstein_socle4": [
    {"a": 19, "b": 17, "citation": "prove19"}
  ],
  "rules": [
    {"id": "o-sequence", "citation": "macaulay1927",
     "statement": "every Hilbert function obeys the degreewise growth bound"},
    {"id": "b-ge-a", "citation": "harima1995",
     "statement": "(1,a,b,a,1) with a <= b <= a(a+1)/2 is a Gorenstein sequence"},
    {"id": "small-a-unimodal", "citation": "mz-optimal",
     "statement": "a <= 12 forces b >= a for Gorenstein (1,a,b,a,1)"},
    {"id": "extension-rules", "citation": "trivial-extensions",
     "statement": "(1,n,a,n,1) Gorenstein gives (1,n,b,n,1) for a <= b <= n(n+1)/2 and (1,n+1,a+1,n+1,1)"}
  ],
  "bibliography": [
    {"id": "macaulay1927", "ref": "F. S. Macaulay, Some properties of enumeration in the theory of modular systems, Proc. London Math. Soc. 26 (1927), 531-555"},
    {"id": "green1988", "ref": "M. Green, Restrictions of linear series to hyperplanes, and some results of Macaulay and Gotzmann, in: Algebraic curves and projective geometry, Lecture Notes in Math. 1389, Springer (1989), 76-86"},
    {"id": "gotzmann1978", "ref": "G. Gotzmann, Eine Bedingung fuer die Flachheit und das Hilbertpolynom eines graduierten Ringes, Math. Z. 158 (1978), 61-70"},
    {"id": "stanley1978", "ref": "R. Stanley, Hilbert functions of graded algebras, Adv. Math. 28 (1978), 57-83"},
    {"id": "mz-optimal", "ref": "J. Migliore and F. Zanello, Stanley's nonunimodal Gorenstein h-vector is optimal, Proc. Amer. Math. Soc. 145 (2017), 1-9"},
    {"id": "harima1995", "ref": "T. Harima, Characterization of Hilbert functions of Gorenstein Artin algebras with the weak Stanley property, Proc. Amer. Math. Soc. 123 (1995), 3631-3638"},
    {"id": "strano1988", "ref": "R. Strano, A characterization of complete intersection curves in P^3, Proc. Amer. Math. Soc. 104 (1988), 711-715"},
    {"id": "migliore1998", "ref": "J. C. Migliore, Introduction to Liaison Theory and Deficiency Modules, Progress in Mathematics 165, Birkhauser (1998)"},
    {"id": "eliahou-kervaire1990", "ref": "S. Eliahou and M. Kervaire, Minimal resolutions of some monomial ideals, J. Algebra 129 (1990), 1-25"},
    {"id": "pardue1996", "ref": "K. Pardue, Deformation classes of graded modules and maximal Betti numbers, Illinois J. Math. 40 (1996), 564-585"},
    {"id": "bayer-stillman1987", "ref": "D. Bayer and M. Stillman, A criterion for detecting m-regularity, Invent. Math. 87 (1987), 1-11"},
    {"id": "zanello-socle", "ref": "F. Zanello, When is there a unique socle-vector associated to a given h-vector?, Comm. Algebra 34 (2006), 1847-1860"},
    {"id": "trivial-extensions", "ref": "standard construction: trivial extensions of Artinian Gorenstein algebras; see the survey parts of mz-optimal"},
    {"id": "prove19", "ref": "bundled mechanized nonexistence trace for (1,19,17,19,1); reproduce with the prove-19 command"}
  ]
})FACTS";

struct FactBase {
  json data;

  static const FactBase& bundled() {
    static FactBase fb{json::parse(kBundledFacts)};
    return fb;
  }
  static FactBase load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fact base: " + path);
    return FactBase{json::parse(in)};
  }

  bool citation_known(const std::string& id) const {
    for (const auto& e : data.at("bibliography"))
      if (e.at("id").get<std::string>() == id) return true;
    return false;
  }
  std::string reference(const std::string& id) const {
    for (const auto& e : data.at("bibliography"))
      if (e.at("id").get<std::string>() == id)
        return e.at("ref").get<std::string>();
    throw std::out_of_range("unknown citation id: " + id);
  }
};

using Socle4 = std::pair<long long, long long>;  // (a, b) of (1,a,b,a,1)

/// Closure of a set of socle-degree-4 Gorenstein h-vectors under the two
/// extension rules, keeping the first coordinate within the horizon.  The
/// middle entry of the raising rule is capped by C(n+1, 2).
inline std::set<Socle4> extension_closure(const std::set<Socle4>& known,
                                          long long horizon) {
  for (const auto& [a, b] : known) {
    std::vector<Int> h{1, a, b, a, 1};
    if (a < 1 || b < 0 || !is_o_sequence(h).valid)
      throw std::invalid_argument("extension_closure: seed is not a valid "
                                  "symmetric O-sequence");
  }
  std::set<Socle4> out;
  std::vector<Socle4> work(known.begin(), known.end());
  while (!work.empty()) {
    auto [n, a] = work.back();
    work.pop_back();
    if (n > horizon) continue;
    Int cap = binom(Int(n) + 1, 2);
    for (long long b = a; b <= cap; ++b) {
      if (out.insert({n, b}).second && b > a) work.push_back({n, b});
    }
    if (n + 1 <= horizon && !out.count({n + 1, a + 1}))
      work.push_back({n + 1, a + 1});
  }
  return out;
}

enum class Verdict { gorenstein, not_gorenstein, unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::gorenstein: return "gorenstein";
    case Verdict::not_gorenstein: return "not_gorenstein";
    default: return "unknown";
  }
}

struct ProvenanceEntry {
  std::string rule;
  std::string citation;
  std::string detail;
};

struct ClassificationResult {
  long long a = 0, b = 0;
  Verdict verdict = Verdict::unknown;
  std::vector<ProvenanceEntry> provenance;
  std::string reason;
};

/// Decide whether (1,a,b,a,1) is a Gorenstein sequence, as far as the fact
/// base reaches; anything beyond it is reported unknown with the reason.
inline ClassificationResult classify_socle4(long long a, long long b,
                                            const FactBase& fb =
                                                FactBase::bundled()) {
  ClassificationResult r;
  r.a = a;
  r.b = b;

  // symmetric by shape; the growth bound is the first gate
  {
    std::vector<Int> h{1, a, b, a, 1};
    bool shape_ok = a >= 1 && b >= 0;
    OSequenceReport rep;
    if (shape_ok) rep = is_o_sequence(h);
    if (!shape_ok || !rep.valid) {
      r.verdict = Verdict::not_gorenstein;
      std::ostringstream os;
      if (!shape_ok)
        os << "not a valid h-vector shape";
      else
        os << "growth bound violated in degree " << rep.violation_degree
           << " -> " << rep.violation_degree + 1;
      r.provenance.push_back({"o-sequence", "macaulay1927", os.str()});
      return r;
    }
  }

  if (b >= a) {
    r.verdict = Verdict::gorenstein;
    r.provenance.push_back(
        {"b-ge-a", "harima1995",
         "unimodal symmetric case; the growth bound already holds"});
    return r;
  }
  if (a <= 12) {  // here b < a
    r.verdict = Verdict::not_gorenstein;
    r.provenance.push_back(
        {"small-a-unimodal", "mz-optimal",
         "a <= 12 forces b >= a for Gorenstein sequences"});
    return r;
  }
  if (b == a - 1) {  // a >= 13 here
    r.verdict = Verdict::gorenstein;
    r.provenance.push_back(
        {"seed", "stanley1978", "(1,13,12,13,1) is a Gorenstein sequence"});
    if (a > 13) {
      std::ostringstream os;
      os << "raising rule applied " << (a - 13) << " times from (1,13,12,13,1)";
      r.provenance.push_back({"extension-rules", "trivial-extensions",
                              os.str()});
    }
    return r;
  }
  if (b == a - 2) {
    if (a >= 20) {
      r.verdict = Verdict::gorenstein;
      r.provenance.push_back(
          {"seed", "mz-optimal", "(1,20,18,20,1) is a Gorenstein sequence"});
      if (a > 20) {
        std::ostringstream os;
        os << "raising rule applied " << (a - 20)
           << " times from (1,20,18,20,1)";
        r.provenance.push_back({"extension-rules", "trivial-extensions",
                                os.str()});
      }
    } else {  // 13 <= a <= 19
      r.verdict = Verdict::not_gorenstein;
      if (a < 19) {
        std::ostringstream os;
        os << "if (1," << a << "," << b << "," << a << ",1) were Gorenstein, "
           << (19 - a) << " applications of the raising rule would make "
           << "(1,19,17,19,1) Gorenstein";
        r.provenance.push_back({"extension-rules", "trivial-extensions",
                                os.str()});
      }
      r.provenance.push_back(
          {"nonexistence-19-17", "prove19",
           "(1,19,17,19,1) is not a Gorenstein sequence"});
    }
    return r;
  }

  r.verdict = Verdict::unknown;
  r.reason = "for fixed a >= 13 the exact set of values b < a - 2 admitting "
             "a Gorenstein sequence is not pinned down by the fact base";
  (void)fb;
  return r;
}

/// Closure-level conflict scan: the Gorenstein facts closed under the
/// extension rules must stay disjoint from everything the nonexistence
/// facts rule out.  Throws on conflict.
inline void verify_fact_base(const FactBase& fb = FactBase::bundled(),
                             long long horizon = 40) {
  std::set<Socle4> seeds;
  for (const auto& e : fb.data.at("gorenstein_socle4_seeds"))
    seeds.insert({e.at("a").get<long long>(), e.at("b").get<long long>()});
  // the unimodal family is also known Gorenstein
  for (long long a = 1; a <= horizon; ++a) {
    Int cap = binom(Int(a) + 1, 2);
    for (long long b = a; b <= cap; ++b) seeds.insert({a, b});
  }
  auto gor = extension_closure(seeds, horizon);

  std::set<Socle4> not_gor;
  std::vector<Socle4> work;
  for (const auto& e : fb.data.at("not_gorenstein_socle4"))
    work.push_back({e.at("a").get<long long>(), e.at("b").get<long long>()});
  // downward closure under the contrapositives of the two rules
  while (!work.empty()) {
    auto [n, bb] = work.back();
    work.pop_back();
    if (n < 1 || bb < 0) continue;
    if (!not_gor.insert({n, bb}).second) continue;
    if (bb >= 1) work.push_back({n, bb - 1});
    if (n >= 2 && bb >= 1) work.push_back({n - 1, bb - 1});
  }
  // the a <= 12 rule
  for (long long a = 1; a <= 12; ++a)
    for (long long bb = 1; bb < a; ++bb) not_gor.insert({a, bb});

  for (const auto& p : gor)
    if (not_gor.count(p)) {
      std::ostringstream os;
      os << "fact base conflict at (1," << p.first << "," << p.second << ","
         << p.first << ",1)";
      throw std::logic_error(os.str());
    }
  // every citation used by the facts and rules must resolve
  for (const char* key : {"gorenstein_socle4_seeds", "not_gorenstein_socle4",
                          "rules"})
    for (const auto& e : fb.data.at(key))
      if (!fb.citation_known(e.at("citation").get<std::string>()))
        throw std::logic_error("unresolved citation in fact base: " +
                               e.at("citation").get<std::string>());
}

}  // namespace macgreen

#endif  // MACGREEN_FACTS_HPP
