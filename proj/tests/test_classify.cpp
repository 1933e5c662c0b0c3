#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/corpus.hpp"
#include "plie/format.hpp"

using namespace plie;

namespace {

WitnessSearch witness(const char* name, bool require_module) {
  LieSuperData L = corpus_algebra(name);
  PMapClosure pm(L);
  return find_witness_subspace(L, require_module, kDefaultEnumCap, pm);
}

}  // namespace

TEST_CASE("witness search") {
  SUBCASE("trivial odd part: M = 0 passes") {
    WitnessSearch w = witness("heisenberg_p3", true);
    CHECK(w.status == Verdict::yes);
    CHECK(w.M.dim() == 0);
    CHECK(w.codim == 0);
    CHECK(w.module_closed);
  }
  SUBCASE("toral square forces the witness down to a hyperplane") {
    // (z,z) = x is toral, so M = L1 fails and M = 0 (codim 1) passes
    WitnessSearch w = witness("toral_clifford_p3", true);
    CHECK(w.status == Verdict::yes);
    CHECK(w.M.dim() == 0);
    CHECK(w.codim == 1);
    CHECK(w.pnil_index == 0);
  }
  SUBCASE("a genuine hyperplane witness: span{b} when only (a,a) is toral") {
    WitnessSearch w = witness("mixed_witness_p3", true);
    CHECK(w.status == Verdict::yes);
    CHECK(w.codim == 1);
    CHECK(w.M.dim() == 1);
    CHECK(w.M.contains(Vec{0, 1}));       // b
    CHECK_FALSE(w.M.contains(Vec{1, 0}));  // not a
    CHECK(w.module_closed);
  }
  SUBCASE("the rank-2 Clifford obstruction has no witness") {
    // for y = alpha a + beta b, (y,y) = (alpha^2 + beta^2) x and the form
    // alpha^2 + beta^2 has no nontrivial zero over GF(3): every candidate
    // line and L1 itself bracket onto the toral x
    for (bool module : {true, false}) {
      WitnessSearch w = witness("clifford2_p3", module);
      CHECK(w.status == Verdict::no);
      CHECK_FALSE(w.found);
    }
  }
  SUBCASE("weight vector: M must be all of L1 and is a module") {
    WitnessSearch w = witness("weight_vector_p3", true);
    CHECK(w.status == Verdict::yes);
    CHECK(w.codim == 0);
    CHECK(w.M.is_full());
  }
  SUBCASE("deterministic across reparses") {
    for (int t = 0; t < 3; ++t) {
      WitnessSearch a = witness("toral_clifford_p3", false);
      WitnessSearch b = witness("toral_clifford_p3", false);
      CHECK(a.M == b.M);
      CHECK(a.codim == b.codim);
    }
  }
}

TEST_CASE("classification agrees with the annotated corpus on small entries") {
  for (const auto& e : builtin_corpus()) {
    if (e.name == "abelian_big_p3" || e.name == "sl2_p5" ||
        e.name == "heisenberg_p5" || e.name == "poly_grassmann_p5")
      continue;  // the acceptance suite runs the full corpus
    CAPTURE(e.name);
    LieSuperData L = parse_algebra(e.json_text);
    ClassificationReport rep = cross_validate(L, e.name);
    CHECK(rep.axioms == "pass");
    CHECK(rep.all_agree());
    CHECK_FALSE(rep.any_inconclusive());
    CHECK_FALSE(rep.any_check_failed());
    CHECK((rep.nonmatrix.oracle == Verdict::yes) == e.expected[0]);
    CHECK((rep.solvable.oracle == Verdict::yes) == e.expected[1]);
    CHECK((rep.nilpotent.oracle == Verdict::yes) == e.expected[2]);
    CHECK((rep.super_nilpotent.oracle == Verdict::yes) == e.expected[3]);
  }
}

TEST_CASE("condition side fails through the expected clause") {
  SUBCASE("sl2: (L0,L0) is not p-nilpotent") {
    ClassificationReport rep =
        cross_validate(corpus_algebra("sl2_p3"), "sl2_p3");
    CHECK(rep.pnil_L0L0 == Verdict::no);
    CHECK(rep.nonmatrix.condition == Verdict::no);
  }
  SUBCASE("clifford2: (L0,L0) is fine, the witness is missing") {
    ClassificationReport rep =
        cross_validate(corpus_algebra("clifford2_p3"), "clifford2_p3");
    CHECK(rep.pnil_L0L0 == Verdict::yes);
    CHECK(rep.witness_module_rows.empty());
    CHECK(rep.nonmatrix.condition == Verdict::no);
  }
  SUBCASE("weight vector: only the nilpotence clauses fail") {
    ClassificationReport rep =
        cross_validate(corpus_algebra("weight_vector_p3"), "weight_vector_p3");
    CHECK(rep.nonmatrix.condition == Verdict::yes);
    CHECK(rep.solvable.condition == Verdict::yes);
    CHECK(rep.nilpotent.condition == Verdict::no);
    CHECK(rep.super_nilpotent.condition == Verdict::no);
  }
}

TEST_CASE("budget exhaustion surfaces as inconclusive, not as a verdict") {
  LieSuperData L = corpus_algebra("heisenberg_p3");
  ClassifyOptions opt;
  opt.caps.dim_cap = 10;  // dim u(L) = 27 > 10
  ClassificationReport rep = cross_validate(L, "capped", opt);
  CHECK(rep.any_inconclusive());
  CHECK(rep.nonmatrix.oracle == Verdict::inconclusive);
  CHECK_FALSE(rep.budget_notes.empty());
}

TEST_CASE("reports are deterministic modulo timing") {
  LieSuperData L = corpus_algebra("toral_clifford_p3");
  ClassificationReport a = cross_validate(L, "x");
  ClassificationReport b = cross_validate(L, "x");
  CHECK(emit_report_without_timing(a) == emit_report_without_timing(b));
}

TEST_CASE("every corpus verdict respects the implication lattice") {
  for (const auto& e : builtin_corpus()) {
    if (e.name == "abelian_big_p3") continue;
    CAPTURE(e.name);
    LieSuperData L = parse_algebra(e.json_text);
    ClassificationReport rep = cross_validate(L, e.name);
    auto implies = [](Verdict a, Verdict b) {
      return !(a == Verdict::yes && b == Verdict::no);
    };
    CHECK(implies(rep.nilpotent.oracle, rep.solvable.oracle));
    CHECK(implies(rep.super_nilpotent.oracle, rep.solvable.oracle));
    CHECK(implies(rep.nilpotent.condition, rep.solvable.condition));
    CHECK(implies(rep.super_nilpotent.condition, rep.solvable.condition));
    CHECK(implies(rep.solvable.condition, rep.nonmatrix.condition));
  }
}
