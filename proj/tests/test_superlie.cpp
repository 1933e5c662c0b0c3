#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plie/corpus.hpp"
#include "plie/format.hpp"
#include "plie/pbw.hpp"

using namespace plie;

namespace {

Vec elem(const LieSuperData& L, std::initializer_list<int> coords) {
  Vec v;
  for (int c : coords) v.push_back(L.F.reduce(c));
  while (static_cast<int>(v.size()) < L.dim()) v.push_back(0);
  return v;
}

Vec random_even(const LieSuperData& L, std::mt19937& rng) {
  Vec v(L.n0);
  for (auto& x : v) x = static_cast<Fp>(rng() % L.F.p());
  return v;
}

}  // namespace

TEST_CASE("bracket antisymmetry on the Heisenberg algebra") {
  LieSuperData L = corpus_algebra("heisenberg_p5");
  Vec e1 = elem(L, {1, 0, 0}), e2 = elem(L, {0, 1, 0});
  CHECK(L.bracket(e1, e2) == elem(L, {0, 0, 1}));
  CHECK(L.bracket(e2, e1) == elem(L, {0, 0, -1}));
  CHECK(is_zero_vec(L.bracket(e1, e1)));
  // bilinearity spot check: (e1+e2, e1-e2) = -2 e3
  CHECK(L.bracket(elem(L, {1, 1, 0}), elem(L, {1, -1, 0})) ==
        elem(L, {0, 0, -2}));
}

TEST_CASE("axioms pass on every builtin corpus algebra") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    LieSuperData L = parse_algebra(e.json_text);
    AxiomReport rep = verify_axioms(L);
    CHECK(rep.passed());
    CHECK(rep.fully_verified());
  }
}

TEST_CASE("a broken Jacobi constant is caught and the triple is named") {
  LieSuperData L = corpus_algebra("heisenberg_p3");
  // add (e1,e3) = e1: then ((e1,e2),e3) = (e3,e3) = 0 but moving e3 inside
  // the bracket does not vanish any more
  L.bracket_tab[L.tri(0, 2)] = elem(L, {1, 0, 0});
  AxiomReport rep = verify_axioms(L);
  CHECK_FALSE(rep.passed());
  bool jacobi_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "jacobi" && c.status == CheckStatus::fail) {
      jacobi_failed = true;
      CHECK(c.detail.find("(") != std::string::npos);
      CHECK(c.detail.find("e") != std::string::npos);
    }
  CHECK(jacobi_failed);
}

TEST_CASE("grading violations are rejected") {
  LieSuperData L = corpus_algebra("toral_clifford_p3");
  // (z,z) must be even; point it at z itself
  LieSuperData bad = L;
  bad.bracket_tab[bad.tri(1, 1)] = elem(bad, {0, 1});
  AxiomReport rep = verify_axioms(bad);
  CHECK_FALSE(rep.passed());
  CHECK(rep.first_failure().find("grading") != std::string::npos);
}

TEST_CASE("a wrong p-map table fails axiom (b)") {
  LieSuperData L = corpus_algebra("heisenberg_p3");
  L.pmap_tab[0] = Vec{1, 0, 0};  // e1^[3] = e1, but (ad e1)^3 = 0 != ad e1
  AxiomReport rep = verify_axioms(L);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("p-map extension") {
  SUBCASE("agrees with the table on basis elements") {
    LieSuperData L = corpus_algebra("sl2_p5");
    PMapClosure pm(L);
    for (int i = 0; i < L.n0; ++i) {
      Vec e(L.n0, 0);
      e[i] = 1;
      CHECK(pm.p_power(e) == L.pmap_tab[i]);
    }
  }
  SUBCASE("additive on an abelian even part") {
    LieSuperData L = corpus_algebra("abelian_p3");
    PMapClosure pm(L);
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
      Vec x = random_even(L, rng), y = random_even(L, rng);
      Vec s = vec_add(L.F, x, y);
      CHECK(pm.p_power(s) == vec_add(L.F, pm.p_power(x), pm.p_power(y)));
    }
  }
  SUBCASE("matches p-th powers computed inside u(L) by straightening") {
    // dual route: the Jacobson sum rule against the associative oracle
    for (const char* name : {"heisenberg_p3", "nilpotent_pmap_p3", "sl2_p3",
                             "borel_p5", "sl2_p5"}) {
      CAPTURE(name);
      LieSuperData L = corpus_algebra(name);
      PbwAlgebra U = build_enveloping_algebra(L);
      PMapClosure pm(L);
      Subspace even_full = Subspace::full(L.F, L.n0);
      for_each_element(even_full, kDefaultEnumCap, [&](const Vec& x) {
        Vec in_u = U.embed(L.embed_even(x));
        if (is_zero_vec(in_u)) {
          CHECK(is_zero_vec(pm.p_power(x)));
          return;
        }
        Vec xp = U.alg.power(in_u, static_cast<int>(L.F.p()));
        Vec expected = U.embed(L.embed_even(pm.p_power(x)));
        CHECK(xp == expected);
      });
    }
  }
  SUBCASE("peeling order does not change the result") {
    for (const char* name : {"sl2_p5", "nilpotent_pmap_p3", "borel_p5"}) {
      CAPTURE(name);
      LieSuperData L = corpus_algebra(name);
      PMapClosure pm(L);
      std::mt19937 rng(42);
      for (int t = 0; t < 30; ++t) {
        Vec x = random_even(L, rng);
        CHECK(pm.p_power(x) == pm.p_power_reversed(x));
      }
    }
  }
}

TEST_CASE("restricted ideal closure") {
  LieSuperData L = corpus_algebra("heisenberg_p3");
  SUBCASE("zero stays zero") {
    auto r = restricted_ideal_closure(L, GradedSubspace::zero(L));
    CHECK(r.space.is_zero());
    CHECK(r.p_closure == CheckStatus::pass);
  }
  SUBCASE("the span of e1 closes to span{e1, e3}") {
    GradedSubspace X = GradedSubspace::zero(L);
    X.even.insert(Vec{1, 0, 0});
    auto r = restricted_ideal_closure(L, X);
    CHECK(r.space.even.dim() == 2);
    CHECK(r.space.even.contains(Vec{1, 0, 0}));
    CHECK(r.space.even.contains(Vec{0, 0, 1}));
    CHECK_FALSE(r.space.even.contains(Vec{0, 1, 0}));
    CHECK(is_restricted_ideal(L, r.space));
  }
  SUBCASE("an existing restricted ideal is a fixed point") {
    GradedSubspace Z = center(L);
    auto r = restricted_ideal_closure(L, Z);
    CHECK(r.space == Z);
  }
}

TEST_CASE("series on L") {
  SUBCASE("abelian: class 1") {
    LSeries s = lower_central_series(corpus_algebra("abelian_p3"));
    CHECK(s.terminated);
    CHECK(s.class_or_length == 1);
  }
  SUBCASE("Heisenberg: class 2") {
    LSeries s = lower_central_series(corpus_algebra("heisenberg_p5"));
    CHECK(s.terminated);
    CHECK(s.class_or_length == 2);
  }
  SUBCASE("sl2 is not nilpotent; the series stabilizes at L") {
    LieSuperData L = corpus_algebra("sl2_p5");
    LSeries s = lower_central_series(L);
    CHECK_FALSE(s.terminated);
    CHECK(s.terms.back() == GradedSubspace::full(L));
  }
  SUBCASE("derived series of the Borel subalgebra") {
    LSeries s = derived_series(corpus_algebra("borel_p5"));
    CHECK(s.terminated);
    CHECK(s.class_or_length == 2);  // delta_1 = Fe, delta_2 = 0
  }
}

TEST_CASE("center and quotients") {
  LieSuperData L = corpus_algebra("heisenberg_p3");
  GradedSubspace Z = center(L);
  CHECK(Z.even.dim() == 1);
  CHECK(Z.odd.dim() == 0);
  CHECK(Z.even.contains(Vec{0, 0, 1}));

  SUBCASE("quotient by the center is abelian of dim 2") {
    LieSuperData Q = quotient_by_ideal(L, Z);
    CHECK(Q.n0 == 2);
    CHECK(Q.n1 == 0);
    for (const Vec& row : Q.bracket_tab) CHECK(is_zero_vec(row));
    CHECK(verify_axioms(Q).passed());
  }
  SUBCASE("quotient by zero is a copy") {
    LieSuperData Q = quotient_by_ideal(L, GradedSubspace::zero(L));
    CHECK(Q.n0 == L.n0);
    CHECK(Q.bracket_tab == L.bracket_tab);
    CHECK(Q.pmap_tab == L.pmap_tab);
  }
  SUBCASE("a non-ideal is rejected") {
    GradedSubspace X = GradedSubspace::zero(L);
    X.even.insert(Vec{1, 0, 0});  // (e1, e2) = e3 escapes
    CHECK_THROWS_AS(quotient_by_ideal(L, X), Error);
  }
  SUBCASE("quotients of every corpus algebra by their centers pass axioms") {
    for (const auto& e : builtin_corpus()) {
      CAPTURE(e.name);
      LieSuperData A = parse_algebra(e.json_text);
      if (A.dim() > 6) continue;  // keep the loop cheap
      LieSuperData Q = quotient_by_ideal(A, center(A));
      CHECK(verify_axioms(Q).passed());
    }
  }
}

TEST_CASE("p-nilpotence of subspaces") {
  SUBCASE("the zero space is p-nilpotent with index 0") {
    LieSuperData L = corpus_algebra("sl2_p5");
    PMapClosure pm(L);
    PNilResult r = is_p_nilpotent(L, Subspace(L.F, L.n0), 10, pm);
    CHECK(r.verdict == Tri::yes);
    CHECK(r.index == 0);
  }
  SUBCASE("a toral element is a fixed point witness") {
    LieSuperData L = corpus_algebra("toral_p3");
    PMapClosure pm(L);
    PNilResult r =
        is_p_nilpotent(L, Subspace::full(L.F, L.n0), kDefaultEnumCap, pm);
    CHECK(r.verdict == Tri::no);
    CHECK_FALSE(is_zero_vec(r.witness));
  }
  SUBCASE("Heisenberg at p=5: all 125 elements vanish at the first power") {
    LieSuperData L = corpus_algebra("heisenberg_p5");
    PMapClosure pm(L);
    PNilResult r =
        is_p_nilpotent(L, Subspace::full(L.F, L.n0), kDefaultEnumCap, pm);
    CHECK(r.verdict == Tri::yes);
    CHECK(r.index == 1);
  }
  SUBCASE("budget exhaustion is reported, never sampled") {
    LieSuperData L = corpus_algebra("heisenberg_p5");
    PMapClosure pm(L);
    PNilResult r = is_p_nilpotent(L, Subspace::full(L.F, L.n0), 100, pm);
    CHECK(r.verdict == Tri::budget);
  }
}

TEST_CASE("nilpotent module over the even part") {
  CHECK(nilpotent_module_over_even(corpus_algebra("abelian_p3")).nilpotent);
  CHECK(nilpotent_module_over_even(corpus_algebra("abelian_p3")).steps == 1);
  CHECK(nilpotent_module_over_even(corpus_algebra("heisenberg_p3")).steps == 2);
  CHECK_FALSE(nilpotent_module_over_even(corpus_algebra("sl2_p5")).nilpotent);
  CHECK_FALSE(
      nilpotent_module_over_even(corpus_algebra("weight_vector_p3")).nilpotent);
  CHECK(nilpotent_module_over_even(corpus_algebra("odd_module_p3")).nilpotent);
}

TEST_CASE("Engel consistency: p-nilpotent even part forces nilpotence") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    LieSuperData L = parse_algebra(e.json_text);
    PMapClosure pm(L);
    PNilResult pn =
        is_p_nilpotent(L, Subspace::full(L.F, L.n0), kDefaultEnumCap, pm);
    REQUIRE(pn.verdict != Tri::budget);
    if (pn.verdict == Tri::yes) CHECK(lower_central_series(L).terminated);
  }
}

TEST_CASE("quotients by random restricted-ideal closures pass the axioms") {
  std::mt19937 rng(77);
  for (const char* name : {"heisenberg_p5", "nilpotent_pmap_p3",
                           "odd_module_p3", "mixed_witness_p3", "borel_p5"}) {
    CAPTURE(name);
    LieSuperData L = corpus_algebra(name);
    for (int t = 0; t < 8; ++t) {
      GradedSubspace X = GradedSubspace::zero(L);
      Vec ev(L.n0), od(L.n1);
      for (auto& c : ev) c = static_cast<Fp>(rng() % L.F.p());
      for (auto& c : od) c = static_cast<Fp>(rng() % L.F.p());
      X.even.insert(std::move(ev));
      X.odd.insert(std::move(od));
      IdealClosureResult closed = restricted_ideal_closure(L, X);
      REQUIRE(closed.p_closure == CheckStatus::pass);
      REQUIRE(is_restricted_ideal(L, closed.space));
      LieSuperData Q = quotient_by_ideal(L, closed.space);
      CHECK(Q.dim() == L.dim() - closed.space.dim());
      CHECK(verify_axioms(Q).passed());
    }
  }
}

TEST_CASE("(ad y)^2 = (1/2) ad (y,y) for every odd basis element") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    LieSuperData L = parse_algebra(e.json_text);
    for (int i = L.n0; i < L.dim(); ++i) {
      Vec y(L.dim(), 0);
      y[i] = 1;
      Vec yy = L.bracket(y, y);
      for (int j = 0; j < L.dim(); ++j) {
        Vec z(L.dim(), 0);
        z[j] = 1;
        Vec lhs = L.bracket(L.bracket(z, y), y);
        Vec rhs = scaled(L.F, L.bracket(z, yy), L.F.half());
        CHECK(lhs == rhs);
      }
    }
  }
}
