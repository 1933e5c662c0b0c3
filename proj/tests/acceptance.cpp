// Acceptance suite: exercises every corpus algebra end to end and prints one
// pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "plie/corpus.hpp"
#include "plie/format.hpp"
#include "plie/series.hpp"

using namespace plie;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Harness {
  int failures = 0;
  void report(int num, const std::string& name, bool ok, double ms,
              const std::string& detail = "") {
    std::printf("criterion %2d  %-46s %s  (%.0f ms)%s%s\n", num, name.c_str(),
                ok ? "PASS" : "FAIL", ms, detail.empty() ? "" : "  ",
                detail.c_str());
    if (!ok) ++failures;
  }
};

const Subspace& term_at(const SeriesResult& s, std::size_t i) {
  return s.terms[std::min(i, s.terms.size() - 1)];
}

// single structure-constant perturbation; deterministic under the given rng
LieSuperData mutate(const LieSuperData& L, std::mt19937& rng) {
  LieSuperData M = L;
  const Fp p = M.F.p();
  bool hit_pmap = M.n0 > 0 && (rng() % 5 == 0);
  if (hit_pmap) {
    int i = static_cast<int>(rng() % M.n0);
    int t = static_cast<int>(rng() % M.n0);
    Fp old = M.pmap_tab[i][t];
    Fp next = (old + 1 + rng() % (p - 1)) % p;
    M.pmap_tab[i][t] = next;
  } else {
    int n = M.dim();
    int i = static_cast<int>(rng() % n);
    int j = static_cast<int>(rng() % n);
    if (i > j) std::swap(i, j);
    int t = static_cast<int>(rng() % n);
    Vec& row = M.bracket_tab[M.tri(i, j)];
    Fp old = row[t];
    row[t] = (old + 1 + rng() % (p - 1)) % p;
  }
  return M;
}

}  // namespace

int main() {
  Harness h;
  const auto& corpus = builtin_corpus();

  std::vector<LieSuperData> algebras;
  std::vector<PbwAlgebra> envelopes(corpus.size());
  for (const auto& e : corpus) algebras.push_back(parse_algebra(e.json_text));

  // 1. PBW dimension, under 1 s per algebra
  {
    double t0 = now_ms();
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      double b0 = now_ms();
      envelopes[i] = build_enveloping_algebra(algebras[i]);
      double built = now_ms() - b0;
      std::uint64_t want =
          pow_clamped(algebras[i].F.p(), algebras[i].n0, 1u << 20);
      for (int k = 0; k < algebras[i].n1; ++k) want *= 2;
      if (envelopes[i].dim() != want || built >= 1000.0) {
        ok = false;
        detail = corpus[i].name + ": dim " +
                 std::to_string(envelopes[i].dim()) + " vs " +
                 std::to_string(want) + " in " + std::to_string(built) + " ms";
      }
    }
    h.report(1, "PBW dimension p^n0 * 2^n1, < 1 s each", ok, now_ms() - t0,
             detail);
  }

  // 2. Theorem equivalence suite over the whole corpus, < 5 min
  std::vector<ClassificationReport> reports(corpus.size());
  {
    double t0 = now_ms();
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      reports[i] = cross_validate(algebras[i], corpus[i].name);
      const ClassificationReport& r = reports[i];
      auto v = [](const PropertyReport& p) { return p.oracle == Verdict::yes; };
      std::array<bool, 4> oracle = {v(r.nonmatrix), v(r.solvable),
                                    v(r.nilpotent), v(r.super_nilpotent)};
      auto c = [](const PropertyReport& p) {
        return p.condition == Verdict::yes;
      };
      std::array<bool, 4> condition = {c(r.nonmatrix), c(r.solvable),
                                       c(r.nilpotent), c(r.super_nilpotent)};
      if (r.axioms != "pass" || !r.all_agree() || r.any_inconclusive() ||
          r.any_check_failed() || oracle != corpus[i].expected ||
          condition != corpus[i].expected) {
        ok = false;
        if (detail.empty()) detail = corpus[i].name;
      }
    }
    double ms = now_ms() - t0;
    if (ms >= 300000.0) ok = false;
    h.report(2, "condition/oracle agreement on the corpus", ok, ms, detail);
  }

  // 3. Grassmann p=3, n1=3: gamma_3 = 0 and all 3^7 elements cube to zero
  {
    double t0 = now_ms();
    bool ok = true;
    std::size_t gi = 0;
    while (corpus[gi].name != "grassmann3_p3") ++gi;
    const PbwAlgebra& U = envelopes[gi];
    SeriesResult gamma = lie_lower_central_series(U.alg);
    if (!(gamma.terminated && gamma.class_or_length == 2)) ok = false;
    Subspace omega = augmentation_ideal(U);
    if (omega.dim() != 7) ok = false;
    NilIndexResult nil = nil_index_exact(U.alg, omega, kDefaultEnumCap);
    if (!(nil.verdict == Tri::yes && nil.index == 3)) ok = false;
    double ms = now_ms() - t0;
    if (ms >= 30000.0) ok = false;
    h.report(3, "Grassmann: gamma_3 = 0, nil of index 3", ok, ms);
  }

  // 4. class bound 2cd - c - d + 2 on every pipeline ideal
  {
    double t0 = now_ms();
    bool ok = true;
    int applicable = 0;
    std::string detail;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const AssocAlgebra& A = envelopes[i].alg;
      std::vector<Subspace> ideals;
      ideals.push_back(Subspace(A.F, static_cast<int>(A.dim)));  // I = 0
      ideals.push_back(two_sided_ideal(A, commutator_span(A)));
      ideals.push_back(augmentation_ideal(envelopes[i]));
      SeriesResult delta = lie_derived_series(A);
      if (delta.terminated && delta.class_or_length >= 2)
        ideals.push_back(two_sided_ideal(A, double_commutator_triple_span(A)));
      for (const Subspace& I : ideals) {
        ClassBoundReport cb = check_nilpotent_ideal_class_bound(A, I);
        if (!cb.applicable) continue;
        ++applicable;
        if (!cb.holds) {
          ok = false;
          detail = corpus[i].name;
        }
        if (cb.c == 1 &&
            (cb.bound != cb.d + 1 || cb.actual_class != cb.d)) {
          ok = false;
          detail = corpus[i].name + " (c=1 edge)";
        }
      }
    }
    if (applicable == 0) ok = false;
    h.report(4, "nilpotent-ideal Lie class bound", ok, now_ms() - t0,
             "instances: " + std::to_string(applicable));
  }

  // 5. solvable of length >= 2: the [[R,R],[R,R],R] ideal is nilpotent
  {
    double t0 = now_ms();
    bool ok = true;
    int instances = 0;
    std::string indices;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const AssocAlgebra& A = envelopes[i].alg;
      SeriesResult delta = lie_derived_series(A);
      if (!(delta.terminated && delta.class_or_length >= 2)) continue;
      ++instances;
      Subspace J = two_sided_ideal(A, double_commutator_triple_span(A));
      NilpotencyResult nil = nilpotency_index(A, J);
      if (!nil.nilpotent) ok = false;
      indices += corpus[i].name + ":" + std::to_string(nil.index) + " ";
    }
    if (instances == 0) ok = false;
    h.report(5, "double-commutator ideal nilpotent when solvable", ok,
             now_ms() - t0, indices);
  }

  // 6. super class c forces delta_c into the even part
  {
    double t0 = now_ms();
    bool ok = true;
    int instances = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const AssocAlgebra& A = envelopes[i].alg;
      SeriesResult super = super_central_series(A);
      if (!super.terminated) continue;
      ++instances;
      SeriesResult delta = lie_derived_series(A);
      const Subspace& dc =
          term_at(delta, static_cast<std::size_t>(super.class_or_length));
      Subspace even_cols = A.even_coordinate_subspace();
      if (!even_cols.contains_all(dc)) ok = false;
    }
    if (instances == 0) ok = false;
    h.report(6, "derived term even at the super class", ok, now_ms() - t0,
             "instances: " + std::to_string(instances));
  }

  // 7. L0 p-nilpotent <=> augmentation ideal nilpotent; and then L nilpotent
  {
    double t0 = now_ms();
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const LieSuperData& L = algebras[i];
      PMapClosure pm(L);
      PNilResult pn =
          is_p_nilpotent(L, Subspace::full(L.F, L.n0), kDefaultEnumCap, pm);
      if (pn.verdict == Tri::budget) {
        ok = false;
        detail = corpus[i].name + " over budget";
        continue;
      }
      NilpotencyResult omega_nil =
          nilpotency_index(envelopes[i].alg, augmentation_ideal(envelopes[i]));
      bool lhs = pn.verdict == Tri::yes;
      if (lhs != omega_nil.nilpotent) {
        ok = false;
        detail = corpus[i].name;
      }
      if (lhs && !lower_central_series(L).terminated) {
        ok = false;
        detail = corpus[i].name + " (Engel)";
      }
    }
    h.report(7, "augmentation nilpotent iff L0 p-nilpotent", ok,
             now_ms() - t0, detail);
  }

  // 8. negative control: sl2 at p = 5, under 60 s
  {
    double t0 = now_ms();
    bool ok = true;
    std::size_t si = 0;
    while (corpus[si].name != "sl2_p5") ++si;
    const AssocAlgebra& A = envelopes[si].alg;
    Subspace T = two_sided_ideal(A, commutator_span(A));
    NilpotencyResult nil = nilpotency_index(A, T);
    if (nil.nilpotent || !nil.stabilized) ok = false;
    const ClassificationReport& r = reports[si];
    if (r.pnil_L0L0 != Verdict::no) ok = false;
    if (!r.all_agree()) ok = false;
    double ms = now_ms() - t0;
    if (ms >= 60000.0) ok = false;
    h.report(8, "sl2 at p=5: non-nilpotent commutator ideal", ok, ms);
  }

  // 9. fuzzing: 100 single-constant mutations, no silent acceptance
  {
    double t0 = now_ms();
    bool ok = true;
    std::mt19937 rng(20240817);
    const char* small[] = {"abelian_p3",        "heisenberg_p3",
                           "nilpotent_pmap_p3", "toral_clifford_p3",
                           "clifford2_p3",      "weight_vector_p3",
                           "odd_module_p3",     "grassmann2_p3",
                           "grassmann3_p3",     "sl2_p3",
                           "mixed_witness_p3"};
    const std::size_t pool = sizeof(small) / sizeof(small[0]);
    int rejected = 0, agreed = 0;
    for (int t = 0; t < 100; ++t) {
      LieSuperData L = corpus_algebra(small[t % pool]);
      LieSuperData M = mutate(L, rng);
      AxiomReport ax = verify_axioms(M);
      if (!ax.passed()) {
        ++rejected;
        continue;
      }
      if (!ax.fully_verified()) {
        ok = false;  // at these sizes every check must be decidable
        continue;
      }
      ClassificationReport rep = cross_validate(M, "mutant");
      if (rep.all_agree() && !rep.any_inconclusive() && !rep.any_check_failed())
        ++agreed;
      else
        ok = false;
    }
    if (rejected + agreed != 100) ok = false;
    h.report(9, "mutation fuzzing: rejected or still consistent", ok,
             now_ms() - t0,
             "rejected " + std::to_string(rejected) + ", valid " +
                 std::to_string(agreed));
  }

  // 10. annihilator bound and the product-commutator expansion, randomized
  {
    double t0 = now_ms();
    bool ok = true;
    std::mt19937 rng(97);
    for (const char* name : {"heisenberg_p3", "grassmann3_p3"}) {
      std::size_t i = 0;
      while (corpus[i].name != name) ++i;
      const AssocAlgebra& A = envelopes[i].alg;
      auto rand_subspace = [&](int gens) {
        Subspace s(A.F, static_cast<int>(A.dim));
        for (int g = 0; g < gens; ++g) {
          Vec v(A.dim);
          for (auto& x : v) x = static_cast<Fp>(rng() % A.F.p());
          s.insert(std::move(v));
        }
        return s;
      };
      for (int t = 0; t < 100; ++t) {
        Subspace Sa = rand_subspace(1 + static_cast<int>(rng() % 3));
        Subspace Sb = rand_subspace(1 + static_cast<int>(rng() % 3));
        Subspace Sc = rand_subspace(1 + static_cast<int>(rng() % 3));
        if (!check_bracket_product_expansion(A, Sa, Sb, Sc,
                                             static_cast<int>(rng() % 4)))
          ok = false;
      }
      for (int t = 0; t < 100; ++t) {
        // bilinear map (u, v) -> [u, v] on random small subspaces U, V
        Subspace Su = rand_subspace(1 + static_cast<int>(rng() % 3));
        Subspace Sv = rand_subspace(1 + static_cast<int>(rng() % 3));
        BilinearMap phi;
        phi.F = A.F;
        phi.dim_u = Su.dim();
        phi.dim_v = Sv.dim();
        phi.dim_w = static_cast<int>(A.dim);
        phi.tensor.resize(std::size_t(phi.dim_u) * phi.dim_v);
        for (int a = 0; a < phi.dim_u; ++a)
          for (int b = 0; b < phi.dim_v; ++b)
            phi.tensor[std::size_t(a) * phi.dim_v + b] =
                A.commutator(Su.rows()[a], Sv.rows()[b]);
        AnnihilatorBoundReport nb = check_annihilator_bound(phi, kDefaultEnumCap);
        if (nb.status != Tri::yes) ok = false;
      }
    }
    h.report(10, "annihilator bound + product expansion, randomized", ok,
             now_ms() - t0);
  }

  if (h.failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", h.failures);
  return h.failures;
}
