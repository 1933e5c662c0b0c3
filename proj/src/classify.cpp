#include "plie/classify.hpp"

#include <algorithm>
#include <chrono>

namespace plie {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "inconclusive";
  }
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "yes") return Verdict::yes;
  if (s == "no") return Verdict::no;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw Error("unknown verdict: " + s);
}

Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive)
    return Verdict::inconclusive;
  return Verdict::yes;
}

Verdict verdict_or(Verdict a, Verdict b) {
  if (a == Verdict::yes || b == Verdict::yes) return Verdict::yes;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive)
    return Verdict::inconclusive;
  return Verdict::no;
}

namespace {

bool module_closed_under_even(const LieSuperData& L, const Subspace& M) {
  for (const Vec& m : M.rows()) {
    Vec mf = L.embed_odd(m);
    for (int j = 0; j < L.n0; ++j) {
      Vec ej(L.dim(), 0);
      ej[j] = 1;
      if (!M.contains(L.odd_part(L.bracket(mf, ej)))) return false;
    }
  }
  return true;
}

Subspace bracket_with_odd_span(const LieSuperData& L, const Subspace& M) {
  // span (M, L1) inside the even block
  Subspace B(L.F, L.n0);
  for (const Vec& m : M.rows()) {
    Vec mf = L.embed_odd(m);
    for (int j = L.n0; j < L.dim(); ++j) {
      Vec ej(L.dim(), 0);
      ej[j] = 1;
      B.insert(L.even_part(L.bracket(mf, ej)));
    }
  }
  return B;
}

}  // namespace

WitnessSearch find_witness_subspace(const LieSuperData& L, bool require_module,
                                    std::uint64_t enum_cap,
                                    const PMapClosure& pm) {
  WitnessSearch w;
  w.require_module = require_module;
  Subspace l1_full = Subspace::full(L.F, L.n1);
  Subspace must = odd_even_bracket_span(L);  // (L1, L0) must lie inside M

  std::vector<Subspace> candidates;
  candidates.push_back(l1_full);
  for (auto& h : hyperplanes_containing(must, l1_full))
    candidates.push_back(std::move(h));

  bool saw_budget = false;
  for (const Subspace& M : candidates) {
    bool closed = module_closed_under_even(L, M);
    if (require_module && !closed) continue;
    PNilResult pn = is_p_nilpotent(L, bracket_with_odd_span(L, M), enum_cap, pm);
    if (pn.verdict == Tri::budget) {
      saw_budget = true;
      continue;
    }
    if (pn.verdict == Tri::yes) {
      w.status = Verdict::yes;
      w.found = true;
      w.M = M;
      w.codim = l1_full.dim() - M.dim();
      w.module_closed = closed;
      w.pnil_index = pn.index;
      return w;
    }
  }
  w.status = saw_budget ? Verdict::inconclusive : Verdict::no;
  if (saw_budget)
    w.note = "p-nilpotence enumeration exceeded the budget for some candidate";
  return w;
}

bool ClassificationReport::all_agree() const {
  return nonmatrix.agree && solvable.agree && nilpotent.agree &&
         super_nilpotent.agree;
}

bool ClassificationReport::any_inconclusive() const {
  for (const PropertyReport* p :
       {&nonmatrix, &solvable, &nilpotent, &super_nilpotent})
    if (p->condition == Verdict::inconclusive ||
        p->oracle == Verdict::inconclusive)
      return true;
  return false;
}

bool ClassificationReport::any_check_failed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

bool ClassificationReport::operator==(const ClassificationReport& o) const {
  return algebra == o.algebra && p == o.p && n0 == o.n0 && n1 == o.n1 &&
         dim_u == o.dim_u && axioms == o.axioms && nonmatrix == o.nonmatrix &&
         solvable == o.solvable && nilpotent == o.nilpotent &&
         super_nilpotent == o.super_nilpotent && pnil_L0L0 == o.pnil_L0L0 &&
         pnil_L0L0_index == o.pnil_L0L0_index &&
         witness_module_rows == o.witness_module_rows &&
         witness_subspace_rows == o.witness_subspace_rows &&
         gamma_dims == o.gamma_dims && delta_dims == o.delta_dims &&
         super_dims == o.super_dims && checks == o.checks &&
         budget_notes == o.budget_notes && timing_ms == o.timing_ms;
}

namespace {

std::vector<std::vector<long long>> rows_as_ints(const Subspace& s) {
  std::vector<std::vector<long long>> out;
  for (const Vec& r : s.rows()) out.emplace_back(r.begin(), r.end());
  return out;
}

bool inside_even_coordinates(const AssocAlgebra& A, const Subspace& S) {
  for (const Vec& r : S.rows())
    for (std::uint32_t i = 0; i < A.dim; ++i)
      if (r[i] && A.parity[i]) return false;
  return true;
}

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ClassificationReport cross_validate(const LieSuperData& L,
                                    const std::string& name,
                                    const ClassifyOptions& opt) {
  ClassificationReport rep;
  rep.algebra = name;
  rep.p = L.F.p();
  rep.n0 = L.n0;
  rep.n1 = L.n1;
  const std::uint64_t cap = opt.caps.enum_cap;

  StopWatch total;
  {
    StopWatch t;
    AxiomReport ax = verify_axioms(L, cap);
    rep.timing_ms["axioms"] = t.ms();
    if (!ax.passed()) {
      rep.axioms = ax.first_failure();
      return rep;
    }
    rep.axioms = "pass";
    if (!ax.fully_verified())
      rep.budget_notes.push_back(
          "axioms verified on the basis only; element-level checks exceeded "
          "the enumeration cap");
  }

  PMapClosure pm(L);

  // --- condition-side ingredients ---
  StopWatch tcond;
  Subspace l0l0 = even_commutator_span(L);
  PNilResult pn_l0l0 = is_p_nilpotent(L, l0l0, cap, pm);
  rep.pnil_L0L0 = verdict_of(pn_l0l0.verdict);
  if (pn_l0l0.verdict == Tri::yes) rep.pnil_L0L0_index = pn_l0l0.index;
  if (pn_l0l0.verdict == Tri::budget)
    rep.budget_notes.push_back("(L0,L0) p-nilpotence enumeration over budget");

  WitnessSearch wit_mod = find_witness_subspace(L, true, cap, pm);
  WitnessSearch wit_sub = find_witness_subspace(L, false, cap, pm);
  if (wit_mod.found) rep.witness_module_rows = rows_as_ints(wit_mod.M);
  if (wit_sub.found) rep.witness_subspace_rows = rows_as_ints(wit_sub.M);
  if (wit_mod.status == Verdict::inconclusive ||
      wit_sub.status == Verdict::inconclusive)
    rep.budget_notes.push_back("witness search hit the enumeration budget");

  LSeries lcs = lower_central_series(L);
  ModuleNilResult modnil = nilpotent_module_over_even(L);
  Subspace l1l1 = odd_odd_bracket_span(L);
  PNilResult pn_l1l1 = is_p_nilpotent(L, l1l1, cap, pm);
  Subspace l1l0 = odd_even_bracket_span(L);

  rep.nonmatrix.condition =
      verdict_and(verdict_of(pn_l0l0.verdict), wit_mod.status);
  rep.nonmatrix.notes.push_back(
      "the PI clause holds automatically: a finite-dimensional algebra "
      "satisfies a standard identity (take both ideals zero in the "
      "PI-existence criterion)");
  rep.solvable.condition =
      verdict_and(verdict_of(pn_l0l0.verdict), wit_sub.status);
  rep.solvable.notes.push_back("(L,L) is finite-dimensional: automatic here");
  rep.nilpotent.condition = verdict_and(
      verdict_and(verdict_of(modnil.nilpotent), verdict_of(pn_l0l0.verdict)),
      verdict_or(verdict_of(pn_l1l1.verdict),
                 verdict_of(L.n1 <= 1 && l1l0.is_zero())));
  rep.nilpotent.notes.push_back("L' is finite-dimensional: automatic here");
  rep.super_nilpotent.condition = verdict_and(
      verdict_and(verdict_of(lcs.terminated), verdict_of(pn_l0l0.verdict)),
      wit_mod.status);
  rep.timing_ms["conditions"] = tcond.ms();

  // --- oracle side: build u(L) and run the series ---
  PbwAlgebra U;
  try {
    StopWatch t;
    U = build_enveloping_algebra(L, opt.caps.dim_cap);
    rep.timing_ms["build_uL"] = t.ms();
  } catch (const BudgetExceeded& e) {
    rep.budget_notes.push_back(e.what());
    for (PropertyReport* p :
         {&rep.nonmatrix, &rep.solvable, &rep.nilpotent, &rep.super_nilpotent})
      p->oracle = Verdict::inconclusive;
    return rep;
  }
  const AssocAlgebra& A = U.alg;
  rep.dim_u = A.dim;

  StopWatch toracle;
  Subspace comm = commutator_span(A);
  Subspace comm_ideal = two_sided_ideal(A, comm);
  NilpotencyResult comm_nil = nilpotency_index(A, comm_ideal);
  rep.nonmatrix.oracle = verdict_of(comm_nil.nilpotent);
  if (comm_nil.nilpotent) rep.nonmatrix.oracle_class = comm_nil.index;
  rep.nonmatrix.notes.push_back(
      comm_nil.nilpotent
          ? "commutator ideal nilpotent, hence nil of bounded index"
          : "commutator ideal of dim " + std::to_string(comm_ideal.dim()) +
                " stabilizes above zero; not nilpotent");

  NilIndexResult comm_nil_exact = nil_index_exact(A, comm_ideal, cap);
  if (comm_nil_exact.verdict == Tri::yes)
    rep.nonmatrix.notes.push_back("exact nil index " +
                                  std::to_string(comm_nil_exact.index));

  SeriesResult delta = lie_derived_series(A);
  rep.delta_dims = delta.dims;
  rep.solvable.oracle = verdict_of(delta.terminated);
  if (delta.terminated) rep.solvable.oracle_class = delta.class_or_length;

  SeriesResult gamma = lie_lower_central_series(A);
  rep.gamma_dims = gamma.dims;
  rep.nilpotent.oracle = verdict_of(gamma.terminated);
  if (gamma.terminated) rep.nilpotent.oracle_class = gamma.class_or_length;

  SeriesResult super = super_central_series(A);
  rep.super_dims = super.dims;
  rep.super_nilpotent.oracle = verdict_of(super.terminated);
  if (super.terminated)
    rep.super_nilpotent.oracle_class = super.class_or_length;
  rep.timing_ms["oracles"] = toracle.ms();

  auto set_agree = [](PropertyReport& p) {
    p.agree = p.condition != Verdict::inconclusive &&
              p.oracle != Verdict::inconclusive && p.condition == p.oracle;
  };
  set_agree(rep.nonmatrix);
  set_agree(rep.solvable);
  set_agree(rep.nilpotent);
  set_agree(rep.super_nilpotent);

  if (!opt.run_checks) {
    rep.timing_ms["total"] = total.ms();
    return rep;
  }

  // --- module-level theorem instances ---
  StopWatch tchecks;
  auto add_check = [&](std::string n, std::string status, std::string detail) {
    rep.checks.push_back({std::move(n), std::move(status), std::move(detail)});
  };

  {  // L0 p-nilpotent => L nilpotent
    PNilResult pn_l0 = is_p_nilpotent(L, Subspace::full(L.F, L.n0), cap, pm);
    if (pn_l0.verdict == Tri::budget) {
      add_check("engel_p_nilpotent_even_part", "skipped", "enumeration budget");
    } else if (pn_l0.verdict == Tri::no) {
      add_check("engel_p_nilpotent_even_part", "pass", "vacuous: L0 not p-nilpotent");
    } else {
      add_check("engel_p_nilpotent_even_part",
                lcs.terminated ? "pass" : "fail",
                "L0 p-nilpotent with index " + std::to_string(pn_l0.index) +
                    (lcs.terminated ? ", L nilpotent of class " +
                                          std::to_string(lcs.class_or_length)
                                    : ", but L is not nilpotent"));
    }

    // omega(L) nilpotent <=> L0 p-nilpotent
    Subspace omega = augmentation_ideal(U);
    NilpotencyResult omega_nil = nilpotency_index(A, omega);
    if (pn_l0.verdict == Tri::budget) {
      add_check("augmentation_nilpotent_iff_even_p_nilpotent", "skipped",
                "enumeration budget");
    } else {
      bool lhs = omega_nil.nilpotent;
      bool rhs = pn_l0.verdict == Tri::yes;
      add_check("augmentation_nilpotent_iff_even_p_nilpotent",
                lhs == rhs ? "pass" : "fail",
                lhs ? "augmentation ideal nilpotent of index " +
                          std::to_string(omega_nil.index)
                    : "augmentation ideal not nilpotent");
      if (lhs) {
        ClassBoundReport cb = check_nilpotent_ideal_class_bound(A, omega);
        if (cb.applicable)
          add_check("class_bound_augmentation_ideal",
                    cb.holds ? "pass" : "fail",
                    "c=" + std::to_string(cb.c) + " d=" + std::to_string(cb.d) +
                        " bound=" + std::to_string(cb.bound) + " class=" +
                        std::to_string(cb.actual_class));
        else
          add_check("class_bound_augmentation_ideal", "skipped", cb.reason);
      }
    }
  }

  {  // super class c => delta_c inside the even part
    if (super.terminated) {
      int c = super.class_or_length;
      std::size_t idx = std::min<std::size_t>(c, delta.terms.size() - 1);
      bool ok = inside_even_coordinates(A, delta.terms[idx]);
      add_check("derived_term_even_at_super_class", ok ? "pass" : "fail",
                "super class " + std::to_string(c));
    } else {
      add_check("derived_term_even_at_super_class", "skipped",
                "u(L) is not Lie super-nilpotent");
    }
  }

  {  // solvable of length >= 2 => ideal generated by [[R,R],[R,R],R] nilpotent
    if (delta.terminated && delta.class_or_length >= 2) {
      Subspace gens = double_commutator_triple_span(A);
      Subspace J = two_sided_ideal(A, gens);
      NilpotencyResult jn = nilpotency_index(A, J);
      add_check("solvable_double_commutator_ideal_nilpotent",
                jn.nilpotent ? "pass" : "fail",
                jn.nilpotent ? "nilpotency index " + std::to_string(jn.index)
                             : "ideal not nilpotent");
      if (jn.nilpotent && !J.is_zero()) {
        ClassBoundReport cb = check_nilpotent_ideal_class_bound(A, J);
        if (cb.applicable)
          add_check("class_bound_double_commutator_ideal",
                    cb.holds ? "pass" : "fail",
                    "c=" + std::to_string(cb.c) + " d=" + std::to_string(cb.d) +
                        " bound=" + std::to_string(cb.bound) + " class=" +
                        std::to_string(cb.actual_class));
        else
          add_check("class_bound_double_commutator_ideal", "skipped", cb.reason);
      }
    } else {
      add_check("solvable_double_commutator_ideal_nilpotent", "skipped",
                delta.terminated ? "derived length below 2"
                                 : "u(L) is not Lie solvable");
    }
  }

  {  // class bound for the commutator ideal
    if (comm_nil.nilpotent) {
      ClassBoundReport cb = check_nilpotent_ideal_class_bound(A, comm_ideal);
      if (cb.applicable)
        add_check("class_bound_commutator_ideal", cb.holds ? "pass" : "fail",
                  "c=" + std::to_string(cb.c) + " d=" + std::to_string(cb.d) +
                      " bound=" + std::to_string(cb.bound) + " class=" +
                      std::to_string(cb.actual_class));
      else
        add_check("class_bound_commutator_ideal", "skipped", cb.reason);
    } else {
      add_check("class_bound_commutator_ideal", "skipped",
                "commutator ideal not nilpotent");
    }
  }

  {  // commutator ideal nil (enumerated) <=> nilpotent, when within budget
    if (comm_nil_exact.verdict == Tri::budget) {
      add_check("nil_iff_nilpotent_commutator_ideal", "skipped",
                "enumeration budget");
    } else {
      bool nil = comm_nil_exact.verdict == Tri::yes;
      bool ok = nil == comm_nil.nilpotent;
      // a nilpotency index of c bounds the nil index by c + 1
      if (nil && comm_nil.nilpotent &&
          comm_nil_exact.index > comm_nil.index + 1)
        ok = false;
      add_check("nil_iff_nilpotent_commutator_ideal", ok ? "pass" : "fail",
                nil ? "nil of exact index " + std::to_string(comm_nil_exact.index)
                    : "non-nil witness found");
    }
  }

  {  // annihilator codimension bound on the bracket map of L
    BilinearMap phi;
    phi.F = L.F;
    phi.dim_u = phi.dim_v = phi.dim_w = L.dim();
    phi.tensor.resize(std::size_t(L.dim()) * L.dim());
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j)
        phi.tensor[std::size_t(i) * L.dim() + j] = L.bracket_basis(i, j);
    AnnihilatorBoundReport nb = check_annihilator_bound(phi, cap);
    if (nb.status == Tri::budget)
      add_check("annihilator_bound_bracket_map", "skipped",
                "enumeration budget");
    else
      add_check("annihilator_bound_bracket_map",
                nb.status == Tri::yes ? "pass" : "fail",
                "max codims " + std::to_string(nb.max_codim_u) + "," +
                    std::to_string(nb.max_codim_v) + "; span dim " +
                    std::to_string(nb.span_dim));
  }

  {  // every element of a found module witness has p-nilpotent square
    if (wit_mod.found) {
      if (element_count_clamped(wit_mod.M, cap) > cap) {
        add_check("witness_squares_p_nilpotent", "skipped",
                  "enumeration budget");
      } else {
        bool ok = true;
        for_each_element(wit_mod.M, cap, [&](const Vec& y) {
          if (!ok) return;
          Vec yf = L.embed_odd(y);
          Vec sq = L.even_part(L.bracket(yf, yf));
          Subspace one = Subspace::span(L.F, L.n0, {sq});
          PNilResult pr = is_p_nilpotent(L, one, cap, pm);
          if (pr.verdict != Tri::yes) ok = false;
        });
        add_check("witness_squares_p_nilpotent", ok ? "pass" : "fail", "");
      }
    } else {
      add_check("witness_squares_p_nilpotent", "skipped", "no module witness");
    }
  }

  {  // verdict implications, condition side and oracle side independently
    auto implies = [](Verdict a, Verdict b) {
      return !(a == Verdict::yes && b == Verdict::no);
    };
    bool ok = implies(rep.nilpotent.condition, rep.solvable.condition) &&
              implies(rep.nilpotent.oracle, rep.solvable.oracle) &&
              implies(rep.super_nilpotent.condition, rep.solvable.condition) &&
              implies(rep.super_nilpotent.oracle, rep.solvable.oracle);
    add_check("nilpotent_or_super_implies_solvable", ok ? "pass" : "fail", "");

    // a module-closed subspace witness upgrades solvable to nonmatrix
    if (rep.solvable.condition == Verdict::yes && wit_sub.found &&
        wit_sub.module_closed) {
      add_check("solvable_module_witness_implies_nonmatrix",
                rep.nonmatrix.condition == Verdict::yes ? "pass" : "fail", "");
    } else {
      add_check("solvable_module_witness_implies_nonmatrix", "skipped", "");
    }
    if (rep.solvable.condition == Verdict::yes &&
        rep.nonmatrix.condition == Verdict::no)
      add_check("solvable_but_not_nonmatrix", "noted",
                "subspace witness exists but no module witness");
  }

  rep.timing_ms["checks"] = tchecks.ms();
  rep.timing_ms["total"] = total.ms();
  return rep;
}

}  // namespace plie
