#include "plie/series.hpp"

#include <algorithm>
#include <set>

namespace plie {

const char* series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::lower_central: return "gamma";
    case SeriesKind::derived: return "delta";
    case SeriesKind::super_central: return "gamma_super";
    default: return "assoc_power";
  }
}

namespace {

int default_max_terms(const AssocAlgebra& A, int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(A.dim) + 2;
}

}  // namespace

Subspace commutator_span(const AssocAlgebra& A) {
  Subspace s(A.F, static_cast<int>(A.dim));
  Vec acc(A.dim, 0);
  for (std::uint32_t i = 0; i < A.dim; ++i)
    for (std::uint32_t j = i + 1; j < A.dim; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (auto& [m, c] : A.entry(i, j).t) acc[m] = A.F.add(acc[m], c);
      for (auto& [m, c] : A.entry(j, i).t) acc[m] = A.F.sub(acc[m], c);
      s.insert(acc);
    }
  return s;
}

SeriesResult lie_lower_central_series(const AssocAlgebra& A, int max_terms) {
  SeriesResult r;
  r.kind = SeriesKind::lower_central;
  Subspace cur = Subspace::full(A.F, static_cast<int>(A.dim));
  r.terms.push_back(cur);
  r.dims.push_back(cur.dim());
  if (cur.is_zero()) {
    r.terminated = true;
    r.class_or_length = 0;
    return r;
  }
  const int cap = default_max_terms(A, max_terms);
  while (static_cast<int>(r.terms.size()) < cap) {
    Subspace next = (r.terms.size() == 1)
                        ? commutator_span(A)
                        : Subspace(A.F, static_cast<int>(A.dim));
    if (r.terms.size() > 1) {
      for (const Vec& v : cur.rows())
        for (std::uint32_t j = 0; j < A.dim; ++j)
          next.insert(A.commutator_basis(v, j));
    }
    r.terms.push_back(next);
    r.dims.push_back(next.dim());
    if (next.is_zero()) {
      r.terminated = true;
      r.class_or_length = static_cast<int>(r.terms.size()) - 1;
      break;
    }
    if (next == cur) break;  // stabilized above zero
    cur = std::move(next);
  }
  return r;
}

SeriesResult lie_derived_series(const AssocAlgebra& A, int max_terms) {
  SeriesResult r;
  r.kind = SeriesKind::derived;
  Subspace cur = Subspace::full(A.F, static_cast<int>(A.dim));
  r.terms.push_back(cur);
  r.dims.push_back(cur.dim());
  if (cur.is_zero()) {
    r.terminated = true;
    r.class_or_length = 0;
    return r;
  }
  const int cap = default_max_terms(A, max_terms);
  while (static_cast<int>(r.terms.size()) < cap) {
    Subspace next(A.F, static_cast<int>(A.dim));
    const auto& rows = cur.rows();
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        next.insert(A.commutator(rows[a], rows[b]));
    r.terms.push_back(next);
    r.dims.push_back(next.dim());
    if (next.is_zero()) {
      r.terminated = true;
      r.class_or_length = static_cast<int>(r.terms.size()) - 1;
      break;
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  return r;
}

SeriesResult super_central_series(const AssocAlgebra& A, int max_terms) {
  if (A.parity.empty() && A.dim > 0)
    throw Error("super-central series requires a graded algebra");
  SeriesResult r;
  r.kind = SeriesKind::super_central;
  Subspace even(A.F, static_cast<int>(A.dim)), odd(A.F, static_cast<int>(A.dim));
  for (std::uint32_t i = 0; i < A.dim; ++i) {
    Vec e(A.dim, 0);
    e[i] = 1;
    (A.parity[i] ? odd : even).insert(std::move(e));
  }
  r.terms_even.push_back(even);
  r.terms_odd.push_back(odd);
  r.dims.push_back(even.dim() + odd.dim());
  if (A.dim == 0) {
    r.terminated = true;
    r.class_or_length = 0;
    return r;
  }
  const int cap = default_max_terms(A, max_terms);
  while (static_cast<int>(r.dims.size()) < cap) {
    Subspace ne(A.F, static_cast<int>(A.dim)), no(A.F, static_cast<int>(A.dim));
    for (int pu = 0; pu < 2; ++pu) {
      const Subspace& part = pu ? odd : even;
      for (const Vec& v : part.rows()) {
        for (std::uint32_t j = 0; j < A.dim; ++j) {
          Vec ej(A.dim, 0);
          ej[j] = 1;
          Vec w = A.super_commutator(v, static_cast<std::uint8_t>(pu), ej,
                                     A.parity[j]);
          ((pu ^ A.parity[j]) ? no : ne).insert(std::move(w));
        }
      }
    }
    r.terms_even.push_back(ne);
    r.terms_odd.push_back(no);
    r.dims.push_back(ne.dim() + no.dim());
    if (ne.is_zero() && no.is_zero()) {
      r.terminated = true;
      r.class_or_length = static_cast<int>(r.dims.size()) - 1;
      break;
    }
    if (ne == even && no == odd) break;
    even = std::move(ne);
    odd = std::move(no);
  }
  return r;
}

Subspace two_sided_ideal(const AssocAlgebra& A, const Subspace& gens) {
  Subspace S = gens;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> rows = S.rows();  // snapshot; S mutates during the pass
    for (const Vec& v : rows) {
      for (std::uint32_t j = 0; j < A.dim; ++j) {
        if (S.insert(A.mul_basis_left(j, v))) grew = true;
        if (S.insert(A.mul_basis_right(v, j))) grew = true;
      }
    }
  }
  return S;
}

Subspace subspace_product(const AssocAlgebra& A, const Subspace& S,
                          const Subspace& T) {
  Subspace out(A.F, static_cast<int>(A.dim));
  for (const Vec& u : S.rows())
    for (const Vec& v : T.rows()) out.insert(A.mul_dense(u, v));
  return out;
}

Subspace subspace_power(const AssocAlgebra& A, const Subspace& S, int k) {
  if (k <= 1) return S;
  Subspace cur = S;
  for (int i = 1; i < k; ++i) cur = subspace_product(A, cur, S);
  return cur;
}

NilpotencyResult nilpotency_index(const AssocAlgebra& A, const Subspace& S,
                                  int max_k) {
  NilpotencyResult r;
  const int cap = (max_k > 0) ? max_k : static_cast<int>(A.dim) + 2;
  Subspace cur = S;
  int k = 1;  // cur = S^k
  if (cur.is_zero()) {
    r.nilpotent = true;
    r.index = 0;
    return r;
  }
  while (k <= cap) {
    Subspace next = subspace_product(A, cur, S);
    ++k;
    r.steps = k;
    if (next.is_zero()) {
      r.nilpotent = true;
      r.index = k - 1;  // S^{k} = 0, S^{k-1} != 0
      return r;
    }
    if (next == cur) {
      r.stabilized = true;  // fixed point above zero: never reaches zero
      return r;
    }
    cur = std::move(next);
  }
  return r;
}

NilIndexResult nil_index_exact(const AssocAlgebra& A, const Subspace& S,
                               std::uint64_t enum_cap) {
  NilIndexResult r;
  if (element_count_clamped(S, enum_cap) > enum_cap) {
    r.verdict = Tri::budget;
    return r;
  }
  int max_e = 1;
  bool found_witness = false;
  Vec witness;
  for_each_element(S, enum_cap, [&](const Vec& x) {
    if (found_witness) return;
    std::set<Vec> seen;
    Vec cur = x;
    int e = 1;  // cur = x^e
    while (!is_zero_vec(cur)) {
      if (!seen.insert(cur).second) {
        found_witness = true;
        witness = x;
        return;
      }
      cur = A.mul_dense(cur, x);
      ++e;
    }
    max_e = std::max(max_e, e);
  });
  if (found_witness) {
    r.verdict = Tri::no;
    r.witness = std::move(witness);
  } else {
    r.verdict = Tri::yes;
    r.index = max_e;
  }
  return r;
}

bool is_two_sided_ideal(const AssocAlgebra& A, const Subspace& J) {
  for (const Vec& v : J.rows())
    for (std::uint32_t j = 0; j < A.dim; ++j) {
      if (!J.contains(A.mul_basis_left(j, v))) return false;
      if (!J.contains(A.mul_basis_right(v, j))) return false;
    }
  return true;
}

QuotientAlgebraResult quotient_algebra(const AssocAlgebra& A,
                                       const Subspace& J) {
  if (!is_two_sided_ideal(A, J))
    throw Error("quotient_algebra: not a two-sided ideal");
  QuotientAlgebraResult res;
  const GfCtx& F = A.F;
  QuotientMap q(Subspace::full(F, static_cast<int>(A.dim)), J);
  const int qd = q.qdim();

  // graded iff the parity-projection of every basis row stays inside J
  bool graded = !A.parity.empty();
  if (graded) {
    for (const Vec& row : J.rows()) {
      Vec even_part(A.dim, 0);
      for (std::uint32_t i = 0; i < A.dim; ++i)
        if (!A.parity[i]) even_part[i] = row[i];
      if (!J.contains(even_part)) {
        graded = false;
        break;
      }
    }
  }

  res.alg.F = F;
  res.alg.dim = static_cast<std::uint32_t>(qd);
  res.alg.table.assign(std::size_t(qd) * qd, SparseVec{});
  std::vector<Vec> reps(qd);
  for (int a = 0; a < qd; ++a) {
    Vec y(qd, 0);
    y[a] = 1;
    reps[a] = q.section(y);
  }
  for (int a = 0; a < qd; ++a)
    for (int b = 0; b < qd; ++b)
      res.alg.table[std::size_t(a) * qd + b] =
          SparseVec::from_dense(q.apply(A.mul_dense(reps[a], reps[b])));

  Vec one = q.apply(A.unit.to_dense(A.dim));
  res.alg.unit = SparseVec::from_dense(one);
  res.unital_collapsed = is_zero_vec(one) && qd >= 0 && A.dim > 0;

  if (graded) {
    // section vectors are standard basis monomials, hence homogeneous
    res.alg.parity.resize(qd);
    for (int a = 0; a < qd; ++a) {
      std::uint32_t col = 0;
      for (std::uint32_t i = 0; i < A.dim; ++i)
        if (reps[a][i]) {
          col = i;
          break;
        }
      res.alg.parity[a] = A.parity[col];
    }
    res.parity_available = true;
  }
  return res;
}

ClassBoundReport check_nilpotent_ideal_class_bound(const AssocAlgebra& A,
                                                   const Subspace& I) {
  ClassBoundReport rep;
  if (!is_two_sided_ideal(A, I)) {
    rep.reason = "not a two-sided ideal";
    return rep;
  }
  NilpotencyResult nil = nilpotency_index(A, I);
  if (!nil.nilpotent) {
    rep.reason = "ideal is not associative nilpotent";
    return rep;
  }
  rep.c = std::max(nil.index, 1);  // I = 0 behaves like index 1
  Subspace I2 = subspace_power(A, I, 2);
  QuotientAlgebraResult Q = quotient_algebra(A, I2);
  SeriesResult qs = lie_lower_central_series(Q.alg);
  if (!qs.terminated) {
    rep.reason = "R/I^2 is not Lie nilpotent";
    return rep;
  }
  rep.applicable = true;
  rep.d = qs.class_or_length;
  rep.bound = 2 * rep.c * rep.d - rep.c - rep.d + 2;
  SeriesResult full = lie_lower_central_series(
      A, std::max(rep.bound + 1, static_cast<int>(A.dim) + 2));
  if (full.terminated) rep.actual_class = full.class_or_length;
  // gamma_bound(R) = 0 iff the Lie class is below the bound
  rep.holds = full.terminated && full.class_or_length < rep.bound;
  return rep;
}

bool check_bracket_product_expansion(const AssocAlgebra& A, const Subspace& Sa,
                                     const Subspace& Sb, const Subspace& Sc,
                                     int n) {
  auto iterated = [&](const Subspace& X) {
    std::vector<Subspace> out{X};
    for (int i = 1; i <= n; ++i) {
      Subspace next(A.F, static_cast<int>(A.dim));
      for (const Vec& u : out.back().rows())
        for (const Vec& c : Sc.rows()) next.insert(A.commutator(u, c));
      out.push_back(std::move(next));
    }
    return out;
  };
  Subspace ab = subspace_product(A, Sa, Sb);
  Subspace lhs = ab;
  for (int i = 1; i <= n; ++i) {
    Subspace next(A.F, static_cast<int>(A.dim));
    for (const Vec& u : lhs.rows())
      for (const Vec& c : Sc.rows()) next.insert(A.commutator(u, c));
    lhs = std::move(next);
  }
  auto ai = iterated(Sa);
  auto bi = iterated(Sb);
  Subspace rhs(A.F, static_cast<int>(A.dim));
  for (int i = 0; i <= n; ++i) {
    Subspace prod = subspace_product(A, ai[i], bi[n - i]);
    for (const Vec& r : prod.rows()) rhs.insert(r);
  }
  return rhs.contains_all(lhs);
}

Subspace double_commutator_triple_span(const AssocAlgebra& A) {
  Subspace c2 = commutator_span(A);
  Subspace d2(A.F, static_cast<int>(A.dim));
  const auto& rows = c2.rows();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      d2.insert(A.commutator(rows[a], rows[b]));
  Subspace out(A.F, static_cast<int>(A.dim));
  for (const Vec& v : d2.rows())
    for (std::uint32_t j = 0; j < A.dim; ++j)
      out.insert(A.commutator_basis(v, j));
  return out;
}

}  // namespace plie
