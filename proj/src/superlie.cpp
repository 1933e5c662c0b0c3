#include "plie/superlie.hpp"

#include <algorithm>
#include <set>

namespace plie {

Vec LieSuperData::bracket_basis(int i, int j) const {
  if (i <= j) return stored(i, j);
  Vec v = stored(j, i);
  // (b_i, b_j) = -(-1)^{|i||j|} (b_j, b_i): sign +1 iff both odd
  if (!(odd(i) && odd(j))) {
    for (auto& x : v) x = F.neg(x);
  }
  return v;
}

Vec LieSuperData::bracket(const Vec& x, const Vec& y) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw Error("bracket: wrong coordinate length");
  Vec out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!y[j]) continue;
      Fp c = F.mul(x[i], y[j]);
      if (i <= j) {
        axpy(F, out, stored(i, j), c);
      } else {
        Fp s = (odd(i) && odd(j)) ? c : F.neg(c);
        axpy(F, out, stored(j, i), s);
      }
    }
  }
  return out;
}

Vec LieSuperData::ad_power(Vec y, const Vec& x, int k) const {
  for (int t = 0; t < k; ++t) y = bracket(y, x);
  return y;
}

Vec LieSuperData::embed_even(const Vec& c) const {
  Vec v(dim(), 0);
  for (int i = 0; i < n0; ++i) v[i] = c[i];
  return v;
}

Vec LieSuperData::embed_odd(const Vec& c) const {
  Vec v(dim(), 0);
  for (int i = 0; i < n1; ++i) v[n0 + i] = c[i];
  return v;
}

Vec LieSuperData::even_part(const Vec& full) const {
  return Vec(full.begin(), full.begin() + n0);
}

Vec LieSuperData::odd_part(const Vec& full) const {
  return Vec(full.begin() + n0, full.end());
}

// --- p-map extension ---

Vec PMapClosure::p_power(const Vec& even_coords) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(even_coords);
    if (it != memo_.end()) return it->second;
  }
  Vec r = compute(even_coords, false);
  std::lock_guard<std::mutex> lk(mu_);
  memo_.emplace(even_coords, r);
  return r;
}

Vec PMapClosure::p_power_reversed(const Vec& even_coords) const {
  return compute(even_coords, true);
}

Vec PMapClosure::compute(const Vec& even_coords, bool reversed) const {
  const LieSuperData& L = *L_;
  const GfCtx& F = L.F;
  const int n0 = L.n0;
  if (static_cast<int>(even_coords.size()) != n0)
    throw Error("p_power: expected even-block coordinates");

  // peel one basis summand: x = alpha*b + y
  int b = -1;
  if (reversed) {
    for (int i = n0 - 1; i >= 0; --i)
      if (even_coords[i]) {
        b = i;
        break;
      }
  } else {
    for (int i = 0; i < n0; ++i)
      if (even_coords[i]) {
        b = i;
        break;
      }
  }
  if (b < 0) return Vec(n0, 0);

  const Fp alpha = even_coords[b];
  Vec rest = even_coords;
  rest[b] = 0;

  // (alpha b)^[p] = alpha^p b^[p]
  Vec result = scaled(F, L.pmap_tab[b], F.pow(alpha, F.p()));
  // + y^[p]
  Vec rest_p = reversed ? compute(rest, true) : p_power(rest);
  axpy(F, result, rest_p, 1);

  if (is_zero_vec(rest)) return result;

  // + sum_i s_i(alpha b, y), where i*s_i is the lambda^{i-1} coefficient of
  // (ad(lambda u + v))^{p-1}(u) with u = alpha b, v = y. Coordinates are
  // polynomials in lambda of degree < p, stored as a coefficient list.
  Vec u(n0, 0);
  u[b] = alpha;
  const Vec ufull = L.embed_even(u);
  const Vec vfull = L.embed_even(rest);
  const Fp p = F.p();
  std::vector<Vec> w;  // w[d] = lambda^d coefficient, full-length vectors
  w.push_back(ufull);
  for (Fp step = 1; step <= p - 1; ++step) {
    std::vector<Vec> nw(w.size() + 1, Vec(L.dim(), 0));
    for (std::size_t d = 0; d < w.size(); ++d) {
      axpy(F, nw[d + 1], L.bracket(w[d], ufull), 1);
      axpy(F, nw[d], L.bracket(w[d], vfull), 1);
    }
    w = std::move(nw);
  }
  for (Fp i = 1; i <= p - 1; ++i) {
    const Vec& coeff = w[i - 1];
    Vec ev = L.even_part(coeff);
    axpy(F, result, ev, F.inv(i));
  }
  return result;
}

// --- axiom verification ---

bool AxiomReport::passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

bool AxiomReport::fully_verified() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::pass) return false;
  return true;
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return c.name + ": " + c.detail;
  return {};
}

namespace {

bool graded_entry_ok(const LieSuperData& L, int i, int j, std::string* why) {
  const Vec& v = L.stored(i, j);
  const bool odd_result = L.odd(i) != L.odd(j);
  for (int t = 0; t < L.dim(); ++t) {
    if (!v[t]) continue;
    if (L.odd(t) != odd_result) {
      *why = "(" + L.names[i] + "," + L.names[j] + ") has a component on " +
             L.names[t] + " outside its graded block";
      return false;
    }
  }
  if (i == j && !L.odd(i) && !is_zero_vec(v)) {
    *why = "(" + L.names[i] + "," + L.names[i] + ") must vanish for even " +
           L.names[i];
    return false;
  }
  return true;
}

}  // namespace

AxiomReport verify_axioms(const LieSuperData& L, std::uint64_t enum_cap) {
  AxiomReport rep;
  const GfCtx& F = L.F;
  const int n = L.dim();

  // (i) grading of the tables
  {
    AxiomCheck c{"grading", CheckStatus::pass, ""};
    std::string why;
    for (int i = 0; i < n && c.status == CheckStatus::pass; ++i)
      for (int j = i; j < n; ++j)
        if (!graded_entry_ok(L, i, j, &why)) {
          c.status = CheckStatus::fail;
          c.detail = why;
          break;
        }
    for (int i = 0; i < L.n0 && c.status == CheckStatus::pass; ++i) {
      if (static_cast<int>(L.pmap_tab[i].size()) != L.n0) {
        c.status = CheckStatus::fail;
        c.detail = "p-map entry for " + L.names[i] + " has wrong length";
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // (ii) graded Jacobi on all basis triples:
  // (x,(y,z)) = ((x,y),z) + (-1)^{|x||y|} (y,(x,z))
  {
    AxiomCheck c{"jacobi", CheckStatus::pass, ""};
    for (int i = 0; i < n && c.status == CheckStatus::pass; ++i) {
      Vec ei(n, 0);
      ei[i] = 1;
      for (int j = 0; j < n && c.status == CheckStatus::pass; ++j) {
        Vec ej(n, 0);
        ej[j] = 1;
        for (int k = 0; k < n; ++k) {
          Vec ek(n, 0);
          ek[k] = 1;
          Vec lhs = L.bracket(ei, L.bracket(ej, ek));
          Vec rhs = L.bracket(L.bracket(ei, ej), ek);
          Vec t2 = L.bracket(ej, L.bracket(ei, ek));
          Fp sign = (L.odd(i) && L.odd(j)) ? F.neg(1) : 1;
          axpy(F, rhs, t2, sign);
          if (lhs != rhs) {
            c.status = CheckStatus::fail;
            c.detail = "jacobi fails on (" + L.names[i] + "," + L.names[j] +
                       "," + L.names[k] + ")";
            break;
          }
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // (iii) p-map compatibility on the basis: (y, b^[p]) = (y,_p b)
  {
    AxiomCheck c{"pmap_basis", CheckStatus::pass, ""};
    for (int i = 0; i < L.n0 && c.status == CheckStatus::pass; ++i) {
      Vec px = L.embed_even(L.pmap_tab[i]);
      Vec xi(n, 0);
      xi[i] = 1;
      for (int j = 0; j < n; ++j) {
        Vec y(n, 0);
        y[j] = 1;
        Vec lhs = L.bracket(y, px);
        Vec rhs = L.ad_power(y, xi, static_cast<int>(F.p()));
        if (lhs != rhs) {
          c.status = CheckStatus::fail;
          c.detail = "ad(" + L.names[i] + "^[p]) differs from (ad " +
                     L.names[i] + ")^p on " + L.names[j];
          break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  const bool structurally_sound = rep.passed();

  // (iv) p-map compatibility for all even elements, within budget
  if (structurally_sound) {
    AxiomCheck c{"pmap_elements", CheckStatus::pass, ""};
    Subspace even_full = Subspace::full(F, L.n0);
    if (element_count_clamped(even_full, enum_cap) > enum_cap) {
      c.status = CheckStatus::unverified;
      c.detail = "p^" + std::to_string(L.n0) +
                 " even elements exceed the enumeration cap; unverified at "
                 "element level";
    } else {
      PMapClosure pm(L);
      bool bad = false;
      std::string why;
      for_each_element(even_full, enum_cap, [&](const Vec& x) {
        if (bad) return;
        Vec px = L.embed_even(pm.p_power(x));
        Vec xf = L.embed_even(x);
        for (int j = 0; j < n; ++j) {
          Vec y(n, 0);
          y[j] = 1;
          if (L.bracket(y, px) != L.ad_power(y, xf, static_cast<int>(F.p()))) {
            bad = true;
            why = "extended p-map incompatible with ad on an even element";
            return;
          }
        }
      });
      if (bad) {
        c.status = CheckStatus::fail;
        c.detail = why;
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // (v) p = 3 only: ((y,y),y) = 0 over all of L1 (the cubic identity does
  // not polarize in characteristic 3, so basis checks are not enough)
  if (structurally_sound && F.p() == 3) {
    AxiomCheck c{"cubic_p3", CheckStatus::pass, ""};
    Subspace odd_full = Subspace::full(F, L.n1);
    if (element_count_clamped(odd_full, enum_cap) > enum_cap) {
      c.status = CheckStatus::unverified;
      c.detail = "3^" + std::to_string(L.n1) +
                 " odd elements exceed the enumeration cap";
    } else {
      bool bad = false;
      for_each_element(odd_full, enum_cap, [&](const Vec& yc) {
        if (bad) return;
        Vec y = L.embed_odd(yc);
        if (!is_zero_vec(L.bracket(L.bracket(y, y), y))) bad = true;
      });
      if (bad) {
        c.status = CheckStatus::fail;
        c.detail = "((y,y),y) != 0 for some odd y";
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

// --- graded subspaces and constructions ---

GradedSubspace GradedSubspace::zero(const LieSuperData& L) {
  return {Subspace(L.F, L.n0), Subspace(L.F, L.n1)};
}

GradedSubspace GradedSubspace::full(const LieSuperData& L) {
  return {Subspace::full(L.F, L.n0), Subspace::full(L.F, L.n1)};
}

std::vector<Vec> GradedSubspace::embedded_rows(const LieSuperData& L) const {
  std::vector<Vec> out;
  for (const Vec& r : even.rows()) out.push_back(L.embed_even(r));
  for (const Vec& r : odd.rows()) out.push_back(L.embed_odd(r));
  return out;
}

namespace {

void insert_homogeneous(const LieSuperData& L, GradedSubspace& S,
                        const Vec& full) {
  Vec ev = L.even_part(full);
  Vec od = L.odd_part(full);
  if (!is_zero_vec(ev) && !is_zero_vec(od))
    throw Error("expected a homogeneous element");
  if (!is_zero_vec(ev))
    S.even.insert(std::move(ev));
  else if (!is_zero_vec(od))
    S.odd.insert(std::move(od));
}

}  // namespace

GradedSubspace bracket_span(const LieSuperData& L, const GradedSubspace& A,
                            const GradedSubspace& B) {
  GradedSubspace out = GradedSubspace::zero(L);
  auto arows = A.embedded_rows(L);
  auto brows = B.embedded_rows(L);
  for (const Vec& a : arows)
    for (const Vec& b : brows)
      insert_homogeneous(L, out, L.bracket(a, b));
  return out;
}

Subspace even_commutator_span(const LieSuperData& L) {
  Subspace out(L.F, L.n0);
  for (int i = 0; i < L.n0; ++i)
    for (int j = i + 1; j < L.n0; ++j) out.insert(L.even_part(L.stored(i, j)));
  return out;
}

Subspace odd_odd_bracket_span(const LieSuperData& L) {
  Subspace out(L.F, L.n0);
  for (int i = L.n0; i < L.dim(); ++i)
    for (int j = i; j < L.dim(); ++j) out.insert(L.even_part(L.stored(i, j)));
  return out;
}

Subspace odd_even_bracket_span(const LieSuperData& L) {
  Subspace out(L.F, L.n1);
  for (int i = 0; i < L.n0; ++i)
    for (int j = L.n0; j < L.dim(); ++j) out.insert(L.odd_part(L.stored(i, j)));
  return out;
}

IdealClosureResult restricted_ideal_closure(const LieSuperData& L,
                                            const GradedSubspace& X,
                                            std::uint64_t enum_cap) {
  IdealClosureResult res;
  GradedSubspace S = X;
  PMapClosure pm(L);
  bool grew = true;
  while (grew) {
    grew = false;
    GradedSubspace next = S;
    auto rows = S.embedded_rows(L);
    for (const Vec& r : rows) {
      for (int j = 0; j < L.dim(); ++j) {
        Vec b(L.dim(), 0);
        b[j] = 1;
        Vec br = L.bracket(r, b);
        Vec ev = L.even_part(br), od = L.odd_part(br);
        if (!is_zero_vec(ev)) grew |= next.even.insert(std::move(ev));
        if (!is_zero_vec(od)) grew |= next.odd.insert(std::move(od));
      }
    }
    for (const Vec& r : S.even.rows()) grew |= next.even.insert(pm.p_power(r));
    S = next;
  }
  res.space = S;

  // element-level p-map closure of the even part
  if (element_count_clamped(S.even, enum_cap) <= enum_cap) {
    bool ok = true;
    for_each_element(S.even, enum_cap, [&](const Vec& x) {
      if (ok && !S.even.contains(pm.p_power(x))) ok = false;
    });
    res.p_closure = ok ? CheckStatus::pass : CheckStatus::fail;
    res.note = ok ? "p-map closure verified on all even elements"
                  : "p-map closure fails on an even element";
  } else {
    res.p_closure = CheckStatus::unverified;
    res.note = "spanning-set closure only: even part too large to enumerate";
  }
  return res;
}

bool is_restricted_ideal(const LieSuperData& L, const GradedSubspace& I,
                         std::uint64_t enum_cap) {
  auto rows = I.embedded_rows(L);
  for (const Vec& r : rows)
    for (int j = 0; j < L.dim(); ++j) {
      Vec b(L.dim(), 0);
      b[j] = 1;
      Vec br = L.bracket(r, b);
      if (!I.even.contains(L.even_part(br)) ||
          !I.odd.contains(L.odd_part(br)))
        return false;
    }
  PMapClosure pm(L);
  if (element_count_clamped(I.even, enum_cap) <= enum_cap) {
    bool ok = true;
    for_each_element(I.even, enum_cap, [&](const Vec& x) {
      if (ok && !I.even.contains(pm.p_power(x))) ok = false;
    });
    return ok;
  }
  for (const Vec& r : I.even.rows())
    if (!I.even.contains(pm.p_power(r))) return false;
  return true;
}

std::vector<int> LSeries::dims() const {
  std::vector<int> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

LSeries lower_central_series(const LieSuperData& L) {
  LSeries s;
  s.terms.push_back(GradedSubspace::full(L));
  const GradedSubspace full = GradedSubspace::full(L);
  const int max_terms = L.dim() + 2;
  while (static_cast<int>(s.terms.size()) < max_terms) {
    GradedSubspace next = bracket_span(L, s.terms.back(), full);
    if (next.is_zero()) {
      s.terms.push_back(next);
      s.terminated = true;
      s.class_or_length = static_cast<int>(s.terms.size()) - 1;
      break;
    }
    if (next == s.terms.back()) {
      s.terms.push_back(next);
      break;
    }
    s.terms.push_back(next);
  }
  return s;
}

LSeries derived_series(const LieSuperData& L) {
  LSeries s;
  s.terms.push_back(GradedSubspace::full(L));
  const int max_terms = L.dim() + 2;
  while (static_cast<int>(s.terms.size()) < max_terms) {
    const GradedSubspace& cur = s.terms.back();
    if (cur.is_zero()) {
      s.terminated = true;
      s.class_or_length = static_cast<int>(s.terms.size()) - 1;
      break;
    }
    GradedSubspace next = bracket_span(L, cur, cur);
    if (next == cur) {
      s.terms.push_back(next);
      break;
    }
    s.terms.push_back(next);
    if (next.is_zero()) {
      s.terminated = true;
      s.class_or_length = static_cast<int>(s.terms.size()) - 1;
      break;
    }
  }
  return s;
}

GradedSubspace center(const LieSuperData& L) {
  const GfCtx& F = L.F;
  GradedSubspace z = GradedSubspace::zero(L);
  // even center: kernel of x -> ((x, b_j))_j on the even block
  {
    std::vector<Vec> images;  // images of even basis vectors, concatenated
    for (int i = 0; i < L.n0; ++i) {
      Vec ei(L.dim(), 0);
      ei[i] = 1;
      Vec cat;
      for (int j = 0; j < L.dim(); ++j) {
        Vec ej(L.dim(), 0);
        ej[j] = 1;
        Vec br = L.bracket(ei, ej);
        cat.insert(cat.end(), br.begin(), br.end());
      }
      images.push_back(std::move(cat));
    }
    z.even = kernel_of_rows(F, images, L.dim() * L.dim());
  }
  {
    std::vector<Vec> images;
    for (int i = L.n0; i < L.dim(); ++i) {
      Vec ei(L.dim(), 0);
      ei[i] = 1;
      Vec cat;
      for (int j = 0; j < L.dim(); ++j) {
        Vec ej(L.dim(), 0);
        ej[j] = 1;
        Vec br = L.bracket(ei, ej);
        cat.insert(cat.end(), br.begin(), br.end());
      }
      images.push_back(std::move(cat));
    }
    z.odd = kernel_of_rows(F, images, L.dim() * L.dim());
  }
  return z;
}

PNilResult is_p_nilpotent(const LieSuperData& L, const Subspace& W_even,
                          std::uint64_t enum_cap, const PMapClosure& pm) {
  if (W_even.ambient() != L.n0)
    throw Error("p-nilpotence test expects a subspace of the even part");
  PNilResult res;
  if (element_count_clamped(W_even, enum_cap) > enum_cap) {
    res.verdict = Tri::budget;
    return res;
  }
  int max_k = 0;
  bool failed = false;
  Vec witness;
  for_each_element(W_even, enum_cap, [&](const Vec& x) {
    if (failed) return;
    std::set<Vec> seen;
    Vec cur = x;
    int k = 0;
    while (!is_zero_vec(cur)) {
      if (!seen.insert(cur).second) {  // cycle without reaching zero
        failed = true;
        witness = x;
        return;
      }
      cur = pm.p_power(cur);
      ++k;
    }
    max_k = std::max(max_k, k);
  });
  if (failed) {
    res.verdict = Tri::no;
    res.witness = std::move(witness);
  } else {
    res.verdict = Tri::yes;
    res.index = max_k;
  }
  return res;
}

ModuleNilResult nilpotent_module_over_even(const LieSuperData& L) {
  ModuleNilResult res;
  GradedSubspace W = GradedSubspace::full(L);
  GradedSubspace l0 = GradedSubspace::zero(L);
  l0.even = Subspace::full(L.F, L.n0);
  int steps = 0;
  const int max_steps = L.dim() + 2;
  while (steps < max_steps) {
    if (W.is_zero()) {
      res.nilpotent = true;
      res.steps = steps;
      return res;
    }
    GradedSubspace next = bracket_span(L, W, l0);
    ++steps;
    if (next == W) break;  // stabilized above zero
    W = next;
  }
  res.nilpotent = W.is_zero();
  res.steps = steps;
  return res;
}

LieSuperData quotient_by_ideal(const LieSuperData& L, const GradedSubspace& I,
                               std::uint64_t enum_cap) {
  if (!is_restricted_ideal(L, I, enum_cap))
    throw Error("quotient: the given subspace is not a restricted ideal");
  const GfCtx& F = L.F;
  QuotientMap qe(Subspace::full(F, L.n0), I.even);
  QuotientMap qo(Subspace::full(F, L.n1), I.odd);
  LieSuperData Q;
  Q.F = F;
  Q.n0 = qe.qdim();
  Q.n1 = qo.qdim();

  auto section_full = [&](int k) {
    // representative in L of the k-th quotient basis vector
    if (k < Q.n0) {
      Vec y(Q.n0, 0);
      y[k] = 1;
      return L.embed_even(qe.section(y));
    }
    Vec y(Q.n1, 0);
    y[k - Q.n0] = 1;
    return L.embed_odd(qo.section(y));
  };
  auto project_full = [&](const Vec& full) {
    Vec out(Q.dim(), 0);
    Vec ev = qe.apply(L.even_part(full));
    Vec od = qo.apply(L.odd_part(full));
    for (int i = 0; i < Q.n0; ++i) out[i] = ev[i];
    for (int i = 0; i < Q.n1; ++i) out[Q.n0 + i] = od[i];
    return out;
  };

  for (int k = 0; k < Q.dim(); ++k) {
    int src;  // name of the representative column
    if (k < Q.n0) {
      Vec rep = qe.section([&] {
        Vec y(Q.n0, 0);
        y[k] = 1;
        return y;
      }());
      src = 0;
      for (int i = 0; i < L.n0; ++i)
        if (rep[i]) {
          src = i;
          break;
        }
      Q.names.push_back(L.names[src] + "~");
    } else {
      Vec rep = qo.section([&] {
        Vec y(Q.n1, 0);
        y[k - Q.n0] = 1;
        return y;
      }());
      src = 0;
      for (int i = 0; i < L.n1; ++i)
        if (rep[i]) {
          src = i;
          break;
        }
      Q.names.push_back(L.names[L.n0 + src] + "~");
    }
  }

  const int qn = Q.dim();
  Q.bracket_tab.assign(std::size_t(qn) * (qn + 1) / 2, Vec(qn, 0));
  for (int i = 0; i < qn; ++i)
    for (int j = i; j < qn; ++j)
      Q.bracket_tab[Q.tri(i, j)] =
          project_full(L.bracket(section_full(i), section_full(j)));

  PMapClosure pm(L);
  Q.pmap_tab.assign(Q.n0, Vec(Q.n0, 0));
  for (int i = 0; i < Q.n0; ++i) {
    Vec rep_even = L.even_part(section_full(i));
    Q.pmap_tab[i] = qe.apply(pm.p_power(rep_even));
  }
  return Q;
}

}  // namespace plie
