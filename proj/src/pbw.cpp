#include "plie/pbw.hpp"

#include <algorithm>
#include <numeric>

namespace plie {

SparseVec SparseVec::from_dense(const Vec& d) {
  SparseVec v;
  for (std::uint32_t i = 0; i < d.size(); ++i)
    if (d[i]) v.t.push_back({i, d[i]});
  return v;
}

Vec SparseVec::to_dense(std::uint32_t dim) const {
  Vec d(dim, 0);
  for (auto& [i, c] : t) d[i] = c;
  return d;
}

void sparse_axpy(const GfCtx& F, SparseVec& dst, const SparseVec& src, Fp c) {
  if (c == 0 || src.t.empty()) return;
  SparseVec out;
  out.t.reserve(dst.t.size() + src.t.size());
  auto a = dst.t.begin(), ae = dst.t.end();
  auto b = src.t.begin(), be = src.t.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.t.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      Fp v = F.mul(b->second, c);
      if (v) out.t.push_back({b->first, v});
      ++b;
    } else {
      Fp v = F.add(a->second, F.mul(b->second, c));
      if (v) out.t.push_back({a->first, v});
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

namespace {

void dense_accum(const GfCtx& F, Vec& acc, const SparseVec& s, Fp c) {
  if (!c) return;
  for (auto& [i, v] : s.t)
    acc[i] = static_cast<Fp>((acc[i] + std::uint64_t(c) * v) % F.p());
}

std::uint64_t xorshift(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

}  // namespace

SparseVec AssocAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  Vec acc(dim, 0);
  for (auto& [i, ci] : a.t)
    for (auto& [j, cj] : b.t) dense_accum(F, acc, entry(i, j), F.mul(ci, cj));
  return SparseVec::from_dense(acc);
}

Vec AssocAlgebra::mul_dense(const Vec& a, const Vec& b) const {
  Vec acc(dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (!a[i]) continue;
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (!b[j]) continue;
      dense_accum(F, acc, entry(i, j), F.mul(a[i], b[j]));
    }
  }
  return acc;
}

Vec AssocAlgebra::mul_basis_right(const Vec& u, std::uint32_t j) const {
  Vec acc(dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i)
    if (u[i]) dense_accum(F, acc, entry(i, j), u[i]);
  return acc;
}

Vec AssocAlgebra::mul_basis_left(std::uint32_t j, const Vec& u) const {
  Vec acc(dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i)
    if (u[i]) dense_accum(F, acc, entry(j, i), u[i]);
  return acc;
}

Vec AssocAlgebra::commutator_basis(const Vec& u, std::uint32_t j) const {
  Vec acc(dim, 0);
  const Fp m1 = F.neg(1);
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (!u[i]) continue;
    dense_accum(F, acc, entry(i, j), u[i]);
    dense_accum(F, acc, entry(j, i), F.mul(u[i], m1));
  }
  return acc;
}

Vec AssocAlgebra::commutator(const Vec& u, const Vec& v) const {
  Vec a = mul_dense(u, v);
  axpy(F, a, mul_dense(v, u), F.neg(1));
  return a;
}

Vec AssocAlgebra::super_commutator(const Vec& u, std::uint8_t pu, const Vec& v,
                                   std::uint8_t pv) const {
  Vec a = mul_dense(u, v);
  Fp sign = (pu && pv) ? 1 : F.neg(1);  // -(-1)^{|u||v|}
  axpy(F, a, mul_dense(v, u), sign);
  return a;
}

std::uint8_t AssocAlgebra::parity_of(const Vec& u) const {
  if (parity.empty()) throw Error("algebra carries no parity vector");
  int seen = -1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (!u[i]) continue;
    if (seen < 0)
      seen = parity[i];
    else if (seen != parity[i])
      throw Error("super-commutator requires parity-homogeneous inputs");
  }
  if (seen < 0) throw Error("parity of the zero element is undefined");
  return static_cast<std::uint8_t>(seen);
}

Vec AssocAlgebra::power(Vec u, int e) const {
  Vec r = u;
  for (int i = 1; i < e; ++i) r = mul_dense(r, u);
  return r;
}

bool AssocAlgebra::unit_law_holds() const {
  for (std::uint32_t i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    if (mul_dense(unit.to_dense(dim), e) != e) return false;
    if (mul_dense(e, unit.to_dense(dim)) != e) return false;
  }
  return true;
}

bool AssocAlgebra::associativity_holds(int samples, std::uint64_t seed) const {
  auto check = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    Vec lhs(dim, 0), rhs(dim, 0);
    for (auto& [m, c] : entry(i, j).t) dense_accum(F, lhs, entry(m, k), c);
    for (auto& [m, c] : entry(j, k).t) dense_accum(F, rhs, entry(i, m), c);
    return lhs == rhs;
  };
  if (dim <= 64) {
    for (std::uint32_t i = 0; i < dim; ++i)
      for (std::uint32_t j = 0; j < dim; ++j)
        for (std::uint32_t k = 0; k < dim; ++k)
          if (!check(i, j, k)) return false;
    return true;
  }
  std::uint64_t s = seed ? seed : 1;
  for (int t = 0; t < samples; ++t) {
    std::uint32_t i = xorshift(s) % dim;
    std::uint32_t j = xorshift(s) % dim;
    std::uint32_t k = xorshift(s) % dim;
    if (!check(i, j, k)) return false;
  }
  return true;
}

bool AssocAlgebra::grading_holds() const {
  if (parity.empty()) return false;
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < dim; ++j) {
      std::uint8_t want = parity[i] ^ parity[j];
      for (auto& [m, c] : entry(i, j).t) {
        (void)c;
        if (parity[m] != want) return false;
      }
    }
  return true;
}

Subspace AssocAlgebra::even_coordinate_subspace() const {
  Subspace s(F, static_cast<int>(dim));
  for (std::uint32_t i = 0; i < dim; ++i)
    if (!parity[i]) {
      Vec e(dim, 0);
      e[i] = 1;
      s.insert(std::move(e));
    }
  return s;
}

// --- PBW bookkeeping ---

std::uint32_t PbwAlgebra::exp_of(std::uint32_t mono, int g) const {
  const Fp p = L.F.p();
  std::uint32_t radix = (g < L.n0) ? p : 2;
  return static_cast<std::uint32_t>((mono / weight[g]) % radix);
}

int PbwAlgebra::degree(std::uint32_t mono) const {
  int d = 0;
  for (int g = 0; g < gens(); ++g) d += static_cast<int>(exp_of(mono, g));
  return d;
}

std::uint8_t PbwAlgebra::mono_parity(std::uint32_t mono) const {
  int c = 0;
  for (int g = L.n0; g < gens(); ++g) c += static_cast<int>(exp_of(mono, g));
  return static_cast<std::uint8_t>(c & 1);
}

std::vector<std::uint32_t> PbwAlgebra::word(std::uint32_t mono) const {
  std::vector<std::uint32_t> w;
  for (int g = 0; g < gens(); ++g)
    for (std::uint32_t e = 0; e < exp_of(mono, g); ++e)
      w.push_back(static_cast<std::uint32_t>(g));
  return w;
}

Vec PbwAlgebra::embed(const Vec& lelem) const {
  Vec r(dim(), 0);
  for (int g = 0; g < gens(); ++g) r[generator_mono(g)] = lelem[g];
  return r;
}

Vec PbwAlgebra::project_to_L(const Vec& relem) const {
  Vec out(gens(), 0);
  std::vector<int> rev(dim(), -1);
  for (int g = 0; g < gens(); ++g) rev[generator_mono(g)] = g;
  for (std::uint32_t i = 0; i < relem.size(); ++i) {
    if (!relem[i]) continue;
    if (rev[i] < 0)
      throw Error("element of u(L) is not supported on degree-1 monomials");
    out[rev[i]] = relem[i];
  }
  return out;
}

// --- straightening ---

namespace {

// Rewrites products monomial * generator into the PBW basis. Rules:
//   b a -> (-1)^{|a||b|} a b + (b,a)  for b after a in the order,
//   e^p -> e^[p]                      for even generators,
//   f f -> (1/2)(f,f)                 for odd generators.
// Each rewrite strictly decreases (word degree, inversion count), so the
// recursion terminates; results are memoized per (monomial, generator).
class Straightener {
 public:
  Straightener(const LieSuperData& L, const std::vector<std::uint64_t>& weight,
               std::uint32_t dim)
      : L_(L), weight_(weight), dim_(dim), gens_(L.dim()) {
    memo_.resize(std::size_t(dim_) * gens_);
    done_.assign(memo_.size(), 0);
  }

  const SparseVec& mul_gen(std::uint32_t m, int k) {
    std::size_t key = std::size_t(m) * gens_ + k;
    if (!done_[key]) {
      SparseVec r = compute(m, k);
      memo_[key] = std::move(r);
      done_[key] = 1;
    }
    return memo_[key];
  }

  SparseVec mul_elem_gen(const SparseVec& e, int k) {
    const GfCtx& F = L_.F;
    Vec acc(dim_, 0);
    for (auto& [m, c] : e.t) dense_accum(F, acc, mul_gen(m, k), c);
    return SparseVec::from_dense(acc);
  }

 private:
  std::uint32_t exp_of(std::uint32_t mono, int g) const {
    std::uint32_t radix = (g < L_.n0) ? L_.F.p() : 2;
    return static_cast<std::uint32_t>((mono / weight_[g]) % radix);
  }

  int highest_gen(std::uint32_t mono) const {
    for (int g = gens_ - 1; g >= 0; --g)
      if (exp_of(mono, g)) return g;
    return -1;
  }

  // expand m * (linear combination of generators given by L coordinates)
  SparseVec expand_lelem(std::uint32_t m, const Vec& lelem, Fp scale) {
    const GfCtx& F = L_.F;
    Vec acc(dim_, 0);
    for (int l = 0; l < gens_; ++l)
      if (lelem[l]) dense_accum(F, acc, mul_gen(m, l), F.mul(lelem[l], scale));
    return SparseVec::from_dense(acc);
  }

  SparseVec terminal_bump(std::uint32_t m, int k, Fp scale) {
    // all generators of m are <= k
    const GfCtx& F = L_.F;
    const Fp p = F.p();
    std::uint32_t a = exp_of(m, k);
    if (k < L_.n0) {
      if (a + 1 < p)
        return SparseVec::unit(m + static_cast<std::uint32_t>(weight_[k]), scale);
      // e^p -> e^[p]
      std::uint32_t rest = m - static_cast<std::uint32_t>(a * weight_[k]);
      return expand_lelem(rest, L_.embed_even(L_.pmap_tab[k]), scale);
    }
    if (a == 0)
      return SparseVec::unit(m + static_cast<std::uint32_t>(weight_[k]), scale);
    // f f -> (1/2)(f,f)
    std::uint32_t rest = m - static_cast<std::uint32_t>(weight_[k]);
    return expand_lelem(rest, L_.stored(k, k), F.mul(scale, F.half()));
  }

  SparseVec compute(std::uint32_t m, int k) {
    const GfCtx& F = L_.F;
    int j = highest_gen(m);
    if (j <= k) return terminal_bump(m, k, 1);

    // fast path: count-based sign when b_k commutes (in the super sense, with
    // vanishing bracket) past the whole tail above k
    bool clean = true;
    int odd_above = 0;
    for (int g = k + 1; g <= j; ++g) {
      std::uint32_t e = exp_of(m, g);
      if (!e) continue;
      if (!is_zero_vec(L_.bracket_basis(g, k))) {
        clean = false;
        break;
      }
      if (L_.odd(g)) odd_above += static_cast<int>(e);
    }
    if (clean) {
      Fp sign = 1;
      if (L_.odd(k) && (odd_above & 1)) sign = F.neg(1);
      std::uint32_t a = exp_of(m, k);
      bool overflow = (k < L_.n0) ? (a + 1 >= F.p()) : (a == 1);
      if (!overflow)
        return SparseVec::unit(m + static_cast<std::uint32_t>(weight_[k]), sign);
      // fall through: the exponent wraps, handle by peeling
    }

    // peel one copy of the highest generator: m = m' b_j, then
    // b_j b_k = (-1)^{|j||k|} b_k b_j + (b_j, b_k)
    std::uint32_t mp = m - static_cast<std::uint32_t>(weight_[j]);
    Fp eps = (L_.odd(j) && L_.odd(k)) ? F.neg(1) : 1;
    SparseVec part = mul_elem_gen(mul_gen(mp, k), j);
    if (eps != 1) {
      for (auto& [idx, c] : part.t) {
        (void)idx;
        c = F.mul(c, eps);
      }
    }
    SparseVec corr = expand_lelem(mp, L_.bracket_basis(j, k), 1);
    sparse_axpy(F, part, corr, 1);
    return part;
  }

  const LieSuperData& L_;
  const std::vector<std::uint64_t>& weight_;
  std::uint32_t dim_;
  int gens_;
  std::vector<SparseVec> memo_;
  std::vector<std::uint8_t> done_;
};

}  // namespace

PbwAlgebra build_enveloping_algebra(const LieSuperData& L,
                                    std::uint32_t dim_cap) {
  PbwAlgebra U;
  U.L = L;
  const GfCtx& F = L.F;
  const Fp p = F.p();

  std::uint64_t D = 1;
  U.weight.resize(L.dim());
  for (int g = 0; g < L.dim(); ++g) {
    U.weight[g] = D;
    D *= (g < L.n0) ? p : 2;
    if (D > dim_cap)
      throw BudgetExceeded("dim u(L) = p^" + std::to_string(L.n0) + " * 2^" +
                           std::to_string(L.n1) + " exceeds the dimension cap " +
                           std::to_string(dim_cap));
  }
  const auto dim = static_cast<std::uint32_t>(D);

  U.alg.F = F;
  U.alg.dim = dim;
  U.alg.unit = SparseVec::unit(0);
  U.alg.parity.resize(dim);
  for (std::uint32_t m = 0; m < dim; ++m) U.alg.parity[m] = U.mono_parity(m);

  Straightener str(L, U.weight, dim);

  // degree-ordered schedule so every m2 = m2' b_l sees m2' already filled
  std::vector<std::uint32_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(dim);
  for (std::uint32_t m = 0; m < dim; ++m) deg[m] = U.degree(m);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return deg[a] < deg[b]; });

  U.alg.table.assign(std::size_t(dim) * dim, SparseVec{});
  Vec acc(dim, 0);
  for (std::uint32_t m2 : order) {
    if (m2 == 0) {
      for (std::uint32_t m1 = 0; m1 < dim; ++m1)
        U.alg.table[std::size_t(m1) * dim] = SparseVec::unit(m1);
      continue;
    }
    int l = -1;
    for (int g = L.dim() - 1; g >= 0; --g)
      if (U.exp_of(m2, g)) {
        l = g;
        break;
      }
    std::uint32_t m2p = m2 - static_cast<std::uint32_t>(U.weight[l]);
    for (std::uint32_t m1 = 0; m1 < dim; ++m1) {
      const SparseVec& prev = U.alg.table[std::size_t(m1) * dim + m2p];
      std::fill(acc.begin(), acc.end(), 0);
      for (auto& [mu, c] : prev.t) dense_accum(F, acc, str.mul_gen(mu, l), c);
      U.alg.table[std::size_t(m1) * dim + m2] = SparseVec::from_dense(acc);
    }
  }
  return U;
}

SparseVec straighten_product(const PbwAlgebra& U, std::uint32_t m1,
                             std::uint32_t m2) {
  return U.alg.entry(m1, m2);
}

Subspace augmentation_ideal(const PbwAlgebra& U) {
  Subspace s(U.alg.F, static_cast<int>(U.dim()));
  for (std::uint32_t m = 1; m < U.dim(); ++m) {
    Vec e(U.dim(), 0);
    e[m] = 1;
    s.insert(std::move(e));
  }
  return s;
}

}  // namespace plie
