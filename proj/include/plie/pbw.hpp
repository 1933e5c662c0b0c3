#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plie/superlie.hpp"

namespace plie {

/// Sparse linear combination of basis indices: sorted, no zero coefficients.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Fp>> t;

  bool empty() const { return t.empty(); }
  static SparseVec unit(std::uint32_t idx, Fp c = 1) {
    SparseVec v;
    if (c) v.t.push_back({idx, c});
    return v;
  }
  static SparseVec from_dense(const Vec& d);
  Vec to_dense(std::uint32_t dim) const;
  bool operator==(const SparseVec& o) const { return t == o.t; }
};

/// dst += c * src, keeping the sparse canonical form.
void sparse_axpy(const GfCtx& F, SparseVec& dst, const SparseVec& src, Fp c);

/// Finite-dimensional associative superalgebra given by an explicit basis
/// multiplication table and a parity vector. Immutable once built.
struct AssocAlgebra {
  GfCtx F;
  std::uint32_t dim = 0;
  std::vector<SparseVec> table;  // dim*dim, row-major: table[i*dim+j] = b_i b_j
  std::vector<std::uint8_t> parity;
  SparseVec unit;  // coordinates of 1 (empty when the unit collapsed)

  const SparseVec& entry(std::uint32_t i, std::uint32_t j) const {
    return table[std::size_t(i) * dim + j];
  }

  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  Vec mul_dense(const Vec& a, const Vec& b) const;
  /// u * b_j and b_j * u for a dense u.
  Vec mul_basis_right(const Vec& u, std::uint32_t j) const;
  Vec mul_basis_left(std::uint32_t j, const Vec& u) const;
  /// [u, b_j] = u b_j - b_j u.
  Vec commutator_basis(const Vec& u, std::uint32_t j) const;
  Vec commutator(const Vec& u, const Vec& v) const;
  /// Super-commutator of parity-homogeneous elements.
  Vec super_commutator(const Vec& u, std::uint8_t pu, const Vec& v,
                       std::uint8_t pv) const;
  /// Parity of a homogeneous element read off its support; throws on mixed
  /// support or (by convention) on zero.
  std::uint8_t parity_of(const Vec& u) const;
  /// Checked variant: infers parities and rejects non-homogeneous inputs.
  Vec super_commutator(const Vec& u, const Vec& v) const {
    return super_commutator(u, parity_of(u), v, parity_of(v));
  }

  Vec power(Vec u, int e) const;  // u^e, e >= 1

  bool unit_law_holds() const;
  /// Exact on all triples when dim <= 64, otherwise `samples` random triples.
  bool associativity_holds(int samples = 10000, std::uint64_t seed = 1) const;
  /// parity(b_i b_j support) = parity(b_i) + parity(b_j) for every entry.
  bool grading_holds() const;

  Subspace even_coordinate_subspace() const;
};

/// u(L) together with its PBW monomial bookkeeping. The monomial with index m
/// has even exponents digit-encoded base p and odd exponents as bits, even
/// generators first (input order), then odd.
struct PbwAlgebra {
  AssocAlgebra alg;
  LieSuperData L;
  std::vector<std::uint64_t> weight;  // per generator: index stride

  std::uint32_t dim() const { return alg.dim; }
  int gens() const { return L.dim(); }
  std::uint32_t exp_of(std::uint32_t mono, int g) const;
  std::uint32_t generator_mono(int g) const {  // degree-1 monomial of b_g
    return static_cast<std::uint32_t>(weight[g]);
  }
  int degree(std::uint32_t mono) const;
  std::uint8_t mono_parity(std::uint32_t mono) const;
  std::vector<std::uint32_t> word(std::uint32_t mono) const;  // generator list

  /// Image of an L element (length n0+n1) among the degree-1 monomials.
  Vec embed(const Vec& lelem) const;
  /// Inverse on the degree-<=1 part; throws if higher monomials are present.
  Vec project_to_L(const Vec& relem) const;
};

/// Builds the full multiplication table of u(L) by straightening. Throws
/// BudgetExceeded when p^{n0} 2^{n1} > dim_cap.
PbwAlgebra build_enveloping_algebra(const LieSuperData& L,
                                    std::uint32_t dim_cap = kDefaultDimCap);

/// Straightened product of two PBW monomials.
SparseVec straighten_product(const PbwAlgebra& U, std::uint32_t m1,
                             std::uint32_t m2);

/// The augmentation ideal: span of all non-empty monomials (codim 1).
Subspace augmentation_ideal(const PbwAlgebra& U);

}  // namespace plie
