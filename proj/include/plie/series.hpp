#pragma once

#include <optional>
#include <string>

#include "plie/pbw.hpp"

namespace plie {

enum class SeriesKind { lower_central, derived, super_central, ideal_power };

const char* series_kind_name(SeriesKind k);  // gamma / delta / gamma_super / assoc_power

/// A descending series of subspaces of an AssocAlgebra. `dims` are weakly
/// decreasing; `terminated` iff the last term is zero; stabilization above
/// zero is recorded with terminated = false.
struct SeriesResult {
  SeriesKind kind = SeriesKind::lower_central;
  std::vector<int> dims;
  bool terminated = false;
  int class_or_length = -1;  // nilpotency class / derived length when terminated
  std::vector<Subspace> terms;
  // graded terms, only for the super-central series
  std::vector<Subspace> terms_even, terms_odd;
};

/// gamma_1 = A, gamma_{n+1} = [gamma_n, A] with [u,v] = uv - vu.
SeriesResult lie_lower_central_series(const AssocAlgebra& A, int max_terms = -1);
/// delta_0 = A, delta_{n+1} = [delta_n, delta_n].
SeriesResult lie_derived_series(const AssocAlgebra& A, int max_terms = -1);
/// Super lower central series computed on graded spanning sets; requires the
/// parity vector and refuses algebras without one.
SeriesResult super_central_series(const AssocAlgebra& A, int max_terms = -1);

/// Closure of gens under left/right multiplication by basis elements.
Subspace two_sided_ideal(const AssocAlgebra& A, const Subspace& gens);

/// Span of pairwise products of basis representatives.
Subspace subspace_product(const AssocAlgebra& A, const Subspace& S,
                          const Subspace& T);
Subspace subspace_power(const AssocAlgebra& A, const Subspace& S, int k);

/// Span of [b_i, b_j]; generates the commutator ideal.
Subspace commutator_span(const AssocAlgebra& A);

/// Span of [[A,A],[A,A],A], the Zalesskii-Smirnov generating set.
Subspace double_commutator_triple_span(const AssocAlgebra& A);

struct NilpotencyResult {
  bool nilpotent = false;
  int index = 0;     // least c with S^{c+1} = 0 when nilpotent
  int steps = 0;     // powers actually computed
  bool stabilized = false;  // S^{m+1} = S^m != 0: definitively not nilpotent
};

/// Least c with S^{c+1} = 0 via subspace powers. A fixed point above zero is
/// a proof of non-nilpotence; otherwise gives up after max_k powers.
NilpotencyResult nilpotency_index(const AssocAlgebra& A, const Subspace& S,
                                  int max_k = -1);

struct NilIndexResult {
  Tri verdict = Tri::budget;  // yes: nil with exact index; no: witness found
  int index = 0;              // least e with x^e = 0 for all x
  Vec witness;
};

/// Exact nil index of S by enumerating all p^{dim S} elements.
NilIndexResult nil_index_exact(const AssocAlgebra& A, const Subspace& S,
                               std::uint64_t enum_cap);

struct QuotientAlgebraResult {
  AssocAlgebra alg;           // parity empty when J is not graded
  bool parity_available = false;
  bool unital_collapsed = false;  // image of 1 is zero (J = full)
};

/// Quotient by a verified two-sided ideal; parity is induced only when J is
/// spanned by parity-homogeneous vectors.
QuotientAlgebraResult quotient_algebra(const AssocAlgebra& A, const Subspace& J);

bool is_two_sided_ideal(const AssocAlgebra& A, const Subspace& J);

struct ClassBoundReport {
  bool applicable = false;
  std::string reason;      // when not applicable
  int c = 0;               // nilpotency index of I (>= 1; I = 0 counts as 1)
  int d = 0;               // Lie class of R/I^2
  int bound = 0;           // 2cd - c - d + 2
  int actual_class = -1;   // Lie class of R when it is Lie nilpotent
  bool holds = false;      // gamma_bound(R) = 0
};

/// For a nilpotent two-sided ideal I with R/I^2 Lie nilpotent of class d,
/// checks gamma_{2cd-c-d+2}(R) = 0.
ClassBoundReport check_nilpotent_ideal_class_bound(const AssocAlgebra& A,
                                                   const Subspace& I);

/// Checks [S_a S_b,_n S_c] <= sum_i [S_a,_i S_c][S_b,_{n-i} S_c] as subspaces.
bool check_bracket_product_expansion(const AssocAlgebra& A, const Subspace& Sa,
                                     const Subspace& Sb, const Subspace& Sc,
                                     int n);

}  // namespace plie
