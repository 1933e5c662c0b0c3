#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "plie/subspace.hpp"

namespace plie {

/// Structure constants of a finite-dimensional restricted Lie superalgebra
/// L = L0 + L1 over GF(p). Basis order: even block first, then odd block.
/// The bracket table stores (b_i, b_j) only for i <= j; the other half is
/// recovered from graded antisymmetry. The p-map table covers the even basis;
/// p-powers of general even elements are computed, never stored.
struct LieSuperData {
  GfCtx F;
  int n0 = 0;
  int n1 = 0;
  std::vector<std::string> names;

  // upper triangle, row-major: index tri(i,j) for i <= j, entries in GF(p)^n
  std::vector<Vec> bracket_tab;
  // p-map of even basis elements, coordinates in the even block (length n0)
  std::vector<Vec> pmap_tab;

  int dim() const { return n0 + n1; }
  bool odd(int i) const { return i >= n0; }
  std::size_t tri(int i, int j) const {  // requires i <= j
    return std::size_t(i) * (2 * dim() - i + 1) / 2 + (j - i);
  }
  const Vec& stored(int i, int j) const { return bracket_tab[tri(i, j)]; }

  /// (b_i, b_j) for arbitrary i, j via identity (x,y) = -(-1)^{|x||y|}(y,x).
  Vec bracket_basis(int i, int j) const;

  /// Bilinear extension to arbitrary coordinate vectors of length n0+n1.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// (y, x) iterated k times: ((y,x),x),...
  Vec ad_power(Vec y, const Vec& x, int k) const;

  Vec embed_even(const Vec& even_coords) const;  // length n0 -> length n
  Vec embed_odd(const Vec& odd_coords) const;    // length n1 -> length n
  Vec even_part(const Vec& full) const;
  Vec odd_part(const Vec& full) const;
};

/// Extension of the p-map from the basis table to all even elements via the
/// Jacobson sum rule, with a memo. Query operations are const and internally
/// synchronized.
class PMapClosure {
 public:
  explicit PMapClosure(const LieSuperData& L) : L_(&L) {}

  /// p-power of an even element (coordinates of length n0).
  Vec p_power(const Vec& even_coords) const;

  /// Same computation peeling basis summands from the highest index instead
  /// of the lowest; must agree with p_power (tested order independence).
  Vec p_power_reversed(const Vec& even_coords) const;

 private:
  Vec compute(const Vec& even_coords, bool reversed) const;

  const LieSuperData* L_;
  mutable std::mutex mu_;
  mutable std::map<Vec, Vec> memo_;
};

enum class CheckStatus { pass, fail, unverified };

struct AxiomCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;           // no failure (unverified allowed)
  bool fully_verified() const;   // no failure and nothing left unverified
  std::string first_failure() const;
};

/// Checks the grading of the tables, the graded Jacobi identity on basis
/// triples, compatibility of the p-map with the adjoint action on the basis
/// and (within the enumeration budget) on all even elements, and for p = 3
/// the cubic identity ((y,y),y) = 0 over the whole odd part.
AxiomReport verify_axioms(const LieSuperData& L,
                          std::uint64_t enum_cap = kDefaultEnumCap);

/// Homogeneous subspace of L, stored per graded component.
struct GradedSubspace {
  Subspace even;  // ambient n0
  Subspace odd;   // ambient n1

  int dim() const { return even.dim() + odd.dim(); }
  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  bool operator==(const GradedSubspace& o) const {
    return even == o.even && odd == o.odd;
  }
  bool contains_all(const GradedSubspace& o) const {
    return even.contains_all(o.even) && odd.contains_all(o.odd);
  }

  static GradedSubspace zero(const LieSuperData& L);
  static GradedSubspace full(const LieSuperData& L);

  /// All homogeneous spanning rows, embedded as length-n vectors.
  std::vector<Vec> embedded_rows(const LieSuperData& L) const;
};

struct IdealClosureResult {
  GradedSubspace space;
  /// Element-level closure of the even part under the p-map: verified by
  /// enumeration when within budget, otherwise only spanning-set closure is
  /// certified and this is `unverified`.
  CheckStatus p_closure = CheckStatus::pass;
  std::string note;
};

/// Smallest graded subspace containing X, closed under bracketing with L and
/// under the p-map on its even part.
IdealClosureResult restricted_ideal_closure(const LieSuperData& L,
                                            const GradedSubspace& X,
                                            std::uint64_t enum_cap = kDefaultEnumCap);

/// Checks (I, L) <= I and p-map closure of the even part.
bool is_restricted_ideal(const LieSuperData& L, const GradedSubspace& I,
                         std::uint64_t enum_cap = kDefaultEnumCap);

struct LSeries {
  std::vector<GradedSubspace> terms;
  bool terminated = false;     // reached 0
  int class_or_length = -1;    // nilpotency class / derived length when terminated
  std::vector<int> dims() const;
};

/// gamma_1 = L, gamma_{k+1} = (gamma_k, L), until 0 or stabilization.
LSeries lower_central_series(const LieSuperData& L);
/// delta_0 = L, delta_{k+1} = (delta_k, delta_k).
LSeries derived_series(const LieSuperData& L);

GradedSubspace center(const LieSuperData& L);

struct PNilResult {
  Tri verdict = Tri::budget;
  int index = 0;     // least k with x^{p^k} = 0 for all enumerated x
  Vec witness;       // even coordinates of a non-p-nilpotent element
};

/// Exhaustive p-nilpotence test of a subspace W of the even part.
PNilResult is_p_nilpotent(const LieSuperData& L, const Subspace& W_even,
                          std::uint64_t enum_cap, const PMapClosure& pm);

struct ModuleNilResult {
  bool nilpotent = false;
  int steps = 0;  // least n with (L,_n L0) = 0 when nilpotent
};

/// Iterates W <- (W, L0) from W = L; nilpotent L0-module iff it reaches 0.
ModuleNilResult nilpotent_module_over_even(const LieSuperData& L);

/// Quotient by a verified restricted graded ideal; carries the induced
/// bracket and p-map. The result passes verify_axioms (tested invariant).
LieSuperData quotient_by_ideal(const LieSuperData& L, const GradedSubspace& I,
                               std::uint64_t enum_cap = kDefaultEnumCap);

/// Span of (rows(A), rows(B)) as a graded subspace; A, B graded.
GradedSubspace bracket_span(const LieSuperData& L, const GradedSubspace& A,
                            const GradedSubspace& B);

/// Span of (b_i, b_j) over even basis pairs, as a subspace of the even part.
Subspace even_commutator_span(const LieSuperData& L);
/// Span of (odd, odd) brackets, as a subspace of the even part.
Subspace odd_odd_bracket_span(const LieSuperData& L);
/// Span of (odd, even) brackets, landing in the odd part.
Subspace odd_even_bracket_span(const LieSuperData& L);

}  // namespace plie
