#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plie/field.hpp"

namespace plie {

/// A subspace of GF(p)^n stored in reduced row echelon form. Equality is
/// representation equality: RREF is the canonical form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const GfCtx& F, int ambient) : F_(F), ambient_(ambient) {}

  static Subspace span(const GfCtx& F, int ambient,
                       const std::vector<Vec>& vectors);
  static Subspace full(const GfCtx& F, int ambient);

  const GfCtx& field() const { return F_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return dim() == ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Insert a vector, keeping RREF. Returns true if the dimension grew.
  bool insert(Vec v);

  /// Residual of v after elimination against the basis rows.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(std::move(v))); }
  bool contains_all(const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Strict total order on subspaces of one ambient space (dim, then rows
  /// lexicographically). Used to fix deterministic candidate orders.
  bool before(const Subspace& o) const;

 private:
  GfCtx F_;
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// dim b - dim a; requires a to be contained in b.
int codim_in(const Subspace& a, const Subspace& b);

/// Kernel of the linear map e_i -> rows[i], as a subspace of GF(p)^rows.size().
Subspace kernel_of_rows(const GfCtx& F, const std::vector<Vec>& rows,
                        int ambient);

/// Surjective coordinate map big -> GF(p)^(dim big - dim small) with kernel
/// exactly `small`, plus a section; apply(section(y)) == y.
class QuotientMap {
 public:
  QuotientMap(const Subspace& big, const Subspace& small);

  int qdim() const { return static_cast<int>(nonpivots_.size()); }
  Vec apply(const Vec& v) const;     // element of big -> GF(p)^q
  Vec section(const Vec& y) const;   // GF(p)^q -> representative in big

  const Subspace& big() const { return big_; }
  const Subspace& small() const { return small_; }

 private:
  Subspace big_, small_;
  Subspace small_coords_;          // image of small in big-coordinates
  std::vector<int> nonpivots_;     // complement of small_coords_ pivots
};

/// All subspaces h with w <= h <= ambient and codim 1 in ambient, in a
/// deterministic (echelon-lexicographic) order.
std::vector<Subspace> hyperplanes_containing(const Subspace& w,
                                             const Subspace& ambient);

/// Visit each of the p^dim(s) elements exactly once. Throws BudgetExceeded
/// if p^dim(s) > cap.
void for_each_element(const Subspace& s, std::uint64_t cap,
                      const std::function<void(const Vec&)>& fn);

std::uint64_t element_count_clamped(const Subspace& s, std::uint64_t limit);

/// Explicit bilinear map U x V -> W by coordinate tensor.
struct BilinearMap {
  GfCtx F;
  int dim_u = 0, dim_v = 0, dim_w = 0;
  std::vector<Vec> tensor;  // tensor[u*dim_v + v] = phi(e_u, e_v)

  const Vec& at(int u, int v) const { return tensor[std::size_t(u) * dim_v + v]; }
  Vec apply(const Vec& u, const Vec& v) const;
};

struct AnnihilatorBoundReport {
  Tri status = Tri::budget;   // yes = bound holds
  int max_codim_u = 0;        // max over nonzero u of codim of its annihilator in V
  int max_codim_v = 0;        // symmetric
  int span_dim = 0;           // dim of the span of the image
};

/// Checks dim span phi(U,V) <= m*l where m, l are the exact annihilator
/// codimension bounds, computed by enumerating all nonzero u (resp. v) up to
/// scalar. Budget applies to p^dim_u and p^dim_v.
AnnihilatorBoundReport check_annihilator_bound(const BilinearMap& phi,
                                               std::uint64_t enum_cap);

}  // namespace plie
