#include "plie/subspace.hpp"

#include <algorithm>

namespace plie {

Subspace Subspace::span(const GfCtx& F, int ambient,
                        const std::vector<Vec>& vectors) {
  Subspace s(F, ambient);
  for (const Vec& v : vectors) {
    if (static_cast<int>(v.size()) != ambient)
      throw Error("span: mixed ambient dimensions");
    s.insert(v);
  }
  return s;
}

Subspace Subspace::full(const GfCtx& F, int ambient) {
  Subspace s(F, ambient);
  for (int i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    s.insert(std::move(e));
  }
  return s;
}

bool Subspace::insert(Vec v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw Error("insert: mixed ambient dimensions");
  // eliminate against existing pivots
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Fp c = v[pivots_[k]];
    if (c) axpy(F_, v, rows_[k], F_.neg(c));
  }
  int lead = -1;
  for (int i = 0; i < ambient_; ++i)
    if (v[i]) {
      lead = i;
      break;
    }
  if (lead < 0) return false;
  Fp c = v[lead];
  if (c != 1) {
    Fp ic = F_.inv(c);
    for (auto& x : v) x = F_.mul(x, ic);
  }
  // clear the new pivot column in the old rows
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Fp d = rows_[k][lead];
    if (d) axpy(F_, rows_[k], v, F_.neg(d));
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

Vec Subspace::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw Error("reduce: mixed ambient dimensions");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Fp c = v[pivots_[k]];
    if (c) axpy(F_, v, rows_[k], F_.neg(c));
  }
  return v;
}

bool Subspace::contains_all(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("contains_all: mixed ambients");
  for (const Vec& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::before(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return rows_ < o.rows_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("sum: mixed ambients");
  Subspace s = a;
  for (const Vec& r : b.rows()) s.insert(r);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("intersect: mixed ambients");
  const GfCtx& F = a.field();
  Subspace out(F, a.ambient());
  if (a.is_zero() || b.is_zero()) return out;
  // kernel of the stacked basis: c with sum c_i a_i + sum c_j b_j = 0
  std::vector<Vec> stacked = a.rows();
  for (const Vec& r : b.rows()) stacked.push_back(r);
  Subspace k = kernel_of_rows(F, stacked, a.ambient());
  for (const Vec& c : k.rows()) {
    Vec v(a.ambient(), 0);
    for (int i = 0; i < a.dim(); ++i) axpy(F, v, a.rows()[i], c[i]);
    out.insert(std::move(v));
  }
  return out;
}

int codim_in(const Subspace& a, const Subspace& b) {
  if (!b.contains_all(a)) throw Error("codim_in: first argument not contained in second");
  return b.dim() - a.dim();
}

Subspace kernel_of_rows(const GfCtx& F, const std::vector<Vec>& rows,
                        int ambient) {
  const int m = static_cast<int>(rows.size());
  Subspace ker(F, m);
  // echelon with tags: tag records the combination of input rows
  std::vector<Vec> ech;
  std::vector<Vec> tags;
  std::vector<int> piv;
  for (int i = 0; i < m; ++i) {
    Vec v = rows[i];
    if (static_cast<int>(v.size()) != ambient)
      throw Error("kernel_of_rows: mixed ambients");
    Vec t(m, 0);
    t[i] = 1;
    for (std::size_t k = 0; k < ech.size(); ++k) {
      Fp c = v[piv[k]];
      if (c) {
        axpy(F, v, ech[k], F.neg(c));
        axpy(F, t, tags[k], F.neg(c));
      }
    }
    int lead = -1;
    for (int j = 0; j < ambient; ++j)
      if (v[j]) {
        lead = j;
        break;
      }
    if (lead < 0) {
      ker.insert(std::move(t));
    } else {
      Fp ic = F.inv(v[lead]);
      for (auto& x : v) x = F.mul(x, ic);
      for (auto& x : t) x = F.mul(x, ic);
      ech.push_back(std::move(v));
      tags.push_back(std::move(t));
      piv.push_back(lead);
    }
  }
  return ker;
}

QuotientMap::QuotientMap(const Subspace& big, const Subspace& small)
    : big_(big), small_(small) {
  if (big.ambient() != small.ambient())
    throw Error("quotient: mixed ambients");
  if (!big.contains_all(small))
    throw Error("quotient: subspace not contained in the bigger space");
  const GfCtx& F = big.field();
  const int r = big.dim();
  small_coords_ = Subspace(F, r);
  for (const Vec& row : small.rows()) {
    Vec w(r, 0);
    for (int k = 0; k < r; ++k) w[k] = row[big.pivots()[k]];
    small_coords_.insert(std::move(w));
  }
  std::size_t next = 0;
  for (int j = 0; j < r; ++j) {
    if (next < small_coords_.pivots().size() &&
        small_coords_.pivots()[next] == j) {
      ++next;
    } else {
      nonpivots_.push_back(j);
    }
  }
}

Vec QuotientMap::apply(const Vec& v) const {
  const GfCtx& F = big_.field();
  if (!big_.contains(v)) throw Error("quotient map applied outside its domain");
  const int r = big_.dim();
  Vec w(r, 0);
  for (int k = 0; k < r; ++k) w[k] = v[big_.pivots()[k]];
  w = small_coords_.reduce(std::move(w));
  Vec y(nonpivots_.size(), 0);
  for (std::size_t j = 0; j < nonpivots_.size(); ++j) y[j] = w[nonpivots_[j]];
  (void)F;
  return y;
}

Vec QuotientMap::section(const Vec& y) const {
  const GfCtx& F = big_.field();
  if (y.size() != nonpivots_.size()) throw Error("section: wrong length");
  Vec v(big_.ambient(), 0);
  for (std::size_t j = 0; j < nonpivots_.size(); ++j)
    axpy(F, v, big_.rows()[nonpivots_[j]], y[j]);
  return v;
}

std::vector<Subspace> hyperplanes_containing(const Subspace& w,
                                             const Subspace& ambient) {
  QuotientMap q(ambient, w);  // validates containment
  const GfCtx& F = ambient.field();
  const int qd = q.qdim();
  std::vector<Subspace> out;
  if (qd == 0) return out;
  // normalized covectors: leading coefficient 1 at position `lead`
  const Fp p = F.p();
  for (int lead = 0; lead < qd; ++lead) {
    const int free = qd - lead - 1;
    std::vector<Fp> digits(free, 0);
    while (true) {
      Vec phi(qd, 0);
      phi[lead] = 1;
      for (int j = 0; j < free; ++j) phi[lead + 1 + j] = digits[j];
      // kernel of phi in GF(p)^qd, pulled back through the section
      Subspace h = w;
      for (int j = 0; j < qd; ++j) {
        if (j == lead) continue;
        Vec k(qd, 0);
        k[j] = 1;
        k[lead] = F.neg(phi[j]);
        h.insert(q.section(k));
      }
      out.push_back(std::move(h));
      int pos = free - 1;
      while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Subspace& a, const Subspace& b) { return a.before(b); });
  return out;
}

std::uint64_t element_count_clamped(const Subspace& s, std::uint64_t limit) {
  return pow_clamped(s.field().p(), static_cast<std::uint32_t>(s.dim()), limit);
}

void for_each_element(const Subspace& s, std::uint64_t cap,
                      const std::function<void(const Vec&)>& fn) {
  if (element_count_clamped(s, cap) > cap)
    throw BudgetExceeded("enumeration budget exceeded: p^" +
                         std::to_string(s.dim()) + " elements > cap " +
                         std::to_string(cap));
  const GfCtx& F = s.field();
  const int d = s.dim();
  const Fp p = F.p();
  std::vector<Fp> digits(d, 0);
  Vec v(s.ambient(), 0);
  while (true) {
    std::fill(v.begin(), v.end(), 0);
    for (int i = 0; i < d; ++i) axpy(F, v, s.rows()[i], digits[i]);
    fn(v);
    int pos = d - 1;
    while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
}

Vec BilinearMap::apply(const Vec& u, const Vec& v) const {
  Vec out(dim_w, 0);
  for (int i = 0; i < dim_u; ++i) {
    if (!u[i]) continue;
    for (int j = 0; j < dim_v; ++j) {
      if (!v[j]) continue;
      axpy(F, out, at(i, j), F.mul(u[i], v[j]));
    }
  }
  return out;
}

namespace {

// max over nonzero u (up to scalar) of rank of the slice v -> phi(u, v)
Tri max_slice_rank(const BilinearMap& phi, bool left_side,
                   std::uint64_t enum_cap, int* out) {
  const GfCtx& F = phi.F;
  const int du = left_side ? phi.dim_u : phi.dim_v;
  const int dv = left_side ? phi.dim_v : phi.dim_u;
  if (pow_clamped(F.p(), du, enum_cap) > enum_cap) return Tri::budget;
  Subspace dom = Subspace::full(F, du);
  int best = 0;
  for_each_element(dom, enum_cap, [&](const Vec& u) {
    if (is_zero_vec(u)) return;
    Subspace image(F, phi.dim_w);
    for (int j = 0; j < dv; ++j) {
      Vec e(dv, 0);
      e[j] = 1;
      image.insert(left_side ? phi.apply(u, e) : phi.apply(e, u));
    }
    best = std::max(best, image.dim());
  });
  *out = best;
  return Tri::yes;
}

}  // namespace

AnnihilatorBoundReport check_annihilator_bound(const BilinearMap& phi,
                                               std::uint64_t enum_cap) {
  AnnihilatorBoundReport rep;
  int m = 0, l = 0;
  if (max_slice_rank(phi, true, enum_cap, &m) == Tri::budget ||
      max_slice_rank(phi, false, enum_cap, &l) == Tri::budget) {
    rep.status = Tri::budget;
    return rep;
  }
  rep.max_codim_u = m;
  rep.max_codim_v = l;
  Subspace spanned(phi.F, phi.dim_w);
  for (const Vec& t : phi.tensor) spanned.insert(t);
  rep.span_dim = spanned.dim();
  rep.status = (rep.span_dim <= m * l) ? Tri::yes : Tri::no;
  return rep;
}

}  // namespace plie
