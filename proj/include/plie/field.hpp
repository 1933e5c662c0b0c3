#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plie {

using Fp = std::uint32_t;

/// Dense coordinate vector over GF(p). Length is the ambient dimension and is
/// fixed by context; all entries are reduced mod p.
using Vec = std::vector<Fp>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive enumeration or table construction would exceed
/// its explicit budget. Never downgraded to sampling.
struct BudgetExceeded : Error {
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultEnumCap = 6561;  // p^dim bound
inline constexpr std::uint32_t kDefaultDimCap = 1024;   // dim u(L) bound

struct Caps {
  std::uint64_t enum_cap = kDefaultEnumCap;
  std::uint32_t dim_cap = kDefaultDimCap;
};

/// Three-valued outcome for checks that may run out of enumeration budget.
enum class Tri { yes, no, budget };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "inconclusive";
  }
}

bool is_odd_prime(std::uint64_t n);

/// Arithmetic context for GF(p), p an odd prime >= 3. Scalars are bare
/// residues; the context carries the modulus for the whole computation.
class GfCtx {
 public:
  GfCtx() : p_(3) {}
  explicit GfCtx(Fp p);

  Fp p() const { return p_; }

  Fp add(Fp a, Fp b) const {
    Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const { return a ? p_ - a : 0; }
  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>(std::uint64_t(a) * b % p_);
  }
  Fp pow(Fp a, std::uint64_t e) const;
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }
  Fp half() const { return inv(2); }
  /// Reduce an arbitrary signed integer into [0, p).
  Fp reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Fp>(r < 0 ? r + p_ : r);
  }

  bool operator==(const GfCtx& o) const { return p_ == o.p_; }
  bool operator!=(const GfCtx& o) const { return p_ != o.p_; }

 private:
  Fp p_;
};

// --- dense vector helpers ---

bool is_zero_vec(const Vec& v);

/// dst += c * src (componentwise, mod p). Lengths must match.
void axpy(const GfCtx& F, Vec& dst, const Vec& src, Fp c);

Vec scaled(const GfCtx& F, const Vec& v, Fp c);
Vec vec_add(const GfCtx& F, const Vec& a, const Vec& b);
Vec vec_sub(const GfCtx& F, const Vec& a, const Vec& b);

/// p^e clamped so that anything above `limit` reports as limit+1.
std::uint64_t pow_clamped(std::uint64_t p, std::uint32_t e, std::uint64_t limit);

}  // namespace plie
