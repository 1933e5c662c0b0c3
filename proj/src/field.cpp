#include "plie/field.hpp"

namespace plie {

bool is_odd_prime(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

GfCtx::GfCtx(Fp p) : p_(p) {
  if (!is_odd_prime(p))
    throw Error("GF(p) context requires an odd prime p >= 3, got " +
                std::to_string(p));
}

Fp GfCtx::pow(Fp a, std::uint64_t e) const {
  Fp r = 1;
  Fp b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Fp GfCtx::inv(Fp a) const {
  if (a % p_ == 0) throw Error("division by zero in GF(p)");
  return pow(a, p_ - 2);
}

bool is_zero_vec(const Vec& v) {
  for (Fp x : v)
    if (x) return false;
  return true;
}

void axpy(const GfCtx& F, Vec& dst, const Vec& src, Fp c) {
  if (dst.size() != src.size())
    throw Error("axpy: mixed ambient dimensions");
  if (c == 0) return;
  const Fp p = F.p();
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<Fp>((dst[i] + std::uint64_t(c) * src[i]) % p);
}

Vec scaled(const GfCtx& F, const Vec& v, Fp c) {
  Vec r(v.size(), 0);
  axpy(F, r, v, c);
  return r;
}

Vec vec_add(const GfCtx& F, const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(F, r, b, 1);
  return r;
}

Vec vec_sub(const GfCtx& F, const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(F, r, b, F.neg(1));
  return r;
}

std::uint64_t pow_clamped(std::uint64_t p, std::uint32_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > limit / p) return limit + 1;
    r *= p;
  }
  return r;
}

}  // namespace plie
