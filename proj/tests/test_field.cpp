#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/field.hpp"

using namespace plie;

TEST_CASE("context rejects non-primes and even characteristic") {
  CHECK_THROWS_AS(GfCtx(2), Error);
  CHECK_THROWS_AS(GfCtx(1), Error);
  CHECK_THROWS_AS(GfCtx(9), Error);
  CHECK_THROWS_AS(GfCtx(15), Error);
  CHECK_NOTHROW(GfCtx(3));
  CHECK_NOTHROW(GfCtx(251));
}

TEST_CASE("inverses and halving") {
  for (Fp p : {3u, 5u, 7u, 11u}) {
    GfCtx F(p);
    for (Fp a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.mul(2, F.half()) == 1);
    CHECK_THROWS_AS(F.inv(0), Error);
  }
}

TEST_CASE("reduce handles negatives") {
  GfCtx F(5);
  CHECK(F.reduce(-1) == 4);
  CHECK(F.reduce(-7) == 3);
  CHECK(F.reduce(12) == 2);
  CHECK(F.reduce(0) == 0);
}

TEST_CASE("fermat powers") {
  GfCtx F(7);
  for (Fp a = 0; a < 7; ++a) CHECK(F.pow(a, 7) == a);
}

TEST_CASE("pow_clamped saturates instead of overflowing") {
  CHECK(pow_clamped(3, 4, 1000) == 81);
  CHECK(pow_clamped(3, 40, 1000) == 1001);
  CHECK(pow_clamped(5, 0, 10) == 1);
}
