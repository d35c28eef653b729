#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skolem/bigint.hpp"
#include "skolem/enumeration.hpp"

using skolem::BigUint;

TEST_CASE("construction and decimal output") {
  CHECK(BigUint().to_decimal() == "0");
  CHECK(BigUint(1).to_decimal() == "1");
  CHECK(BigUint(999999999).to_decimal() == "999999999");
  CHECK(BigUint(1000000000).to_decimal() == "1000000000");
  CHECK(BigUint(0xffffffffffffffffull).to_decimal() == "18446744073709551615");
}

TEST_CASE("decimal round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t v = rng();
    const BigUint big(v);
    CHECK(BigUint::from_decimal(big.to_decimal()) == big);
    CHECK(big.low_u64() == v);
    CHECK(big.fits_u64());
  }
  CHECK_THROWS_AS(BigUint::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(BigUint::from_decimal("12x"), std::invalid_argument);
}

TEST_CASE("addition and small multiplication") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = rng() >> 2, b = rng() >> 2;
    CHECK((BigUint(a) + BigUint(b)).low_u64() == a + b);
  }
  BigUint v(0xffffffffull);
  v *= 0xffffffffu;
  CHECK(v.to_decimal() == "18446744065119617025");  // (2^32 - 1)^2
}

TEST_CASE("factorials beyond 64 bits") {
  CHECK(skolem::factorial_count(0).to_decimal() == "1");
  CHECK(skolem::factorial_count(20).to_decimal() == "2432902008176640000");
  CHECK(skolem::factorial_count(25).to_decimal() == "15511210043330985984000000");
  CHECK(skolem::double_factorial_count(0).to_decimal() == "1");
  CHECK(skolem::double_factorial_count(3).to_decimal() == "15");
  CHECK(skolem::double_factorial_count(10).to_decimal() == "654729075");  // 19!!
}

TEST_CASE("comparison and residues") {
  CHECK(BigUint(5) < BigUint(6));
  CHECK(BigUint(0xffffffffffffffffull) < BigUint::from_decimal("18446744073709551616"));
  CHECK(BigUint(85169).mod4() == 1);
  CHECK(BigUint(957).is_odd());
  CHECK_FALSE(BigUint(504).is_odd());
}
