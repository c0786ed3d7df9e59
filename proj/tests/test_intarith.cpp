#include "doctest.h"

#include <numeric>

#include "charsum/intarith.hpp"
#include "support.hpp"

using namespace charsum;
using testing_support::expect_error;

namespace {

int brute_mu(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d) continue;
    if ((n / d) % d == 0) return 0;
    n /= d;
    sign = -sign;
  }
  return sign;
}

std::uint64_t brute_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("factor_int examples") {
  CHECK(factor_int(1).factors.empty());
  const auto f63 = factor_int(63);
  REQUIRE(f63.factors.size() == 2);
  CHECK(f63.factors[0] == std::pair<std::uint64_t, unsigned>{3, 2});
  CHECK(f63.factors[1] == std::pair<std::uint64_t, unsigned>{7, 1});
  const auto f7 = factor_int(7);
  REQUIRE(f7.factors.size() == 1);
  CHECK(f7.factors[0].first == 7);
  CHECK(expect_error(ErrorKind::OutOfRange, [] { factor_int(0); }));
  CHECK(expect_error(ErrorKind::OutOfRange, [] { factor_int(kMaxFactorInput + 1); }));
}

TEST_CASE("mu, phi and divisors examples") {
  CHECK(mu_int(6) == 1);
  CHECK(phi_int(6) == 2);
  CHECK(mu_int(4) == 0);
  CHECK(divisors_int(7) == std::vector<std::uint64_t>{1, 7});
  CHECK(mu_int(1) == 1);
  CHECK(phi_int(1) == 1);
  CHECK(divisors_int(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("mu and phi against direct definitions") {
  for (std::uint64_t n = 1; n <= 600; ++n) {
    CHECK(mu_int(n) == brute_mu(n));
    CHECK(phi_int(n) == brute_phi(n));
  }
}

TEST_CASE("divisor sums of phi and mu up to 4096") {
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    const auto f = factor_int(n);
    std::uint64_t prod = 1;
    for (auto [pr, ex] : f.factors) {
      CHECK(is_prime(pr));
      for (unsigned i = 0; i < ex; ++i) prod *= pr;
    }
    CHECK(prod == n);
    std::uint64_t phi_sum = 0;
    int mu_sum = 0;
    const auto ds = divisors_int(f);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    for (std::uint64_t d : ds) {
      CHECK(n % d == 0);
      phi_sum += phi_int(d);
      mu_sum += mu_int(d);
    }
    CHECK(phi_sum == n);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("checked_pow") {
  CHECK(checked_pow(2, 10) == 1024);
  CHECK(checked_pow(7, 0) == 1);
  CHECK(expect_error(ErrorKind::OutOfRange, [] { checked_pow(2, 64); }));
  CHECK(is_prime(2));
  CHECK(!is_prime(1));
  CHECK(!is_prime(4));
}
