#include "charsum/intarith.hpp"

#include <algorithm>
#include <string>

#include "charsum/error.hpp"

namespace charsum {

FactoredInt factor_int(std::uint64_t n) {
  if (n == 0 || n > kMaxFactorInput)
    raise(ErrorKind::OutOfRange, "factor_int input " + std::to_string(n));
  FactoredInt out;
  out.value = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.factors.emplace_back(d, e);
  }
  if (n > 1) out.factors.emplace_back(n, 1u);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mu_int(const FactoredInt& n) {
  int mu = 1;
  for (const auto& [prime, e] : n.factors) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t phi_int(const FactoredInt& n) {
  std::uint64_t phi = 1;
  for (const auto& [prime, e] : n.factors) {
    phi *= prime - 1;
    for (unsigned i = 1; i < e; ++i) phi *= prime;
  }
  return phi;
}

std::vector<std::uint64_t> divisors_int(const FactoredInt& n) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [prime, e] : n.factors) {
    const std::size_t base = divs.size();
    std::uint64_t power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= prime;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int mu_int(std::uint64_t n) { return mu_int(factor_int(n)); }
std::uint64_t phi_int(std::uint64_t n) { return phi_int(factor_int(n)); }
std::vector<std::uint64_t> divisors_int(std::uint64_t n) { return divisors_int(factor_int(n)); }

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out))
      raise(ErrorKind::OutOfRange, "integer power overflows 64 bits");
  }
  return out;
}

}  // namespace charsum
