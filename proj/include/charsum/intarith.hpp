#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace charsum {

/// Inputs to the integer helpers are bounded so that trial division stays cheap.
inline constexpr std::uint64_t kMaxFactorInput = std::uint64_t{1} << 40;

struct FactoredInt {
  std::uint64_t value = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // sorted by prime
};

/// Trial division; throws OutOfRange for n == 0 or n > kMaxFactorInput.
FactoredInt factor_int(std::uint64_t n);

bool is_prime(std::uint64_t n);

int mu_int(std::uint64_t n);
std::uint64_t phi_int(std::uint64_t n);
std::vector<std::uint64_t> divisors_int(std::uint64_t n);

int mu_int(const FactoredInt& n);
std::uint64_t phi_int(const FactoredInt& n);
std::vector<std::uint64_t> divisors_int(const FactoredInt& n);

/// Checked integer power; throws OutOfRange when the result leaves 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace charsum
