#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace charsum {

inline constexpr std::uint32_t kMaxCyclotomicOrder = 1u << 16;

/// Phi_n with integer coefficients, lowest degree first, computed by exact
/// division (x^n - 1) / prod_{d | n, d < n} Phi_d. Throws OutOfRange for
/// n == 0 or n > kMaxCyclotomicOrder.
std::vector<std::int64_t> cyclotomic_poly(std::uint32_t n);

/// Z[x]/Phi_n(x) with reduction tables. Shared, immutable once built.
class CyclotomicRing {
 public:
  /// Process-wide cache; safe to call from several threads.
  static std::shared_ptr<const CyclotomicRing> get(std::uint32_t n);

  explicit CyclotomicRing(std::uint32_t n);

  std::uint32_t order() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return phi_.size() - 1; }
  const std::vector<std::int64_t>& modulus() const noexcept { return phi_; }
  /// max over t of the largest |coefficient| of x^t mod Phi_n.
  std::int64_t monomial_bound() const noexcept { return monomial_bound_; }

  /// Reduces an integer polynomial of any length modulo Phi_n, returning
  /// exactly dimension() coordinates in the power basis.
  std::vector<std::int64_t> reduce(std::span<const std::int64_t> poly) const;

 private:
  std::uint32_t n_;
  std::vector<std::int64_t> phi_;
  // Phi_n = prod (1 - x^e)^(mu(n/e)) over divisors e with n/e square-free (n >= 2).
  std::vector<std::pair<std::uint32_t, int>> factors_;
  std::int64_t monomial_bound_ = 1;
};

/// Exact element of Z[zeta_n], stored fully reduced in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1).
class CycInt {
 public:
  explicit CycInt(std::shared_ptr<const CyclotomicRing> ring);
  CycInt(std::shared_ptr<const CyclotomicRing> ring, std::span<const std::int64_t> poly);

  static CycInt zero(std::uint32_t n) { return CycInt(CyclotomicRing::get(n)); }
  static CycInt integer(std::uint32_t n, std::int64_t value);
  /// zeta_n^k.
  static CycInt root_power(std::uint32_t n, std::uint64_t k);
  /// sum_t counts[t] zeta_n^t, counts indexed by exponent mod n.
  static CycInt from_exponent_counts(std::shared_ptr<const CyclotomicRing> ring,
                                     std::span<const std::int64_t> counts);

  std::uint32_t order() const noexcept { return ring_->order(); }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  const std::shared_ptr<const CyclotomicRing>& ring() const noexcept { return ring_; }

  /// The constant coordinate when every other coordinate vanishes.
  std::optional<std::int64_t> as_integer() const;

  CycInt operator-() const;
  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt& operator+=(const CycInt& b) { return *this = *this + b; }
  CycInt& operator*=(const CycInt& b) { return *this = *this * b; }
  /// Throws MixedOrders when the operands live in different rings.
  friend bool operator==(const CycInt& a, const CycInt& b);

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<std::int64_t> coords_;
};

}  // namespace charsum
