#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "charsum/galois_field.hpp"
#include "charsum/types.hpp"

namespace charsum {

inline constexpr std::uint64_t kDefaultLimit = 4096;
inline constexpr std::uint64_t kDefaultQuadraticLimit = 512;

/// The tower F_p <= F_q <= F_{q^m}, q = p^e.
///
/// F_q = F_p[y]/(base_modulus) and F_{q^m} = F_q[x]/(top_modulus), both moduli
/// being the smallest monic irreducibles (nonzero constant term) in the fixed
/// polynomial order. Immutable once built; trace and Frobenius are tabulated.
class FieldCtx {
 public:
  std::uint32_t p() const noexcept { return prime_->characteristic(); }
  unsigned e() const noexcept { return base_->degree(); }
  unsigned m() const noexcept { return top_->degree(); }
  std::uint32_t q() const noexcept { return base_->size(); }
  std::uint32_t size() const noexcept { return top_->size(); }

  const GaloisField& prime_field() const noexcept { return *prime_; }
  const GaloisField& base() const noexcept { return *base_; }
  const GaloisField& top() const noexcept { return *top_; }
  std::shared_ptr<const GaloisField> base_ptr() const noexcept { return base_; }

  const Poly& base_modulus() const noexcept { return base_->modulus(); }
  const Poly& top_modulus() const noexcept { return top_->modulus(); }

  Elem primitive() const noexcept { return top_->generator(); }
  std::uint32_t trace(Elem a) const noexcept { return trace_[a.index]; }
  Elem frobenius(Elem a) const noexcept { return Elem{frobenius_[a.index]}; }

  /// The fixed F_p-basis of F_{q^m}: elements y^j x^i, i.e. indices p^(i*e+j).
  std::vector<Elem> prime_basis() const;

  friend FieldCtx build_field(std::uint32_t p, unsigned e, unsigned m, std::uint64_t limit);

 private:
  FieldCtx() = default;

  std::shared_ptr<const GaloisField> prime_;
  std::shared_ptr<const GaloisField> base_;
  std::shared_ptr<const GaloisField> top_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::uint32_t> frobenius_;
};

/// Throws NotPrime, SizeExceeded (p^(e m) > limit) or OutOfRange (e or m zero).
FieldCtx build_field(std::uint32_t p, unsigned e, unsigned m, std::uint64_t limit = kDefaultLimit);

/// Absolute trace sum_{i < e m} g^(p^i), returned as a residue mod p.
std::uint32_t trace_to_prime(const FieldCtx& ctx, Elem g);

/// g^q.
Elem relative_frobenius(const FieldCtx& ctx, Elem g);

/// First element, in enumeration order, of multiplicative order q^m - 1.
Elem find_primitive(const FieldCtx& ctx);

/// Exponent k in [0, q^m - 1) with primitive^k = g; throws ZeroElement.
std::uint32_t discrete_log(const FieldCtx& ctx, Elem g);

}  // namespace charsum
