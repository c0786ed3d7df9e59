#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "charsum/types.hpp"

namespace charsum {

/// A finite field given either as F_p or as sub[x]/(modulus) for a smaller
/// field `sub`. Multiplication is table driven (exp/log over a generator), so
/// sizes are kept at desk scale.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxSize = std::uint32_t{1} << 22;

  static std::shared_ptr<const GaloisField> prime(std::uint32_t p);

  /// Throws NotIrreducible unless `modulus` is monic irreducible over `sub`.
  static std::shared_ptr<const GaloisField> extension(std::shared_ptr<const GaloisField> sub,
                                                       Poly modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t size() const noexcept { return size_; }
  /// Degree over the immediate subfield (1 for a prime field).
  unsigned degree() const noexcept { return degree_; }
  /// Degree over the prime field.
  unsigned absolute_degree() const noexcept { return abs_degree_; }
  const GaloisField* subfield() const noexcept { return sub_.get(); }
  const Poly& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  bool contains(Elem a) const noexcept { return a.index < size_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept {
    if (a.index == 0 || b.index == 0) return Elem{0};
    std::uint32_t s = log_[a.index] + log_[b.index];
    if (s >= order_) s -= order_;
    return Elem{exp_[s]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Order of the multiplicative group, size() - 1.
  std::uint32_t group_order() const noexcept { return order_; }
  /// The generator used by the tables: the first element, in enumeration
  /// order, of multiplicative order size() - 1.
  Elem generator() const noexcept { return Elem{exp_.size() > 1 ? exp_[1] : 1}; }
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const noexcept { return Elem{exp_[k % order_]}; }
  std::uint64_t multiplicative_order(Elem a) const;

  /// Coordinates over the immediate subfield, `degree()` entries.
  std::vector<Elem> coordinates(Elem a) const;
  Elem from_coordinates(std::span<const Elem> coords) const;

 private:
  GaloisField() = default;
  void build_tables();
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t order_ = 0;
  unsigned degree_ = 1;
  unsigned abs_degree_ = 1;
  std::shared_ptr<const GaloisField> sub_;
  Poly modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace charsum
