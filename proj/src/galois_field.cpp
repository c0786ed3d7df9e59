#include "charsum/galois_field.hpp"

#include <string>

#include "charsum/error.hpp"
#include "charsum/intarith.hpp"
#include "charsum/poly.hpp"

namespace charsum {

std::shared_ptr<const GaloisField> GaloisField::prime(std::uint32_t p) {
  if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxSize) raise(ErrorKind::SizeExceeded, "prime " + std::to_string(p) + " too large");
  std::shared_ptr<GaloisField> F(new GaloisField());
  F->p_ = p;
  F->size_ = p;
  F->order_ = p - 1;
  F->modulus_ = poly::x();
  F->build_tables();
  return F;
}

std::shared_ptr<const GaloisField> GaloisField::extension(std::shared_ptr<const GaloisField> sub,
                                                          Poly modulus) {
  CHARSUM_ASSERT(sub != nullptr, "extension of a null field");
  if (modulus.degree() < 1 || modulus.leading() != sub->one())
    raise(ErrorKind::NotIrreducible, "extension modulus must be monic of positive degree");
  for (Elem c : modulus.coeffs)
    CHARSUM_ASSERT(sub->contains(c), "modulus coefficient outside the subfield");
  if (!poly::is_irreducible(*sub, modulus))
    raise(ErrorKind::NotIrreducible, "extension modulus is reducible");
  const unsigned m = static_cast<unsigned>(modulus.degree());
  const std::uint64_t size = checked_pow(sub->size(), m);
  if (size > kMaxSize) raise(ErrorKind::SizeExceeded, "field of size " + std::to_string(size));

  std::shared_ptr<GaloisField> F(new GaloisField());
  F->p_ = sub->p_;
  F->size_ = static_cast<std::uint32_t>(size);
  F->order_ = F->size_ - 1;
  F->degree_ = m;
  F->abs_degree_ = sub->abs_degree_ * m;
  F->sub_ = std::move(sub);
  F->modulus_ = std::move(modulus);
  F->build_tables();
  return F;
}

Elem GaloisField::slow_mul(Elem a, Elem b) const {
  if (!sub_) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p_)};
  const auto ca = coordinates(a);
  const auto cb = coordinates(b);
  const Poly prod = poly::mod(*sub_, poly::mul(*sub_, poly::normalized(ca), poly::normalized(cb)),
                              modulus_);
  std::vector<Elem> coords(degree_);
  for (std::size_t i = 0; i < prod.coeffs.size(); ++i) coords[i] = prod.coeffs[i];
  return from_coordinates(coords);
}

void GaloisField::build_tables() {
  const auto slow_pow = [this](Elem a, std::uint64_t e) {
    Elem result{1}, b = a;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, b);
      e >>= 1;
      if (e > 0) b = slow_mul(b, b);
    }
    return result;
  };

  const auto primes = factor_int(order_).factors;
  Elem gen{0};
  for (std::uint32_t cand = 1; cand < size_; ++cand) {
    bool primitive = true;
    for (const auto& [l, e] : primes) {
      if (slow_pow(Elem{cand}, order_ / l) == Elem{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = Elem{cand};
      break;
    }
  }
  CHARSUM_ASSERT(gen.index != 0, "finite field without a generator");

  exp_.assign(order_, 0);
  log_.assign(size_, order_);  // order_ marks the zero element
  Elem cur{1};
  for (std::uint32_t k = 0; k < order_; ++k) {
    exp_[k] = cur.index;
    CHARSUM_ASSERT(log_[cur.index] == order_, "generator has short order");
    log_[cur.index] = k;
    cur = slow_mul(cur, gen);
  }
  CHARSUM_ASSERT(cur == Elem{1}, "generator powers do not close");
}

Elem GaloisField::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return Elem{a.index ^ b.index};
  std::uint32_t x = a.index, y = b.index, out = 0, place = 1;
  while (x > 0 || y > 0) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem GaloisField::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t x = a.index, out = 0, place = 1;
  while (x > 0) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    x /= p_;
  }
  return Elem{out};
}

Elem GaloisField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem GaloisField::inv(Elem a) const {
  if (a.index == 0) raise(ErrorKind::ZeroElement, "inverse of zero");
  const std::uint32_t l = log_[a.index];
  return Elem{exp_[l == 0 ? 0 : order_ - l]};
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return Elem{1};
  if (a.index == 0) return Elem{0};
  const std::uint64_t k = std::uint64_t{log_[a.index]} * (e % order_) % order_;
  return Elem{exp_[k]};
}

std::uint32_t GaloisField::log(Elem a) const {
  if (a.index == 0) raise(ErrorKind::ZeroElement, "logarithm of zero");
  return log_[a.index];
}

std::uint64_t GaloisField::multiplicative_order(Elem a) const {
  if (a.index == 0) raise(ErrorKind::ZeroElement, "order of zero");
  std::uint64_t n = order_;
  for (const auto& [l, e] : factor_int(order_).factors) {
    while (n % l == 0 && pow(a, n / l) == Elem{1}) n /= l;
  }
  return n;
}

std::vector<Elem> GaloisField::coordinates(Elem a) const {
  std::vector<Elem> out(degree_);
  if (!sub_) {
    out[0] = a;
    return out;
  }
  std::uint32_t x = a.index;
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = Elem{x % sub_->size_};
    x /= sub_->size_;
  }
  return out;
}

Elem GaloisField::from_coordinates(std::span<const Elem> coords) const {
  if (!sub_) return coords.empty() ? Elem{} : coords[0];
  std::uint32_t idx = 0;
  for (std::size_t i = coords.size(); i-- > 0;) idx = idx * sub_->size_ + coords[i].index;
  return Elem{idx};
}

}  // namespace charsum
