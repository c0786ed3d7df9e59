#include "charsum/fields.hpp"

#include <string>

#include "charsum/error.hpp"
#include "charsum/intarith.hpp"
#include "charsum/poly.hpp"

namespace charsum {

FieldCtx build_field(std::uint32_t p, unsigned e, unsigned m, std::uint64_t limit) {
  if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0 || m == 0) raise(ErrorKind::OutOfRange, "extension degrees must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < e * m; ++i) {
    if (__builtin_mul_overflow(size, std::uint64_t{p}, &size) || size > limit)
      raise(ErrorKind::SizeExceeded, "p^(e*m) = " + std::to_string(p) + "^" +
                                         std::to_string(e * m) + " exceeds limit " +
                                         std::to_string(limit));
  }

  FieldCtx ctx;
  ctx.prime_ = GaloisField::prime(p);
  ctx.base_ = GaloisField::extension(ctx.prime_, poly::smallest_irreducible(*ctx.prime_, e));
  ctx.top_ = GaloisField::extension(ctx.base_, poly::smallest_irreducible(*ctx.base_, m));
  CHARSUM_ASSERT(ctx.top_->size() == size, "tower size mismatch");

  const GaloisField& top = *ctx.top_;
  const unsigned abs_degree = e * m;
  ctx.trace_.resize(size);
  ctx.frobenius_.resize(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    const Elem g{i};
    Elem acc{}, conj = g;
    for (unsigned k = 0; k < abs_degree; ++k) {
      acc = top.add(acc, conj);
      conj = top.pow(conj, p);
    }
    CHARSUM_ASSERT(acc.index < p, "trace left the prime field");
    ctx.trace_[i] = acc.index;
    ctx.frobenius_[i] = top.pow(g, ctx.q()).index;
  }
  return ctx;
}

std::vector<Elem> FieldCtx::prime_basis() const {
  std::vector<Elem> basis;
  std::uint32_t place = 1;
  for (unsigned k = 0; k < top_->absolute_degree(); ++k) {
    basis.push_back(Elem{place});
    place *= p();
  }
  return basis;
}

std::uint32_t trace_to_prime(const FieldCtx& ctx, Elem g) { return ctx.trace(g); }

Elem relative_frobenius(const FieldCtx& ctx, Elem g) { return ctx.frobenius(g); }

Elem find_primitive(const FieldCtx& ctx) {
  const Elem g = ctx.primitive();
  CHARSUM_ASSERT(ctx.top().multiplicative_order(g) == ctx.size() - 1u,
                 "primitive element has short order");
  return g;
}

std::uint32_t discrete_log(const FieldCtx& ctx, Elem g) { return ctx.top().log(g); }

}  // namespace charsum
