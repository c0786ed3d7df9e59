#include "charsum/linearized.hpp"

#include "charsum/error.hpp"
#include "charsum/poly.hpp"

namespace charsum {

std::vector<Elem> conjugates(const FieldCtx& ctx, Elem a) {
  std::vector<Elem> conj(ctx.m());
  for (unsigned i = 0; i < ctx.m(); ++i) {
    conj[i] = a;
    a = ctx.frobenius(a);
  }
  return conj;
}

Elem apply_linearized(const FieldCtx& ctx, const Poly& f, const std::vector<Elem>& conj) {
  const GaloisField& top = ctx.top();
  const unsigned m = ctx.m();
  Elem acc{};
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    const Elem c = f.coeffs[i];
    if (c.index == 0) continue;
    // F_q sits inside F_{q^m} as the constants, with the same index.
    acc = top.add(acc, top.mul(c, conj[i % m]));
  }
  return acc;
}

Elem apply_linearized(const FieldCtx& ctx, const Poly& f, Elem a) {
  return apply_linearized(ctx, f, conjugates(ctx, a));
}

std::size_t fq_order_index(const FieldCtx& ctx, const DivisorLattice& lattice, Elem a) {
  const auto conj = conjugates(ctx, a);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (apply_linearized(ctx, lattice[i].poly, conj).index == 0) return i;
  CHARSUM_ASSERT(false, "x^m - 1 fails to annihilate an element");
  return lattice.full();
}

Poly fq_order(const FieldCtx& ctx, const DivisorLattice& lattice, Elem a) {
  return lattice[fq_order_index(ctx, lattice, a)].poly;
}

Poly g_alpha(const FieldCtx& ctx, Elem a) {
  const unsigned m = ctx.m();
  std::vector<Elem> coeffs(m);
  Elem conj = a;
  for (unsigned i = 0; i < m; ++i) {
    coeffs[m - 1 - i] = conj;
    conj = ctx.frobenius(conj);
  }
  return poly::normalized(std::move(coeffs));
}

unsigned k_normality(const FieldCtx& ctx, Elem a) {
  const GaloisField& top = ctx.top();
  // x^m - 1 has prime-field coefficients, which keep their index in F_{q^m}.
  const Poly xm1 = poly::x_pow_minus_one(top, ctx.m());
  return static_cast<unsigned>(poly::gcd(top, xm1, g_alpha(ctx, a)).degree());
}

Elem find_normal(const FieldCtx& ctx, const DivisorLattice& lattice) {
  for (std::uint32_t i = 0; i < ctx.size(); ++i)
    if (fq_order_index(ctx, lattice, Elem{i}) == lattice.full()) return Elem{i};
  CHARSUM_ASSERT(false, "no normal element found");
  return Elem{};
}

}  // namespace charsum
