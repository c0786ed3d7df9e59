#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "charsum/cyclotomic.hpp"
#include "charsum/fields.hpp"
#include "charsum/polyring.hpp"
#include "charsum/types.hpp"

namespace charsum {

/// g -> zeta_p^Tr(beta * g). beta = 0 is the trivial character.
struct AdditiveChar {
  Elem beta;
};

/// primitive^k -> zeta_n^(j k), n = q^m - 1.
struct MultChar {
  std::uint64_t j = 0;
};

/// Value in Z[zeta_p].
CycInt additive_eval(const FieldCtx& ctx, AdditiveChar chi, Elem g);
/// Exponent t with chi(g) = zeta_p^t.
inline std::uint32_t additive_exponent(const FieldCtx& ctx, AdditiveChar chi, Elem g) {
  return ctx.trace(ctx.top().mul(chi.beta, g));
}

/// Smallest divisor f of x^m - 1 with chi(f o g) = 1 for every g in the fixed
/// F_p-basis (which is enough: f o . is F_q-linear and chi is additive).
std::size_t additive_char_order_index(const FieldCtx& ctx, const DivisorLattice& lattice,
                                      AdditiveChar chi);
Poly additive_char_order(const FieldCtx& ctx, const DivisorLattice& lattice, AdditiveChar chi);

/// Every character of F_q-Order g by a full scan. Throws NotADivisor.
std::vector<AdditiveChar> enumerate_additive_by_order(const FieldCtx& ctx,
                                                      const DivisorLattice& lattice,
                                                      const Poly& g);

/// Value in Z[zeta_n]; throws ZeroElement at g = 0.
CycInt mult_eval(const FieldCtx& ctx, MultChar psi, Elem g);
std::uint64_t mult_char_order(const FieldCtx& ctx, MultChar psi);
/// All j with n / gcd(n, j) = d. Throws NotADivisorInt unless d | n.
std::vector<MultChar> enumerate_mult_by_order(const FieldCtx& ctx, std::uint64_t d);

}  // namespace charsum
