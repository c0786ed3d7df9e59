#include "charsum/characters.hpp"

#include <numeric>
#include <string>

#include "charsum/error.hpp"
#include "charsum/linearized.hpp"

namespace charsum {

CycInt additive_eval(const FieldCtx& ctx, AdditiveChar chi, Elem g) {
  return CycInt::root_power(ctx.p(), additive_exponent(ctx, chi, g));
}

std::size_t additive_char_order_index(const FieldCtx& ctx, const DivisorLattice& lattice,
                                      AdditiveChar chi) {
  const auto basis = ctx.prime_basis();
  std::vector<std::vector<Elem>> basis_conj;
  for (Elem g : basis) basis_conj.push_back(conjugates(ctx, g));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    bool trivial = true;
    for (const auto& conj : basis_conj) {
      if (additive_exponent(ctx, chi, apply_linearized(ctx, lattice[i].poly, conj)) != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) return i;
  }
  CHARSUM_ASSERT(false, "x^m - 1 fails to annihilate a character");
  return lattice.full();
}

Poly additive_char_order(const FieldCtx& ctx, const DivisorLattice& lattice, AdditiveChar chi) {
  return lattice[additive_char_order_index(ctx, lattice, chi)].poly;
}

std::vector<AdditiveChar> enumerate_additive_by_order(const FieldCtx& ctx,
                                                      const DivisorLattice& lattice,
                                                      const Poly& g) {
  const std::size_t target = lattice.require(g);
  std::vector<AdditiveChar> out;
  for (std::uint32_t b = 0; b < ctx.size(); ++b) {
    const AdditiveChar chi{Elem{b}};
    if (additive_char_order_index(ctx, lattice, chi) == target) out.push_back(chi);
  }
  return out;
}

CycInt mult_eval(const FieldCtx& ctx, MultChar psi, Elem g) {
  const std::uint64_t n = ctx.size() - 1u;
  const std::uint64_t k = discrete_log(ctx, g);
  return CycInt::root_power(static_cast<std::uint32_t>(n), psi.j % n * k % n);
}

std::uint64_t mult_char_order(const FieldCtx& ctx, MultChar psi) {
  const std::uint64_t n = ctx.size() - 1u;
  return n / std::gcd(n, psi.j % n);
}

std::vector<MultChar> enumerate_mult_by_order(const FieldCtx& ctx, std::uint64_t d) {
  const std::uint64_t n = ctx.size() - 1u;
  if (d == 0 || n % d != 0)
    raise(ErrorKind::NotADivisorInt, std::to_string(d) + " does not divide " + std::to_string(n));
  std::vector<MultChar> out;
  for (std::uint64_t j = 0; j < n; ++j)
    if (mult_char_order(ctx, MultChar{j}) == d) out.push_back(MultChar{j});
  return out;
}

}  // namespace charsum
