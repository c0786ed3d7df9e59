#include "charsum/charfun.hpp"

#include "charsum/error.hpp"
#include "charsum/intarith.hpp"
#include "charsum/poly.hpp"

namespace charsum {
namespace {

std::int64_t inner_sum(const Workspace& ws, std::size_t g, Elem alpha, SumMode mode,
                       const OracleTable* table) {
  if (mode == SumMode::Formula)
    return additive_sum_formula(ws, g, ws.element_order(alpha));
  if (table) {
    if (auto v = table->at(g, alpha)) return *v;
    raise(ErrorKind::NonIntegerSum, "memoized sum did not collapse to an integer");
  }
  return additive_sum_oracle(ws, g, alpha);
}

}  // namespace

EtaEvaluation evaluate_eta(const Workspace& ws, std::size_t f, Elem alpha, SumMode mode,
                           const OracleTable* table, HRange range) {
  const DivisorLattice& L = ws.lattice();
  const std::size_t cofactor = L.complement(f);
  const auto hs = range == HRange::SquareFree ? L.square_free_divisors_of(f) : L.divisors_of(f);
  const auto gs = L.divisors_of(cofactor);

  Rational total(0);
  for (const std::size_t h : hs) {
    if (L[h].mu == 0) continue;
    std::int64_t inner = 0;
    for (const std::size_t g : gs) {
      if (L.gcd(h, L.quotient(cofactor, g)) != L.one()) continue;
      const auto hg = L.product(h, g);
      CHARSUM_ASSERT(hg.has_value(), "h g left the lattice");
      inner += inner_sum(ws, *hg, alpha, mode, table);
    }
    total += Rational(L[h].mu * inner, static_cast<std::int64_t>(L[h].phi));
  }
  total *= Rational(static_cast<std::int64_t>(L[f].phi), static_cast<std::int64_t>(ws.field().size()));

  if (total != Rational(0) && total != Rational(1))
    raise(ErrorKind::NonBinaryResult, "eta evaluated to " + std::to_string(total.numerator()) +
                                          "/" + std::to_string(total.denominator()));
  return {f, alpha, total, mode};
}

int eta(const Workspace& ws, const Poly& f, Elem alpha, SumMode mode) {
  return static_cast<int>(
      evaluate_eta(ws, ws.lattice().require(f), alpha, mode).value.numerator());
}

int zeta(const Workspace& ws, unsigned k, Elem alpha, SumMode mode, const OracleTable* table) {
  const unsigned m = ws.field().m();
  if (k > m) raise(ErrorKind::OutOfRange, "k = " + std::to_string(k) + " exceeds m");
  const DivisorLattice& L = ws.lattice();
  int total = 0;
  for (std::size_t f = 0; f < L.size(); ++f) {
    if (L[f].degree != static_cast<int>(m - k)) continue;
    total += static_cast<int>(evaluate_eta(ws, f, alpha, mode, table).value.numerator());
  }
  return total;
}

IdentitySides phi_geometric_sum(const GaloisField& F, const Poly& u, unsigned l) {
  if (!poly::is_irreducible(F, u)) raise(ErrorKind::NotIrreducible, format_poly(F, u));
  const Poly monic_u = poly::monic(F, u);
  auto phi_power = [&](unsigned i) {
    if (i == 0) return std::uint64_t{1};
    return phi_poly(FactoredPoly{{{monic_u, i}}, F.one()}, F.size());
  };
  IdentitySides out;
  for (unsigned i = 0; i <= l; ++i) out.lhs += static_cast<std::int64_t>(phi_power(i));
  const std::uint64_t top = phi_power(l + 1);
  const std::uint64_t base = phi_power(1);
  CHARSUM_ASSERT(top % base == 0, "phi(u) does not divide phi(u^(l+1))");
  out.rhs = static_cast<std::int64_t>(top / base);
  return out;
}

IdentitySides phi_hg_sum(const Workspace& ws, std::size_t f, std::size_t h) {
  const DivisorLattice& L = ws.lattice();
  if (!L.divides(h, f)) raise(ErrorKind::NotADivisor, "h does not divide f");
  if (!L.square_free(h)) raise(ErrorKind::NotSquareFree, "h is not square-free");
  const std::size_t cofactor = L.complement(f);
  IdentitySides out;
  for (const std::size_t g : L.divisors_of(cofactor)) {
    if (L.gcd(h, L.quotient(cofactor, g)) != L.one()) continue;
    const auto hg = L.product(h, g);
    CHARSUM_ASSERT(hg.has_value(), "h g left the lattice");
    out.lhs += static_cast<std::int64_t>(L[*hg].phi);
  }
  out.rhs = static_cast<std::int64_t>(checked_pow(ws.field().q(), static_cast<unsigned>(L[cofactor].degree)) * L[h].phi);
  return out;
}

IdentitySides phi_hg_sum(const Workspace& ws, const Poly& f, const Poly& h) {
  const DivisorLattice& L = ws.lattice();
  return phi_hg_sum(ws, L.require(f), L.require(h));
}

}  // namespace charsum
