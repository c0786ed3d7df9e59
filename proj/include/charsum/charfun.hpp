#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/rational.hpp>

#include "charsum/sums.hpp"
#include "charsum/workspace.hpp"

namespace charsum {

/// How the inner additive character sums are obtained.
enum class SumMode { Oracle, Formula };

/// Which divisors h of f the outer sum visits. Non-square-free h carry
/// mu(h) = 0, so both give the same value.
enum class HRange { SquareFree, All };

using Rational = boost::rational<std::int64_t>;

struct EtaEvaluation {
  std::size_t f = 0;  // lattice index
  Elem alpha;
  Rational value;
  SumMode mode = SumMode::Oracle;
};

/// phi(f)/q^m sum_{h | f} mu(h)/phi(h) sum_{g | F/f, gcd(h, F/(f g)) = 1} S(h g, alpha)
/// with F = x^m - 1 and S the sum over characters of F_q-Order h g. In Oracle
/// mode S comes from `table` when given. Throws NonBinaryResult unless the
/// value is 0 or 1.
EtaEvaluation evaluate_eta(const Workspace& ws, std::size_t f, Elem alpha, SumMode mode,
                           const OracleTable* table = nullptr,
                           HRange range = HRange::SquareFree);

/// Throws NotADivisor.
int eta(const Workspace& ws, const Poly& f, Elem alpha, SumMode mode = SumMode::Oracle);

/// Sum of eta(f, alpha) over the divisors f of degree m - k. Throws OutOfRange
/// unless 0 <= k <= m.
int zeta(const Workspace& ws, unsigned k, Elem alpha, SumMode mode = SumMode::Oracle,
         const OracleTable* table = nullptr);

struct IdentitySides {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// sum_{i=0}^{l} phi(u^i) against phi(u^(l+1)) / phi(u). Throws NotIrreducible.
IdentitySides phi_geometric_sum(const GaloisField& F, const Poly& u, unsigned l);

/// sum over g | F/f with gcd(h, F/(f g)) = 1 of phi(h g), against
/// q^deg(F/f) phi(h). Throws NotADivisor or NotSquareFree.
IdentitySides phi_hg_sum(const Workspace& ws, const Poly& f, const Poly& h);
IdentitySides phi_hg_sum(const Workspace& ws, std::size_t f, std::size_t h);

}  // namespace charsum
