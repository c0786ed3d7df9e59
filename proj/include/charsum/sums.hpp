#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charsum/cyclotomic.hpp"
#include "charsum/workspace.hpp"

namespace charsum {

/// One oracle-versus-closed-form comparison.
struct SumComparison {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::int64_t oracle_value = 0;
  std::int64_t formula_value = 0;
  bool agree = false;
};

struct OracleFormula {
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
  bool agree() const noexcept { return oracle == formula; }
};

/// Sum over the characters of F_q-Order g of chi(a), accumulated in Z[zeta_p]
/// and collapsed to an integer; NonIntegerSum if it does not collapse.
std::int64_t additive_sum_oracle(const Workspace& ws, std::size_t g, Elem a);
std::int64_t additive_sum_oracle(const Workspace& ws, const Poly& g, Elem a);

/// mu(d) phi(g) / phi(d) with d = g / gcd(g, (x^m - 1) / f1), where f1 is the
/// F_q-Order of the element. Zero whenever mu(d) = 0.
std::int64_t additive_sum_formula(const Workspace& ws, std::size_t g, std::size_t f1);
std::int64_t additive_sum_formula(const Workspace& ws, const Poly& g, const Poly& f1);

/// mu(d) phi(g) / phi(d), d = g / gcd(g, f), for an arbitrary polynomial f
/// (gcd(g, 0) = g).
std::int64_t composed_sum_formula(const Workspace& ws, std::size_t g, const Poly& f);

/// Oracle at f o a against composed_sum_formula, for a normal element a.
/// Throws NotNormal or NotADivisor.
OracleFormula additive_composed_sum(const Workspace& ws, const Poly& g, const Poly& f,
                                    Elem a_normal);

/// Oracle at a normal element against mu(g).
SumComparison normal_mu_check(const Workspace& ws, const Poly& g, Elem a_normal);

/// c_{a1 a2}(a) against c_{a1}(a) c_{a2}(a); throws NotCoprime or NotADivisor.
SumComparison multiplicativity_check(const Workspace& ws, const Poly& a1, const Poly& a2,
                                             Elem a);

/// Three-case value of c_{u^e} at an element of F_q-Order k, with
/// x^m - 1 = k l and |u| = q^deg u:
///   |u|^e - |u|^(e-1) if u^e | l,  -|u|^(e-1) if only u^(e-1) | l,  else 0.
std::int64_t prime_power_value(const Workspace& ws, std::size_t factor, unsigned e,
                                       std::size_t k);
/// Throws NotIrreducible or NotADivisor (u^e must divide x^m - 1).
OracleFormula prime_power_sum(const Workspace& ws, const Poly& u, unsigned e, Elem a);

/// Sums of multiplicative characters of order d at primitive^r.
class MultOracle {
 public:
  explicit MultOracle(const FieldCtx& ctx);

  std::uint64_t group_order() const noexcept { return n_; }
  const std::vector<std::uint64_t>& orders() const noexcept { return orders_; }
  /// Throws NotADivisorInt or NonIntegerSum.
  std::int64_t sum(std::uint64_t d, std::uint64_t r) const;

 private:
  const FieldCtx& ctx_;
  std::uint64_t n_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::vector<std::uint64_t>> chars_;  // j values per entry of orders_
};

std::int64_t mult_sum_oracle(const FieldCtx& ctx, std::uint64_t d, std::uint64_t r);
/// mu(d / gcd(d, r)) phi(d) / phi(d / gcd(d, r)), gcd(d, 0) = d.
std::int64_t mult_sum_formula(std::uint64_t d, std::uint64_t r);

struct AbsSumIdentity {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// lhs = sum over all f with deg f < m (zero included) of |sum_g chi(f o a)|,
/// rhs = q^(m - deg g) phi(g) W(g). Throws SizeExceeded past quadratic_limit.
AbsSumIdentity abs_sum_identity(const Workspace& ws, const Poly& g, Elem a_normal,
                                std::uint64_t quadratic_limit = kDefaultQuadraticLimit);

/// Sum of every additive character at g, in Z[zeta_p].
CycInt additive_character_total(const FieldCtx& ctx, Elem g);

/// additive_sum_oracle for every (divisor, element) pair.
class OracleTable {
 public:
  explicit OracleTable(const Workspace& ws);

  /// nullopt when the sum failed to collapse to an integer.
  std::optional<std::int64_t> at(std::size_t g, Elem a) const { return values_[g * size_ + a.index]; }
  std::size_t non_integer_sums() const noexcept { return non_integer_; }

 private:
  std::size_t size_;
  std::vector<std::optional<std::int64_t>> values_;
  std::size_t non_integer_ = 0;
};

}  // namespace charsum
