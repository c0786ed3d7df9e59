#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charsum/fields.hpp"
#include "charsum/galois_field.hpp"
#include "charsum/types.hpp"

namespace charsum {

/// unit * prod factors[i].first ^ factors[i].second, irreducible factors
/// monic, pairwise distinct and sorted in the fixed polynomial order.
struct FactoredPoly {
  std::vector<std::pair<Poly, unsigned>> factors;
  Elem unit{1};

  Poly expand(const GaloisField& F) const;
};

/// x^m - 1 over F_q. With m = m' p^b, gcd(m', p) = 1, every irreducible factor
/// of x^{m'} - 1 is the minimal polynomial of zeta^C for a q-cyclotomic coset
/// C mod m' (zeta a primitive m'-th root of unity in F_{q^t}, t = ord_{m'} q),
/// and each appears with multiplicity p^b.
FactoredPoly factor_xm_minus_1(const FieldCtx& ctx);

std::uint64_t phi_poly(const FactoredPoly& f, std::uint64_t q);
int mu_poly(const FactoredPoly& f);
std::uint64_t w_poly(const FactoredPoly& f);

/// All monic divisors, sorted in the fixed polynomial order.
std::vector<Poly> divisors(const GaloisField& F, const FactoredPoly& f);

/// Literal count of polynomials of degree < deg f coprime to f.
std::uint64_t coprime_count(const GaloisField& F, const Poly& f);

/// One monic divisor of x^m - 1 with its exponent vector over the factors.
struct Divisor {
  Poly poly;
  std::vector<unsigned> exponents;
  int degree = 0;
  std::uint64_t phi = 1;
  int mu = 1;
};

/// The divisors of x^m - 1, indexed by position in the fixed polynomial order
/// (index 0 is 1, the last index is x^m - 1). Lattice operations work on the
/// exponent vectors.
class DivisorLattice {
 public:
  explicit DivisorLattice(const FieldCtx& ctx);

  const FactoredPoly& factorization() const noexcept { return factorization_; }
  /// The common multiplicity of every irreducible factor.
  unsigned multiplicity() const noexcept { return multiplicity_; }
  std::size_t size() const noexcept { return divisors_.size(); }
  const Divisor& operator[](std::size_t i) const { return divisors_[i]; }
  std::span<const Divisor> all() const noexcept { return divisors_; }

  std::size_t one() const noexcept { return 0; }
  std::size_t full() const noexcept { return divisors_.size() - 1; }

  std::optional<std::size_t> find(const Poly& f) const;
  /// Throws NotADivisor.
  std::size_t require(const Poly& f) const;
  std::size_t from_exponents(std::span<const unsigned> exps) const;
  /// Index of the irreducible factor u^1, throws NotIrreducible otherwise.
  std::size_t factor_index(std::size_t i) const;

  bool divides(std::size_t a, std::size_t b) const;  // a | b
  std::size_t gcd(std::size_t a, std::size_t b) const;
  /// b / a for a | b.
  std::size_t quotient(std::size_t b, std::size_t a) const;
  std::optional<std::size_t> product(std::size_t a, std::size_t b) const;
  /// (x^m - 1) / a.
  std::size_t complement(std::size_t a) const { return quotient(full(), a); }
  bool square_free(std::size_t a) const { return divisors_[a].mu != 0; }

  std::vector<std::size_t> divisors_of(std::size_t a) const;
  std::vector<std::size_t> square_free_divisors_of(std::size_t a) const;
  FactoredPoly factored(std::size_t a) const;

 private:
  std::size_t code(std::span<const unsigned> exps) const;

  FactoredPoly factorization_;
  unsigned multiplicity_ = 1;
  std::vector<Divisor> divisors_;
  std::vector<std::size_t> by_code_;
};

/// Text form of polynomials over F_q: "x^3 + 2*x + 1". Coefficients in F_p
/// print as integers, others as bracketed residue tuples "[r0,r1]"
/// (r0 + r1*y + ...); a unit coefficient in front of a power of x is omitted.
std::string format_coeff(const GaloisField& F, Elem c);
std::string format_poly(const GaloisField& F, const Poly& f);
std::string format_factored(const GaloisField& F, const FactoredPoly& f);

/// Inverse of format_poly; accepts "*" optionally and arbitrary spaces, and
/// repeated powers are summed. Throws ParseError.
Poly parse_poly(const GaloisField& F, std::string_view text);

}  // namespace charsum
