#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "charsum/galois_field.hpp"
#include "charsum/types.hpp"

/// Dense univariate polynomial arithmetic over any GaloisField.
namespace charsum::poly {

Poly normalized(std::vector<Elem> coeffs);
Poly constant(Elem c);
Poly monomial(Elem c, unsigned degree);
inline Poly x() { return monomial(Elem{1}, 1); }
/// x^n - 1 over the field F.
Poly x_pow_minus_one(const GaloisField& F, unsigned n);

Poly add(const GaloisField& F, const Poly& a, const Poly& b);
Poly sub(const GaloisField& F, const Poly& a, const Poly& b);
Poly neg(const GaloisField& F, const Poly& a);
Poly scale(const GaloisField& F, const Poly& a, Elem c);
Poly mul(const GaloisField& F, const Poly& a, const Poly& b);

/// a = quotient * b + remainder with deg(remainder) < deg(b).
/// Throws DivisionByZeroPoly when b is zero.
std::pair<Poly, Poly> divmod(const GaloisField& F, const Poly& a, const Poly& b);
Poly mod(const GaloisField& F, const Poly& a, const Poly& b);
/// Exact quotient; raises InternalInconsistency when b does not divide a.
Poly exact_div(const GaloisField& F, const Poly& a, const Poly& b);
bool divides(const GaloisField& F, const Poly& b, const Poly& a);

Poly monic(const GaloisField& F, const Poly& a);
/// Monic gcd, with gcd(a, 0) = monic(a) and gcd(0, 0) = 0.
Poly gcd(const GaloisField& F, const Poly& a, const Poly& b);

Poly powmod(const GaloisField& F, const Poly& base, std::uint64_t e, const Poly& modulus);
Elem eval(const GaloisField& F, const Poly& f, Elem a);

/// Rabin's test; any polynomial of degree <= 0 is reported reducible.
bool is_irreducible(const GaloisField& F, const Poly& f);

/// Smallest monic irreducible of the given degree with nonzero constant term,
/// in the fixed polynomial order.
Poly smallest_irreducible(const GaloisField& F, unsigned degree);

/// Polynomials of degree < n are numbered like field elements:
/// index = sum_i index(c_i) * |F|^i.
Poly from_index(const GaloisField& F, std::uint64_t index);
std::uint64_t to_index(const GaloisField& F, const Poly& f);

}  // namespace charsum::poly
