#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace charsum {

/// Field element addressed by its enumeration index.
///
/// Every field in a tower packs its coordinates as base-p digits: an element
/// of F_{q^m} with coordinates c_0..c_{m-1} over F_q has index
/// sum_i index(c_i) * q^i, and an F_q element with residues r_0..r_{e-1} over
/// F_p has index sum_j r_j * p^j. Two elements are equal exactly when their
/// coordinates agree, and subfield elements keep their index when embedded.
struct Elem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Polynomial with coefficients in some field of a tower, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
struct Poly {
  std::vector<Elem> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  Elem leading() const noexcept { return coeffs.empty() ? Elem{} : coeffs.back(); }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : Elem{}; }

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// Fixed total order on polynomials: by degree, then lexicographically from
/// the leading coefficient down, comparing coefficient indices.
std::strong_ordering operator<=>(const Poly& a, const Poly& b);

}  // namespace charsum
