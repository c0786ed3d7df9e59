#pragma once

#include <cstddef>
#include <vector>

#include "charsum/fields.hpp"
#include "charsum/polyring.hpp"
#include "charsum/types.hpp"

namespace charsum {

/// f o a = sum_i f_i a^(q^i). The action factors through F_q[x]/(x^m - 1),
/// so f may have any degree.
Elem apply_linearized(const FieldCtx& ctx, const Poly& f, Elem a);

/// Frobenius orbit a, a^q, ..., a^(q^(m-1)), used to apply many polynomials
/// to the same element.
std::vector<Elem> conjugates(const FieldCtx& ctx, Elem a);
Elem apply_linearized(const FieldCtx& ctx, const Poly& f, const std::vector<Elem>& conj);

/// Index in `lattice` of the F_q-Order of a: the first divisor of x^m - 1, in
/// the fixed order, that annihilates a.
std::size_t fq_order_index(const FieldCtx& ctx, const DivisorLattice& lattice, Elem a);
Poly fq_order(const FieldCtx& ctx, const DivisorLattice& lattice, Elem a);

/// g_a(x) = sum_{i<m} a^(q^i) x^(m-1-i), coefficients in F_{q^m}.
Poly g_alpha(const FieldCtx& ctx, Elem a);

/// deg gcd(x^m - 1, g_a) computed over F_{q^m}; the zero element gives m.
unsigned k_normality(const FieldCtx& ctx, Elem a);

/// First element, in enumeration order, whose F_q-Order is x^m - 1.
Elem find_normal(const FieldCtx& ctx, const DivisorLattice& lattice);

}  // namespace charsum
