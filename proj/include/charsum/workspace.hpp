#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "charsum/characters.hpp"
#include "charsum/fields.hpp"
#include "charsum/polyring.hpp"
#include "charsum/types.hpp"

namespace charsum {

/// Everything about one field that the sums and characteristic functions
/// look up repeatedly: the divisor lattice of x^m - 1, the F_q-Order of every
/// element and of every additive character, and the characters grouped by
/// order. Immutable after construction.
class Workspace {
 public:
  explicit Workspace(FieldCtx ctx);

  const FieldCtx& field() const noexcept { return ctx_; }
  const DivisorLattice& lattice() const noexcept { return lattice_; }

  std::size_t element_order(Elem a) const { return element_order_[a.index]; }
  std::size_t char_order(AdditiveChar chi) const { return char_order_[chi.beta.index]; }
  /// Betas of every character of F_q-Order lattice[g], ascending.
  std::span<const Elem> characters_of_order(std::size_t g) const { return by_order_[g]; }
  Elem normal() const noexcept { return normal_; }

  /// Throws NotNormal unless a has F_q-Order x^m - 1.
  void require_normal(Elem a) const;

 private:
  FieldCtx ctx_;
  DivisorLattice lattice_;
  std::vector<std::size_t> element_order_;
  std::vector<std::size_t> char_order_;
  std::vector<std::vector<Elem>> by_order_;
  Elem normal_;
};

}  // namespace charsum
