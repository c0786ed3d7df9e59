#include "charsum/workspace.hpp"

#include "charsum/error.hpp"
#include "charsum/linearized.hpp"

namespace charsum {

Workspace::Workspace(FieldCtx ctx) : ctx_(std::move(ctx)), lattice_(ctx_) {
  const std::uint32_t size = ctx_.size();
  element_order_.resize(size);
  for (std::uint32_t i = 0; i < size; ++i)
    element_order_[i] = fq_order_index(ctx_, lattice_, Elem{i});

  // images[f][b] = lattice[f] o basis[b]; chi_beta has order f when f is the
  // first divisor with Tr(beta * image) = 0 on the whole basis.
  const auto basis = ctx_.prime_basis();
  std::vector<std::vector<Elem>> images(lattice_.size());
  for (const Elem g : basis) {
    const auto conj = conjugates(ctx_, g);
    for (std::size_t f = 0; f < lattice_.size(); ++f)
      images[f].push_back(apply_linearized(ctx_, lattice_[f].poly, conj));
  }
  char_order_.resize(size);
  by_order_.resize(lattice_.size());
  for (std::uint32_t b = 0; b < size; ++b) {
    const AdditiveChar chi{Elem{b}};
    std::size_t order = lattice_.size();
    for (std::size_t f = 0; f < lattice_.size() && order == lattice_.size(); ++f) {
      bool trivial = true;
      for (const Elem img : images[f]) {
        if (additive_exponent(ctx_, chi, img) != 0) {
          trivial = false;
          break;
        }
      }
      if (trivial) order = f;
    }
    CHARSUM_ASSERT(order < lattice_.size(), "character without an F_q-Order");
    char_order_[b] = order;
    by_order_[order].push_back(chi.beta);
  }
  normal_ = find_normal(ctx_, lattice_);
}

void Workspace::require_normal(Elem a) const {
  if (element_order(a) != lattice_.full())
    raise(ErrorKind::NotNormal, "element " + std::to_string(a.index) + " is not normal");
}

}  // namespace charsum
