#include "charsum/sums.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "charsum/characters.hpp"
#include "charsum/error.hpp"
#include "charsum/intarith.hpp"
#include "charsum/linearized.hpp"
#include "charsum/poly.hpp"

namespace charsum {
namespace {

std::int64_t collapse(const CycInt& value, const std::string& what) {
  if (auto v = value.as_integer()) return *v;
  raise(ErrorKind::NonIntegerSum, what + " is not a rational integer");
}

std::int64_t mu_ratio(int mu, std::uint64_t phi_g, std::uint64_t phi_d) {
  if (mu == 0) return 0;
  CHARSUM_ASSERT(phi_g % phi_d == 0, "phi(d) does not divide phi(g)");
  return mu * static_cast<std::int64_t>(phi_g / phi_d);
}

}  // namespace

std::int64_t additive_sum_oracle(const Workspace& ws, std::size_t g, Elem a) {
  const FieldCtx& ctx = ws.field();
  std::vector<std::int64_t> counts(ctx.p(), 0);
  const GaloisField& top = ctx.top();
  for (const Elem beta : ws.characters_of_order(g)) ++counts[ctx.trace(top.mul(beta, a))];
  return collapse(CycInt::from_exponent_counts(CyclotomicRing::get(ctx.p()), counts),
                  "additive character sum");
}

std::int64_t additive_sum_oracle(const Workspace& ws, const Poly& g, Elem a) {
  return additive_sum_oracle(ws, ws.lattice().require(g), a);
}

std::int64_t additive_sum_formula(const Workspace& ws, std::size_t g, std::size_t f1) {
  const DivisorLattice& L = ws.lattice();
  const std::size_t f2 = L.complement(f1);
  const std::size_t d = L.quotient(g, L.gcd(g, f2));
  return mu_ratio(L[d].mu, L[g].phi, L[d].phi);
}

std::int64_t additive_sum_formula(const Workspace& ws, const Poly& g, const Poly& f1) {
  const DivisorLattice& L = ws.lattice();
  return additive_sum_formula(ws, L.require(g), L.require(f1));
}

std::int64_t composed_sum_formula(const Workspace& ws, std::size_t g, const Poly& f) {
  const DivisorLattice& L = ws.lattice();
  const Poly common = poly::gcd(ws.field().base(), L[g].poly, f);
  const auto c = L.find(common);
  CHARSUM_ASSERT(c.has_value(), "gcd with a divisor of x^m - 1 left the lattice");
  const std::size_t d = L.quotient(g, *c);
  return mu_ratio(L[d].mu, L[g].phi, L[d].phi);
}

OracleFormula additive_composed_sum(const Workspace& ws, const Poly& g, const Poly& f,
                                    Elem a_normal) {
  const std::size_t gi = ws.lattice().require(g);
  ws.require_normal(a_normal);
  const Elem image = apply_linearized(ws.field(), f, a_normal);
  return {additive_sum_oracle(ws, gi, image), composed_sum_formula(ws, gi, f)};
}

SumComparison normal_mu_check(const Workspace& ws, const Poly& g, Elem a_normal) {
  const std::size_t gi = ws.lattice().require(g);
  ws.require_normal(a_normal);
  SumComparison out;
  out.identity = "sum over characters of order g at a normal element equals mu(g)";
  out.parameters = {{"g", format_poly(ws.field().base(), g)},
                    {"alpha", std::to_string(a_normal.index)}};
  out.oracle_value = additive_sum_oracle(ws, gi, a_normal);
  out.formula_value = ws.lattice()[gi].mu;
  out.agree = out.oracle_value == out.formula_value;
  return out;
}

SumComparison multiplicativity_check(const Workspace& ws, const Poly& a1, const Poly& a2,
                                             Elem a) {
  const DivisorLattice& L = ws.lattice();
  const std::size_t i1 = L.require(a1);
  const std::size_t i2 = L.require(a2);
  if (L.gcd(i1, i2) != L.one()) raise(ErrorKind::NotCoprime, "a1 and a2 share a factor");
  const auto prod = L.product(i1, i2);
  if (!prod) raise(ErrorKind::NotADivisor, "a1 * a2 does not divide x^m - 1");
  SumComparison out;
  out.identity = "c_{a1 a2} = c_{a1} c_{a2} for coprime a1, a2";
  out.parameters = {{"a1", format_poly(ws.field().base(), a1)},
                    {"a2", format_poly(ws.field().base(), a2)},
                    {"alpha", std::to_string(a.index)}};
  out.oracle_value = additive_sum_oracle(ws, *prod, a);
  out.formula_value = additive_sum_oracle(ws, i1, a) * additive_sum_oracle(ws, i2, a);
  out.agree = out.oracle_value == out.formula_value;
  return out;
}

std::int64_t prime_power_value(const Workspace& ws, std::size_t factor, unsigned e,
                                       std::size_t k) {
  const DivisorLattice& L = ws.lattice();
  CHARSUM_ASSERT(e >= 1 && e <= L.multiplicity(), "prime power exponent out of range");
  const unsigned l_exp = L[L.complement(k)].exponents[factor];
  const unsigned deg = static_cast<unsigned>(L.factorization().factors[factor].first.degree());
  const std::uint64_t q = ws.field().q();
  const auto hi = static_cast<std::int64_t>(checked_pow(q, deg * e));
  const auto lo = static_cast<std::int64_t>(checked_pow(q, deg * (e - 1)));
  if (l_exp >= e) return hi - lo;
  if (l_exp + 1 >= e) return -lo;
  return 0;
}

OracleFormula prime_power_sum(const Workspace& ws, const Poly& u, unsigned e, Elem a) {
  const DivisorLattice& L = ws.lattice();
  const GaloisField& Fq = ws.field().base();
  if (!poly::is_irreducible(Fq, u) || u.leading() != Fq.one())
    raise(ErrorKind::NotIrreducible, format_poly(Fq, u) + " is not monic irreducible");
  const std::size_t ui = L.require(u);
  const std::size_t factor = L.factor_index(ui);
  if (e == 0 || e > L.multiplicity())
    raise(ErrorKind::NotADivisor, "u^e does not divide x^m - 1");
  std::vector<unsigned> exps(L.factorization().factors.size(), 0);
  exps[factor] = e;
  const std::size_t ue = L.from_exponents(exps);
  return {additive_sum_oracle(ws, ue, a),
          prime_power_value(ws, factor, e, ws.element_order(a))};
}

MultOracle::MultOracle(const FieldCtx& ctx) : ctx_(ctx), n_(ctx.size() - 1u) {
  orders_ = divisors_int(n_);
  chars_.resize(orders_.size());
  for (std::uint64_t j = 0; j < n_; ++j) {
    const std::uint64_t d = mult_char_order(ctx, MultChar{j});
    const auto it = std::lower_bound(orders_.begin(), orders_.end(), d);
    chars_[static_cast<std::size_t>(it - orders_.begin())].push_back(j);
  }
}

std::int64_t MultOracle::sum(std::uint64_t d, std::uint64_t r) const {
  const auto it = std::lower_bound(orders_.begin(), orders_.end(), d);
  if (it == orders_.end() || *it != d)
    raise(ErrorKind::NotADivisorInt, std::to_string(d) + " does not divide q^m - 1");
  const auto& chars = chars_[static_cast<std::size_t>(it - orders_.begin())];
  const GaloisField& top = ctx_.top();
  const std::uint64_t k = discrete_log(ctx_, top.pow(ctx_.primitive(), r));
  // A character of order d has j = (n/d) j', so psi(primitive^k) = zeta_d^(j' k).
  const std::uint64_t stride = n_ / d;
  std::vector<std::int64_t> counts(d, 0);
  for (const std::uint64_t j : chars) ++counts[(j / stride) * (k % d) % d];
  return collapse(CycInt::from_exponent_counts(CyclotomicRing::get(static_cast<std::uint32_t>(d)),
                                               counts),
                  "multiplicative character sum");
}

std::int64_t mult_sum_oracle(const FieldCtx& ctx, std::uint64_t d, std::uint64_t r) {
  const std::uint64_t n = ctx.size() - 1u;
  if (d == 0 || n % d != 0)
    raise(ErrorKind::NotADivisorInt, std::to_string(d) + " does not divide " + std::to_string(n));
  const auto chars = enumerate_mult_by_order(ctx, d);
  const Elem target = ctx.top().pow(ctx.primitive(), r);
  CycInt total = CycInt::zero(static_cast<std::uint32_t>(n));
  for (const MultChar psi : chars) total += mult_eval(ctx, psi, target);
  return collapse(total, "multiplicative character sum");
}

std::int64_t mult_sum_formula(std::uint64_t d, std::uint64_t r) {
  const std::uint64_t g = std::gcd(d, r);  // gcd(d, 0) = d
  const std::uint64_t reduced = d / g;
  return mu_ratio(mu_int(reduced), phi_int(d), phi_int(reduced));
}

AbsSumIdentity abs_sum_identity(const Workspace& ws, const Poly& g, Elem a_normal,
                                std::uint64_t quadratic_limit) {
  const FieldCtx& ctx = ws.field();
  const DivisorLattice& L = ws.lattice();
  const std::size_t gi = L.require(g);
  ws.require_normal(a_normal);
  if (ctx.size() > quadratic_limit)
    raise(ErrorKind::SizeExceeded, "q^m = " + std::to_string(ctx.size()) +
                                       " exceeds quadratic limit " +
                                       std::to_string(quadratic_limit));
  const auto conj = conjugates(ctx, a_normal);
  AbsSumIdentity out;
  for (std::uint64_t idx = 0; idx < ctx.size(); ++idx) {
    const Poly f = poly::from_index(ctx.base(), idx);
    out.lhs += std::llabs(additive_sum_oracle(ws, gi, apply_linearized(ctx, f, conj)));
  }
  const auto w = static_cast<std::int64_t>(w_poly(L.factored(gi)));
  out.rhs = static_cast<std::int64_t>(checked_pow(ctx.q(), ctx.m() - static_cast<unsigned>(L[gi].degree))) *
            static_cast<std::int64_t>(L[gi].phi) * w;
  return out;
}

CycInt additive_character_total(const FieldCtx& ctx, Elem g) {
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (std::uint32_t b = 0; b < ctx.size(); ++b)
    ++counts[additive_exponent(ctx, AdditiveChar{Elem{b}}, g)];
  return CycInt::from_exponent_counts(CyclotomicRing::get(ctx.p()), counts);
}

OracleTable::OracleTable(const Workspace& ws) : size_(ws.field().size()) {
  const std::size_t divisors = ws.lattice().size();
  values_.resize(divisors * size_);
  for (std::size_t g = 0; g < divisors; ++g) {
    for (std::uint32_t a = 0; a < size_; ++a) {
      try {
        values_[g * size_ + a] = additive_sum_oracle(ws, g, Elem{a});
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NonIntegerSum) throw;
        ++non_integer_;
      }
    }
  }
}

}  // namespace charsum
