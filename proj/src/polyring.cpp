#include "charsum/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "charsum/error.hpp"
#include "charsum/intarith.hpp"
#include "charsum/poly.hpp"

namespace charsum {

Poly FactoredPoly::expand(const GaloisField& F) const {
  Poly out = poly::constant(unit);
  for (const auto& [u, e] : factors)
    for (unsigned i = 0; i < e; ++i) out = poly::mul(F, out, u);
  return out;
}

namespace {

std::uint64_t multiplicative_order_mod(std::uint64_t q, std::uint64_t n) {
  std::uint64_t t = 1, cur = q % n;
  while (cur != 1 % n) {
    cur = cur * q % n;
    ++t;
  }
  return t;
}

}  // namespace

FactoredPoly factor_xm_minus_1(const FieldCtx& ctx) {
  const GaloisField& Fq = ctx.base();
  const std::uint32_t p = ctx.p();
  const std::uint32_t q = ctx.q();
  unsigned m_prime = ctx.m();
  unsigned mult = 1;
  while (m_prime % p == 0) {
    m_prime /= p;
    mult *= p;
  }

  FactoredPoly out;
  if (m_prime == 1) {
    out.factors.emplace_back(poly::x_pow_minus_one(Fq, 1), mult);
  } else {
    const auto t = static_cast<unsigned>(multiplicative_order_mod(q, m_prime));
    const auto ext = GaloisField::extension(ctx.base_ptr(), poly::smallest_irreducible(Fq, t));
    const Elem zeta = ext->pow(ext->generator(), ext->group_order() / m_prime);
    CHARSUM_ASSERT(ext->multiplicative_order(zeta) == m_prime, "bad root of unity");

    std::vector<bool> seen(m_prime, false);
    for (unsigned s = 0; s < m_prime; ++s) {
      if (seen[s]) continue;
      Poly minpoly = poly::constant(ext->one());
      unsigned j = s;
      do {
        seen[j] = true;
        const Poly linear = poly::normalized({ext->neg(ext->pow(zeta, j)), ext->one()});
        minpoly = poly::mul(*ext, minpoly, linear);
        j = static_cast<unsigned>(std::uint64_t{j} * q % m_prime);
      } while (j != s);
      for (Elem c : minpoly.coeffs)
        CHARSUM_ASSERT(Fq.contains(c), "cyclotomic coset polynomial not over F_q");
      out.factors.emplace_back(std::move(minpoly), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  CHARSUM_ASSERT(out.expand(Fq) == poly::x_pow_minus_one(Fq, ctx.m()),
                 "factorization of x^m - 1 does not re-expand");
  return out;
}

std::uint64_t phi_poly(const FactoredPoly& f, std::uint64_t q) {
  std::uint64_t phi = 1;
  for (const auto& [u, e] : f.factors) {
    const unsigned d = static_cast<unsigned>(u.degree());
    const std::uint64_t low = checked_pow(q, d * (e - 1));
    const std::uint64_t high = checked_pow(q, d * e);
    if (__builtin_mul_overflow(phi, high - low, &phi))
      raise(ErrorKind::OutOfRange, "phi overflows 64 bits");
  }
  return phi;
}

int mu_poly(const FactoredPoly& f) {
  int mu = 1;
  for (const auto& [u, e] : f.factors) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t w_poly(const FactoredPoly& f) { return std::uint64_t{1} << f.factors.size(); }

std::vector<Poly> divisors(const GaloisField& F, const FactoredPoly& f) {
  std::vector<Poly> out{poly::constant(F.one())};
  for (const auto& [u, e] : f.factors) {
    const std::size_t base = out.size();
    Poly power = poly::constant(F.one());
    for (unsigned i = 1; i <= e; ++i) {
      power = poly::mul(F, power, u);
      for (std::size_t j = 0; j < base; ++j) out.push_back(poly::mul(F, out[j], power));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t coprime_count(const GaloisField& F, const Poly& f) {
  CHARSUM_ASSERT(!f.is_zero(), "coprime count of the zero polynomial");
  const std::uint64_t total = checked_pow(F.size(), static_cast<unsigned>(f.degree()));
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (poly::gcd(F, poly::from_index(F, idx), f).degree() == 0) ++count;
  return count;
}

DivisorLattice::DivisorLattice(const FieldCtx& ctx) : factorization_(factor_xm_minus_1(ctx)) {
  const GaloisField& F = ctx.base();
  const std::size_t r = factorization_.factors.size();
  multiplicity_ = factorization_.factors.front().second;
  for (const auto& [u, e] : factorization_.factors)
    CHARSUM_ASSERT(e == multiplicity_, "x^m - 1 factors with unequal multiplicities");
  const unsigned a = multiplicity_;

  // powers[i][j] = u_i^j
  std::vector<std::vector<Poly>> powers(r);
  for (std::size_t i = 0; i < r; ++i) {
    powers[i].push_back(poly::constant(F.one()));
    for (unsigned j = 1; j <= a; ++j)
      powers[i].push_back(poly::mul(F, powers[i].back(), factorization_.factors[i].first));
  }

  std::size_t count = 1;
  for (std::size_t i = 0; i < r; ++i) count *= a + 1;
  std::vector<unsigned> exps(r, 0);
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t rest = c;
    for (std::size_t i = 0; i < r; ++i) {
      exps[i] = static_cast<unsigned>(rest % (a + 1));
      rest /= a + 1;
    }
    Divisor d;
    d.poly = poly::constant(F.one());
    d.exponents = exps;
    for (std::size_t i = 0; i < r; ++i) {
      if (exps[i] == 0) continue;
      d.poly = poly::mul(F, d.poly, powers[i][exps[i]]);
      const unsigned deg = static_cast<unsigned>(factorization_.factors[i].first.degree());
      d.phi *= checked_pow(ctx.q(), deg * exps[i]) - checked_pow(ctx.q(), deg * (exps[i] - 1));
      d.mu = exps[i] > 1 ? 0 : -d.mu;
    }
    d.degree = d.poly.degree();
    divisors_.push_back(std::move(d));
  }
  std::sort(divisors_.begin(), divisors_.end(),
            [](const Divisor& x, const Divisor& y) { return x.poly < y.poly; });
  by_code_.assign(count, 0);
  for (std::size_t i = 0; i < divisors_.size(); ++i) by_code_[code(divisors_[i].exponents)] = i;
  CHARSUM_ASSERT(divisors_.back().degree == static_cast<int>(ctx.m()), "lattice top mismatch");
}

std::size_t DivisorLattice::code(std::span<const unsigned> exps) const {
  std::size_t c = 0;
  for (std::size_t i = exps.size(); i-- > 0;) c = c * (multiplicity_ + 1) + exps[i];
  return c;
}

std::optional<std::size_t> DivisorLattice::find(const Poly& f) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), f,
                             [](const Divisor& d, const Poly& g) { return d.poly < g; });
  if (it == divisors_.end() || it->poly != f) return std::nullopt;
  return static_cast<std::size_t>(it - divisors_.begin());
}

std::size_t DivisorLattice::require(const Poly& f) const {
  if (auto i = find(f)) return *i;
  raise(ErrorKind::NotADivisor, "polynomial is not a monic divisor of x^m - 1");
}

std::size_t DivisorLattice::from_exponents(std::span<const unsigned> exps) const {
  CHARSUM_ASSERT(exps.size() == factorization_.factors.size(), "exponent vector length");
  for (unsigned e : exps) CHARSUM_ASSERT(e <= multiplicity_, "exponent above multiplicity");
  return by_code_[code(exps)];
}

std::size_t DivisorLattice::factor_index(std::size_t i) const {
  const auto& exps = divisors_[i].exponents;
  std::size_t which = exps.size();
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    if (exps[k] != 1 || which != exps.size())
      raise(ErrorKind::NotIrreducible, "divisor is not an irreducible factor");
    which = k;
  }
  if (which == exps.size()) raise(ErrorKind::NotIrreducible, "1 is not irreducible");
  return which;
}

bool DivisorLattice::divides(std::size_t a, std::size_t b) const {
  const auto& x = divisors_[a].exponents;
  const auto& y = divisors_[b].exponents;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::size_t DivisorLattice::gcd(std::size_t a, std::size_t b) const {
  std::vector<unsigned> exps = divisors_[a].exponents;
  const auto& y = divisors_[b].exponents;
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(exps[i], y[i]);
  return by_code_[code(exps)];
}

std::size_t DivisorLattice::quotient(std::size_t b, std::size_t a) const {
  CHARSUM_ASSERT(divides(a, b), "lattice quotient by a non-divisor");
  std::vector<unsigned> exps = divisors_[b].exponents;
  const auto& x = divisors_[a].exponents;
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= x[i];
  return by_code_[code(exps)];
}

std::optional<std::size_t> DivisorLattice::product(std::size_t a, std::size_t b) const {
  std::vector<unsigned> exps = divisors_[a].exponents;
  const auto& y = divisors_[b].exponents;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] += y[i];
    if (exps[i] > multiplicity_) return std::nullopt;
  }
  return by_code_[code(exps)];
}

std::vector<std::size_t> DivisorLattice::divisors_of(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divides(i, a)) out.push_back(i);
  return out;
}

std::vector<std::size_t> DivisorLattice::square_free_divisors_of(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i].mu != 0 && divides(i, a)) out.push_back(i);
  return out;
}

FactoredPoly DivisorLattice::factored(std::size_t a) const {
  FactoredPoly out;
  const auto& exps = divisors_[a].exponents;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) out.factors.emplace_back(factorization_.factors[i].first, exps[i]);
  return out;
}

std::string format_coeff(const GaloisField& F, Elem c) {
  if (c.index < F.characteristic()) return std::to_string(c.index);
  std::string out = "[";
  std::uint32_t x = c.index;
  for (unsigned j = 0; j < F.absolute_degree(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(x % F.characteristic());
    x /= F.characteristic();
  }
  return out + "]";
}

std::string format_poly(const GaloisField& F, const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    const Elem c = f.coeffs[i];
    if (c.index == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += format_coeff(F, c);
      continue;
    }
    if (c != F.one()) out += format_coeff(F, c) + "*";
    out += i == 1 ? std::string("x") : "x^" + std::to_string(i);
  }
  return out;
}

std::string format_factored(const GaloisField& F, const FactoredPoly& f) {
  std::string out;
  if (f.unit != F.one() || f.factors.empty()) out = format_coeff(F, f.unit);
  for (const auto& [u, e] : f.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + format_poly(F, u) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const GaloisField& F, std::string_view text) : F_(F) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Poly parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<Elem> coeffs;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [c, deg] = term();
      if (negate) c = F_.neg(c);
      if (coeffs.size() <= deg) coeffs.resize(deg + 1);
      coeffs[deg] = F_.add(coeffs[deg], c);
      if (pos_ == s_.size()) break;
      if (peek() == '+') {
        negate = false;
      } else if (peek() == '-') {
        negate = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return poly::normalized(std::move(coeffs));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    raise(ErrorKind::ParseError, why + " in \"" + s_ + "\" at offset " + std::to_string(pos_));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (1u << 20)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Elem residue_tuple() {
    ++pos_;  // '['
    const std::uint32_t p = F_.characteristic();
    std::uint32_t idx = 0, place = 1;
    unsigned count = 0;
    while (true) {
      const std::uint64_t r = integer();
      if (r >= p) fail("residue out of range");
      if (++count > F_.absolute_degree()) fail("too many residues");
      idx += static_cast<std::uint32_t>(r) * place;
      place *= p;
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return Elem{idx};
    }
  }

  std::pair<Elem, std::size_t> term() {
    std::optional<Elem> coef;
    if (peek() == '[') {
      coef = residue_tuple();
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t r = integer();
      if (r >= F_.characteristic()) fail("coefficient out of range");
      coef = Elem{static_cast<std::uint32_t>(r)};
    }
    if (coef && peek() == '*') ++pos_;
    if (peek() != 'x') {
      if (!coef) fail("expected a term");
      return {*coef, 0};
    }
    ++pos_;
    std::size_t deg = 1;
    if (peek() == '^') {
      ++pos_;
      deg = integer();
    }
    return {coef.value_or(F_.one()), deg};
  }

  const GaloisField& F_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const GaloisField& F, std::string_view text) { return PolyParser(F, text).parse(); }

}  // namespace charsum
