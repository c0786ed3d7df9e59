#include "charsum/poly.hpp"

#include <algorithm>
#include <string>

#include "charsum/error.hpp"
#include "charsum/intarith.hpp"

namespace charsum {

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (auto c = a.coeffs[i] <=> b.coeffs[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace poly {

Poly normalized(std::vector<Elem> coeffs) {
  while (!coeffs.empty() && coeffs.back().index == 0) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

Poly constant(Elem c) { return normalized({c}); }

Poly monomial(Elem c, unsigned degree) {
  std::vector<Elem> coeffs(degree + 1);
  coeffs[degree] = c;
  return normalized(std::move(coeffs));
}

Poly x_pow_minus_one(const GaloisField& F, unsigned n) {
  std::vector<Elem> coeffs(n + 1);
  coeffs[n] = F.one();
  coeffs[0] = F.add(coeffs[0], F.neg(F.one()));
  return normalized(std::move(coeffs));
}

Poly add(const GaloisField& F, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return normalized(std::move(out));
}

Poly sub(const GaloisField& F, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
  return normalized(std::move(out));
}

Poly neg(const GaloisField& F, const Poly& a) {
  std::vector<Elem> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.neg(a.coeffs[i]);
  return normalized(std::move(out));
}

Poly scale(const GaloisField& F, const Poly& a, Elem c) {
  std::vector<Elem> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.coeffs[i], c);
  return normalized(std::move(out));
}

Poly mul(const GaloisField& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> out(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].index == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  }
  return normalized(std::move(out));
}

std::pair<Poly, Poly> divmod(const GaloisField& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZeroPoly, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Elem> rem = a.coeffs;
  std::vector<Elem> quo(a.coeffs.size() - b.coeffs.size() + 1);
  const Elem lead_inv = F.inv(b.leading());
  const std::size_t db = b.coeffs.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].index == 0) continue;
    const Elem c = F.mul(rem[i], lead_inv);
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeffs[j]));
  }
  rem.resize(db);
  return {normalized(std::move(quo)), normalized(std::move(rem))};
}

Poly mod(const GaloisField& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly exact_div(const GaloisField& F, const Poly& a, const Poly& b) {
  auto [q, r] = divmod(F, a, b);
  CHARSUM_ASSERT(r.is_zero(), "exact_div with nonzero remainder");
  return q;
}

bool divides(const GaloisField& F, const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return mod(F, a, b).is_zero();
}

Poly monic(const GaloisField& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.leading()));
}

Poly gcd(const GaloisField& F, const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = mod(F, u, v);
    u = std::move(v);
    v = std::move(r);
  }
  return monic(F, u);
}

Poly powmod(const GaloisField& F, const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly result = mod(F, constant(F.one()), modulus);
  Poly b = mod(F, base, modulus);
  while (e > 0) {
    if (e & 1) result = mod(F, mul(F, result, b), modulus);
    e >>= 1;
    if (e > 0) b = mod(F, mul(F, b, b), modulus);
  }
  return result;
}

Elem eval(const GaloisField& F, const Poly& f, Elem a) {
  Elem acc{};
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, a), f.coeffs[i]);
  return acc;
}

bool is_irreducible(const GaloisField& F, const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly g = monic(F, f);
  // frob[i] = x^{Q^i} mod g, Q = |F|.
  std::vector<Poly> frob{mod(F, x(), g)};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(F, frob.back(), F.size(), g));
  if (frob[n] != mod(F, x(), g)) return false;
  for (const auto& [r, e] : factor_int(static_cast<std::uint64_t>(n)).factors) {
    const Poly h = sub(F, frob[n / r], x());
    if (gcd(F, h, g).degree() != 0) return false;
  }
  return true;
}

Poly smallest_irreducible(const GaloisField& F, unsigned degree) {
  CHARSUM_ASSERT(degree >= 1, "irreducible search needs positive degree");
  const std::uint64_t count = checked_pow(F.size(), degree);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly tail = from_index(F, idx);
    if (tail.coeff(0).index == 0) continue;
    std::vector<Elem> coeffs(degree + 1);
    std::copy(tail.coeffs.begin(), tail.coeffs.end(), coeffs.begin());
    coeffs[degree] = F.one();
    Poly cand{std::move(coeffs)};
    if (is_irreducible(F, cand)) return cand;
  }
  CHARSUM_ASSERT(false, "no irreducible polynomial of degree " + std::to_string(degree));
  return {};
}

Poly from_index(const GaloisField& F, std::uint64_t index) {
  std::vector<Elem> coeffs;
  while (index > 0) {
    coeffs.push_back(Elem{static_cast<std::uint32_t>(index % F.size())});
    index /= F.size();
  }
  return normalized(std::move(coeffs));
}

std::uint64_t to_index(const GaloisField& F, const Poly& f) {
  std::uint64_t idx = 0;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) idx = idx * F.size() + f.coeffs[i].index;
  return idx;
}

}  // namespace poly
}  // namespace charsum
