#include "charsum/cyclotomic.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "charsum/error.hpp"
#include "charsum/intarith.hpp"

namespace charsum {
namespace {

// Integer polynomial arithmetic is done modulo 2^64 (unsigned wrap-around),
// which is a ring homomorphism of Z. Results whose true magnitude is known to
// be below 2^63 are then recovered exactly by a signed reinterpretation.
using Wrap = std::uint64_t;

std::vector<Wrap> wrap_mul(const std::vector<Wrap>& a, const std::vector<Wrap>& b) {
  std::vector<Wrap> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

const std::vector<Wrap>& cyclotomic_wrapped(std::uint32_t n, std::map<std::uint32_t, std::vector<Wrap>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Wrap> result;
  if (n == 1) {
    result = {static_cast<Wrap>(-1), 1};
  } else {
    std::vector<Wrap> denom{1};
    for (std::uint64_t d : divisors_int(n)) {
      if (d == n) continue;
      denom = wrap_mul(denom, cyclotomic_wrapped(static_cast<std::uint32_t>(d), memo));
    }
    // Long division of x^n - 1 by the monic product.
    std::vector<Wrap> rem(n + 1, 0);
    rem[0] = static_cast<Wrap>(-1);
    rem[n] = 1;
    const std::size_t dd = denom.size() - 1;
    CHARSUM_ASSERT(denom[dd] == 1, "cyclotomic product not monic");
    std::vector<Wrap> quo(n - dd + 1, 0);
    for (std::size_t i = n + 1; i-- > dd;) {
      const Wrap c = rem[i];
      if (c == 0) continue;
      quo[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * denom[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
      CHARSUM_ASSERT(rem[i] == 0, "x^n - 1 not divisible by lower cyclotomic factors");
    result = std::move(quo);
  }
  return memo.emplace(n, std::move(result)).first->second;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(std::uint32_t n) {
  if (n == 0 || n > kMaxCyclotomicOrder)
    raise(ErrorKind::OutOfRange, "cyclotomic order " + std::to_string(n));
  std::map<std::uint32_t, std::vector<Wrap>> memo;
  const auto& w = cyclotomic_wrapped(n, memo);
  return std::vector<std::int64_t>(w.begin(), w.end());
}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::get(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const CyclotomicRing>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto ring = std::make_shared<const CyclotomicRing>(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(ring)).first->second;
}

CyclotomicRing::CyclotomicRing(std::uint32_t n) : n_(n), phi_(cyclotomic_poly(n)) {
  const std::size_t dim = dimension();
  CHARSUM_ASSERT(dim == phi_int(n), "deg Phi_n differs from phi(n)");
  if (n >= 2) {
    for (std::uint64_t e : divisors_int(n)) {
      const int mu = mu_int(n / e);
      if (mu != 0) factors_.emplace_back(static_cast<std::uint32_t>(e), mu);
    }
  }
  // Walk x^t mod Phi_n for t < n to bound reduced monomials.
  std::vector<std::int64_t> cur(dim + 1, 0);
  cur[0] = 1;
  for (std::uint32_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < dim; ++i)
      monomial_bound_ = std::max<std::int64_t>(monomial_bound_, std::llabs(cur[i]));
    for (std::size_t i = dim; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (const std::int64_t lead = cur[dim]; lead != 0) {
      for (std::size_t i = 0; i <= dim; ++i) cur[i] -= lead * phi_[i];
    }
  }
}

std::vector<std::int64_t> CyclotomicRing::reduce(std::span<const std::int64_t> poly) const {
  const std::size_t n = n_;
  const std::size_t dim = dimension();
  std::vector<Wrap> v(n, 0);
  std::uint64_t l1 = 0;
  for (std::size_t t = 0; t < poly.size(); ++t) {
    v[t % n] += static_cast<Wrap>(poly[t]);
    const std::uint64_t mag = static_cast<std::uint64_t>(std::llabs(poly[t]));
    CHARSUM_ASSERT(!__builtin_add_overflow(l1, mag, &l1), "cyclotomic input too large");
  }
  CHARSUM_ASSERT(l1 < (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(monomial_bound_),
                 "cyclotomic reduction would exceed 63-bit coordinates");

  if (n == 1) {
    return {static_cast<std::int64_t>(v[0])};
  }

  // v = Q * Phi + R. Phi is palindromic for n >= 2, so the reversed quotient
  // is rev(v) * Phi^{-1} mod x^k, k = n - phi(n), and Phi^{-1} is a short
  // product of (1 - x^e)^{+-1} factors.
  const std::size_t k = n - dim;
  std::vector<Wrap> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = v[n - 1 - i];
  for (const auto& [e, mu] : factors_) {
    if (e >= k) continue;
    if (mu < 0) {
      for (std::size_t i = k; i-- > e;) s[i] -= s[i - e];
    } else {
      for (std::size_t i = e; i < k; ++i) s[i] += s[i - e];
    }
  }
  std::vector<Wrap> prod(n, 0);
  for (std::size_t j = 0; j < k; ++j) prod[j] = s[k - 1 - j];
  for (const auto& [e, mu] : factors_) {
    if (e >= n) {
      continue;
    }
    if (mu > 0) {
      for (std::size_t i = n; i-- > e;) prod[i] -= prod[i - e];
    } else {
      for (std::size_t i = e; i < n; ++i) prod[i] += prod[i - e];
    }
  }
  std::vector<std::int64_t> out(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const Wrap r = v[i] - prod[i];
    if (i < dim) {
      out[i] = static_cast<std::int64_t>(r);
    } else {
      CHARSUM_ASSERT(r == 0, "cyclotomic reduction left high-degree terms");
    }
  }
  return out;
}

CycInt::CycInt(std::shared_ptr<const CyclotomicRing> ring)
    : ring_(std::move(ring)), coords_(ring_->dimension(), 0) {}

CycInt::CycInt(std::shared_ptr<const CyclotomicRing> ring, std::span<const std::int64_t> poly)
    : ring_(std::move(ring)), coords_(ring_->reduce(poly)) {}

CycInt CycInt::integer(std::uint32_t n, std::int64_t value) {
  CycInt out = zero(n);
  out.coords_[0] = value;
  return out;
}

CycInt CycInt::root_power(std::uint32_t n, std::uint64_t k) {
  auto ring = CyclotomicRing::get(n);
  std::vector<std::int64_t> mono(n, 0);
  mono[k % n] = 1;
  return CycInt(std::move(ring), mono);
}

CycInt CycInt::from_exponent_counts(std::shared_ptr<const CyclotomicRing> ring,
                                    std::span<const std::int64_t> counts) {
  return CycInt(std::move(ring), counts);
}

std::optional<std::int64_t> CycInt::as_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return std::nullopt;
  return coords_[0];
}

namespace {
void require_same_ring(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order())
    raise(ErrorKind::MixedOrders, "Z[zeta_" + std::to_string(a.order()) + "] vs Z[zeta_" +
                                      std::to_string(b.order()) + "]");
}
}  // namespace

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  require_same_ring(a, b);
  CycInt out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i)
    CHARSUM_ASSERT(!__builtin_add_overflow(out.coords_[i], b.coords_[i], &out.coords_[i]),
                   "CycInt addition overflow");
  return out;
}

CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

CycInt operator*(const CycInt& a, const CycInt& b) {
  require_same_ring(a, b);
  const auto& x = a.coords_;
  const auto& y = b.coords_;
  std::vector<std::int64_t> prod(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::int64_t t;
      CHARSUM_ASSERT(!__builtin_mul_overflow(x[i], y[j], &t), "CycInt product overflow");
      CHARSUM_ASSERT(!__builtin_add_overflow(prod[i + j], t, &prod[i + j]),
                     "CycInt product overflow");
    }
  }
  return CycInt(a.ring_, prod);
}

bool operator==(const CycInt& a, const CycInt& b) {
  require_same_ring(a, b);
  return a.coords_ == b.coords_;
}

}  // namespace charsum
