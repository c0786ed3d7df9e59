#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "charsum/error.hpp"
#include "charsum/fields.hpp"
#include "charsum/intarith.hpp"
#include "charsum/poly.hpp"
#include "charsum/polyring.hpp"

namespace testing_support {

using namespace charsum;

inline Poly P(const FieldCtx& ctx, const std::string& text) { return parse_poly(ctx.base(), text); }

inline std::string S(const FieldCtx& ctx, const Poly& f) { return format_poly(ctx.base(), f); }

struct CellSpec {
  std::uint32_t p;
  unsigned e;
  unsigned m;
};

/// Every (p, e, m) with p in {2,3,5,7}, e in {1,2} and q^m <= cap.
inline std::vector<CellSpec> cells_up_to(std::uint64_t cap) {
  std::vector<CellSpec> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned e : {1u, 2u}) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      unsigned m = 1;
      for (std::uint64_t size = q; size <= cap; size *= q, ++m) out.push_back({p, e, m});
    }
  return out;
}

template <class Fn>
int expect_error(ErrorKind kind, Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind() == kind ? 1 : 0;
  }
  return 0;
}

inline std::vector<std::int64_t> naive_mul(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<std::int64_t> naive_div_exact(std::vector<std::int64_t> a,
                                                 const std::vector<std::int64_t>& b) {
  // b monic
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> quo(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::int64_t r : a)
    if (r != 0) throw std::runtime_error("inexact division");
  return quo;
}

}  // namespace testing_support
