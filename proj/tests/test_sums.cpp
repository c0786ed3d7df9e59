#include "doctest.h"

#include <numeric>

#include "charsum/characters.hpp"
#include "charsum/linearized.hpp"
#include "charsum/poly.hpp"
#include "charsum/sums.hpp"
#include "support.hpp"

using namespace charsum;
using namespace testing_support;

namespace {

// Sum of individually evaluated characters, found by scanning all betas.
std::optional<std::int64_t> brute_additive(const Workspace& ws, const Poly& g, Elem a) {
  const FieldCtx& ctx = ws.field();
  CycInt total = CycInt::zero(ctx.p());
  for (const AdditiveChar chi : enumerate_additive_by_order(ctx, ws.lattice(), g))
    total += additive_eval(ctx, chi, a);
  return total.as_integer();
}

// Sum of r-th powers of the primitive d-th roots of unity.
std::int64_t ramanujan(std::uint64_t d, std::uint64_t r) {
  CycInt total = CycInt::zero(static_cast<std::uint32_t>(d));
  for (std::uint64_t k = 1; k <= d; ++k)
    if (std::gcd(k, d) == 1) total += CycInt::root_power(static_cast<std::uint32_t>(d), k * r % d);
  return *total.as_integer();
}

}  // namespace

TEST_CASE("additive sum examples") {
  const Workspace ws(build_field(2, 1, 2));
  const FieldCtx& f4 = ws.field();
  const Elem w{2};
  for (std::uint32_t a = 0; a < 4; ++a) CHECK(additive_sum_oracle(ws, P(f4, "1"), Elem{a}) == 1);
  CHECK(additive_sum_oracle(ws, P(f4, "x + 1"), w) == -1);
  CHECK(additive_sum_oracle(ws, P(f4, "x^2 + 1"), w) == 0);
  CHECK(additive_sum_formula(ws, P(f4, "x + 1"), P(f4, "x^2 + 1")) == -1);
  CHECK(additive_sum_formula(ws, P(f4, "x^2 + 1"), P(f4, "x^2 + 1")) == 0);
  for (const char* g : {"1", "x + 1", "x^2 + 1"}) {
    const Poly gp = P(f4, g);
    CHECK(additive_sum_formula(ws, gp, P(f4, "1")) ==
          static_cast<std::int64_t>(ws.lattice()[ws.lattice().require(gp)].phi));
  }
  CHECK(expect_error(ErrorKind::NotADivisor, [&] { additive_sum_oracle(ws, P(f4, "x"), w); }));
  CHECK(expect_error(ErrorKind::NotADivisor, [&] { additive_sum_formula(ws, P(f4, "x + 1"), P(f4, "x")); }));
}

TEST_CASE("additive oracle matches individually evaluated characters") {
  for (const auto& c : cells_up_to(128)) {
    const Workspace ws(build_field(c.p, c.e, c.m));
    const DivisorLattice& L = ws.lattice();
    for (std::size_t g = 0; g < L.size(); ++g)
      for (std::uint32_t a = 0; a < ws.field().size(); a += 3)
        CHECK(brute_additive(ws, L[g].poly, Elem{a}) == additive_sum_oracle(ws, g, Elem{a}));
  }
}

TEST_CASE("additive sums depend only on the element's order and match the closed form") {
  for (const auto& c : cells_up_to(1024)) {
    const Workspace ws(build_field(c.p, c.e, c.m));
    const DivisorLattice& L = ws.lattice();
    const OracleTable table(ws);
    CHECK(table.non_integer_sums() == 0);
    std::vector<std::uint32_t> representative(L.size(), UINT32_MAX);
    for (std::uint32_t a = 0; a < ws.field().size(); ++a) {
      const std::size_t f1 = ws.element_order(Elem{a});
      if (representative[f1] == UINT32_MAX) representative[f1] = a;
      for (std::size_t g = 0; g < L.size(); ++g) {
        REQUIRE(table.at(g, Elem{a}) == additive_sum_formula(ws, g, f1));
        REQUIRE(table.at(g, Elem{a}) == table.at(g, Elem{representative[f1]}));
      }
    }
  }
}

TEST_CASE("composed sum examples") {
  const Workspace ws(build_field(2, 1, 2));
  const FieldCtx& f4 = ws.field();
  const Elem w{2};
  for (const char* g : {"1", "x + 1", "x^2 + 1"}) {
    const auto zero = additive_composed_sum(ws, P(f4, g), Poly{}, w);
    CHECK(zero.oracle == static_cast<std::int64_t>(ws.lattice()[ws.lattice().require(P(f4, g))].phi));
    CHECK(zero.agree());
    const auto full = additive_composed_sum(ws, P(f4, g), P(f4, "x^2 + 1"), w);
    CHECK(full.oracle == zero.oracle);
    CHECK(full.formula == zero.formula);
  }
  const auto r = additive_composed_sum(ws, P(f4, "x^2 + 1"), P(f4, "x + 1"), w);
  CHECK(r.formula == -2);
  CHECK(r.oracle == -2);
  CHECK(expect_error(ErrorKind::NotNormal, [&] { additive_composed_sum(ws, P(f4, "x + 1"), P(f4, "1"), Elem{1}); }));
  CHECK(expect_error(ErrorKind::NotADivisor, [&] { additive_composed_sum(ws, P(f4, "x"), P(f4, "1"), w); }));
}

TEST_CASE("normal element mu examples") {
  const Workspace ws(build_field(2, 1, 2));
  const FieldCtx& f4 = ws.field();
  const Elem w{2};
  const auto a = normal_mu_check(ws, P(f4, "1"), w);
  CHECK(a.oracle_value == 1);
  CHECK(a.agree);
  const auto b = normal_mu_check(ws, P(f4, "x + 1"), w);
  CHECK(b.oracle_value == -1);
  CHECK(b.formula_value == -1);
  const auto c = normal_mu_check(ws, P(f4, "x^2 + 1"), w);
  CHECK(c.oracle_value == 0);
  CHECK(c.agree);
}

TEST_CASE("multiplicativity examples") {
  const Workspace ws(build_field(2, 1, 3));
  const FieldCtx& f8 = ws.field();
  for (std::uint32_t a = 0; a < 8; ++a) {
    const auto r = multiplicativity_check(ws, P(f8, "x + 1"), P(f8, "x^2 + x + 1"), Elem{a});
    CHECK(r.agree);
    const auto t = multiplicativity_check(ws, P(f8, "1"), P(f8, "x^2 + x + 1"), Elem{a});
    CHECK(t.agree);
    CHECK(t.oracle_value == additive_sum_oracle(ws, P(f8, "x^2 + x + 1"), Elem{a}));
  }
  CHECK(expect_error(ErrorKind::NotCoprime,
                     [&] { multiplicativity_check(ws, P(f8, "x + 1"), P(f8, "x + 1"), Elem{1}); }));
  const Workspace w4(build_field(2, 1, 4));
  CHECK(expect_error(ErrorKind::NotADivisor,
                     [&] { multiplicativity_check(w4, P(w4.field(), "x"), P(w4.field(), "1"), Elem{1}); }));
}

TEST_CASE("prime power formula examples") {
  const Workspace ws(build_field(2, 1, 2));
  const FieldCtx& f4 = ws.field();
  const Elem w{2};
  const auto zero = prime_power_sum(ws, P(f4, "x + 1"), 2, Elem{0});
  CHECK(zero.formula == 2);
  CHECK(zero.agree());
  const auto sq = prime_power_sum(ws, P(f4, "x + 1"), 2, w);
  CHECK(sq.formula == 0);
  CHECK(sq.oracle == 0);
  const auto lin = prime_power_sum(ws, P(f4, "x + 1"), 1, w);
  CHECK(lin.formula == -1);
  CHECK(lin.oracle == -1);
  CHECK(expect_error(ErrorKind::NotIrreducible, [&] { prime_power_sum(ws, P(f4, "x^2 + 1"), 1, w); }));
  CHECK(expect_error(ErrorKind::NotADivisor, [&] { prime_power_sum(ws, P(f4, "x + 1"), 3, w); }));
  CHECK(expect_error(ErrorKind::NotADivisor, [&] { prime_power_sum(ws, P(f4, "x"), 1, w); }));
}

TEST_CASE("multiplicative sum examples") {
  const FieldCtx f4 = build_field(2, 1, 2);
  for (std::uint64_t r = 0; r < 6; ++r) CHECK(mult_sum_oracle(f4, 1, r) == 1);
  CHECK(mult_sum_oracle(f4, 3, 0) == 2);
  CHECK(mult_sum_oracle(f4, 3, 3) == 2);
  CHECK(mult_sum_oracle(f4, 3, 1) == -1);
  CHECK(mult_sum_formula(1, 5) == 1);
  CHECK(mult_sum_formula(3, 1) == -1);
  CHECK(mult_sum_formula(4, 2) == -2);
  CHECK(mult_sum_formula(4, 0) == 2);
  CHECK(expect_error(ErrorKind::NotADivisorInt, [&] { mult_sum_oracle(f4, 2, 1); }));
  const MultOracle oracle(f4);
  CHECK(expect_error(ErrorKind::NotADivisorInt, [&] { oracle.sum(2, 1); }));
}

TEST_CASE("Ramanujan sums: brute root sums against the closed form") {
  for (std::uint64_t d = 1; d <= 120; ++d)
    for (std::uint64_t r = 0; r <= 2 * d; ++r) CHECK(ramanujan(d, r) == mult_sum_formula(d, r));
}

TEST_CASE("multiplicative oracle: direct and tabulated agree with the closed form") {
  for (const auto& c : cells_up_to(256)) {
    const FieldCtx ctx = build_field(c.p, c.e, c.m);
    const MultOracle table(ctx);
    const std::uint64_t n = ctx.size() - 1;
    for (std::uint64_t d : divisors_int(n))
      for (std::uint64_t r = 0; r < n; ++r) {
        const std::int64_t v = table.sum(d, r);
        REQUIRE(v == mult_sum_formula(d, r));
        if (ctx.size() <= 32) REQUIRE(v == mult_sum_oracle(ctx, d, r));
      }
  }
}

TEST_CASE("absolute sum identity examples") {
  const Workspace w2(build_field(2, 1, 1));
  const auto a = abs_sum_identity(w2, P(w2.field(), "x + 1"), Elem{1});
  CHECK(a.lhs == 2);
  CHECK(a.rhs == 2);
  const Workspace w8(build_field(2, 1, 3));
  const auto b = abs_sum_identity(w8, P(w8.field(), "1"), w8.normal());
  CHECK(b.lhs == 8);
  CHECK(b.rhs == 8);
  const Workspace w4(build_field(2, 1, 2));
  const auto c = abs_sum_identity(w4, P(w4.field(), "x^2 + 1"), Elem{2});
  CHECK(c.rhs == 4);
  CHECK(c.lhs == 4);
  CHECK(expect_error(ErrorKind::NotNormal, [&] { abs_sum_identity(w4, P(w4.field(), "1"), Elem{1}); }));
  const Workspace big(build_field(3, 2, 3));
  CHECK(expect_error(ErrorKind::SizeExceeded, [&] { abs_sum_identity(big, P(big.field(), "1"), big.normal()); }));
  CHECK(abs_sum_identity(big, P(big.field(), "1"), big.normal(), 729).lhs == 729);
}

TEST_CASE("composed sums over every f in small cells") {
  for (const auto& c : cells_up_to(128)) {
    const Workspace ws(build_field(c.p, c.e, c.m));
    const DivisorLattice& L = ws.lattice();
    for (std::size_t g = 0; g < L.size(); ++g)
      for (std::uint64_t idx = 0; idx < ws.field().size(); ++idx) {
        const Poly f = poly::from_index(ws.field().base(), idx);
        const auto r = additive_composed_sum(ws, L[g].poly, f, ws.normal());
        REQUIRE(r.agree());
      }
  }
}
