#include "doctest.h"

#include <numeric>

#include "charsum/characters.hpp"
#include "charsum/linearized.hpp"
#include "charsum/poly.hpp"
#include "charsum/sums.hpp"
#include "charsum/workspace.hpp"
#include "support.hpp"

using namespace charsum;
using namespace testing_support;

namespace {

// Order of a character by testing f o gamma on every gamma.
std::size_t brute_char_order(const FieldCtx& ctx, const DivisorLattice& L, AdditiveChar chi) {
  for (std::size_t i = 0; i < L.size(); ++i) {
    bool trivial = true;
    for (std::uint32_t g = 0; g < ctx.size() && trivial; ++g)
      trivial = additive_exponent(ctx, chi, apply_linearized(ctx, L[i].poly, Elem{g})) == 0;
    if (trivial) return i;
  }
  throw std::runtime_error("no order");
}

}  // namespace

TEST_CASE("additive character examples") {
  const FieldCtx f4 = build_field(2, 1, 2);
  const DivisorLattice L(f4);
  const Elem w{2};
  for (std::uint32_t g = 0; g < 4; ++g) CHECK(additive_eval(f4, AdditiveChar{Elem{0}}, Elem{g}).as_integer() == 1);
  for (std::uint32_t b = 0; b < 4; ++b) CHECK(additive_eval(f4, AdditiveChar{Elem{b}}, Elem{0}).as_integer() == 1);
  CHECK(additive_eval(f4, AdditiveChar{w}, w).as_integer() == -1);
  CHECK(S(f4, additive_char_order(f4, L, AdditiveChar{Elem{0}})) == "1");
  CHECK(S(f4, additive_char_order(f4, L, AdditiveChar{Elem{1}})) == "x + 1");
  CHECK(S(f4, additive_char_order(f4, L, AdditiveChar{w})) == "x^2 + 1");

  const auto top = enumerate_additive_by_order(f4, L, P(f4, "x^2 + 1"));
  REQUIRE(top.size() == 2);
  CHECK(top[0].beta == Elem{2});
  CHECK(top[1].beta == Elem{3});
  const auto trivial = enumerate_additive_by_order(f4, L, P(f4, "1"));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].beta == Elem{0});

  const FieldCtx f8 = build_field(2, 1, 3);
  CHECK(enumerate_additive_by_order(f8, DivisorLattice(f8), P(f8, "x^2 + x + 1")).size() == 3);
  CHECK(expect_error(ErrorKind::NotADivisor,
                     [&] { enumerate_additive_by_order(f8, DivisorLattice(f8), P(f8, "x^2 + 1")); }));
}

TEST_CASE("additive characters are homomorphisms") {
  for (const auto& c : cells_up_to(81)) {
    const FieldCtx ctx = build_field(c.p, c.e, c.m);
    for (std::uint32_t b = 0; b < ctx.size(); ++b)
      for (std::uint32_t g = 0; g < ctx.size(); ++g)
        for (std::uint32_t h = 0; h < ctx.size(); h += 5) {
          const AdditiveChar chi{Elem{b}};
          CHECK(additive_eval(ctx, chi, ctx.top().add(Elem{g}, Elem{h})) ==
                additive_eval(ctx, chi, Elem{g}) * additive_eval(ctx, chi, Elem{h}));
        }
  }
}

TEST_CASE("orthogonality of additive characters") {
  for (const auto& c : cells_up_to(512)) {
    const FieldCtx ctx = build_field(c.p, c.e, c.m);
    for (std::uint32_t g = 0; g < ctx.size(); ++g) {
      const auto total = additive_character_total(ctx, Elem{g}).as_integer();
      REQUIRE(total.has_value());
      CHECK(*total == (g == 0 ? static_cast<std::int64_t>(ctx.size()) : 0));
    }
  }
}

TEST_CASE("character orders: basis test, full test, counts and adjoint") {
  for (const auto& c : cells_up_to(4096)) {
    const FieldCtx ctx = build_field(c.p, c.e, c.m);
    const GaloisField& F = ctx.base();
    const Workspace ws(build_field(c.p, c.e, c.m));
    const DivisorLattice& L = ws.lattice();
    std::vector<std::uint64_t> counts(L.size(), 0);
    const Poly xm1 = L[L.full()].poly;
    for (std::uint32_t b = 0; b < ctx.size(); ++b) {
      const AdditiveChar chi{Elem{b}};
      const std::size_t order = ws.char_order(chi);
      if (ctx.size() <= 256 || b % 37 == 0) {
        REQUIRE(order == additive_char_order_index(ctx, L, chi));
        REQUIRE(order == brute_char_order(ctx, L, chi));
      }
      ++counts[order];
      // Image of the element's order under x -> x^(m-1), generating the same ideal.
      const Poly k = L[ws.element_order(Elem{b})].poly;
      Poly image;
      for (int i = 0; i <= k.degree(); ++i)
        image = poly::add(F, image, poly::monomial(k.coeffs[static_cast<std::size_t>(i)],
                                                   static_cast<unsigned>(i) * (c.m - 1) % c.m));
      CHECK(L[order].poly == poly::gcd(F, image, xm1));
    }
    for (std::size_t g = 0; g < L.size(); ++g) {
      CHECK(counts[g] == L[g].phi);
      CHECK(ws.characters_of_order(g).size() == L[g].phi);
    }
    CHECK(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == ctx.size());
  }
}

TEST_CASE("multiplicative character examples") {
  const FieldCtx f4 = build_field(2, 1, 2);
  for (std::uint32_t g = 1; g < 4; ++g) CHECK(mult_eval(f4, MultChar{0}, Elem{g}).as_integer() == 1);
  for (std::uint64_t j = 0; j < 3; ++j) CHECK(mult_eval(f4, MultChar{j}, Elem{1}).as_integer() == 1);
  CHECK(mult_eval(f4, MultChar{1}, Elem{3}) == CycInt::root_power(3, 2));
  CHECK(expect_error(ErrorKind::ZeroElement, [&] { mult_eval(f4, MultChar{1}, Elem{0}); }));
  const auto d1 = enumerate_mult_by_order(f4, 1);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].j == 0);
  const auto d3 = enumerate_mult_by_order(f4, 3);
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].j == 1);
  CHECK(d3[1].j == 2);
  const FieldCtx f8 = build_field(2, 1, 3);
  CHECK(enumerate_mult_by_order(f8, 7).size() == 6);
  CHECK(expect_error(ErrorKind::NotADivisorInt, [&] { enumerate_mult_by_order(f8, 3); }));
}

TEST_CASE("multiplicative characters: homomorphism and order") {
  for (const auto& c : cells_up_to(64)) {
    const FieldCtx ctx = build_field(c.p, c.e, c.m);
    const std::uint64_t n = ctx.size() - 1;
    for (std::uint64_t j = 0; j < n; ++j) {
      const MultChar psi{j};
      for (std::uint32_t a = 1; a < ctx.size(); ++a)
        for (std::uint32_t b = 1; b < ctx.size(); b += 3)
          CHECK(mult_eval(ctx, psi, ctx.top().mul(Elem{a}, Elem{b})) ==
                mult_eval(ctx, psi, Elem{a}) * mult_eval(ctx, psi, Elem{b}));
      // Order: least d with psi^d trivial.
      std::uint64_t d = 1;
      while (j * d % n != 0) ++d;
      CHECK(mult_char_order(ctx, psi) == d);
    }
    for (std::uint64_t d : divisors_int(n)) CHECK(enumerate_mult_by_order(ctx, d).size() == phi_int(d));
  }
}
