#include "charsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "charsum/characters.hpp"
#include "charsum/charfun.hpp"
#include "charsum/error.hpp"
#include "charsum/intarith.hpp"
#include "charsum/linearized.hpp"
#include "charsum/poly.hpp"

namespace charsum {
namespace {

constexpr std::pair<CheckId, std::string_view> kNames[] = {
    {CheckId::MultSums, "thm31"},
    {CheckId::AdditiveSums, "thm32"},
    {CheckId::ComposedSums, "cor33"},
    {CheckId::NormalMu, "rem34"},
    {CheckId::Multiplicativity, "lem23"},
    {CheckId::PrimePower, "lem24"},
    {CheckId::EtaIndicator, "thm43"},
    {CheckId::ZetaIndicator, "thm44"},
    {CheckId::PhiGeometric, "lem41"},
    {CheckId::PhiHg, "lem42"},
    {CheckId::AbsoluteSums, "prop46"},
    {CheckId::Orthogonality, "orthogonality"},
    {CheckId::PhiMuIdentities, "phi-mu-identities"},
};

using Params = std::vector<std::pair<std::string, std::string>>;

struct Outcome {
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
};

class Tally {
 public:
  template <class Eval, class Describe>
  void check(Eval&& eval, Describe&& describe) {
    ++run_;
    try {
      const Outcome o = eval();
      if (o.oracle == o.formula) {
        ++passed_;
        return;
      }
      fail(describe, std::to_string(o.oracle), std::to_string(o.formula));
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::NonIntegerSum) ++non_integer_;
      fail(describe, std::string(to_string(err.kind())) + ": " + err.what(), "");
    }
  }

  void fill(CheckReport& r) {
    r.cases_run = run_;
    r.cases_passed = passed_;
    r.non_integer_sums = non_integer_;
    r.counterexample = std::move(first_);
  }

 private:
  template <class Describe>
  void fail(Describe& describe, std::string oracle, std::string formula) {
    if (!first_) first_ = Counterexample{describe(), std::move(oracle), std::move(formula)};
  }

  std::uint64_t run_ = 0;
  std::uint64_t passed_ = 0;
  std::uint64_t non_integer_ = 0;
  std::optional<Counterexample> first_;
};

std::string elem_text(Elem a) { return std::to_string(a.index); }

void check_mult_sums(const CellData& data, Tally& t) {
  const MultOracle& mult = data.mult_oracle();
  const std::uint64_t n = mult.group_order();
  for (const std::uint64_t d : mult.orders())
    for (std::uint64_t r = 0; r < n; ++r)
      t.check([&] { return Outcome{mult.sum(d, r), mult_sum_formula(d, r)}; },
              [&] { return Params{{"d", std::to_string(d)}, {"r", std::to_string(r)}}; });
}

void check_additive_sums(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  const GaloisField& Fq = ws.field().base();
  for (std::size_t g = 0; g < L.size(); ++g)
    for (std::uint32_t a = 0; a < ws.field().size(); ++a)
      t.check(
          [&] {
            return Outcome{additive_sum_oracle(ws, g, Elem{a}),
                           additive_sum_formula(ws, g, ws.element_order(Elem{a}))};
          },
          [&] {
            return Params{{"g", format_poly(Fq, L[g].poly)},
                          {"alpha", elem_text(Elem{a})},
                          {"order", format_poly(Fq, L[ws.element_order(Elem{a})].poly)}};
          });
}

std::int64_t table_value(const OracleTable& table, std::size_t g, Elem a) {
  if (auto v = table.at(g, a)) return *v;
  raise(ErrorKind::NonIntegerSum, "character sum is not a rational integer");
}

void check_composed_sums(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  const FieldCtx& ctx = ws.field();
  const OracleTable& table = data.oracle_table();
  const auto conj = conjugates(ctx, ws.normal());
  for (std::size_t g = 0; g < L.size(); ++g)
    for (std::uint64_t idx = 0; idx < ctx.size(); ++idx) {
      const Poly f = poly::from_index(ctx.base(), idx);
      t.check(
          [&] {
            return Outcome{table_value(table, g, apply_linearized(ctx, f, conj)),
                           composed_sum_formula(ws, g, f)};
          },
          [&] {
            return Params{{"g", format_poly(ctx.base(), L[g].poly)},
                          {"f", format_poly(ctx.base(), f)},
                          {"alpha", elem_text(ws.normal())}};
          });
    }
}

void check_normal_mu(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  const OracleTable& table = data.oracle_table();
  for (std::uint32_t a = 0; a < ws.field().size(); ++a) {
    if (ws.element_order(Elem{a}) != L.full()) continue;
    for (std::size_t g = 0; g < L.size(); ++g)
      t.check([&] { return Outcome{table_value(table, g, Elem{a}), L[g].mu}; },
              [&] {
                return Params{{"g", format_poly(ws.field().base(), L[g].poly)},
                              {"alpha", elem_text(Elem{a})}};
              });
  }
}

void check_multiplicativity(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  const OracleTable& table = data.oracle_table();
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < L.size(); ++j) {
      if (L.gcd(i, j) != L.one()) continue;
      const auto prod = L.product(i, j);
      if (!prod) continue;
      for (std::uint32_t a = 0; a < ws.field().size(); ++a)
        t.check(
            [&] {
              return Outcome{table_value(table, *prod, Elem{a}),
                             table_value(table, i, Elem{a}) * table_value(table, j, Elem{a})};
            },
            [&] {
              return Params{{"a1", format_poly(ws.field().base(), L[i].poly)},
                            {"a2", format_poly(ws.field().base(), L[j].poly)},
                            {"alpha", elem_text(Elem{a})}};
            });
    }
}

void check_prime_power(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  const OracleTable& table = data.oracle_table();
  const auto& factors = L.factorization().factors;
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (unsigned e = 1; e <= L.multiplicity(); ++e) {
      std::vector<unsigned> exps(factors.size(), 0);
      exps[k] = e;
      const std::size_t ue = L.from_exponents(exps);
      for (std::uint32_t a = 0; a < ws.field().size(); ++a)
        t.check(
            [&] {
              return Outcome{table_value(table, ue, Elem{a}),
                             prime_power_value(ws, k, e, ws.element_order(Elem{a}))};
            },
            [&] {
              return Params{{"u", format_poly(ws.field().base(), factors[k].first)},
                            {"e", std::to_string(e)},
                            {"alpha", elem_text(Elem{a})}};
            });
    }
}

std::int64_t eta_value(const EtaEvaluation& ev) { return ev.value.numerator(); }

void check_eta(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  const OracleTable& table = data.oracle_table();
  for (std::uint32_t a = 0; a < ws.field().size(); ++a) {
    const Elem alpha{a};
    std::int64_t total = 0;
    for (std::size_t f = 0; f < L.size(); ++f) {
      const std::int64_t indicator = ws.element_order(alpha) == f ? 1 : 0;
      auto describe = [&](const char* mode) {
        return [&, mode] {
          return Params{{"f", format_poly(ws.field().base(), L[f].poly)},
                        {"alpha", elem_text(alpha)},
                        {"mode", mode}};
        };
      };
      t.check(
          [&] {
            const std::int64_t v = eta_value(evaluate_eta(ws, f, alpha, SumMode::Oracle, &table));
            total += v;
            return Outcome{v, indicator};
          },
          describe("oracle"));
      t.check([&] { return Outcome{eta_value(evaluate_eta(ws, f, alpha, SumMode::Formula)), indicator}; },
              describe("formula"));
    }
    t.check([&] { return Outcome{total, 1}; },
            [&] { return Params{{"alpha", elem_text(alpha)}, {"sum_over_f", "eta"}}; });
  }
}

struct Classification {
  std::vector<unsigned> k_by_gcd;
  std::vector<std::vector<int>> zeta;  // [alpha][k]
};

Classification classify(const Workspace& ws, const OracleTable* table) {
  const FieldCtx& ctx = ws.field();
  Classification c;
  c.k_by_gcd.resize(ctx.size());
  c.zeta.assign(ctx.size(), std::vector<int>(ctx.m() + 1, 0));
  for (std::uint32_t a = 0; a < ctx.size(); ++a) {
    c.k_by_gcd[a] = k_normality(ctx, Elem{a});
    for (unsigned k = 0; k <= ctx.m(); ++k) c.zeta[a][k] = zeta(ws, k, Elem{a}, SumMode::Oracle, table);
  }
  return c;
}

std::vector<CensusRow> census_rows(const Workspace& ws, const Classification& c) {
  const unsigned m = ws.field().m();
  std::vector<CensusRow> rows(m + 1);
  for (unsigned k = 0; k <= m; ++k) rows[k].k = std::to_string(k);
  for (std::size_t a = 0; a < c.k_by_gcd.size(); ++a) {
    ++rows[c.k_by_gcd[a]].count_by_gcd;
    for (unsigned k = 0; k <= m; ++k) rows[k].count_by_zeta += static_cast<std::uint64_t>(c.zeta[a][k]);
  }
  const DivisorLattice& L = ws.lattice();
  rows.push_back({"normal", rows[0].count_by_gcd, L[L.full()].phi});
  return rows;
}

void check_zeta(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const unsigned m = ws.field().m();
  Classification c;
  try {
    c = classify(ws, &data.oracle_table());
  } catch (const Error&) {
    // Re-run case by case so the failure is attributed.
    for (std::uint32_t a = 0; a < ws.field().size(); ++a)
      for (unsigned k = 0; k <= m; ++k)
        t.check([&] { return Outcome{zeta(ws, k, Elem{a}, SumMode::Oracle, &data.oracle_table()), 0}; },
                [&] { return Params{{"k", std::to_string(k)}, {"alpha", elem_text(Elem{a})}}; });
    return;
  }
  for (std::uint32_t a = 0; a < ws.field().size(); ++a)
    for (unsigned k = 0; k <= m; ++k)
      t.check([&] { return Outcome{c.zeta[a][k], c.k_by_gcd[a] == k ? 1 : 0}; },
              [&] { return Params{{"k", std::to_string(k)}, {"alpha", elem_text(Elem{a})}}; });
  for (const CensusRow& row : census_rows(ws, c))
    t.check(
        [&] {
          return Outcome{static_cast<std::int64_t>(row.count_by_zeta),
                         static_cast<std::int64_t>(row.count_by_gcd)};
        },
        [&] { return Params{{"census_row", row.k}}; });
}

void check_phi_geometric(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  for (const auto& [u, mult] : L.factorization().factors)
    for (unsigned l = 0; l <= L.multiplicity(); ++l)
      t.check(
          [&] {
            const auto s = phi_geometric_sum(ws.field().base(), u, l);
            return Outcome{s.lhs, s.rhs};
          },
          [&] { return Params{{"u", format_poly(ws.field().base(), u)}, {"l", std::to_string(l)}}; });
}

void check_phi_hg(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  for (std::size_t f = 0; f < L.size(); ++f)
    for (const std::size_t h : L.square_free_divisors_of(f))
      t.check(
          [&] {
            const auto s = phi_hg_sum(ws, f, h);
            return Outcome{s.lhs, s.rhs};
          },
          [&] {
            return Params{{"f", format_poly(ws.field().base(), L[f].poly)},
                          {"h", format_poly(ws.field().base(), L[h].poly)}};
          });
}

void check_abs_sums(const CellData& data, const SweepConfig& config, Tally& t) {
  const Workspace& ws = data.workspace();
  const DivisorLattice& L = ws.lattice();
  for (std::size_t g = 0; g < L.size(); ++g)
    t.check(
        [&] {
          const auto s = abs_sum_identity(ws, L[g].poly, ws.normal(),
                                          std::max(config.quadratic_limit, config.cap_for(CheckId::AbsoluteSums)));
          return Outcome{s.lhs, s.rhs};
        },
        [&] {
          return Params{{"g", format_poly(ws.field().base(), L[g].poly)},
                        {"alpha", elem_text(ws.normal())}};
        });
}

void check_orthogonality(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const FieldCtx& ctx = ws.field();
  for (std::uint32_t g = 0; g < ctx.size(); ++g)
    t.check(
        [&] {
          const auto v = additive_character_total(ctx, Elem{g}).as_integer();
          if (!v) raise(ErrorKind::NonIntegerSum, "character total is not a rational integer");
          return Outcome{*v, g == 0 ? static_cast<std::int64_t>(ctx.size()) : 0};
        },
        [&] { return Params{{"gamma", elem_text(Elem{g})}}; });
  const DivisorLattice& L = ws.lattice();
  for (std::size_t g = 0; g < L.size(); ++g)
    t.check(
        [&] {
          return Outcome{static_cast<std::int64_t>(ws.characters_of_order(g).size()),
                         static_cast<std::int64_t>(L[g].phi)};
        },
        [&] { return Params{{"characters_of_order", format_poly(ctx.base(), L[g].poly)}}; });
}

void check_phi_mu(const CellData& data, Tally& t) {
  const Workspace& ws = data.workspace();
  const FieldCtx& ctx = ws.field();
  const DivisorLattice& L = ws.lattice();
  for (std::size_t f = 0; f < L.size(); ++f) {
    const std::string name = format_poly(ctx.base(), L[f].poly);
    t.check(
        [&] {
          std::uint64_t sum = 0;
          for (const std::size_t d : L.divisors_of(f)) sum += L[d].phi;
          return Outcome{static_cast<std::int64_t>(sum),
                         static_cast<std::int64_t>(checked_pow(ctx.q(), static_cast<unsigned>(L[f].degree)))};
        },
        [&] { return Params{{"f", name}, {"identity", "sum phi(d) = q^deg f"}}; });
    t.check(
        [&] {
          std::int64_t sum = 0;
          for (const std::size_t d : L.divisors_of(f)) sum += L[d].mu;
          return Outcome{sum, f == L.one() ? 1 : 0};
        },
        [&] { return Params{{"f", name}, {"identity", "sum mu(d) = [f = 1]"}}; });
    if (checked_pow(ctx.q(), static_cast<unsigned>(L[f].degree)) <= kDefaultLimit)
      t.check(
          [&] {
            return Outcome{static_cast<std::int64_t>(L[f].phi),
                           static_cast<std::int64_t>(coprime_count(ctx.base(), L[f].poly))};
          },
          [&] { return Params{{"f", name}, {"identity", "phi(f) = coprime count"}}; });
  }
}

template <class Task>
void run_pool(std::size_t count, unsigned workers, Task&& task) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> threads;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  for (unsigned w = 0; w < n; ++w)
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : threads) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace

std::string_view check_name(CheckId id) noexcept {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

CheckId parse_check(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  raise(ErrorKind::ParseError, "unknown check '" + std::string(name) + "'");
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

std::uint64_t cell_size(const Cell& c) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < c.e * c.m; ++i) {
    if (__builtin_mul_overflow(size, std::uint64_t{c.p}, &size))
      return UINT64_MAX;
  }
  return size;
}

std::uint64_t SweepConfig::cap_for(CheckId id) const {
  if (auto it = check_limits.find(id); it != check_limits.end()) return std::min(it->second, limit);
  switch (id) {
    case CheckId::ComposedSums:
    case CheckId::NormalMu:
    case CheckId::AbsoluteSums:
      return std::min(quadratic_limit, limit);
    case CheckId::Multiplicativity:
    case CheckId::PrimePower:
      return std::min<std::uint64_t>(1024, limit);
    case CheckId::EtaIndicator:
      return std::min<std::uint64_t>(2048, limit);
    default:
      return limit;
  }
}

std::vector<Cell> cell_range(const std::vector<std::uint32_t>& primes,
                             const std::vector<unsigned>& degrees, std::uint64_t max_size) {
  std::vector<Cell> cells;
  for (const std::uint32_t p : primes) {
    if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    for (const unsigned e : degrees) {
      if (e == 0) raise(ErrorKind::OutOfRange, "extension degrees must be positive");
      for (unsigned m = 1;; ++m) {
        const Cell c{p, e, m};
        if (cell_size(c) > max_size) break;
        cells.push_back(c);
      }
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

namespace {

template <class T>
T get_number(const nlohmann::json& j, const char* key) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    raise(ErrorKind::ParseError, std::string("'") + key + "' must be a non-negative integer");
  return j.get<T>();
}

}  // namespace

SweepConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) raise(ErrorKind::ParseError, "config must be a JSON object");
  SweepConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "limit") {
      cfg.limit = get_number<std::uint64_t>(value, "limit");
    } else if (key == "quadratic_limit") {
      cfg.quadratic_limit = get_number<std::uint64_t>(value, "quadratic_limit");
    } else if (key == "workers") {
      cfg.workers = get_number<unsigned>(value, "workers");
    } else if (key == "out" || key == "census_out") {
      if (!value.is_string()) raise(ErrorKind::ParseError, "'" + key + "' must be a string");
      (key == "out" ? cfg.out : cfg.census_out) = value.get<std::string>();
    } else if (key == "checks") {
      if (value.is_string() && value.get<std::string>() == "all") {
        cfg.checks = all_checks();
      } else if (value.is_array()) {
        for (const auto& c : value) {
          if (!c.is_string()) raise(ErrorKind::ParseError, "check names must be strings");
          cfg.checks.push_back(parse_check(c.get<std::string>()));
        }
      } else {
        raise(ErrorKind::ParseError, "'checks' must be \"all\" or an array of names");
      }
    } else if (key == "check_limits") {
      if (!value.is_object()) raise(ErrorKind::ParseError, "'check_limits' must be an object");
      for (const auto& [name, cap] : value.items())
        cfg.check_limits[parse_check(name)] = get_number<std::uint64_t>(cap, "check_limits");
    } else if (key == "cells") {
      if (!value.is_array()) raise(ErrorKind::ParseError, "'cells' must be an array");
      for (const auto& c : value) {
        Cell cell;
        if (c.is_array() && c.size() == 3) {
          cell = {get_number<std::uint32_t>(c[0], "p"), get_number<unsigned>(c[1], "e"),
                  get_number<unsigned>(c[2], "m")};
        } else if (c.is_object() && c.contains("p") && c.contains("e") && c.contains("m")) {
          cell = {get_number<std::uint32_t>(c["p"], "p"), get_number<unsigned>(c["e"], "e"),
                  get_number<unsigned>(c["m"], "m")};
        } else {
          raise(ErrorKind::ParseError, "a cell is [p, e, m] or {\"p\":..,\"e\":..,\"m\":..}");
        }
        cfg.cells.push_back(cell);
      }
    } else if (key == "range") {
      if (!value.is_object() || !value.contains("max_size"))
        raise(ErrorKind::ParseError, "'range' needs p, e and max_size");
      std::vector<std::uint32_t> primes{2, 3, 5, 7};
      std::vector<unsigned> degrees{1, 2};
      if (value.contains("p")) {
        primes.clear();
        for (const auto& p : value["p"]) primes.push_back(get_number<std::uint32_t>(p, "p"));
      }
      if (value.contains("e")) {
        degrees.clear();
        for (const auto& e : value["e"]) degrees.push_back(get_number<unsigned>(e, "e"));
      }
      const auto cells = cell_range(primes, degrees, get_number<std::uint64_t>(value["max_size"], "max_size"));
      cfg.cells.insert(cfg.cells.end(), cells.begin(), cells.end());
    } else {
      raise(ErrorKind::ParseError, "unknown config key '" + key + "'");
    }
  }
  if (cfg.checks.empty() && !j.contains("checks")) cfg.checks = all_checks();
  normalize_config(cfg);
  return cfg;
}

void normalize_config(SweepConfig& cfg) {
  if (cfg.checks.empty()) raise(ErrorKind::ParseError, "no checks selected");
  if (cfg.cells.empty()) raise(ErrorKind::ParseError, "no cells selected");
  std::sort(cfg.checks.begin(), cfg.checks.end());
  cfg.checks.erase(std::unique(cfg.checks.begin(), cfg.checks.end()), cfg.checks.end());
  std::sort(cfg.cells.begin(), cfg.cells.end());
  cfg.cells.erase(std::unique(cfg.cells.begin(), cfg.cells.end()), cfg.cells.end());
  for (const Cell& c : cfg.cells) {
    if (!is_prime(c.p)) raise(ErrorKind::NotPrime, std::to_string(c.p) + " is not prime");
    if (c.e == 0 || c.m == 0) raise(ErrorKind::OutOfRange, "extension degrees must be positive");
    if (cell_size(c) > cfg.limit)
      raise(ErrorKind::SizeExceeded, "cell (" + std::to_string(c.p) + "," + std::to_string(c.e) +
                                         "," + std::to_string(c.m) + ") exceeds limit " +
                                         std::to_string(cfg.limit));
  }
}

CellData::CellData(const Cell& cell, std::uint64_t limit)
    : cell_(cell), ws_(build_field(cell.p, cell.e, cell.m, limit)) {}

const OracleTable& CellData::oracle_table() const {
  std::call_once(table_once_, [&] { table_ = std::make_unique<OracleTable>(ws_); });
  return *table_;
}

const MultOracle& CellData::mult_oracle() const {
  std::call_once(mult_once_, [&] { mult_ = std::make_unique<MultOracle>(ws_.field()); });
  return *mult_;
}

CheckReport run_check(CheckId id, const CellData& data, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  switch (id) {
    case CheckId::MultSums: check_mult_sums(data, t); break;
    case CheckId::AdditiveSums: check_additive_sums(data, t); break;
    case CheckId::ComposedSums: check_composed_sums(data, t); break;
    case CheckId::NormalMu: check_normal_mu(data, t); break;
    case CheckId::Multiplicativity: check_multiplicativity(data, t); break;
    case CheckId::PrimePower: check_prime_power(data, t); break;
    case CheckId::EtaIndicator: check_eta(data, t); break;
    case CheckId::ZetaIndicator: check_zeta(data, t); break;
    case CheckId::PhiGeometric: check_phi_geometric(data, t); break;
    case CheckId::PhiHg: check_phi_hg(data, t); break;
    case CheckId::AbsoluteSums: check_abs_sums(data, config, t); break;
    case CheckId::Orthogonality: check_orthogonality(data, t); break;
    case CheckId::PhiMuIdentities: check_phi_mu(data, t); break;
  }
  CheckReport r;
  r.check = id;
  r.cell = data.cell();
  t.fill(r);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_sweep(const SweepConfig& config) {
  std::vector<std::unique_ptr<CellData>> cells(config.cells.size());
  run_pool(cells.size(), config.workers,
           [&](std::size_t i) { cells[i] = std::make_unique<CellData>(config.cells[i], config.limit); });

  std::vector<std::pair<std::size_t, CheckId>> items;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (const CheckId id : config.checks)
      if (cell_size(config.cells[i]) <= config.cap_for(id)) items.emplace_back(i, id);

  std::vector<CheckReport> reports(items.size());
  run_pool(items.size(), config.workers, [&](std::size_t k) {
    reports[k] = run_check(items[k].second, *cells[items[k].first], config);
  });
  return reports;
}

nlohmann::json report_json(const CheckReport& r, bool with_timing) {
  nlohmann::json j;
  j["check"] = std::string(check_name(r.check));
  j["cell"] = {{"p", r.cell.p}, {"e", r.cell.e}, {"m", r.cell.m}, {"size", cell_size(r.cell)}};
  j["cases_run"] = r.cases_run;
  j["cases_passed"] = r.cases_passed;
  j["non_integer_sums"] = r.non_integer_sums;
  j["passed"] = r.passed();
  if (r.counterexample) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.counterexample->parameters) params[k] = v;
    j["counterexample"] = {{"parameters", params},
                           {"oracle", r.counterexample->oracle},
                           {"formula", r.counterexample->formula}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

std::string reports_text(const std::vector<CheckReport>& reports, bool with_timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, with_timing));
  return arr.dump(2) + "\n";
}

std::vector<CensusRow> census(const Workspace& ws, const OracleTable* table) {
  return census_rows(ws, classify(ws, table));
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "k,count_by_gcd,count_by_zeta,agree\n";
  for (const auto& r : rows)
    out << r.k << ',' << r.count_by_gcd << ',' << r.count_by_zeta << ',' << (r.agree() ? "true" : "false")
        << '\n';
  return out.str();
}

}  // namespace charsum
