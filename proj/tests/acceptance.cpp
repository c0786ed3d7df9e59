#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "charsum/cyclotomic.hpp"
#include "charsum/intarith.hpp"
#include "charsum/verify.hpp"

using namespace charsum;

namespace {

struct Tally {
  std::uint64_t cells = 0;
  std::uint64_t reports = 0;
  std::uint64_t run = 0;
  std::uint64_t passed = 0;
  std::uint64_t non_integer = 0;
  std::string first_failure;
};

std::uint64_t g_non_integer_total = 0;

SweepConfig config_for(std::vector<CheckId> checks, std::uint64_t max_size) {
  SweepConfig cfg;
  cfg.cells = cell_range({2, 3, 5, 7}, {1, 2}, max_size);
  cfg.checks = std::move(checks);
  for (CheckId id : cfg.checks) cfg.check_limits[id] = max_size;
  cfg.quadratic_limit = std::max<std::uint64_t>(cfg.quadratic_limit, max_size);
  normalize_config(cfg);
  return cfg;
}

Tally sweep(std::vector<CheckId> checks, std::uint64_t max_size) {
  const SweepConfig cfg = config_for(std::move(checks), max_size);
  Tally t;
  t.cells = cfg.cells.size();
  for (const auto& r : run_sweep(cfg)) {
    ++t.reports;
    t.run += r.cases_run;
    t.passed += r.cases_passed;
    t.non_integer += r.non_integer_sums;
    if (!r.passed() && t.first_failure.empty())
      t.first_failure = std::string(check_name(r.check)) + " at (" + std::to_string(r.cell.p) + "," +
                        std::to_string(r.cell.e) + "," + std::to_string(r.cell.m) + ")";
  }
  g_non_integer_total += t.non_integer;
  return t;
}

int g_failures = 0;

void line(int number, bool ok, const std::string& what, const std::string& detail, double seconds) {
  std::printf("criterion %2d: %s  %s  [%s, %.2f s]\n", number, ok ? "PASS" : "FAIL", what.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string describe(const Tally& t) {
  std::string s = std::to_string(t.cells) + " cells, " + std::to_string(t.passed) + "/" +
                  std::to_string(t.run) + " cases, " + std::to_string(t.non_integer) + " non-integer sums";
  if (!t.first_failure.empty()) s += ", first failure " + t.first_failure;
  return s;
}

bool clean(const Tally& t) { return t.run > 0 && t.run == t.passed && t.non_integer == 0; }

template <class Fn>
double timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion_sweep(int number, const std::string& what, std::vector<CheckId> checks,
                     std::uint64_t max_size, double budget_seconds) {
  Tally t;
  const double s = timed([&] { t = sweep(std::move(checks), max_size); });
  const bool in_time = s <= budget_seconds;
  line(number, clean(t) && in_time, what, describe(t) + (in_time ? "" : ", over time budget"), s);
}

}  // namespace

int main() {
  criterion_sweep(1, "additive sums by F_q-Order against mu(d)phi(g)/phi(d), q^m <= 4096",
                  {CheckId::AdditiveSums}, 4096, 120);
  criterion_sweep(2, "multiplicative sums of order d against Ramanujan sums, q^m <= 4096",
                  {CheckId::MultSums}, 4096, 120);
  criterion_sweep(3, "composed sums f o alpha and the mu value at f = 1, q^m <= 512",
                  {CheckId::ComposedSums, CheckId::NormalMu}, 512, 600);
  criterion_sweep(4, "product law and prime-power formula, q^m <= 1024",
                  {CheckId::Multiplicativity, CheckId::PrimePower}, 1024, 600);
  criterion_sweep(5, "eta in both sum modes equals the F_q-Order indicator, q^m <= 2048",
                  {CheckId::EtaIndicator}, 2048, 600);
  criterion_sweep(6, "zeta equals the k-normality indicator, census and normal count, q^m <= 4096",
                  {CheckId::ZetaIndicator}, 4096, 600);
  criterion_sweep(7, "phi geometric sums and the phi(hg) identity, q^m <= 4096",
                  {CheckId::PhiGeometric, CheckId::PhiHg}, 4096, 600);
  criterion_sweep(8, "sum of |composed sums| against q^(m-deg g) phi(g) W(g), q^m <= 512",
                  {CheckId::AbsoluteSums}, 512, 180);

  {
    Tally t;
    std::uint64_t cyc_run = 0, cyc_passed = 0;
    const double s = timed([&] {
      t = sweep({CheckId::Orthogonality, CheckId::PhiMuIdentities}, 4096);
      for (std::uint32_t n = 1; n <= 200; ++n) {
        std::vector<std::int64_t> counts(n, 0);
        for (std::uint32_t k = 0; k < n; ++k) counts[k] = std::gcd(k, n) == 1;
        const auto v = CycInt::from_exponent_counts(CyclotomicRing::get(n), counts).as_integer();
        ++cyc_run;
        cyc_passed += v && *v == mu_int(n);
      }
    });
    const bool ok = clean(t) && cyc_run == cyc_passed && g_non_integer_total == 0;
    line(9, ok, "orthogonality, character counts, phi/mu divisor sums, primitive root sums, integrality",
         describe(t) + ", roots of unity n <= 200: " + std::to_string(cyc_passed) + "/" +
             std::to_string(cyc_run) + ", non-integer sums over all sweeps: " +
             std::to_string(g_non_integer_total),
         s);
  }

  {
    bool ok = false;
    std::string detail;
    const double s = timed([&] {
      SweepConfig cfg = config_for(all_checks(), 1024);
      cfg.workers = 1;
      const std::string serial_a = reports_text(run_sweep(cfg), false);
      const std::string serial_b = reports_text(run_sweep(cfg), false);
      cfg.workers = 4;
      const std::string parallel = reports_text(run_sweep(cfg), false);
      ok = serial_a == serial_b && serial_a == parallel && serial_a.size() > 2;
      detail = "serial repeat " + std::string(serial_a == serial_b ? "identical" : "differs") +
               ", 4 workers " + (serial_a == parallel ? "identical" : "differs") + ", " +
               std::to_string(serial_a.size()) + " bytes";
    });
    line(10, ok, "reports byte-identical across runs and worker counts", detail, s);
  }

  std::printf("%s: %d criteria failed\n", g_failures ? "FAILED" : "ALL PASSED", g_failures);
  return g_failures ? 1 : 0;
}
