#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "charsum/sums.hpp"
#include "charsum/workspace.hpp"

namespace charsum {

enum class CheckId {
  MultSums,
  AdditiveSums,
  ComposedSums,
  NormalMu,
  Multiplicativity,
  PrimePower,
  EtaIndicator,
  ZetaIndicator,
  PhiGeometric,
  PhiHg,
  AbsoluteSums,
  Orthogonality,
  PhiMuIdentities,
};

std::string_view check_name(CheckId id) noexcept;
/// Throws ParseError for unknown names.
CheckId parse_check(std::string_view name);
const std::vector<CheckId>& all_checks();

struct Cell {
  std::uint32_t p = 2;
  unsigned e = 1;
  unsigned m = 1;
  auto operator<=>(const Cell&) const = default;
};

std::uint64_t cell_size(const Cell& c);

struct SweepConfig {
  std::vector<Cell> cells;
  std::vector<CheckId> checks;
  std::uint64_t limit = kDefaultLimit;
  std::uint64_t quadratic_limit = kDefaultQuadraticLimit;
  /// Per-check size caps; a (check, cell) pair above its cap is not run.
  std::map<CheckId, std::uint64_t> check_limits;
  unsigned workers = 1;
  std::string out;
  std::string census_out;

  std::uint64_t cap_for(CheckId id) const;
};

/// Every cell with p in primes, e in degrees and q^m <= max_size, sorted.
std::vector<Cell> cell_range(const std::vector<std::uint32_t>& primes,
                             const std::vector<unsigned>& degrees, std::uint64_t max_size);

/// Reads a config object:
///   {"cells": [[p, e, m], ...] | "range": {"p": [...], "e": [...], "max_size": N},
///    "checks": ["thm32", ...] | "all", "limit": N, "quadratic_limit": N,
///    "check_limits": {"thm43": N}, "workers": N, "out": PATH, "census_out": PATH}
/// Throws ParseError, NotPrime, OutOfRange or SizeExceeded.
SweepConfig parse_config(const nlohmann::json& j);
/// Reorders cells and checks, drops duplicates and validates every cell
/// against the caps.
void normalize_config(SweepConfig& config);

struct Counterexample {
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string oracle;
  std::string formula;
};

struct CheckReport {
  CheckId check = CheckId::AdditiveSums;
  Cell cell;
  std::uint64_t cases_run = 0;
  std::uint64_t cases_passed = 0;
  std::uint64_t non_integer_sums = 0;
  std::optional<Counterexample> counterexample;
  double wall_ms = 0;

  bool passed() const noexcept { return cases_passed == cases_run; }
};

/// Lazily built per-cell data shared by the checks of one cell.
class CellData {
 public:
  explicit CellData(const Cell& cell, std::uint64_t limit);

  const Cell& cell() const noexcept { return cell_; }
  const Workspace& workspace() const noexcept { return ws_; }
  const OracleTable& oracle_table() const;
  const MultOracle& mult_oracle() const;

 private:
  Cell cell_;
  Workspace ws_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<OracleTable> table_;
  mutable std::once_flag mult_once_;
  mutable std::unique_ptr<MultOracle> mult_;
};

CheckReport run_check(CheckId id, const CellData& data, const SweepConfig& config);
/// All selected (check, cell) pairs within their caps, on config.workers
/// threads, ordered by cell then check.
std::vector<CheckReport> run_sweep(const SweepConfig& config);

nlohmann::json report_json(const CheckReport& r, bool with_timing = true);
/// Pretty-printed JSON array with a trailing newline.
std::string reports_text(const std::vector<CheckReport>& reports, bool with_timing = true);

struct CensusRow {
  std::string k;
  std::uint64_t count_by_gcd = 0;
  std::uint64_t count_by_zeta = 0;
  bool agree() const noexcept { return count_by_gcd == count_by_zeta; }
};

/// Rows k = 0..m (gcd classification against zeta), then a "normal" row:
/// the k = 0 count against phi(x^m - 1).
std::vector<CensusRow> census(const Workspace& ws, const OracleTable* table = nullptr);
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace charsum
