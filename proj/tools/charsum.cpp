#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "charsum/characters.hpp"
#include "charsum/error.hpp"
#include "charsum/linearized.hpp"
#include "charsum/poly.hpp"
#include "charsum/sums.hpp"
#include "charsum/verify.hpp"

using namespace charsum;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CellArgs {
  std::uint32_t p = 2;
  unsigned e = 1;
  unsigned m = 1;
  std::uint64_t limit = kDefaultLimit;
};

void add_cell_args(CLI::App* cmd, CellArgs& args) {
  cmd->add_option("p", args.p, "characteristic")->required();
  cmd->add_option("e", args.e, "degree of F_q over F_p")->required();
  cmd->add_option("m", args.m, "degree of F_{q^m} over F_q")->required();
  cmd->add_option("--limit", args.limit, "largest q^m accepted");
}

Elem parse_element(const FieldCtx& ctx, std::uint64_t index) {
  if (index >= ctx.size())
    raise(ErrorKind::OutOfRange, "element index " + std::to_string(index) + " outside [0, " +
                                     std::to_string(ctx.size()) + ")");
  return Elem{static_cast<std::uint32_t>(index)};
}

std::string element_text(const FieldCtx& ctx, Elem a) {
  return format_poly(ctx.base(), poly::normalized(ctx.top().coordinates(a)));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

struct VerifyArgs {
  std::string config;
  std::string out;
  std::string census_out;
  unsigned workers = 0;
  std::uint64_t limit = 0;
  std::uint64_t quadratic_limit = 0;
  std::vector<std::string> checks;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& args) {
  nlohmann::json j = nlohmann::json::object();
  if (!args.config.empty()) {
    std::ifstream in(args.config);
    if (!in) raise(ErrorKind::ParseError, "cannot read " + args.config);
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorKind::ParseError, args.config + ": " + e.what());
    }
  }
  if (!j.is_object()) raise(ErrorKind::ParseError, "config must be a JSON object");
  if (!j.contains("cells") && !j.contains("range"))
    j["range"] = {{"max_size", args.limit ? std::min<std::uint64_t>(args.limit, kDefaultQuadraticLimit)
                                          : kDefaultQuadraticLimit}};
  if (args.limit) j["limit"] = args.limit;
  if (args.quadratic_limit) j["quadratic_limit"] = args.quadratic_limit;
  if (args.workers) j["workers"] = args.workers;
  if (!args.out.empty()) j["out"] = args.out;
  if (!args.census_out.empty()) j["census_out"] = args.census_out;
  if (!args.checks.empty()) j["checks"] = args.checks;
  const SweepConfig cfg = parse_config(j);

  const auto reports = run_sweep(cfg);
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed() && r.non_integer_sums == 0;
    std::cerr << (r.passed() ? "PASS " : "FAIL ") << check_name(r.check) << " (" << r.cell.p << ','
              << r.cell.e << ',' << r.cell.m << ") " << r.cases_passed << '/' << r.cases_run << '\n';
  }
  write_text(cfg.out, reports_text(reports, !args.no_timing));

  if (!cfg.census_out.empty()) {
    std::string csv;
    for (const Cell& c : cfg.cells) {
      const Workspace ws(build_field(c.p, c.e, c.m, cfg.limit));
      const OracleTable table(ws);
      std::istringstream rows(census_csv(census(ws, &table)));
      std::string line;
      std::getline(rows, line);
      if (csv.empty()) csv = "p,e,m," + line + "\n";
      while (std::getline(rows, line))
        csv += std::to_string(c.p) + "," + std::to_string(c.e) + "," + std::to_string(c.m) + "," + line + "\n";
    }
    write_text(cfg.census_out, csv);
  }
  return ok ? kExitPass : kExitFailure;
}

int cmd_census(const CellArgs& cell, const std::string& out) {
  const Workspace ws(build_field(cell.p, cell.e, cell.m, cell.limit));
  const OracleTable table(ws);
  const auto rows = census(ws, &table);
  write_text(out, census_csv(rows));
  for (const auto& r : rows)
    if (!r.agree()) return kExitFailure;
  return kExitPass;
}

struct SumArgs {
  CellArgs cell;
  std::string kind;
  std::string g = "1";
  std::string f = "1";
  std::int64_t alpha = -1;
  std::uint64_t d = 1;
  std::uint64_t r = 0;
};

int report_pair(std::int64_t oracle, std::int64_t formula) {
  std::cout << "oracle: " << oracle << "\nformula: " << formula
            << "\nagree: " << (oracle == formula ? "true" : "false") << '\n';
  return oracle == formula ? kExitPass : kExitFailure;
}

int cmd_sum(const SumArgs& args) {
  const CellArgs& c = args.cell;
  if (args.kind == "multiplicative") {
    const FieldCtx ctx = build_field(c.p, c.e, c.m, c.limit);
    std::cout << "d: " << args.d << "\nr: " << args.r << '\n';
    return report_pair(MultOracle(ctx).sum(args.d, args.r), mult_sum_formula(args.d, args.r));
  }
  const Workspace ws(build_field(c.p, c.e, c.m, c.limit));
  const FieldCtx& ctx = ws.field();
  const Poly g = parse_poly(ctx.base(), args.g);
  const Elem alpha = args.alpha < 0 ? ws.normal() : parse_element(ctx, static_cast<std::uint64_t>(args.alpha));
  std::cout << "g: " << format_poly(ctx.base(), g) << "\nalpha: " << alpha.index << " = "
            << element_text(ctx, alpha) << '\n';
  if (args.kind == "additive") {
    const std::size_t gi = ws.lattice().require(g);
    return report_pair(additive_sum_oracle(ws, gi, alpha),
                       additive_sum_formula(ws, gi, ws.element_order(alpha)));
  }
  const Poly f = parse_poly(ctx.base(), args.f);
  std::cout << "f: " << format_poly(ctx.base(), f) << '\n';
  const auto r = additive_composed_sum(ws, g, f, alpha);
  return report_pair(r.oracle, r.formula);
}

int cmd_order(const CellArgs& c, std::uint64_t index) {
  const Workspace ws(build_field(c.p, c.e, c.m, c.limit));
  const FieldCtx& ctx = ws.field();
  const Elem a = parse_element(ctx, index);
  std::cout << "alpha: " << a.index << " = " << element_text(ctx, a) << '\n'
            << "order: " << format_poly(ctx.base(), ws.lattice()[ws.element_order(a)].poly) << '\n'
            << "k: " << k_normality(ctx, a) << '\n'
            << "g_alpha: " << format_poly(ctx.top(), g_alpha(ctx, a)) << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of character sum identities over finite fields"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("--config", verify_args.config, "JSON sweep configuration");
  verify->add_option("--out", verify_args.out, "report path (default stdout)");
  verify->add_option("--census-out", verify_args.census_out, "census CSV for every cell");
  verify->add_option("--workers", verify_args.workers, "worker threads");
  verify->add_option("--limit", verify_args.limit, "largest q^m for full sweeps");
  verify->add_option("--quadratic-limit", verify_args.quadratic_limit, "largest q^m for quadratic checks");
  verify->add_option("--checks", verify_args.checks, "checks to run")->delimiter(',');
  verify->add_flag("--no-timing", verify_args.no_timing, "omit wall_ms from the report");

  CellArgs census_cell;
  std::string census_out;
  auto* census_cmd = app.add_subcommand("census", "k-normal census of one field");
  add_cell_args(census_cmd, census_cell);
  census_cmd->add_option("--out", census_out, "CSV path (default stdout)");

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "one character sum, oracle against formula");
  add_cell_args(sum, sum_args.cell);
  sum->add_option("--kind", sum_args.kind, "additive, multiplicative or composed")
      ->required()
      ->check(CLI::IsMember({"additive", "multiplicative", "composed"}));
  sum->add_option("--g", sum_args.g, "divisor of x^m - 1");
  sum->add_option("--f", sum_args.f, "polynomial applied to alpha (composed)");
  sum->add_option("--alpha", sum_args.alpha, "element index (default: first normal element)");
  sum->add_option("--d", sum_args.d, "character order (multiplicative)");
  sum->add_option("--r", sum_args.r, "exponent of the primitive element (multiplicative)");

  CellArgs order_cell;
  std::uint64_t order_alpha = 0;
  auto* order = app.add_subcommand("order", "F_q-Order, k-normality and g_alpha of an element");
  add_cell_args(order, order_cell);
  order->add_option("--alpha", order_alpha, "element index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_args);
    if (*census_cmd) return cmd_census(census_cell, census_out);
    if (*sum) return cmd_sum(sum_args);
    if (*order) return cmd_order(order_cell, order_alpha);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InternalInconsistency ? kExitFailure : kExitUsage;
  }
  return kExitUsage;
}
