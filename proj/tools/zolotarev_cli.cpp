// zolotarev_cli: construct, solve, verify and tabulate sextic proper Zolotarev polynomials.
//
// Exit codes: 0 ok, 2 domain or usage error, 3 convergence failure, 4 verification failed.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "zolotarev/errors.hpp"
#include "zolotarev/oracle.hpp"
#include "zolotarev/output.hpp"
#include "zolotarev/sextic.hpp"
#include "zolotarev/verify.hpp"
#include "zolotarev/zfp.hpp"

namespace {

namespace io = zolotarev::io;

constexpr int kOk = 0;
constexpr int kDomain = 2;
constexpr int kConvergence = 3;
constexpr int kVerifyFailed = 4;

void write(const io::OutputRecord& record, const std::string& format) {
  std::cout << (format == "csv" ? io::emit_csv(record) : io::emit_json(record));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sextic proper Zolotarev polynomials: closed-form construction and Zolotarev's first problem"};
  app.require_subcommand(1);

  std::string format = "json";
  const auto formats = CLI::IsMember({"json", "csv"});

  double t = 0;
  auto* eval_cmd = app.add_subcommand("eval", "Construct Z_{6,t} and its critical points");
  eval_cmd->add_option("--t", t, "Parameter t in I6 = ((5 - 3 sqrt 3)/2, 0)")->required();
  eval_cmd->add_option("--format", format, "Output format")->check(formats);

  double s = 0;
  double tol = 1e-12;
  auto* solve_cmd = app.add_subcommand("solve", "Monic least-deviation sextic with x^5 coefficient -6s");
  solve_cmd->add_option("--s", s, "Constraint s > tan^2(pi/12)")->required();
  solve_cmd->add_option("--tol", tol, "Relative tolerance on s(t*) - s");
  solve_cmd->add_option("--format", format, "Output format")->check(formats);

  int grid = 1001;
  auto* verify_cmd = app.add_subcommand("verify", "Residual checks of the defining identities at t");
  verify_cmd->add_option("--t", t, "Parameter t in I6")->required();
  verify_cmd->add_option("--grid", grid, "Grid size on [-1, beta]")->check(CLI::Range(101, 1 << 24));

  double t_min = 0, t_max = 0;
  int steps = 0;
  auto* table_cmd = app.add_subcommand("table", "Sweep t and tabulate s, L, L_inf, alpha, beta, gamma");
  table_cmd->add_option("--t-min", t_min, "First t")->required();
  table_cmd->add_option("--t-max", t_max, "Last t")->required();
  table_cmd->add_option("--steps", steps, "Number of rows (>= 2)")->required();
  table_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  table_cmd->callback([&] {
    if (!table_cmd->count("--format")) format = "csv";
  });

  int oracle_grid = 2049;
  auto* oracle_cmd = app.add_subcommand("oracle", "Discrete minimax reference next to the closed-form L");
  oracle_cmd->add_option("--s", s, "Constraint s > tan^2(pi/12)")->required();
  oracle_cmd->add_option("--grid", oracle_grid, "Chebyshev grid size")->check(CLI::Range(257, 1 << 24));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomain;
  }

  try {
    if (*eval_cmd) {
      write(io::construction_record(zolotarev::build(t)), format);
    } else if (*solve_cmd) {
      write(io::solution_record(zolotarev::solve(s, tol)), format);
    } else if (*verify_cmd) {
      const auto report = zolotarev::verify::verify(zolotarev::build(t), grid);
      write(io::verification_record(report), "json");
      if (!report.passed) {
        std::cerr << "verification failed at t = " << io::format_number(t) << "\n";
        return kVerifyFailed;
      }
    } else if (*table_cmd) {
      if (steps < 2) {
        std::cerr << "table: --steps must be at least 2\n";
        return kDomain;
      }
      write(io::table_record(io::sweep(t_min, t_max, steps)), format);
    } else if (*oracle_cmd) {
      if (!(s > zolotarev::proper_threshold<double>())) {
        std::cerr << "oracle: s must exceed tan^2(pi/12) = " << io::format_number(zolotarev::proper_threshold<double>())
                  << "\n";
        return kDomain;
      }
      const auto result = zolotarev::oracle::minimax_fixed_leading(s, oracle_grid);
      write(io::oracle_record(s, result, zolotarev::solve(s).L), "json");
    }
  } catch (const zolotarev::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const zolotarev::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const zolotarev::OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
