#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "smallscale/fits.hpp"
#include "smallscale/runner.hpp"
#include "smallscale/runspec.hpp"
#include "smallscale/timeseries.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smallscale: blow-up model solvers and kernel verifiers"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  int threads = 1;

  auto* run_cmd = app.add_subcommand("run", "execute a configured model run");
  run_cmd->add_option("--config", config_path, "TOML config file")->required();
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--threads", threads,
                      "worker threads (current solvers are single-threaded)");

  auto* verify_cmd =
      app.add_subcommand("verify-kernels", "run the kernel/lemma verifiers");
  std::string verify_config;
  bool corrupt = false;
  verify_cmd->add_option("--config", verify_config, "TOML config file");
  verify_cmd->add_option("--out", out_dir, "output directory");
  verify_cmd
      ->add_flag("--corrupt-kernel", corrupt,
                 "fault-injection hook: corrupt the HL kernel")
      ->group("");  // hidden

  auto* fit_cmd =
      app.add_subcommand("fit", "fit growth laws to an existing series CSV");
  std::string csv_path, column, kind = "blowup";
  double t0 = -1e300, t1 = 1e300;
  int exponent = 0;
  fit_cmd->add_option("--csv", csv_path, "series CSV")->required();
  fit_cmd->add_option("--column", column, "column name")->required();
  fit_cmd->add_option("--kind", kind, "blowup | double-exp | exp");
  fit_cmd->add_option("--t0", t0, "window start");
  fit_cmd->add_option("--t1", t1, "window end");
  fit_cmd->add_option("--exponent", exponent, "power-fit exponent hint");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      auto spec = smallscale::parse_config(slurp(config_path));
      auto report = smallscale::run(spec, out_dir);
      std::printf("verdict: %s\n", report.verdict.c_str());
      if (!report.halt_reason.empty())
        std::printf("halt_reason: %s\n", report.halt_reason.c_str());
      std::printf("t_final: %s\n",
                  smallscale::format_double(report.t_final).c_str());
      std::printf("report: %s/report.txt\n", out_dir.c_str());
      return 0;
    }
    if (verify_cmd->parsed()) {
      smallscale::RunSpec spec;
      if (!verify_config.empty())
        spec = smallscale::parse_config(slurp(verify_config));
      else {
        spec.model = "hl";
        spec.n = 1024;
      }
      const int failures = smallscale::verify_kernels(spec, out_dir, corrupt);
      std::printf("%s (%d failure%s), table: %s/verify.txt\n",
                  failures == 0 ? "all checks passed" : "FAILURES",
                  failures, failures == 1 ? "" : "s", out_dir.c_str());
      return failures == 0 ? 0 : 1;
    }
    if (fit_cmd->parsed()) {
      auto ts = smallscale::read_timeseries_csv(csv_path);
      smallscale::FitWindow w{t0, t1};
      if (t1 >= 1e300)  // default window drops the under-resolved tail
        w.t1 = smallscale::window_excluding_tail(ts).t1;
      smallscale::GrowthFit fit;
      if (kind == "double-exp")
        fit = smallscale::fit_double_exponential(ts, column, w);
      else if (kind == "exp")
        fit = smallscale::fit_exponential(ts, column, w);
      else
        fit = smallscale::estimate_blowup_time(ts, column, exponent, w);
      std::printf("kind = %s\n", kind.c_str());
      std::printf("ok = %s\n", fit.ok ? "yes" : "no");
      if (!fit.ok) {
        std::printf("reason = %s\n", fit.reason.c_str());
        return 1;
      }
      if (kind == "blowup") {
        std::printf("blowup_time = %s\n",
                    smallscale::format_double(fit.blowup_time).c_str());
        std::printf("exponent = %d\n", fit.exponent);
      } else {
        std::printf("rate = %s\n",
                    smallscale::format_double(fit.rate).c_str());
        std::printf("intercept = %s\n",
                    smallscale::format_double(fit.intercept).c_str());
      }
      std::printf("residual = %s\n",
                  smallscale::format_double(fit.residual).c_str());
      std::printf("samples = %zu\n", fit.samples);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
