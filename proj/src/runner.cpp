#include "smallscale/runner.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "smallscale/timeseries.hpp"

namespace smallscale {

std::map<std::string, std::string> spec_metadata(const RunSpec& spec) {
  std::map<std::string, std::string> m;
  m["model"] = spec.model;
  m["data"] = spec.data;
  m["seed"] = std::to_string(spec.seed);
  m["dt_min"] = format_double(spec.dt_min);
  m["blowup_cap"] = format_double(spec.blowup_cap);
  if (spec.model == "clm" || spec.model == "degregorio" ||
      spec.model == "hl" || spec.model == "cky") {
    m["n"] = std::to_string(spec.n);
    m["length"] = format_double(spec.length);
    if (spec.model == "hl" || spec.model == "cky")
      m["amplitude"] = format_double(spec.amplitude);
  } else if (spec.model == "euler2d" || spec.model == "boussinesq") {
    if (spec.model == "euler2d") {
      m["n_r"] = std::to_string(spec.n_r);
      m["n_theta"] = std::to_string(spec.n_theta);
      m["eps_s"] = format_double(spec.eps_s);
    } else {
      m["n_x"] = std::to_string(spec.n_x);
      m["n_y"] = std::to_string(spec.n_y);
      m["height"] = format_double(spec.height);
    }
  } else if (spec.model == "sqg_patch") {
    m["alpha"] = format_double(spec.alpha);
    m["eps"] = format_double(spec.eps);
    m["node_spacing"] = format_double(spec.node_spacing);
  }
  return m;
}

void write_report(const std::string& path, const RunSpec& spec,
                  const RunReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << "verdict = " << report.verdict << "\n";
  if (!report.halt_reason.empty())
    out << "halt_reason = " << report.halt_reason << "\n";
  out << "t_final = " << format_double(report.t_final) << "\n";
  out << "steps = " << report.steps << "\n";
  for (const auto& [k, v] : spec_metadata(spec))
    out << k << " = " << v << "\n";
  for (const auto& [k, v] : report.info) out << k << " = " << v << "\n";
}

RunReport run(const RunSpec& spec, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  RunReport report;
  if (spec.model == "clm" || spec.model == "degregorio" ||
      spec.model == "hl" || spec.model == "cky")
    report = run_model_1d(spec, out_dir);
  else if (spec.model == "euler2d")
    report = run_euler_disk(spec, out_dir);
  else if (spec.model == "boussinesq")
    report = run_boussinesq(spec, out_dir);
  else if (spec.model == "sqg_patch")
    report = run_sqg_patch(spec, out_dir);
  else
    throw std::invalid_argument("run: unknown model " + spec.model);
  write_report(out_dir + "/report.txt", spec, report);
  return report;
}

}  // namespace smallscale
