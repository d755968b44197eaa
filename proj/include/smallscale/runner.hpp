#pragma once

#include <map>
#include <string>

#include "smallscale/runspec.hpp"

namespace smallscale {

struct RunReport {
  std::string verdict;  // completed | blow-up suspected | contact | under-resolved
  std::string halt_reason;
  double t_final = 0.0;
  std::size_t steps = 0;
  std::map<std::string, std::string> info;
};

// Executes the configured model loop; writes series.csv (flushed per row),
// snapshots at the configured interval, and report.txt into out_dir.
RunReport run(const RunSpec& spec, const std::string& out_dir);

// Runs the kernel/lemma verifier suites (HL kernel sweep, HL positivity
// sweep, patch bad/good bound checks, coefficient-margin grid); writes a
// pass/fail table to out_dir/verify.txt and returns the failure count.
// corrupt_kernel injects a broken HL kernel (test hook).
int verify_kernels(const RunSpec& spec, const std::string& out_dir,
                   bool corrupt_kernel = false);

void write_report(const std::string& path, const RunSpec& spec,
                  const RunReport& report);

std::map<std::string, std::string> spec_metadata(const RunSpec& spec);

// internal per-model drivers (exposed for the acceptance suite)
RunReport run_model_1d(const RunSpec& spec, const std::string& out_dir);
RunReport run_euler_disk(const RunSpec& spec, const std::string& out_dir);
RunReport run_boussinesq(const RunSpec& spec, const std::string& out_dir);
RunReport run_sqg_patch(const RunSpec& spec, const std::string& out_dir);

}  // namespace smallscale
