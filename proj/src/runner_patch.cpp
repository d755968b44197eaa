#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "smallscale/patch_run.hpp"
#include "smallscale/runner.hpp"
#include "smallscale/timeseries.hpp"

namespace smallscale {

namespace {

void write_contour_csv(const std::string& path, const PatchSystem& system) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot write contour snapshot: " + path);
  std::fprintf(f, "# t = %s\n", format_double(system.t).c_str());
  std::fprintf(f, "# alpha = %s\n", format_double(system.alpha).c_str());
  for (const auto& c : system.contours) {
    std::fprintf(f, "# weight = %s\n", format_double(c.weight).c_str());
    std::fprintf(f, "x1,x2\n");
    for (const auto& p : c.nodes)
      std::fprintf(f, "%s,%s\n", format_double(p.x).c_str(),
                   format_double(p.y).c_str());
  }
  std::fclose(f);
}

}  // namespace

RunReport run_sqg_patch(const RunSpec& spec, const std::string& out_dir) {
  PatchSystem system;
  system.alpha = spec.alpha;
  system.odd_symmetry = true;
  system.contours.push_back(initial_patch(spec.eps, spec.node_spacing));

  PatchEvolveParams params;
  params.cfl = spec.cfl;
  params.dt_min = std::max(spec.dt_min, 1e-9);
  params.dt_max = spec.dt_max;
  params.target_spacing = spec.node_spacing;

  const bool with_barrier = spec.alpha > 0.0;
  BarrierState barrier{spec.eps, spec.alpha};
  const double T =
      with_barrier ? barrier_time_of_arrival(spec.eps, spec.alpha)
                   : std::numeric_limits<double>::infinity();

  CsvWriter csv(out_dir + "/series.csv",
                {"t", "front_x", "area", "barrier_x", "containment_margin",
                 "front_u1", "front_bound"},
                spec_metadata(spec));

  RunReport report;
  std::size_t containment_checks = 0, containment_violations = 0;
  std::size_t frontbound_checks = 0, frontbound_violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  double min_gap = std::numeric_limits<double>::infinity();
  double prev_gap = std::numeric_limits<double>::infinity();
  bool gap_monotone = true;  // up to node-scale redistribution jitter
  double worst_backstep = 0.0;
  double next_snap = spec.snapshot_interval;
  std::size_t snap_index = 0;

  auto emit = [&]() {
    const double fx = front_abscissa(system);
    // velocity of the leftmost node
    Point2 fnode{0.0, 0.0};
    for (const auto& c : system.contours)
      for (const auto& p : c.nodes)
        if (p.x <= fx) fnode = p;
    const Point2 fu = contour_velocity(system, fnode);
    const double bound =
        spec.alpha > 0.0
            ? -std::pow(fx, 1.0 - 2.0 * spec.alpha) / (50.0 * spec.alpha)
            : std::numeric_limits<double>::quiet_NaN();

    double bx = std::numeric_limits<double>::quiet_NaN();
    double margin = std::numeric_limits<double>::quiet_NaN();
    if (with_barrier && system.t <= T) {
      bx = barrier_position(system.t, spec.eps, spec.alpha);
      auto c = barrier_containment(system, barrier, system.t);
      margin = c.margin;
      ++containment_checks;
      min_margin = std::min(min_margin, margin);
      if (!c.contained) ++containment_violations;
    }
    if (spec.alpha > 0.0 && fx <= spec.delta_alpha) {
      ++frontbound_checks;
      const double tol = 0.05 * std::abs(bound) + 1e-6;
      if (fu.x > bound + tol) ++frontbound_violations;
    }
    min_gap = std::min(min_gap, fx);
    worst_backstep = std::max(worst_backstep, fx - prev_gap);
    if (fx > prev_gap + params.floor_spacing) gap_monotone = false;
    prev_gap = fx;

    csv.write_row(std::vector<double>{system.t, fx,
                                      polygon_area(system.contours[0].nodes),
                                      bx, margin, fu.x, bound});
  };

  emit();
  while (system.t < spec.t_end && report.verdict.empty()) {
    if (report.steps >= spec.max_steps) {
      report.verdict = "under-resolved";
      report.halt_reason = "step budget exhausted";
      break;
    }
    auto res = evolve_patch(system, params);
    ++report.steps;
    emit();
    if (res.contact) {
      report.verdict = "contact";
      report.halt_reason = res.detail;
      report.info["contact_x"] = format_double(res.contact_x);
      report.info["contact_y"] = format_double(res.contact_y);
      report.info["contact_t"] = format_double(system.t);
    }
    if (spec.snapshot_interval > 0.0 && system.t >= next_snap) {
      char name[64];
      std::snprintf(name, sizeof(name), "/contour_%06zu.csv", snap_index++);
      write_contour_csv(out_dir + name, system);
      next_snap += spec.snapshot_interval;
    }
  }
  if (report.verdict.empty()) report.verdict = "completed";
  report.t_final = system.t;
  report.info["front_x_final"] = format_double(front_abscissa(system));
  report.info["min_gap"] = format_double(min_gap);
  report.info["gap_monotone"] = gap_monotone ? "yes" : "no";
  report.info["front_worst_backstep"] = format_double(worst_backstep);
  if (with_barrier) {
    report.info["barrier_T"] = format_double(T);
    report.info["containment_checks"] = std::to_string(containment_checks);
    report.info["containment_violations"] =
        std::to_string(containment_violations);
    report.info["min_containment_margin"] = format_double(min_margin);
  }
  report.info["frontbound_checks"] = std::to_string(frontbound_checks);
  report.info["frontbound_violations"] = std::to_string(frontbound_violations);
  write_contour_csv(out_dir + "/contour_final.csv", system);
  return report;
}

}  // namespace smallscale
