#pragma once

#include <iosfwd>
#include <string>

#include "netcomp/dynamics.hpp"
#include "netcomp/ensemble.hpp"

namespace netcomp {

struct PlotOptions {
    std::string x_label = "step";
    std::string title;
    double x_scale = 1.0;    // multiplies the step index (e.g. 1/steps_per_year)
    double x_offset = 0.0;   // added after scaling (e.g. first calendar year)
};

/// Self-contained SVG line chart of one run, one polyline per group.
/// Byte-deterministic for identical input; a length-1 series degenerates to
/// point markers without polyline segments.
void write_trajectory_svg(std::ostream& out, const Trajectory& traj, const PlotOptions& opts = {});

/// Ensemble chart: mean polyline plus a shaded +-1 std band per group.
void write_ensemble_svg(std::ostream& out, const EnsembleResult& res, const PlotOptions& opts = {});

} // namespace netcomp
