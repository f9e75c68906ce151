#pragma once

#include <iosfwd>
#include <string>

#include "netcomp/calibrate.hpp"
#include "netcomp/dynamics.hpp"
#include "netcomp/ensemble.hpp"

namespace netcomp {

/// Header: step,frac_a,frac_b,frac_u
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Header: step,mean_a,std_a,mean_b,std_b,mean_u,std_u
void write_ensemble_csv(std::ostream& out, const EnsembleResult& res);

/// Header: year,frac_a[,frac_b[,frac_u]]
void write_empirical_csv(std::ostream& out, const EmpiricalSeries& series);
EmpiricalSeries read_empirical_csv(std::istream& in);
EmpiricalSeries read_empirical_csv_file(const std::string& path);

/// Flat loss-surface dump: one column per parameter, then the loss.
void write_loss_surface_csv(std::ostream& out, const FitResult& fit);

/// Fit report as flat key=value text.
void write_fit_report(std::ostream& out, const FitResult& fit);

} // namespace netcomp
