#pragma once

#include <string>
#include <vector>

#include "spingeo/io_format.hpp"

namespace spingeo {

// Shared defaults between the CLI and the figure-regeneration checks.
struct FigureConfig {
  std::vector<int> n_list{2, 3, 4, 5};            // series for theta figures
  std::vector<double> xi_list{0.5, 1.0, 1.5, 2.0};  // series for concurrence figures
  double coupling = 1.0;
  int theta_points = 721;  // [0, pi] inclusive
  int c_points = 501;      // [0, max admissible concurrence] inclusive
};

const std::vector<std::string>& figure_ids();

// Builds the data table for one figure. Cells outside a series' domain
// (curvature at the exact poles, concurrence beyond |sin xi|) stay empty.
CsvTable figure_table(const std::string& figure_id, const FigureConfig& config = {});

// Full command-line front end; returns the process exit code
// (0 ok, 1 verification failures, 2 configuration error).
int run_cli(int argc, char** argv);

}  // namespace spingeo
