#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nlshalf/boundary_data.hpp"
#include "nlshalf/scattering.hpp"
#include "nlshalf/surface.hpp"

namespace nlshalf {

// Run configuration parsed from JSON; every command validates the whole
// structure before computing anything.
struct RunConfig {
    // background
    double a = 1.0, omega = 0.5, epsilon = 0.0;

    // initial datum
    std::string datum_type = "gaussian";  // gaussian | sech | zero
    double datum_amp_re = 0.4, datum_amp_im = 0.0;
    double datum_center = 0.0, datum_width = 1.0;
    double datum_eta = 0.5, datum_x0 = 1.0, datum_eps = 0.0;

    // boundary family
    FreeRatio family;

    // solver
    int n_per_arc = 160;
    int nodes_per_panel = 16;
    double truncation_radius = -1.0;  // default 40 max(1, a, b)
    double tol = 1e-8;

    // experiment grids
    double x_min = 0.0, x_max = 5.0;
    int x_count = 26;
    double t_min = 0.2, t_max = 8.0;
    int t_count = 12;
    double kgrid_max = 10.0;
    int kgrid_count = 401;

    // lens
    double lens_delta_k = 0.25, lens_delta_gamma = 0.3, lens_kmax = 12.0;

    int threads = 0;  // 0: library default

    BackgroundParams background() const;
    InitialDatum datum() const;
    void validate() const;
};

RunConfig load_config(const std::string& path);

}  // namespace nlshalf
