#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nlshalf/arc.hpp"
#include "nlshalf/types.hpp"

namespace nlshalf {

// Plane-wave background q = a exp(2i b x + 2i w t + i eps) with w = a^2 - 2 b^2.
struct BackgroundParams {
    double a = 1.0;
    double omega = 0.5;
    double epsilon = 0.0;
    double b = 0.5;  // positive root of omega = a^2 - 2 b^2

    BackgroundParams() = default;
    BackgroundParams(double a_, double omega_, double eps_);
};

// Point on the two-sheeted spectral surface. Sheet 1 carries the branch of
// the radical asymptotic to k + b at infinity.
struct SurfacePoint {
    cplx k;
    int sheet = 1;
};

enum class Region { D1, D2, D3, D4, OnSigma };
const char* region_name(Region r);

namespace surface {

// Rational chart of the (genus-zero) surface:
//   k = -b + (z - a^2/z)/2,  radical = (z + a^2/z)/2,
// sheet 1 <-> |z| > a, sheet 2 <-> |z| < a.
cplx k_of_z(cplx z, const BackgroundParams& bg);
cplx radical_of_z(cplx z, const BackgroundParams& bg);
cplx z_of_point(const SurfacePoint& p, const BackgroundParams& bg);
SurfacePoint point_of_z(cplx z, const BackgroundParams& bg);

// sqrt((k+b)^2 + a^2) on the requested sheet; cut on the segment joining the
// branch points -b -i a and -b + i a.
cplx radical(const SurfacePoint& p, const BackgroundParams& bg);

// Phase generator 2 (k - b) radical(k); ~ 2k^2 + omega at infinity on sheet 1.
cplx dispersion(const SurfacePoint& p, const BackgroundParams& bg);
cplx dispersion_z(cplx z, const BackgroundParams& bg);
cplx dispersion_z_deriv(cplx z, const BackgroundParams& bg);

Region classify(const SurfacePoint& p, const BackgroundParams& bg, double tol = 1e-12);
Region classify_z(cplx z, const BackgroundParams& bg, double tol = 1e-12);

// Background eigenvector frame and its time flow. Singular at branch points.
Mat2 background_E(const SurfacePoint& p, const BackgroundParams& bg);
Mat2 background_H(double t, const SurfacePoint& p, const BackgroundParams& bg);
Mat2 background_Psi(double t, const SurfacePoint& p, const BackgroundParams& bg);
Mat2 background_E_z(cplx z, const BackgroundParams& bg);

}  // namespace surface

// Component labels of the jump contour. Gamma_12 is the |z| > a half of the
// level arc through the upper branch point, Gamma_21 the |z| < a half;
// GammaBar mirrors them in the lower half plane.
enum class ArcLabel {
    R_upper_sheet1,  // positive z-axis copy of the real line
    R_sheet2,        // negative z-axis copy
    Gamma_12,
    Gamma_21,
    GammaBar_12,
    GammaBar_21,
};
const char* arc_label_name(ArcLabel l);

// Oriented arc of the contour Im(dispersion) = 0, parametrized in the chart.
// Orientations (direction of increasing parameter):
//   R_upper_sheet1: z from +inf to 0   (+ side is D4)
//   R_sheet2:       z from 0 to -inf   (+ side is D3)
//   Gamma:          z from inf through ia to 0   (+ side is D1)
//   GammaBar:       z from 0 through -ia to inf  (+ side is D4)
struct SigmaArc {
    ArcLabel label;
    // parameter range and map; for level arcs the map solves Im(dispersion)=0
    double t0 = 0, t1 = 1;
    CurveMap zmap, dzmap;
    Region side_plus, side_minus;
};

struct ContourGeometry {
    BackgroundParams bg;
    double radius = 0;  // truncation radius in k
    std::vector<SigmaArc> arcs;
    cplx branch_upper, branch_lower;

    const SigmaArc& arc(ArcLabel l) const;
    void export_csv(const std::string& path, int samples_per_arc = 64) const;
};

// Trace the contour. resolution controls the sampling density used to build
// and verify the level-arc interpolants (>= 16).
ContourGeometry trace_sigma(const BackgroundParams& bg, int resolution = 64,
                            double radius = -1.0);

}  // namespace nlshalf
