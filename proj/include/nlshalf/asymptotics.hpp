#pragma once
#include <string>
#include <vector>

#include "nlshalf/boundary_data.hpp"
#include "nlshalf/rh_solver.hpp"

namespace nlshalf {

// Scalar factor solving D+ = D- * A conj(A(conj .)) across the upper real
// copy and the conjugate level arc, D -> 1 at the first infinity. The factor
// arcs are oriented opposite to the field-problem arcs so that the + side is
// the D1 (resp. D3) side.
struct ScalarFactor {
    ScalarField psi;  // log D
    std::vector<ArcLabel> labels;
    cplx psi1 = 0, psi2 = 0;  // expansion log D ~ psi1/z + psi2/z^2

    cplx D(cplx z) const { return std::exp(psi.eval(z)); }
    cplx D_plus(size_t piece, size_t panel, double y) const;
    cplx D_minus(size_t piece, size_t panel, double y) const;
};

ScalarFactor scalar_D(const BoundarySpectralPair& pair, const PairOptions& opt = {});

// The four triangular boundary-problem factors on the contour at time t.
struct JumpFactors {
    Mat2 Jup, Jlo;  // Jup * Jlo = J on the upper real copy and conjugate arc
    Mat2 Glo, Gup;  // Glo * Gup = J everywhere the unit-diagonal split holds
    Mat2 Jt;        // the boundary-problem jump itself
};
JumpFactors factorize_jump(const BoundarySpectralPair& pair, const ScalarFactor& D,
                           ArcLabel label, size_t arc_index, size_t panel, double y, double t);

// Deformed-contour configuration for the long-time solve.
struct LensConfig {
    double delta_k = 0.25;     // depth of the real-copy deformations in k units
    double delta_gamma = 0.3;  // depth of the level-arc deformations
    double kmax = 12;          // jump support truncation |k| <= kmax on real copies
    int panels_per_arc = 12;
    int nodes_per_panel = 16;

    struct DeformedArc {
        std::vector<Panel> panels;
        std::string name;
        Region region;    // designated region (sign of Im dispersion fixed)
        int kind = 0;     // 0: lower-triangular factor, 1: upper-triangular
    };
    std::vector<DeformedArc> arcs;
};

LensConfig build_lens(const BoundarySpectralPair& pair, LensConfig base = {});

// Dressed small-jump problem: all diagonal content absorbed into the scalar
// factor, triangular factors moved onto the deformed arcs.
RHProblem lens_problem(const BoundarySpectralPair& pair, const ScalarFactor& D,
                       const LensConfig& lens, double t);

// Undeformed boundary problem (usable for moderate t; cross-check path).
RHProblem direct_problem(const BoundarySpectralPair& pair, double t,
                         const AssembleOptions& opt = {});

struct BoundaryTraces {
    cplx q, qx;  // boundary values
    cplx u, v;   // perturbation components
    double residual = 0;
};

// Traces from a solved boundary problem; `dressed` moments already include
// the plane-wave background frame.
BoundaryTraces traces_from_moments(const Mat2& M1, const Mat2& M2, double t,
                                   const BackgroundParams& bg, double residual);

BoundaryTraces boundary_traces_lensed(const BoundarySpectralPair& pair, const ScalarFactor& D,
                                      const LensConfig& lens, double t,
                                      const SolveOptions& sopt = {});
BoundaryTraces boundary_traces_direct(const BoundarySpectralPair& pair, double t,
                                      const AssembleOptions& aopt = {},
                                      const SolveOptions& sopt = {});

// Measured decay of the boundary perturbation over a time grid.
struct DecayReport {
    std::vector<double> ts;
    std::vector<cplx> us, vs;
    double kappa_u = 0, kappa_v = 0, r2_u = 0, r2_v = 0;
    double floor = 0;       // solver noise floor used to clip the fit
    int used_u = 0, used_v = 0;
    double kappa_lens = 0;  // 2 inf |Im dispersion| over the deformed arcs
};

DecayReport decay_fit(const BoundarySpectralPair& pair, const std::vector<double>& t_grid,
                      const LensConfig& lens_base = {}, bool parallel = true);

void export_decay_csv(const DecayReport& rep, const std::string& path);
void export_decay_json(const DecayReport& rep, const std::string& path);

// Rational approximation of samples on a set of points (adaptive
// interpolation in barycentric form); used when pair data must be replaced
// by rational interpolants on lens closures.
struct RationalApprox {
    std::vector<cplx> support, values, weights;
    double achieved = 0;
    cplx eval(cplx z) const;
};
RationalApprox aaa_fit(const std::vector<cplx>& pts, const std::vector<cplx>& vals,
                       double tol, int max_degree);

// Approximate (A, B) data on the lens closures by rational interpolants.
// Pairs built from rational families evaluate natively and pass through.
struct ApproxPair {
    bool passthrough = true;
    RationalApprox beta_up, beta_dn;
    double achieved = 0;
};
ApproxPair analytic_approx(const BoundarySpectralPair& pair, const LensConfig& lens,
                           double eps, int max_degree = 60);

}  // namespace nlshalf
