#pragma once
#include <functional>
#include <string>
#include <vector>

#include "nlshalf/arc.hpp"
#include "nlshalf/surface.hpp"
#include "nlshalf/types.hpp"

namespace nlshalf {

class ScatteringData;
struct BoundarySpectralPair;
struct TransitionMatrices;

// Jump sampler: panel index within the arc, panel parameter, and the point.
using JumpFn = std::function<Mat2(int panel, double y, cplx z)>;

struct ProblemArc {
    std::vector<Panel> panels;
    JumpFn jump;
    std::string label;
};

// res_{z0} [M]_col = coeff * [M(z0)]_other
struct PoleCondition {
    cplx z0;
    int column = 1;
    cplx coeff;
};

// Conversion from chart moments (1/z expansion) to physical moments
// (1/k expansion): M1 = s1 N1, M2 = s2 N2 + s21 N1.
struct MomentFrame {
    double s1 = 1.0, s2 = 1.0, s21 = 0.0;
    static MomentFrame identity() { return {}; }
    static MomentFrame chart(double b) { return {0.5, 0.25, -0.5 * b}; }
};

struct RHProblem {
    std::vector<ProblemArc> arcs;
    std::vector<PoleCondition> poles;
    MomentFrame frame;
    std::string name;

    // max |det J - 1| over all panel nodes
    double det_defect() const;
};

// Replace residue conditions by holomorphic jumps on small circles.
// radius_factor scales the distance from each pole to the contour.
RHProblem regularize_poles(const RHProblem& prob, double radius_factor = 0.1);

// Discretization knobs shared by the assemblers.
struct AssembleOptions {
    int n_per_panel = 16;
    int panels_per_arc = 10;
    double support_tol = 1e-14;  // truncate arcs where the jump data is below this
};

// Field-problem assembly: jump data from the x-scattering plus the
// transition functions, phases exp(2i(k x + (dispersion - omega) t)).
RHProblem assemble_xt(const ScatteringData& sd, const TransitionMatrices& tm,
                      const ContourGeometry& geo, double x, double t,
                      const AssembleOptions& opt = {});

// Boundary-problem assembly at x = 0: single jump formula on the whole
// contour, built from the boundary spectral pair.
RHProblem assemble_t(const BoundarySpectralPair& pair, const ContourGeometry& geo, double t,
                     const AssembleOptions& opt = {});

// Plain full-line problem in the k plane (reconstruction oracle for decaying
// data): one contour, reflection data from sd, phase exp(2i(k x + 2 k^2 t)).
RHProblem assemble_line(const ScatteringData& sd, double x, double t, double kmax,
                        const AssembleOptions& opt = {});

// One-pole problem with no jump contour (localized solutions).
RHProblem assemble_pole_only(cplx k1, cplx m1, double x, double t);

void dump_problem_json(const RHProblem& prob, const std::string& path);
RHProblem load_problem_json(const std::string& path);

}  // namespace nlshalf
