#pragma once
#include <functional>
#include <string>
#include <vector>

#include "nlshalf/chebyshev.hpp"
#include "nlshalf/types.hpp"

namespace nlshalf {

using CurveMap = std::function<cplx(double)>;

// One spectral panel of a contour arc: an analytic map of [-1,1] into the
// plane plus cached node data.
struct Panel {
    CurveMap zmap, dzmap;
    int n = 16;
    std::vector<cplx> z, dz;  // at the basis nodes
    cplx za, zb;              // endpoints
    double length = 0;        // chord-ish scale used by distance heuristics

    void init();
};

// Build a panel over [t0,t1] of a parametrized curve.
Panel make_panel(const CurveMap& g, const CurveMap& dg, double t0, double t1, int n);

// Straight segment panel.
Panel segment_panel(cplx za, cplx zb, int n);

// Panel set covering an interval [t0,t1] with geometric grading toward
// designated ends (ratio<1 shrinks panels toward that end).
std::vector<double> graded_breaks(double t0, double t1, int npanels, bool refine_left,
                                  bool refine_right, double ratio = 0.55);

// Where a Cauchy density is evaluated relative to a panel.
struct PanelTarget {
    enum Kind { OffContour, OnPanel } kind = OffContour;
    double y = 0;   // parameter when on the panel
    int side = +1;  // +1: limit from the left of the oriented arc
};

// Weights w so that (1/(2 pi i)) int_panel u(s)/(s - z) ds  ~=  sum w_i u(z_i).
// Handles far targets, near targets (pole subtraction after locating the
// preimage), and boundary values on the panel itself.
void cauchy_weights(const Panel& p, cplx z, const PanelTarget& tgt, std::vector<cplx>& w);

// A contour arc: panels plus a 2x2 jump sampler. Orientation is the
// direction of increasing parameter; the + side is to the left.
struct JumpArc {
    std::vector<Panel> panels;
    std::function<Mat2(cplx)> jump;
    std::string label;
};

// Scalar density sampled on a panelized contour, with Cauchy-transform
// evaluation anywhere off the contour and boundary values on it.
struct ScalarField {
    struct Piece {
        std::vector<Panel> panels;
        double sign = +1;  // data multiplies this sign in the transform
    };
    std::vector<Piece> pieces;
    std::vector<std::vector<std::vector<cplx>>> vals;  // [piece][panel][node]

    template <class F>
    void sample(F&& f) {
        vals.clear();
        vals.resize(pieces.size());
        for (size_t c = 0; c < pieces.size(); ++c) {
            vals[c].resize(pieces[c].panels.size());
            for (size_t p = 0; p < pieces[c].panels.size(); ++p) {
                auto& pan = pieces[c].panels[p];
                vals[c][p].resize(pan.n);
                for (int j = 0; j < pan.n; ++j) vals[c][p][j] = f(pan.z[j]);
            }
        }
    }

    // Cauchy transform at z off the contour.
    cplx eval(cplx z) const;
    // Boundary value on a specific panel at parameter y from the given side.
    cplx eval_boundary(size_t piece, size_t panel, double y, int side) const;
};

}  // namespace nlshalf
