#pragma once
#include <memory>
#include <string>
#include <vector>

#include "nlshalf/arc.hpp"
#include "nlshalf/scattering.hpp"
#include "nlshalf/surface.hpp"

namespace nlshalf {

// Rational ratio prescribed on the D3 component: sum_j r_j / (k - p_j) with
// poles in the open upper half k-plane (so every chart preimage stays away
// from the closure of D3).
struct FreeRatio {
    std::vector<cplx> poles;
    std::vector<cplx> residues;

    cplx eval_k(cplx k) const;
    FreeRatio conj_flavor() const;  // conjugated poles and residues
    bool trivial() const { return poles.empty(); }
};

FreeRatio load_family_json(const std::string& path);
void save_family_json(const FreeRatio& fr, const std::string& path);

// Boundary spectral pair (A, B): ratio b/a on the D1 side, the free ratio on
// the D3 side, modulus data on the contour fixed by the unitarity condition,
// and A recovered by exponentiating a Cauchy transform of log h over Sigma.
struct BoundarySpectralPair {
    std::shared_ptr<const ScatteringData> sd;
    FreeRatio ratio;
    FreeRatio ratio_star;  // conj flavor, analytic toward D2
    BackgroundParams bg;
    std::shared_ptr<const ContourGeometry> geo;

    // log h sampled over the contour with per-arc side signs
    ScalarField psi;
    std::vector<ArcLabel> psi_labels;

    // ratio of the pair on the U = D1 u D3 side of each arc, and its
    // conjugate-reflected partner; z must lie on the labeled arc.
    cplx beta(ArcLabel l, cplx z) const;
    cplx beta_check(ArcLabel l, cplx z) const;
    // h = 1 / (1 + beta beta_check) on the contour
    cplx hfun(ArcLabel l, cplx z) const;

    // A evaluated inside D1 u D3 (exp of the Cauchy transform).
    cplx A_interior(cplx z) const;
    // conj(A(conj z)) evaluated for z in D2 u D4.
    cplx Astar_interior(cplx z) const;
    cplx B_interior(cplx z) const;

    // boundary values of A (from the U side) and Astar (other side) on an arc
    cplx A_on_arc(size_t arc_index, size_t panel, double y) const;
    cplx Astar_on_arc(size_t arc_index, size_t panel, double y) const;
    ArcLabel arc_label(size_t arc_index) const { return psi_labels[arc_index]; }

    bool trivial() const { return ratio.trivial() && sd->trivial(); }
};

struct PairOptions {
    int panels_per_arc = 12;
    int nodes_per_panel = 16;
    double winding_tol = 0.25;
};

// Validates admissibility (1 + beta beta_check nonvanishing with zero winding
// on every arc chain, poles off the closed contour) and builds the pair.
BoundarySpectralPair construct_pair(std::shared_ptr<const ScatteringData> sd,
                                    const FreeRatio& ratio,
                                    std::shared_ptr<const ContourGeometry> geo,
                                    const PairOptions& opt = {});

// Scalar transition data for the field problem.
struct TransitionMatrices {
    std::shared_ptr<const ScatteringData> sd;
    FreeRatio ratio, ratio_star;
    BackgroundParams bg;

    cplx r(cplx k) const;           // conj(b(conj k)) / a(k)
    cplx c_k(cplx k) const;         // analytic toward D2; poles at zeros of a (a + b f*)
    cplx rho(cplx k) const;         // r + c
    Mat2 s_mat(double k) const;     // real-line scattering matrix
    Mat2 S_mat(double k) const;     // formal overlap variant (A=a, B=b) used in tests
    std::vector<cplx> pole_k;       // c poles in the upper half plane
    std::vector<cplx> pole_m2;      // -res c at those poles
};

TransitionMatrices transition(std::shared_ptr<const ScatteringData> sd,
                              const BoundarySpectralPair& pair);

// Locate the poles of c in D2 (upper half plane zeros of a (a + b f*)) and
// their residues by small-circle quadrature. Fills pole_k / pole_m2.
void pole_inventory(TransitionMatrices& tm, const ContourGeometry& geo, double kmax,
                    double sigma_tol = 1e-6);

}  // namespace nlshalf
