#pragma once
#include <vector>

#include "nlshalf/surface.hpp"
#include "nlshalf/types.hpp"

namespace nlshalf {

// Localized time-periodic solution parameters; the boundary trace at x = 0 is
// a exp(2 i w t + i eps) with a = 2 eta / cosh(2 eta x0), w = 2 eta^2.
struct BreatherParams {
    double eta;
    double x0;
    double epsilon;
};

struct FieldSample {
    std::vector<double> xs, ts;
    std::vector<cplx> q;  // row-major: q[ix * ts.size() + it]
    cplx at(size_t ix, size_t it) const { return q[ix * ts.size() + it]; }
};

namespace exact {

cplx breather(double x, double t, const BreatherParams& p);
cplx breather_dx(double x, double t, const BreatherParams& p);

struct BreatherBoundary {
    double a, omega, b_hat;
};
BreatherBoundary breather_boundary(const BreatherParams& p);

// Pole data of the localized solution's reconstruction problem: one residue
// condition in the upper half plane at i eta with this coupling constant.
cplx breather_norming(const BreatherParams& p);

// Closed-form solution of the one-pole reconstruction problem (pole at k1,
// coupling m, free phase theta(k) = k x + 2 k^2 t).
cplx one_pole_field(double x, double t, cplx k1, cplx m);

cplx planewave(double x, double t, const BackgroundParams& bg);
cplx planewave_dx(double x, double t, const BackgroundParams& bg);

struct DtnBranches {
    cplx neumann_rh;        // 2 i a b with w = a^2 - 2 b^2
    cplx neumann_breather;  // 2 a b_hat with w = a^2/2 + 2 b_hat^2
    bool rh_valid;
    bool breather_valid;
};
DtnBranches dtn_branches(double a, double omega);

// Sup-norm of the discretized equation i q_t + q_xx + 2 |q|^2 q over interior
// grid points, fourth-order differences. Grid must be uniform in x and t.
double nls_residual(const FieldSample& f);

}  // namespace exact
}  // namespace nlshalf
