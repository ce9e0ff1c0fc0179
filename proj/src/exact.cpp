#include "nlshalf/exact.hpp"

#include <cmath>

namespace nlshalf::exact {

cplx breather(double x, double t, const BreatherParams& p) {
    return 2.0 * p.eta * std::exp(I * p.epsilon) * std::exp(4.0 * I * p.eta * p.eta * t) /
           std::cosh(2.0 * p.eta * (x - p.x0));
}

cplx breather_dx(double x, double t, const BreatherParams& p) {
    double u = 2.0 * p.eta * (x - p.x0);
    return -2.0 * p.eta * std::tanh(u) * breather(x, t, p);
}

BreatherBoundary breather_boundary(const BreatherParams& p) {
    BreatherBoundary bb;
    bb.a = 2.0 * p.eta / std::cosh(2.0 * p.eta * p.x0);
    bb.omega = 2.0 * p.eta * p.eta;
    bb.b_hat = p.eta * std::tanh(2.0 * p.eta * p.x0);
    return bb;
}

cplx breather_norming(const BreatherParams& p) {
    return -2.0 * p.eta * std::exp(2.0 * p.eta * p.x0) * std::exp(-I * p.epsilon);
}

cplx one_pole_field(double x, double t, cplx k1, cplx m) {
    // columns M1 = e1 + c1/(k-k1), M2 = e2 + c2/(k-conj k1), residue coupling
    // c1 = g M2(k1), c2 = -conj(g) M1(conj k1), g = i m exp(2 i (k1 x + 2 k1^2 t))
    cplx g = I * m * std::exp(2.0 * I * (k1 * x + 2.0 * k1 * k1 * t));
    cplx d = k1 - std::conj(k1);
    cplx gg = -std::norm(g);  // g * (-conj g)
    cplx denom = 1.0 + gg / (d * d);
    // first component of c2
    cplx c2_1 = -std::conj(g) / denom;
    return 2.0 * I * c2_1;
}

cplx planewave(double x, double t, const BackgroundParams& bg) {
    return bg.a * std::exp(I * (2.0 * bg.b * x + 2.0 * bg.omega * t + bg.epsilon));
}

cplx planewave_dx(double x, double t, const BackgroundParams& bg) {
    return 2.0 * I * bg.b * planewave(x, t, bg);
}

DtnBranches dtn_branches(double a, double omega) {
    DtnBranches out;
    out.rh_valid = (omega > -3.0 * a * a && omega < a * a);
    out.breather_valid = (omega >= 0.5 * a * a);
    double b = out.rh_valid ? std::sqrt(0.5 * (a * a - omega)) : 0.0;
    double bh = out.breather_valid ? std::sqrt(0.5 * omega - 0.25 * a * a) : 0.0;
    out.neumann_rh = 2.0 * I * a * b;
    out.neumann_breather = 2.0 * a * bh;
    return out;
}

double nls_residual(const FieldSample& f) {
    size_t nx = f.xs.size(), nt = f.ts.size();
    if (nx < 5 || nt < 5) throw ValidationError("grid too coarse for fourth-order differences");
    double hx = f.xs[1] - f.xs[0], ht = f.ts[1] - f.ts[0];
    for (size_t i = 1; i + 1 < nx; ++i)
        if (std::abs((f.xs[i + 1] - f.xs[i]) - hx) > 1e-9 * std::abs(hx))
            throw ValidationError("x grid is not uniform");
    for (size_t j = 1; j + 1 < nt; ++j)
        if (std::abs((f.ts[j + 1] - f.ts[j]) - ht) > 1e-9 * std::abs(ht))
            throw ValidationError("t grid is not uniform");

    double worst = 0;
    for (size_t i = 2; i + 2 < nx; ++i) {
        for (size_t j = 2; j + 2 < nt; ++j) {
            cplx q = f.at(i, j);
            cplx qt = (-f.at(i, j + 2) + 8.0 * f.at(i, j + 1) - 8.0 * f.at(i, j - 1) +
                       f.at(i, j - 2)) /
                      (12.0 * ht);
            cplx qxx = (-f.at(i + 2, j) + 16.0 * f.at(i + 1, j) - 30.0 * q +
                        16.0 * f.at(i - 1, j) - f.at(i - 2, j)) /
                       (12.0 * hx * hx);
            cplx res = I * qt + qxx + 2.0 * std::norm(q) * q;
            worst = std::max(worst, std::abs(res));
        }
    }
    return worst;
}

}  // namespace nlshalf::exact
