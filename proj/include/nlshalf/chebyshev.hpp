#pragma once
#include <vector>
#include "nlshalf/types.hpp"

namespace nlshalf::cheb {

// First-kind Chebyshev point set on [-1,1] with the discrete transform and
// Fejer quadrature weights attached.
struct Basis {
    int n = 0;
    std::vector<double> x;      // nodes, ascending
    std::vector<double> theta;  // acos(x)
    Eigen::MatrixXd V;          // modal transform: coeffs = V * values
    std::vector<double> w;      // Fejer-1 weights for integral over [-1,1]
};

const Basis& basis(int n);

// Evaluate sum c_m T_m(y) by Clenshaw recurrence.
cplx clenshaw(const std::vector<cplx>& c, double y);

// Cauchy integrals of the Chebyshev basis,
//   I_m(z) = int_{-1}^{1} T_m(x) / (x - z) dx,   m = 0..n-1,
// for z off [-1,1]. Uses forward recurrence near the segment and an
// Olver-style tridiagonal solve away from it.
void cauchy_basis(int n, cplx z, std::vector<cplx>& out);

// Boundary values at y in (-1,1); side = +1 for the limit from Im x > 0.
void cauchy_basis_boundary(int n, double y, int side, std::vector<cplx>& out);

}  // namespace nlshalf::cheb
