#include "nlshalf/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace nlshalf::cheb {

static Basis make_basis(int n) {
    Basis b;
    b.n = n;
    b.x.resize(n);
    b.theta.resize(n);
    for (int j = 0; j < n; ++j) {
        // ascending order
        double th = (2.0 * (n - 1 - j) + 1.0) * PI / (2.0 * n);
        b.theta[j] = th;
        b.x[j] = std::cos(th);
    }
    // discrete orthogonality of T_m at first-kind points
    b.V.resize(n, n);
    for (int m = 0; m < n; ++m) {
        double scale = (m == 0 ? 1.0 : 2.0) / n;
        for (int j = 0; j < n; ++j) b.V(m, j) = scale * std::cos(m * b.theta[j]);
    }
    b.w.resize(n);
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int m = 1; m <= n / 2; ++m)
            s += std::cos(2.0 * m * b.theta[j]) / (4.0 * m * m - 1.0);
        b.w[j] = (2.0 / n) * (1.0 - 2.0 * s);
    }
    return b;
}

const Basis& basis(int n) {
    static std::map<int, Basis> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_basis(n)).first;
    return it->second;
}

cplx clenshaw(const std::vector<cplx>& c, double y) {
    cplx b1 = 0, b2 = 0;
    for (int m = (int)c.size() - 1; m >= 1; --m) {
        cplx t = 2.0 * y * b1 - b2 + c[m];
        b2 = b1;
        b1 = t;
    }
    return y * b1 - b2 + c[0];
}

// int T_m over [-1,1]
static double tmoment(int m) {
    if (m % 2 == 1) return 0.0;
    return 2.0 / (1.0 - (double)m * m);
}

void cauchy_basis(int n, cplx z, std::vector<cplx>& out) {
    out.resize(n);
    if (n == 0) return;
    cplx I0 = std::log((z - 1.0) / (z + 1.0));
    out[0] = I0;
    if (n == 1) return;
    out[1] = 2.0 + z * I0;

    cplx s = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);  // ~ z at infinity
    cplx zeta = z + s;
    if (std::abs(zeta) < 1.0) zeta = z - s;
    double az = std::abs(zeta);

    if (az <= 1.5) {
        for (int m = 1; m + 1 < n; ++m)
            out[m + 1] = 2.0 * z * out[m] - out[m - 1] + 2.0 * tmoment(m);
        return;
    }
    // Olver: solve the inhomogeneous three-term recurrence as a tridiagonal
    // system with out[0] given and the minimal-solution condition I_M = 0.
    int extra = (int)std::ceil(34.0 / std::log(az)) + 6;
    int M = n + extra;
    std::vector<cplx> d(M), e(M), f(M);
    // unknowns I_1..I_M-1; equations: I_{m+1} - 2 z I_m + I_{m-1} = 2 c_m
    // forward elimination on the tridiagonal [1, -2z, 1]
    std::vector<cplx> rhs(M);
    for (int m = 1; m < M; ++m) rhs[m] = 2.0 * tmoment(m);
    rhs[1] -= I0;
    // Thomas algorithm for system indexed m=1..M-1 with I_M = 0
    std::vector<cplx> cp(M), dp(M);
    cplx diag = -2.0 * z;
    cp[1] = 1.0 / diag;
    dp[1] = rhs[1] / diag;
    for (int m = 2; m < M; ++m) {
        cplx denom = diag - cp[m - 1];
        cp[m] = 1.0 / denom;
        dp[m] = (rhs[m] - dp[m - 1]) / denom;
    }
    std::vector<cplx> sol(M + 1, 0.0);
    sol[M - 1] = dp[M - 1];
    for (int m = M - 2; m >= 1; --m) sol[m] = dp[m] - cp[m] * sol[m + 1];
    for (int m = 1; m < n; ++m) out[m] = sol[m];
}

void cauchy_basis_boundary(int n, double y, int side, std::vector<cplx>& out) {
    out.resize(n);
    if (n == 0) return;
    cplx I0 = std::log((1.0 - y) / (1.0 + y)) + cplx(0.0, side >= 0 ? PI : -PI);
    out[0] = I0;
    if (n == 1) return;
    out[1] = 2.0 + y * I0;
    for (int m = 1; m + 1 < n; ++m)
        out[m + 1] = 2.0 * y * out[m] - out[m - 1] + 2.0 * tmoment(m);
}

}  // namespace nlshalf::cheb
