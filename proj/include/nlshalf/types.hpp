#pragma once
#include <complex>
#include <Eigen/Dense>

namespace nlshalf {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

inline double sqr(double x) { return x * x; }
inline cplx sqr(cplx x) { return x * x; }

// sup-norm of a 2x2 matrix
inline double norm_inf(const Mat2& m) {
    double r = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nlshalf
