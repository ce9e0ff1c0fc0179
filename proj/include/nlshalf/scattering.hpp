#pragma once
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nlshalf/types.hpp"

namespace nlshalf {

struct InitialDatum {
    std::function<cplx(double)> q;
    double L = 10.0;          // |q| below 1e-14 beyond x = L
    double decay_scale = 1.0;
    std::string name = "custom";

    static InitialDatum zero();
    static InitialDatum gaussian(cplx amp, double center, double width);
    static InitialDatum sech(double eta, double x0, double eps);

    // Schwartz-class surrogate: |q(x)| <= C (1+x)^-8 on a sample grid.
    void validate() const;
};

struct ReflectionlessError : NumericalError {
    using NumericalError::NumericalError;
};

// Solution of the x-part of the linear system at t = 0, normalized to the
// identity as x -> +inf, evaluated at x = 0. Oscillations are absorbed
// analytically; adaptive embedded Runge-Kutta stepping.
Mat2 jost_at_zero(const InitialDatum& q0, cplx k, double rtol = 1e-11);

class ScatteringData {
  public:
    InitialDatum datum;
    std::vector<double> kgrid;
    std::vector<cplx> a_grid, b_grid;
    std::vector<cplx> zeros;    // simple zeros of a in the upper half plane
    std::vector<cplx> norming;  // coupling constants m_j^1

    cplx a(cplx k) const;
    cplx b(cplx k) const;
    cplx a_deriv(cplx k) const;  // small-circle contour differentiation
    double unitarity_residual() const;
    bool trivial() const { return datum.name == "zero"; }

  private:
    struct CacheBox {
        std::map<std::pair<double, double>, Mat2> map;
        std::mutex mtx;
    };
    std::shared_ptr<CacheBox> cache_ = std::make_shared<CacheBox>();
    Mat2 jost(cplx k) const;
};

// Extract a, b on the grid. Per-k solves are independent; `parallel` selects
// the threaded or the serial reference path.
ScatteringData scattering_pair(const InitialDatum& q0, const std::vector<double>& grid,
                               bool parallel = true, double rtol = 1e-11);

// Argument-principle count of zeros of a inside the rectangle [lo, hi].
int winding_number(const ScatteringData& sd, cplx lo, cplx hi);

// Locate zeros (subdivision + Newton refinement) and coupling constants.
// Throws ReflectionlessError when |b(k_j)| is below threshold and no external
// coupling constants were supplied.
void discrete_spectrum(ScatteringData& sd, cplx lo, cplx hi,
                       const std::vector<cplx>* external_norming = nullptr);

void export_scattering_csv(const ScatteringData& sd, const std::string& path);
void export_spectrum_json(const ScatteringData& sd, const std::string& path);

}  // namespace nlshalf
