#include "nlshalf/scattering.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "nlshalf/parallel.hpp"

namespace nlshalf {

InitialDatum InitialDatum::zero() {
    InitialDatum d;
    d.q = [](double) { return cplx(0.0); };
    d.L = 1.0;
    d.name = "zero";
    return d;
}

InitialDatum InitialDatum::gaussian(cplx amp, double center, double width) {
    InitialDatum d;
    d.q = [=](double x) {
        double u = (x - center) / width;
        return amp * std::exp(-u * u);
    };
    // |amp| exp(-u^2) < 1e-15 when u > 5.9
    d.L = center + 6.2 * width * std::sqrt(std::max(1.0, std::log(std::abs(amp) + 2.0)));
    d.decay_scale = width;
    d.name = "gaussian";
    return d;
}

InitialDatum InitialDatum::sech(double eta, double x0, double eps) {
    InitialDatum d;
    d.q = [=](double x) {
        return 2.0 * eta * std::exp(I * eps) / std::cosh(2.0 * eta * (x - x0));
    };
    d.L = x0 + 18.0 / eta;
    d.decay_scale = 1.0 / (2.0 * eta);
    d.name = "sech";
    return d;
}

void InitialDatum::validate() const {
    double C = 0;
    for (int i = 0; i <= 200; ++i) {
        double x = L * i / 200.0;
        C = std::max(C, std::abs(q(x)) * std::pow(1.0 + x, 8));
    }
    // decay surrogate: the bound must be attained well inside the window
    for (int i = 0; i <= 40; ++i) {
        double x = L + (0.5 * L) * i / 40.0;
        if (std::abs(q(x)) * std::pow(1.0 + x, 8) > std::max(1e-10, 1e-10 * C))
            throw ValidationError("initial datum does not satisfy the decay surrogate");
    }
}

// --- adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) --------------------

namespace {

using State = std::array<cplx, 4>;

struct OscillatorRHS {
    const InitialDatum* q0;
    cplx k;

    State operator()(double x, const State& y) const {
        cplx q = q0->q(x);
        cplx qc = std::conj(q);
        cplx E = std::exp(2.0 * I * k * x);
        State f;
        f[0] = q * E * y[1];
        f[1] = -qc * y[0] / E;
        f[2] = q * E * y[3];
        f[3] = -qc * y[2] / E;
        return f;
    }
};

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

template <class RHS>
State integrate(const RHS& rhs, State y, double x0, double x1, double rtol) {
    double x = x0;
    double dir = x1 > x0 ? 1.0 : -1.0;
    double h = dir * std::max(1e-6, std::abs(x1 - x0) / 100.0);
    State k1 = rhs(x, y);
    int rejects_in_row = 0;
    for (int step = 0; step < 2000000; ++step) {
        if ((x - x1) * dir >= -1e-15 * std::abs(x1 - x0 + 1e-30)) break;
        if ((x + 1.05 * h - x1) * dir > 0) h = x1 - x;

        auto axpy = [&](std::initializer_list<std::pair<double, const State*>> terms) {
            State out = y;
            for (auto& [c, s] : terms)
                for (int i = 0; i < 4; ++i) out[i] += h * c * (*s)[i];
            return out;
        };
        State k2 = rhs(x + c2 * h, axpy({{a21, &k1}}));
        State k3 = rhs(x + c3 * h, axpy({{a31, &k1}, {a32, &k2}}));
        State k4 = rhs(x + c4 * h, axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        State k5 = rhs(x + c5 * h, axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        State k6 = rhs(x + h, axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        State y5 = axpy({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        State k7 = rhs(x + h, y5);

        double err = 0, scale = 0;
        for (int i = 0; i < 4; ++i) {
            cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
            double sc = 1.0 + std::max(std::abs(y[i]), std::abs(y5[i]));
            err += std::norm(e / sc);
            scale += 1.0;
        }
        err = std::sqrt(err / scale) / rtol;

        if (err <= 1.0) {
            x += h;
            y = y5;
            k1 = k7;  // FSAL
            rejects_in_row = 0;
        } else if (++rejects_in_row > 60) {
            char msg[128];
            std::snprintf(msg, sizeof msg, "integrator step failure at x = %.6g", x);
            throw NumericalError(msg);
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::min(5.0, std::max(0.2, fac));
    }
    return y;
}

}  // namespace

Mat2 jost_at_zero(const InitialDatum& q0, cplx k, double rtol) {
    State y = {1.0, 0.0, 0.0, 1.0};
    if (q0.name != "zero") {
        OscillatorRHS rhs{&q0, k};
        y = integrate(rhs, y, q0.L, 0.0, rtol);
    }
    Mat2 m;
    m << y[0], y[2], y[1], y[3];  // oscillation factors are unity at x = 0
    return m;
}

Mat2 ScatteringData::jost(cplx k) const {
    std::pair<double, double> key{k.real(), k.imag()};
    {
        std::lock_guard<std::mutex> lock(cache_->mtx);
        auto it = cache_->map.find(key);
        if (it != cache_->map.end()) return it->second;
    }
    Mat2 m = jost_at_zero(datum, k);
    std::lock_guard<std::mutex> lock(cache_->mtx);
    cache_->map.emplace(key, m);
    return m;
}

cplx ScatteringData::a(cplx k) const { return jost(k)(0, 0); }
cplx ScatteringData::b(cplx k) const { return -jost(k)(0, 1); }

cplx ScatteringData::a_deriv(cplx k) const {
    double r = std::max(1e-2 * std::abs(k.imag()), 1e-4);
    const int n = 24;
    cplx acc = 0;
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * PI * j / n;
        cplx e = std::exp(I * th);
        acc += a(k + r * e) / e;
    }
    return acc / (r * (double)n);
}

double ScatteringData::unitarity_residual() const {
    double worst = 0;
    for (size_t i = 0; i < kgrid.size(); ++i)
        worst = std::max(worst,
                         std::abs(std::norm(a_grid[i]) + std::norm(b_grid[i]) - 1.0));
    return worst;
}

ScatteringData scattering_pair(const InitialDatum& q0, const std::vector<double>& grid,
                               bool parallel, double rtol) {
    q0.validate();
    ScatteringData sd;
    sd.datum = q0;
    sd.kgrid = grid;
    sd.a_grid.resize(grid.size());
    sd.b_grid.resize(grid.size());
    parallel_for(
        (int)grid.size(),
        [&](int i) {
            Mat2 m = jost_at_zero(q0, grid[i], rtol);
            sd.a_grid[i] = m(0, 0);
            sd.b_grid[i] = -m(0, 1);
        },
        parallel);
    if (sd.unitarity_residual() > 1e-6)
        throw NumericalError("scattering unitarity residual above 1e-6");
    return sd;
}

// --- discrete spectrum ------------------------------------------------------

namespace {

// accumulate the winding of a along the segment, subdividing until the
// increment per step is below pi/2
double arg_sweep(const ScatteringData& sd, cplx z0, cplx z1, int depth = 0) {
    cplx a0 = sd.a(z0), a1 = sd.a(z1);
    double d = std::arg(a1 / a0);
    if (std::abs(d) < PI / 2 && depth > 2) return d;
    if (depth > 14) {
        if (std::abs(a0) < 1e-12 || std::abs(a1) < 1e-12)
            throw NumericalError("winding sweep hit a zero on the box boundary");
        return d;
    }
    cplx mid = 0.5 * (z0 + z1);
    return arg_sweep(sd, z0, mid, depth + 1) + arg_sweep(sd, mid, z1, depth + 1);
}

}  // namespace

int winding_number(const ScatteringData& sd, cplx lo, cplx hi) {
    cplx c1 = lo, c2 = cplx(hi.real(), lo.imag()), c3 = hi, c4 = cplx(lo.real(), hi.imag());
    double total = arg_sweep(sd, c1, c2) + arg_sweep(sd, c2, c3) + arg_sweep(sd, c3, c4) +
                   arg_sweep(sd, c4, c1);
    return (int)std::lround(total / (2.0 * PI));
}

static void collect_zeros(const ScatteringData& sd, cplx lo, cplx hi, std::vector<cplx>& out,
                          int depth = 0) {
    int n = winding_number(sd, lo, hi);
    if (n == 0) return;
    double w = hi.real() - lo.real(), h = hi.imag() - lo.imag();
    if (n == 1 || depth >= 24 || (w < 1e-6 && h < 1e-6)) {
        // Newton refinement from the box center
        cplx k = 0.5 * (lo + hi);
        for (int it = 0; it < 60; ++it) {
            cplx fa = sd.a(k), da = sd.a_deriv(k);
            if (std::abs(da) < 1e-300) break;
            cplx step = fa / da;
            k -= step;
            if (std::abs(step) < 1e-12) break;
        }
        if (n != 1) throw NumericalError("unresolved spectrum: winding did not separate");
        if (!(k.imag() > 0)) throw NumericalError("refined zero left the upper half plane");
        out.push_back(k);
        return;
    }
    if (w >= h) {
        double mid = lo.real() + 0.5 * w;
        collect_zeros(sd, lo, cplx(mid, hi.imag()), out, depth + 1);
        collect_zeros(sd, cplx(mid, lo.imag()), hi, out, depth + 1);
    } else {
        double mid = lo.imag() + 0.5 * h;
        collect_zeros(sd, lo, cplx(hi.real(), mid), out, depth + 1);
        collect_zeros(sd, cplx(lo.real(), mid), hi, out, depth + 1);
    }
}

void discrete_spectrum(ScatteringData& sd, cplx lo, cplx hi,
                       const std::vector<cplx>* external_norming) {
    sd.zeros.clear();
    sd.norming.clear();
    collect_zeros(sd, lo, hi, sd.zeros);
    std::sort(sd.zeros.begin(), sd.zeros.end(),
              [](cplx u, cplx v) { return u.imag() < v.imag(); });
    int count = winding_number(sd, lo, hi);
    if (count != (int)sd.zeros.size())
        throw NumericalError("zero count disagrees with the boundary winding number");
    if (external_norming) {
        if (external_norming->size() != sd.zeros.size())
            throw ValidationError("external coupling-constant list has wrong length");
        sd.norming = *external_norming;
        return;
    }
    for (cplx kj : sd.zeros) {
        cplx bj = sd.b(kj);
        if (std::abs(bj) < 1e-12)
            throw ReflectionlessError(
                "reflection coefficient vanishes at an eigenvalue; supply coupling constants "
                "externally");
        sd.norming.push_back(1.0 / (I * bj * sd.a_deriv(kj)));
    }
}

void export_scattering_csv(const ScatteringData& sd, const std::string& path) {
    std::ofstream out(path);
    out << "k,re_a,im_a,re_b,im_b\n";
    char buf[256];
    for (size_t i = 0; i < sd.kgrid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%.12e,%.12e\n", sd.kgrid[i],
                      sd.a_grid[i].real(), sd.a_grid[i].imag(), sd.b_grid[i].real(),
                      sd.b_grid[i].imag());
        out << buf;
    }
}

void export_spectrum_json(const ScatteringData& sd, const std::string& path) {
    std::ofstream out(path);
    char buf[256];
    out << "{\n  \"spectrum\": [\n";
    for (size_t j = 0; j < sd.zeros.size(); ++j) {
        std::snprintf(buf, sizeof buf,
                      "    {\"re_k\": %.12e, \"im_k\": %.12e, \"re_m1\": %.12e, \"im_m1\": "
                      "%.12e}%s\n",
                      sd.zeros[j].real(), sd.zeros[j].imag(), sd.norming[j].real(),
                      sd.norming[j].imag(), j + 1 < sd.zeros.size() ? "," : "");
        out << buf;
    }
    out << "  ]\n}\n";
}

}  // namespace nlshalf
