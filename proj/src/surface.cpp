#include "nlshalf/surface.hpp"

#include <cmath>
#include <algorithm>
#include <memory>
#include <cstdio>
#include <fstream>

namespace nlshalf {

BackgroundParams::BackgroundParams(double a_, double omega_, double eps_)
    : a(a_), omega(omega_), epsilon(eps_) {
    if (!(a > 0)) throw ValidationError("background amplitude must be positive");
    if (!(omega > -3.0 * a * a && omega < a * a))
        throw ValidationError("background frequency outside admissible window (-3a^2, a^2)");
    b = std::sqrt(0.5 * (a * a - omega));
    if (!(b > 0 && b * b < 2.0 * a * a))
        throw ValidationError("derived wavenumber out of range");
}

const char* region_name(Region r) {
    switch (r) {
        case Region::D1: return "D1";
        case Region::D2: return "D2";
        case Region::D3: return "D3";
        case Region::D4: return "D4";
        default: return "OnSigma";
    }
}

namespace surface {

cplx k_of_z(cplx z, const BackgroundParams& bg) {
    return -bg.b + 0.5 * (z - bg.a * bg.a / z);
}

cplx radical_of_z(cplx z, const BackgroundParams& bg) {
    return 0.5 * (z + bg.a * bg.a / z);
}

cplx radical(const SurfacePoint& p, const BackgroundParams& bg) {
    cplx w = p.k + bg.b;
    double a = bg.a;
    cplx X;
    if (std::abs(w) > 0.5 * a) {
        X = w * std::sqrt(1.0 + a * a / (w * w));
    } else {
        X = std::sqrt(w * w + a * a);
        if (w.real() < 0) X = -X;
    }
    if (p.sheet == 2) X = -X;
    return X;
}

cplx z_of_point(const SurfacePoint& p, const BackgroundParams& bg) {
    return p.k + bg.b + radical(p, bg);
}

SurfacePoint point_of_z(cplx z, const BackgroundParams& bg) {
    return SurfacePoint{k_of_z(z, bg), std::abs(z) >= bg.a ? 1 : 2};
}

cplx dispersion(const SurfacePoint& p, const BackgroundParams& bg) {
    return 2.0 * (p.k - bg.b) * radical(p, bg);
}

cplx dispersion_z(cplx z, const BackgroundParams& bg) {
    return (k_of_z(z, bg) - bg.b) * (z + bg.a * bg.a / z);
}

cplx dispersion_z_deriv(cplx z, const BackgroundParams& bg) {
    double a2 = bg.a * bg.a;
    return z + a2 * a2 / (z * z * z) - 2.0 * bg.b + 2.0 * a2 * bg.b / (z * z);
}

static Region classify_signs(double imk, double imw, double tol) {
    if (std::abs(imw) < tol) return Region::OnSigma;
    if (imk > 0) return imw > 0 ? Region::D1 : Region::D2;
    return imw > 0 ? Region::D3 : Region::D4;
}

Region classify(const SurfacePoint& p, const BackgroundParams& bg, double tol) {
    return classify_signs(p.k.imag(), dispersion(p, bg).imag(), tol);
}

Region classify_z(cplx z, const BackgroundParams& bg, double tol) {
    return classify_signs(k_of_z(z, bg).imag(), dispersion_z(z, bg).imag(), tol);
}

Mat2 background_E_z(cplx z, const BackgroundParams& bg) {
    double a = bg.a;
    if (std::abs(z - I * a) < 1e-12 * a || std::abs(z + I * a) < 1e-12 * a)
        throw NumericalError("background frame is singular at a branch point");
    cplx s = std::sqrt(z * z + a * a);
    cplx P = z / s;
    cplx N = -a / s;
    cplx ph = std::exp(I * bg.epsilon);
    Mat2 E;
    E << P, I * ph * N, I * N / ph, P;
    return E;
}

Mat2 background_E(const SurfacePoint& p, const BackgroundParams& bg) {
    return background_E_z(z_of_point(p, bg), bg);
}

Mat2 background_H(double t, const SurfacePoint& p, const BackgroundParams& bg) {
    Mat2 H = background_E(p, bg);
    cplx rot = std::exp(2.0 * I * bg.omega * t);
    H(0, 1) *= rot;
    H(1, 0) /= rot;
    return H;
}

Mat2 background_Psi(double t, const SurfacePoint& p, const BackgroundParams& bg) {
    Mat2 Psi = background_H(t, p, bg);
    cplx ph = std::exp(I * (bg.omega - dispersion(p, bg)) * t);
    Psi.col(0) *= ph;
    Psi.col(1) /= ph;
    return Psi;
}

}  // namespace surface

const char* arc_label_name(ArcLabel l) {
    switch (l) {
        case ArcLabel::R_upper_sheet1: return "R_upper_sheet1";
        case ArcLabel::R_sheet2: return "R_sheet2";
        case ArcLabel::Gamma_12: return "Gamma_12";
        case ArcLabel::Gamma_21: return "Gamma_21";
        case ArcLabel::GammaBar_12: return "GammaBar_12";
        default: return "GammaBar_21";
    }
}

const SigmaArc& ContourGeometry::arc(ArcLabel l) const {
    for (const auto& a : arcs)
        if (a.label == l) return a;
    throw ValidationError("arc label not present in contour");
}

// --- level-arc tracing -----------------------------------------------------

namespace {

struct LevelTable {
    // theta(log rho) samples of the arc Im dispersion = 0 in the upper half
    std::vector<double> lr, th;

    double guess(double logr) const {
        if (logr <= lr.front()) return th.front();
        if (logr >= lr.back()) return th.back();
        auto it = std::upper_bound(lr.begin(), lr.end(), logr);
        size_t i = it - lr.begin();
        double w = (logr - lr[i - 1]) / (lr[i] - lr[i - 1]);
        return th[i - 1] + w * (th[i] - th[i - 1]);
    }
};

double newton_theta(double rho, double th0, const BackgroundParams& bg) {
    double th = th0;
    for (int it = 0; it < 60; ++it) {
        cplx z = rho * std::exp(I * th);
        double F = surface::dispersion_z(z, bg).imag();
        double dF = (z * surface::dispersion_z_deriv(z, bg)).real();
        if (std::abs(dF) < 1e-300)
            throw NumericalError("level-arc continuation lost transversality");
        double step = F / dF;
        th -= step;
        if (std::abs(step) < 1e-13) return th;
    }
    throw NumericalError("level-arc Newton did not converge");
}

LevelTable trace_level(const BackgroundParams& bg, int resolution, double rho_lo,
                       double rho_hi) {
    LevelTable tab;
    double a = bg.a;
    // march outward and inward from the branch point z = i a
    auto tangent = [&](cplx z) {
        cplx d = std::conj(surface::dispersion_z_deriv(z, bg));
        return d / std::abs(d);
    };
    double base_step = a / std::max(16, resolution / 4);
    std::vector<std::pair<double, double>> pts;  // (log rho, theta)
    pts.push_back({std::log(a), PI / 2});
    for (int dir = 0; dir < 2; ++dir) {
        cplx z = I * a;
        cplx last = z;
        for (int it = 0; it < 200000; ++it) {
            cplx t = tangent(z);
            // choose the branch that moves outward (dir 0) or inward (dir 1)
            double sgn = ((std::abs(z + base_step * t) > std::abs(z)) == (dir == 0)) ? 1.0 : -1.0;
            double step = base_step * std::min(4.0, std::max(0.2, std::abs(z) / a));
            cplx zp = z + sgn * step * t;
            // Newton correction back onto the level set along the normal
            for (int c = 0; c < 4; ++c) {
                cplx n = I * tangent(zp);
                double F = surface::dispersion_z(zp, bg).imag();
                double dF = (surface::dispersion_z_deriv(zp, bg) * n).imag();
                if (std::abs(dF) < 1e-300) throw NumericalError("level continuation step collapse");
                zp -= (F / dF) * n;
            }
            if (std::abs(surface::dispersion_z(zp, bg).imag()) >
                1e-8 * (1.0 + std::abs(surface::dispersion_z(zp, bg)))) {
                char msg[160];
                std::snprintf(msg, sizeof msg,
                              "level continuation failed near z = %.6g + %.6gi", last.real(),
                              last.imag());
                throw NumericalError(msg);
            }
            if (zp.imag() <= 0) throw NumericalError("level arc left the upper half plane");
            if ((dir == 0 && std::abs(zp) <= std::abs(z)) ||
                (dir == 1 && std::abs(zp) >= std::abs(z)))
                throw NumericalError("level arc is not radially monotone");
            last = z = zp;
            pts.push_back({std::log(std::abs(z)), std::arg(z)});
            if (dir == 0 && std::abs(z) > rho_hi * 1.05) break;
            if (dir == 1 && std::abs(z) < rho_lo * 0.95) break;
        }
    }
    std::sort(pts.begin(), pts.end());
    for (auto& pr : pts) {
        if (!tab.lr.empty() && pr.first - tab.lr.back() < 1e-12) continue;
        tab.lr.push_back(pr.first);
        tab.th.push_back(pr.second);
    }
    return tab;
}

}  // namespace

ContourGeometry trace_sigma(const BackgroundParams& bg, int resolution, double radius) {
    if (resolution < 16) throw ValidationError("trace resolution must be >= 16");
    ContourGeometry geo;
    geo.bg = bg;
    geo.radius = radius > 0 ? radius : 40.0 * std::max({1.0, bg.a, bg.b});
    geo.branch_upper = cplx(-bg.b, bg.a);
    geo.branch_lower = cplx(-bg.b, -bg.a);
    double R = geo.radius, a = bg.a, b = bg.b;

    // chart endpoints of the two real-line copies at |k| = R
    double zmax_pos = (R + b) + std::hypot(R + b, a);           // k=+R, upper copy
    double zmin_pos = a * a / ((R - b) + std::hypot(R - b, a)); // k=-R, upper copy
    double zmax_neg = (R - b) + std::hypot(R - b, a);           // |z| at k=-R, lower copy
    double zmin_neg = a * a / ((R + b) + std::hypot(R + b, a)); // |z| at k=+R, lower copy

    auto logmap = [](double z0, double z1, double sign) {
        // geometric sweep from z0 to z1 (moduli), with sign applied
        double l0 = std::log(z0), l1 = std::log(z1);
        CurveMap g = [=](double t) { return sign * std::exp(l0 + (l1 - l0) * t); };
        CurveMap dg = [=](double t) { return sign * (l1 - l0) * std::exp(l0 + (l1 - l0) * t); };
        return std::pair<CurveMap, CurveMap>(g, dg);
    };

    {
        SigmaArc arc;
        arc.label = ArcLabel::R_upper_sheet1;
        auto [g, dg] = logmap(zmax_pos, zmin_pos, +1.0);
        arc.zmap = g;
        arc.dzmap = dg;
        arc.side_plus = Region::D4;
        arc.side_minus = Region::D1;
        geo.arcs.push_back(arc);
    }
    {
        SigmaArc arc;
        arc.label = ArcLabel::R_sheet2;
        auto [g, dg] = logmap(zmin_neg, zmax_neg, -1.0);
        arc.zmap = g;
        arc.dzmap = dg;
        arc.side_plus = Region::D3;
        arc.side_minus = Region::D2;
        geo.arcs.push_back(arc);
    }

    double rho_hi = zmax_pos, rho_lo = zmin_neg;
    auto table = std::make_shared<LevelTable>(trace_level(bg, resolution, rho_lo, rho_hi));

    auto level_maps = [table, bg](double r0, double r1, double conj_sign) {
        double l0 = std::log(r0), l1 = std::log(r1);
        CurveMap g = [=](double t) {
            double lr = l0 + (l1 - l0) * t;
            double rho = std::exp(lr);
            double th = newton_theta(rho, table->guess(lr), bg);
            cplx z = rho * std::exp(I * th);
            return conj_sign > 0 ? z : std::conj(z);
        };
        CurveMap dg = [=](double t) {
            double lr = l0 + (l1 - l0) * t;
            double rho = std::exp(lr);
            double th = newton_theta(rho, table->guess(lr), bg);
            cplx z = rho * std::exp(I * th);
            cplx w = surface::dispersion_z_deriv(z, bg) * std::exp(I * th);
            double dth = -w.imag() / (rho * w.real());
            // dz/dt = dz/drho * drho/dt
            cplx dzdrho = std::exp(I * th) * (1.0 + I * rho * dth);
            cplx d = dzdrho * rho * (l1 - l0);
            return conj_sign > 0 ? d : std::conj(d);
        };
        return std::pair<CurveMap, CurveMap>(g, dg);
    };

    {
        SigmaArc arc;  // Gamma, sheet-1 half: from far out down to the branch point
        arc.label = ArcLabel::Gamma_12;
        auto [g, dg] = level_maps(rho_hi, a, +1.0);
        arc.zmap = g;
        arc.dzmap = dg;
        arc.side_plus = Region::D1;
        arc.side_minus = Region::D2;
        geo.arcs.push_back(arc);
    }
    {
        SigmaArc arc;  // Gamma, sheet-2 half: branch point toward the second infinity
        arc.label = ArcLabel::Gamma_21;
        auto [g, dg] = level_maps(a, rho_lo, +1.0);
        arc.zmap = g;
        arc.dzmap = dg;
        arc.side_plus = Region::D1;
        arc.side_minus = Region::D2;
        geo.arcs.push_back(arc);
    }
    {
        SigmaArc arc;  // conjugate arc, |z| < a half first
        arc.label = ArcLabel::GammaBar_21;
        auto [g, dg] = level_maps(rho_lo, a, -1.0);
        arc.zmap = g;
        arc.dzmap = dg;
        arc.side_plus = Region::D4;
        arc.side_minus = Region::D3;
        geo.arcs.push_back(arc);
    }
    {
        SigmaArc arc;
        arc.label = ArcLabel::GammaBar_12;
        auto [g, dg] = level_maps(a, rho_hi, -1.0);
        arc.zmap = g;
        arc.dzmap = dg;
        arc.side_plus = Region::D4;
        arc.side_minus = Region::D3;
        geo.arcs.push_back(arc);
    }

    // verify the level arcs really sit on the contour
    for (const auto& arc : geo.arcs) {
        if (arc.label == ArcLabel::R_upper_sheet1 || arc.label == ArcLabel::R_sheet2) continue;
        for (int i = 1; i < resolution; ++i) {
            double t = (double)i / resolution;
            cplx z = arc.zmap(t);
            double imw = surface::dispersion_z(z, bg).imag();
            double scale = 1.0 + std::abs(surface::dispersion_z(z, bg));
            if (std::abs(imw) > 1e-8 * scale)
                throw NumericalError("traced arc violates the level-set tolerance");
        }
    }
    return geo;
}

void ContourGeometry::export_csv(const std::string& path, int samples_per_arc) const {
    std::ofstream out(path);
    out << "# contour export; orientation = direction of increasing s; + side is left of travel\n";
    out << "arc_id,s,re_k,im_k,sheet,region_left,region_right\n";
    char buf[256];
    for (size_t id = 0; id < arcs.size(); ++id) {
        const auto& arc = arcs[id];
        for (int i = 0; i <= samples_per_arc; ++i) {
            double s = (double)i / samples_per_arc;
            cplx z = arc.zmap(s);
            SurfacePoint p = surface::point_of_z(z, bg);
            std::snprintf(buf, sizeof buf, "%s,%.12e,%.12e,%.12e,%d,%s,%s\n",
                          arc_label_name(arc.label), s, p.k.real(), p.k.imag(), p.sheet,
                          region_name(arc.side_plus), region_name(arc.side_minus));
            out << buf;
        }
    }
}

}  // namespace nlshalf
