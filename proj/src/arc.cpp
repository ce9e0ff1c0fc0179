#include "nlshalf/arc.hpp"

#include <cmath>

namespace nlshalf {

void Panel::init() {
    const auto& b = cheb::basis(n);
    z.resize(n);
    dz.resize(n);
    for (int j = 0; j < n; ++j) {
        z[j] = zmap(b.x[j]);
        dz[j] = dzmap(b.x[j]);
    }
    za = zmap(-1.0);
    zb = zmap(1.0);
    length = 0;
    for (int j = 0; j + 1 < n; ++j) length += std::abs(z[j + 1] - z[j]);
    length += std::abs(z[0] - za) + std::abs(zb - z[n - 1]);
}

Panel make_panel(const CurveMap& g, const CurveMap& dg, double t0, double t1, int n) {
    Panel p;
    double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    p.zmap = [g, mid, half](double x) { return g(mid + half * x); };
    p.dzmap = [dg, mid, half](double x) { return half * dg(mid + half * x); };
    p.n = n;
    p.init();
    return p;
}

Panel segment_panel(cplx za, cplx zb, int n) {
    Panel p;
    cplx mid = 0.5 * (za + zb), half = 0.5 * (zb - za);
    p.zmap = [mid, half](double x) { return mid + half * x; };
    p.dzmap = [half](double) { return half; };
    p.n = n;
    p.init();
    return p;
}

std::vector<double> graded_breaks(double t0, double t1, int npanels, bool refine_left,
                                  bool refine_right, double ratio) {
    std::vector<double> u(npanels + 1);
    if (!refine_left && !refine_right) {
        for (int i = 0; i <= npanels; ++i) u[i] = (double)i / npanels;
    } else if (refine_left && refine_right) {
        // symmetric geometric grading toward both ends
        int half = npanels / 2;
        std::vector<double> left = graded_breaks(0.0, 0.5, half, true, false, ratio);
        std::vector<double> right = graded_breaks(0.5, 1.0, npanels - half, false, true, ratio);
        u.assign(left.begin(), left.end());
        u.insert(u.end(), right.begin() + 1, right.end());
    } else {
        // geometric sizes: smallest panel adjacent to the refined end
        double s = 0, len = 1;
        std::vector<double> sizes(npanels);
        for (int i = 0; i < npanels; ++i) {
            sizes[i] = len;
            s += len;
            len /= ratio;
        }
        double acc = 0;
        u[0] = 0;
        for (int i = 0; i < npanels; ++i) {
            acc += sizes[i] / s;
            u[i + 1] = acc;
        }
        u[npanels] = 1.0;
        if (refine_right) {
            std::vector<double> v(npanels + 1);
            for (int i = 0; i <= npanels; ++i) v[i] = 1.0 - u[npanels - i];
            u = v;
        }
    }
    for (auto& t : u) t = t0 + (t1 - t0) * t;
    u.front() = t0;
    u.back() = t1;
    return u;
}

// Newton for the parameter-plane preimage of z under the panel map.
// The map is extended off [-1,1] by Chebyshev interpolation of the cached
// nodes so the iteration works for complex parameters.
static bool preimage(const Panel& p, cplx z, double x_init, cplx& xstar) {
    const auto& b = cheb::basis(p.n);
    std::vector<cplx> cz(p.n), cdz(p.n);
    for (int m = 0; m < p.n; ++m) {
        cplx am = 0, dm = 0;
        for (int j = 0; j < p.n; ++j) {
            am += b.V(m, j) * p.z[j];
            dm += b.V(m, j) * p.dz[j];
        }
        cz[m] = am;
        cdz[m] = dm;
    }
    auto evalc = [](const std::vector<cplx>& c, cplx y) {
        cplx b1 = 0, b2 = 0;
        for (int m = (int)c.size() - 1; m >= 1; --m) {
            cplx t = 2.0 * y * b1 - b2 + c[m];
            b2 = b1;
            b1 = t;
        }
        return y * b1 - b2 + c[0];
    };
    cplx x = x_init;
    for (int it = 0; it < 50; ++it) {
        cplx f = evalc(cz, x) - z;
        cplx d = evalc(cdz, x);
        if (std::abs(d) < 1e-300) return false;
        cplx step = f / d;
        x -= step;
        if (std::abs(step) < 1e-14) break;
        if (std::abs(x) > 4.0) return false;
    }
    if (std::abs(evalc(cz, x) - z) > 1e-9 * (1.0 + std::abs(z))) return false;
    xstar = x;
    return true;
}

void cauchy_weights(const Panel& p, cplx z, const PanelTarget& tgt, std::vector<cplx>& w) {
    const auto& b = cheb::basis(p.n);
    w.assign(p.n, cplx(0.0));
    const cplx itwopi = 1.0 / (2.0 * PI * I);

    if (tgt.kind == PanelTarget::OnPanel) {
        std::vector<cplx> Im;
        cheb::cauchy_basis_boundary(p.n, tgt.y, tgt.side, Im);
        // modal part for the straightened pole 1/(x-y)
        for (int i = 0; i < p.n; ++i) {
            cplx acc = 0;
            for (int m = 0; m < p.n; ++m) acc += b.V(m, i) * Im[m];
            w[i] += itwopi * acc;
        }
        // smooth curvature remainder R(x,y) = g'(x)/(g(x)-g(y)) - 1/(x-y)
        cplx zy = p.zmap(tgt.y), dzy = p.dzmap(tgt.y);
        for (int i = 0; i < p.n; ++i) {
            double xi = b.x[i];
            cplx R;
            if (std::abs(xi - tgt.y) < 1e-9) {
                // limit value g''/(2 g')
                double h = 1e-5;
                cplx d2 = (p.dzmap(std::min(1.0, tgt.y + h)) - p.dzmap(std::max(-1.0, tgt.y - h))) /
                          (std::min(1.0, tgt.y + h) - std::max(-1.0, tgt.y - h));
                R = d2 / (2.0 * dzy);
            } else {
                R = p.dz[i] / (p.z[i] - zy) - 1.0 / (xi - tgt.y);
            }
            w[i] += itwopi * b.w[i] * R;
        }
        return;
    }

    double dist = 1e300;
    double xnear = 0;
    for (int j = 0; j < p.n; ++j) {
        double d = std::abs(z - p.z[j]);
        if (d < dist) {
            dist = d;
            xnear = b.x[j];
        }
    }
    dist = std::min({dist, std::abs(z - p.za), std::abs(z - p.zb)});

    if (dist > 2.5 * p.length) {
        for (int i = 0; i < p.n; ++i) w[i] = itwopi * b.w[i] * p.dz[i] / (p.z[i] - z);
        return;
    }

    cplx xstar;
    bool ok = preimage(p, z, xnear, xstar);
    bool on_cut = ok && std::abs(xstar.imag()) < 1e-12 && std::abs(xstar.real()) < 1.0 + 1e-9;
    if (!ok || on_cut) {
        // fall back to plain quadrature; accuracy is the caller's concern
        // only when geometry is degenerate
        for (int i = 0; i < p.n; ++i) w[i] = itwopi * b.w[i] * p.dz[i] / (p.z[i] - z);
        return;
    }
    std::vector<cplx> Im;
    cheb::cauchy_basis(p.n, xstar, Im);
    for (int i = 0; i < p.n; ++i) {
        cplx acc = 0;
        for (int m = 0; m < p.n; ++m) acc += b.V(m, i) * Im[m];
        w[i] += itwopi * acc;
    }
    for (int i = 0; i < p.n; ++i) {
        cplx R = p.dz[i] / (p.z[i] - z) - 1.0 / (b.x[i] - xstar);
        w[i] += itwopi * b.w[i] * R;
    }
}

cplx ScalarField::eval(cplx z) const {
    cplx acc = 0;
    std::vector<cplx> w;
    for (size_t c = 0; c < pieces.size(); ++c) {
        for (size_t p = 0; p < pieces[c].panels.size(); ++p) {
            cauchy_weights(pieces[c].panels[p], z, PanelTarget{}, w);
            const auto& v = vals[c][p];
            cplx s = 0;
            for (size_t j = 0; j < v.size(); ++j) s += w[j] * v[j];
            acc += pieces[c].sign * s;
        }
    }
    return acc;
}

cplx ScalarField::eval_boundary(size_t piece, size_t panel, double y, int side) const {
    cplx acc = 0;
    std::vector<cplx> w;
    cplx zt = pieces[piece].panels[panel].zmap(y);
    for (size_t c = 0; c < pieces.size(); ++c) {
        for (size_t p = 0; p < pieces[c].panels.size(); ++p) {
            PanelTarget tgt;
            if (c == piece && p == panel) {
                tgt.kind = PanelTarget::OnPanel;
                tgt.y = y;
                tgt.side = side;
            }
            cauchy_weights(pieces[c].panels[p], zt, tgt, w);
            const auto& v = vals[c][p];
            cplx s = 0;
            for (size_t j = 0; j < v.size(); ++j) s += w[j] * v[j];
            acc += pieces[c].sign * s;
        }
    }
    return acc;
}

}  // namespace nlshalf
