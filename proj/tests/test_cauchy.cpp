#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nlshalf/arc.hpp"

using namespace nlshalf;

static ScalarField circle_field(cplx center, double radius, int npanels, int n) {
    ScalarField f;
    ScalarField::Piece piece;
    for (int p = 0; p < npanels; ++p) {
        double a0 = 2.0 * PI * p / npanels, a1 = 2.0 * PI * (p + 1) / npanels;
        CurveMap g = [=](double t) { return center + radius * std::exp(I * t); };
        CurveMap dg = [=](double t) { return radius * I * std::exp(I * t); };
        piece.panels.push_back(make_panel(g, dg, a0, a1, n));
    }
    f.pieces.push_back(piece);
    return f;
}

TEST_CASE("cauchy transform of analytic density on a closed circle") {
    auto f = circle_field(cplx(0.3, 0.1), 1.0, 6, 16);
    f.sample([](cplx s) { return std::exp(s); });

    // inside: reproduces the function; outside: zero
    cplx zin(0.5, 0.3), zout(2.5, 1.0);
    CHECK(std::abs(f.eval(zin) - std::exp(zin)) < 1e-12);
    CHECK(std::abs(f.eval(zout)) < 1e-12);

    // near-contour evaluation exercises the pole-subtraction path
    cplx znear = cplx(0.3, 0.1) + 0.999 * std::exp(I * 0.4);
    CHECK(std::abs(f.eval(znear) - std::exp(znear)) < 1e-10);
    cplx znear_out = cplx(0.3, 0.1) + 1.001 * std::exp(I * 2.2);
    CHECK(std::abs(f.eval(znear_out)) < 1e-10);
}

TEST_CASE("segment transform matches closed form for the constant density") {
    ScalarField f;
    ScalarField::Piece piece;
    piece.panels.push_back(segment_panel(cplx(-1, 0), cplx(1, 0), 20));
    f.pieces.push_back(piece);
    f.sample([](cplx) { return cplx(1.0); });

    for (cplx z : {cplx(0.3, 0.7), cplx(-2.0, 0.1), cplx(0.1, -1e-3)}) {
        cplx expect = std::log((z - 1.0) / (z + 1.0)) / (2.0 * PI * I);
        CHECK(std::abs(f.eval(z) - expect) < 1e-11);
    }
}

TEST_CASE("plemelj jump and principal value on a curved panel") {
    // density on a shallow arc; C+ - C- = u, C+ + C- = 2 PV
    ScalarField f;
    ScalarField::Piece piece;
    CurveMap g = [](double t) { return cplx(t, 0.2 * std::sin(t)); };
    CurveMap dg = [](double t) { return cplx(1.0, 0.2 * std::cos(t)); };
    piece.panels.push_back(make_panel(g, dg, -1.0, 0.0, 18));
    piece.panels.push_back(make_panel(g, dg, 0.0, 1.0, 18));
    f.pieces.push_back(piece);
    auto dens = [](cplx s) { return std::cos(s) + 0.3 * I * s; };
    f.sample(dens);

    for (double y : {-0.4, 0.15, 0.8}) {
        cplx cp = f.eval_boundary(0, 1, y, +1);
        cplx cm = f.eval_boundary(0, 1, y, -1);
        cplx zy = piece.panels[1].zmap(y);
        CHECK(std::abs((cp - cm) - dens(zy)) < 1e-11);
        // consistency with off-contour limits
        cplx nrm = I * piece.panels[1].dzmap(y) / std::abs(piece.panels[1].dzmap(y));
        double eps = 1e-6;
        cplx above = f.eval(zy + eps * nrm);
        CHECK(std::abs(above - cp) < 2e-5);  // O(eps) boundary approach
    }
}

TEST_CASE("graded breaks cover the interval monotonically") {
    auto u = graded_breaks(0.0, 2.0, 8, true, false);
    CHECK(u.size() == 9);
    CHECK(u.front() == doctest::Approx(0.0));
    CHECK(u.back() == doctest::Approx(2.0));
    for (size_t i = 0; i + 1 < u.size(); ++i) CHECK(u[i] < u[i + 1]);
    // refined end has the smallest panel
    CHECK(u[1] - u[0] < (u[8] - u[7]) / 4);
}
