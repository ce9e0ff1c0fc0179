#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "nlshalf/surface.hpp"

using namespace nlshalf;
using namespace nlshalf::surface;

TEST_CASE("background parameter window") {
    CHECK_NOTHROW(BackgroundParams(1.0, 0.9, 0.0));
    CHECK_THROWS_AS(BackgroundParams(1.0, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(BackgroundParams(1.0, -3.0, 0.0), ValidationError);
    CHECK_THROWS_AS(BackgroundParams(-1.0, 0.5, 0.0), ValidationError);
    BackgroundParams bg(1.0, 0.5, 0.0);
    CHECK(bg.b == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(bg.a * bg.a - 2.0 * bg.b * bg.b == doctest::Approx(bg.omega).epsilon(1e-15));
}

TEST_CASE("radical branch values") {
    BackgroundParams bg(1.0, 0.5, 0.0);  // a=1, b=0.5
    // zero at the branch point
    CHECK(std::abs(radical({cplx(-0.5, 1.0), 1}, bg)) < 1e-12);
    // direct high-precision evaluation at k=10 on sheet 1
    double expect = std::sqrt(10.5 * 10.5 + 1.0);  // sqrt(111.25)
    CHECK(std::abs(radical({cplx(10.0, 0.0), 1}, bg) - expect) < 1e-12);
    CHECK(expect == doctest::Approx(10.54751).epsilon(1e-6));
    // sheet symmetry at a generic point
    cplx k(3.0, 2.0);
    CHECK(std::abs(radical({k, 2}, bg) + radical({k, 1}, bg)) < 1e-14);
    // asymptotic to k + b on sheet 1
    cplx kk(300.0, 40.0);
    CHECK(std::abs(radical({kk, 1}, bg) - (kk + bg.b)) < 0.01);
}

TEST_CASE("chart round trip and sheet tagging") {
    BackgroundParams bg(1.3, -0.7, 0.2);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        cplx z(U(rng), U(rng));
        if (std::abs(std::abs(z) - bg.a) < 0.05 || std::abs(z) < 0.05) continue;
        SurfacePoint p = point_of_z(z, bg);
        CHECK(std::abs(z_of_point(p, bg) - z) < 1e-10 * (1.0 + std::abs(z)));
        CHECK(std::abs(radical(p, bg) - radical_of_z(z, bg)) < 1e-10);
    }
}

TEST_CASE("dispersion values and series") {
    BackgroundParams bg(1.0, 0.5, 0.0);
    // factor (k - b) vanishes
    CHECK(std::abs(dispersion({cplx(0.5, 0.0), 1}, bg)) < 1e-13);
    // branch point
    CHECK(std::abs(dispersion({cplx(-0.5, 1.0), 1}, bg)) < 1e-12);
    // direct value at k=10 against the asymptotic series 2k^2 + w - 2a^2 b/k
    cplx w10 = dispersion({cplx(10.0, 0.0), 1}, bg);
    CHECK(std::abs(w10 - 2.0 * 9.5 * std::sqrt(111.25)) < 1e-10);
    CHECK(std::abs(w10 - (200.0 + 0.5 - 0.1)) < 5e-3);
    // |dispersion - 2k^2 - w| |k| bounded on sheet 1 for |k| in [10, 1e4]
    for (double r : {10.0, 100.0, 1000.0, 10000.0}) {
        cplx k(r / std::sqrt(2.0), r / std::sqrt(2.0));
        cplx d = dispersion({k, 1}, bg) - 2.0 * k * k - bg.omega;
        CHECK(std::abs(d) * std::abs(k) < 10.0);
    }
}

TEST_CASE("region classification") {
    BackgroundParams bg(1.0, 1.0 - 1e-9, 0.0);  // b ~ 0 geometry
    // hand evaluation: k = 0.5i, sheet 1: dispersion ~ 2(0.5i) sqrt(0.75)
    SurfacePoint p{cplx(0.0, 0.5), 1};
    CHECK(std::abs(dispersion(p, bg) - cplx(0.0, 2.0 * 0.5 * std::sqrt(0.75))) < 1e-6);
    CHECK(classify(p, bg) == Region::D1);
    CHECK(classify({cplx(2.0, 0.0), 1}, bg) == Region::OnSigma);

    // conjugation flips D1 to D4 and D2 to D3
    BackgroundParams bg2(1.0, 0.3, 0.1);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-4.0, 4.0);
    int checked = 0;
    for (int i = 0; i < 5000 && checked < 500; ++i) {
        SurfacePoint q{cplx(U(rng), U(rng)), 1 + (int)(rng() % 2)};
        double imw = dispersion(q, bg2).imag();
        if (std::abs(q.k.imag()) < 1e-3 || std::abs(imw) < 1e-3) continue;
        Region r1 = classify(q, bg2);
        Region r2 = classify({std::conj(q.k), q.sheet}, bg2);
        ++checked;
        if (r1 == Region::D1) CHECK(r2 == Region::D4);
        if (r1 == Region::D2) CHECK(r2 == Region::D3);
        if (r1 == Region::D3) CHECK(r2 == Region::D2);
        if (r1 == Region::D4) CHECK(r2 == Region::D1);
    }
    CHECK(checked >= 400);
}

TEST_CASE("background matrices") {
    BackgroundParams bg(1.0, 0.5, 0.0);
    SurfacePoint p{cplx(2.0, 1.0), 1};
    Mat2 E = background_E(p, bg);
    CHECK(std::abs(E.determinant() - 1.0) < 1e-12);
    // identity at infinity on sheet 1
    Mat2 Einf = background_E({cplx(4000.0, 10.0), 1}, bg);
    CHECK(norm_inf(Mat2(Einf - Mat2::Identity())) < 1e-3);
    // Psi(0, k) = E(k)
    Mat2 Psi0 = background_Psi(0.0, p, bg);
    CHECK(norm_inf(Mat2(Psi0 - E)) < 1e-14);
    // det E stays 1 with a phase and on the second sheet
    BackgroundParams bg3(0.8, -1.1, 0.7);
    Mat2 E3 = background_E({cplx(-1.0, 2.2), 2}, bg3);
    CHECK(std::abs(E3.determinant() - 1.0) < 1e-12);
    CHECK_THROWS_AS(background_E({cplx(-bg.b, bg.a), 1}, bg), NumericalError);
}

TEST_CASE("background flow solves the boundary linear system") {
    // residual of dPsi/dt + 2 i k^2 [sigma3, Psi] = Qt Psi at x = 0 with the
    // plane-wave potential; centered differences in t
    BackgroundParams bg(1.1, 0.4, 0.3);
    auto Qt = [&](double t, cplx k) {
        cplx q = bg.a * std::exp(I * (2.0 * bg.omega * t + bg.epsilon));
        cplx qx = 2.0 * I * bg.b * q;
        double q2 = std::norm(q);
        Mat2 Q, Qx, s3;
        Q << 0, q, -std::conj(q), 0;
        Qx << 0, qx, -std::conj(qx), 0;
        s3 << 1, 0, 0, -1;
        return Mat2(2.0 * k * Q - I * Qx * s3 + I * q2 * s3);
    };
    for (auto sp : {SurfacePoint{cplx(0.9, 0.7), 1}, SurfacePoint{cplx(-1.4, 0.4), 2}}) {
        double t = 0.37, h = 1e-5;
        Mat2 P0 = background_Psi(t - h, sp, bg), P1 = background_Psi(t, sp, bg),
             P2 = background_Psi(t + h, sp, bg);
        Mat2 dPsi = (P2 - P0) / (2.0 * h);
        Mat2 s3;
        s3 << 1, 0, 0, -1;
        cplx k = sp.k;
        Mat2 resid = dPsi + 2.0 * I * k * k * (s3 * P1 - P1 * s3) - Qt(t, k) * P1;
        CHECK(norm_inf(resid) < 1e-7 * (1.0 + norm_inf(P1)));
    }
}

TEST_CASE("contour trace") {
    BackgroundParams bg(1.0, 0.5, 0.0);
    ContourGeometry geo = trace_sigma(bg, 64);
    CHECK(geo.arcs.size() == 6);
    CHECK(std::abs(geo.branch_upper - cplx(-0.5, 1.0)) < 1e-14);
    CHECK(std::abs(geo.branch_lower - cplx(-0.5, -1.0)) < 1e-14);

    for (const auto& arc : geo.arcs) {
        for (int i = 1; i < 40; ++i) {
            double s = i / 40.0;
            cplx z = arc.zmap(s);
            cplx w = dispersion_z(z, bg);
            CHECK(std::abs(w.imag()) < 1e-8 * (1.0 + std::abs(w)));
        }
    }

    // the level arc passes through the branch point
    cplx z_end = geo.arc(ArcLabel::Gamma_12).zmap(1.0);
    CHECK(std::abs(z_end - I * bg.a) < 1e-9);

    // conjugation symmetry: conj of sampled Gamma points lies on GammaBar
    const auto& g12 = geo.arc(ArcLabel::Gamma_12);
    const auto& gb12 = geo.arc(ArcLabel::GammaBar_12);
    for (int i = 0; i <= 10; ++i) {
        double s = i / 10.0;
        cplx z = std::conj(g12.zmap(s));
        double best = 1e300;
        for (int j = 0; j <= 400; ++j) best = std::min(best, std::abs(z - gb12.zmap(j / 400.0)));
        CHECK(best < 1e-6 * (1.0 + std::abs(z)));
    }

    // side regions: probe slightly to the left and right of each arc
    for (const auto& arc : geo.arcs) {
        for (double s : {0.3, 0.6}) {
            cplx z = arc.zmap(s), dz = arc.dzmap(s);
            cplx nrm = I * dz / std::abs(dz);
            double h = 1e-4 * std::max(1.0, std::abs(z));
            CHECK(classify_z(z + h * nrm, bg) == arc.side_plus);
            CHECK(classify_z(z - h * nrm, bg) == arc.side_minus);
        }
    }
}

TEST_CASE("trace with nonzero tilt") {
    // larger b deforms the level arc away from the imaginary axis
    BackgroundParams bg(1.0, -1.5, 0.0);  // b = sqrt(1.25)
    ContourGeometry geo = trace_sigma(bg, 64);
    const auto& g = geo.arc(ArcLabel::Gamma_12);
    bool tilted = false;
    for (int i = 0; i <= 20; ++i)
        if (std::abs(g.zmap(i / 20.0).real()) > 0.05) tilted = true;
    CHECK(tilted);
}

TEST_CASE("region classifier partitions off-contour samples") {
    BackgroundParams bg(1.0, 0.5, 0.0);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    int n = 0;
    for (int i = 0; i < 30000 && n < 10000; ++i) {
        cplx z(U(rng), U(rng));
        if (std::abs(z) < 1e-3) continue;
        double imw = dispersion_z(z, bg).imag();
        if (std::abs(imw) <= 1e-11) continue;  // 10x the classifier tolerance
        ++n;
        CHECK(classify_z(z, bg) != Region::OnSigma);
    }
    CHECK(n == 10000);
}

TEST_CASE("contour export") {
    BackgroundParams bg(1.0, 0.9, 0.0);
    ContourGeometry geo = trace_sigma(bg, 32);
    geo.export_csv("contour_test.csv", 16);
    std::ifstream in("contour_test.csv");
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2 + 6 * 17);
}
