#include <cmath>

#include "photodist/errors.hpp"
#include "photodist/gaussian_state.hpp"
#include "support.hpp"

using namespace photodist;

TEST_CASE("uncertainty_check") {
    const auto vac = uncertainty_check(OneModeGaussianState::vacuum());
    CHECK(vac.slack == 0.0);
    CHECK(vac.valid);

    const auto bad = uncertainty_check({-0.75, 5.0, 0.0, 0.0, 0.0});
    CHECK(bad.slack == -4.0);
    CHECK_FALSE(bad.valid);

    const auto th = uncertainty_check({1.5, 1.5, 0.0, 0.0, 0.0});
    CHECK(th.slack == 2.0);
    CHECK(th.valid);

    // means do not enter
    CHECK(uncertainty_check({0.5, 0.5, 0.0, 3.0, -2.0}).slack == 0.0);
}

TEST_CASE("r_matrix: vacuum and symmetric states") {
    const RMatrix v = r_matrix(OneModeGaussianState::vacuum());
    CHECK(v.r11 == Complex{0.0, 0.0});
    CHECK(v.r22 == Complex{0.0, 0.0});
    CHECK(v.r12 == 0.0); // 1/2 - 2 det = 0 on the minimum-uncertainty boundary
    CHECK(v.y1 == Complex{0.0, 0.0});

    const RMatrix th = r_matrix(OneModeGaussianState::thermal(1.0));
    CHECK(th.r11 == Complex{0.0, 0.0});
    // (1/2 - 2 * 9/4) / (3 + 9/2 + 1/2)
    CHECK_CLOSE(th.r12, -0.5, 1e-15);
}

TEST_CASE("r_matrix: general centered state, plug-in arithmetic") {
    const OneModeGaussianState s{1.2, 0.7, 0.3, 0.0, 0.0};
    const double det = 1.2 * 0.7 - 0.09;
    const double D = 1.9 + 2 * det + 0.5;
    const RMatrix r = r_matrix(s);
    CHECK_CLOSE(r.r11, Complex(0.5, -0.6) / D, 1e-15);
    CHECK_CLOSE(r.r22, std::conj(r.r11), 1e-15);
    CHECK_CLOSE(r.r12, (0.5 - 2 * det) / D, 1e-15);
    CHECK(r.y1 == Complex{0.0, 0.0});
    CHECK(r.y2 == Complex{0.0, 0.0});
}

TEST_CASE("r_matrix: displaced states carry conjugate shifts") {
    const RMatrix r = r_matrix({1.2, 0.7, 0.3, 0.4, -0.9});
    CHECK(std::abs(r.y1) > 0.0);
    CHECK_CLOSE(r.y2, std::conj(r.y1), 1e-15);
}

TEST_CASE("r_matrix: singular denominators") {
    // Tr + 2 det + 1/2 = 0
    try {
        r_matrix({-0.5, -0.5, 0.0, 0.0, 0.0});
        FAIL("expected singular_denominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_denominator);
    }
    // Tr - 2 det - 1/2 = 0 for a coherent state: y is 0/0
    try {
        r_matrix({0.5, 0.5, 0.0, 1.0, 0.0});
        FAIL("expected singular_denominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_denominator);
    }
}

TEST_CASE("hermite_shift: coherent states reduce to <z>") {
    const double q = 0.9, p = -0.4;
    const HermiteShift w = hermite_shift({0.5, 0.5, 0.0, q, p});
    const Complex z = Complex{q, p} / std::sqrt(2.0);
    CHECK_CLOSE(w.w1, z, 1e-15);
    CHECK_CLOSE(w.w2, std::conj(z), 1e-15);
}

TEST_CASE("hermite_shift agrees with R y where y is defined") {
    const OneModeGaussianState s{1.2, 0.7, 0.3, 0.4, -0.9};
    const RMatrix r = r_matrix(s);
    const HermiteShift w = hermite_shift(s);
    CHECK_CLOSE(w.w1, r.r11 * r.y1 + r.r12 * r.y2, 1e-13);
    CHECK_CLOSE(w.w2, r.r12 * r.y1 + r.r22 * r.y2, 1e-13);
}

TEST_CASE("p0: closed forms") {
    CHECK_CLOSE(p0(OneModeGaussianState::vacuum()).value, Complex(1.0, 0.0), 1e-15);
    for (double n : {0.0, 0.3, 1.0, 7.5})
        CHECK_CLOSE(p0(OneModeGaussianState::thermal(n)).value.real(), 1.0 / (n + 1.0), 1e-14);
    for (double r : {0.2, 1.0, 2.5}) {
        const OneModeGaussianState s{std::exp(2 * r) / 2, std::exp(-2 * r) / 2, 0.0, 0.0, 0.0};
        const P0Value v = p0(s);
        CHECK(v.physical);
        CHECK_CLOSE(v.value.real(), 1.0 / std::cosh(r), 1e-14);
    }
    // coherent state: e^{-|alpha|^2}
    const double q = 0.8, p = 0.6;
    CHECK_CLOSE(p0({0.5, 0.5, 0.0, q, p}).value.real(), std::exp(-(q * q + p * p) / 2), 1e-15);
}

TEST_CASE("p0: violation regime is flagged, not thrown") {
    const P0Value v = p0({-0.75, 5.0, 0.0, 0.0, 0.0});
    CHECK_FALSE(v.physical);
    // (-11/8)^{-1/2} on the principal branch
    CHECK_CLOSE(v.value, std::pow(Complex(-11.0 / 8.0, 0.0), -0.5), 1e-15);
    const LogSigned l = p0_log({-0.75, 5.0, 0.0, 0.0, 0.0});
    CHECK_CLOSE(l.value(), v.value, 1e-15);
}

TEST_CASE("from_tau") {
    const XYTState a = from_tau(0.0, 0.5, 0.0);
    CHECK(a.x == 0.5);
    CHECK(from_tau(4.0, 5.0, 0.0).x == -0.75);
    const XYTState b = from_tau(0.0, 2.0, 0.5);
    CHECK(b.x == 0.25);
    CHECK(uncertainty_check(b.to_state()).slack == 0.0);
    try {
        from_tau(1.0, 0.0, 0.0);
        FAIL("expected singular_denominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_denominator);
    }
}

TEST_CASE("squeezed states sit on the uncertainty boundary") {
    for (double r : {0.0, 0.4, 1.3})
        for (double th : {0.0, 0.7, 2.0})
            CHECK_NEAR(uncertainty_check(OneModeGaussianState::squeezed(r, th)).slack, 0.0, 1e-12);
}
