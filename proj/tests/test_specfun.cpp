#include <cmath>
#include <random>
#include <vector>

#include "photodist/errors.hpp"
#include "photodist/gaussian_state.hpp"
#include "photodist/specfun.hpp"
#include "support.hpp"

using namespace photodist;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::invalid_input;
}

} // namespace

TEST_CASE("hermite: low degrees") {
    CHECK(hermite(0, {3.7, -1.2}) == Complex{1.0, 0.0});
    CHECK(hermite(1, {2.0, 0.0}) == Complex{4.0, 0.0});
    CHECK(hermite(4, {0.0, 0.0}) == Complex{12.0, 0.0});
    // H_3 = 8z^3 - 12z
    const Complex z{0.3, 0.8};
    CHECK_CLOSE(hermite(3, z), 8.0 * z * z * z - 12.0 * z, 1e-14);
}

TEST_CASE("hermite: even degrees at zero follow (-1)^m (2m)!/m!") {
    for (int m = 0; m <= 40; ++m) {
        const double log_mag = log_factorial(2 * m) - log_factorial(m);
        const LogSigned h = hermite_log(2 * m, {0.0, 0.0});
        CHECK_CLOSE(h.log_magnitude, log_mag, 1e-13);
        CHECK(h.phase.real() == (m % 2 ? -1.0 : 1.0));
        CHECK(hermite_log(2 * m + 1, {0.0, 0.0}).is_zero());
    }
}

TEST_CASE("hermite: overflow is a range error, the log pathway stays finite") {
    CHECK(code_of([] { hermite(400, {30.0, 0.0}); }) == ErrorCode::range);
    const LogSigned h = hermite_log(400, {30.0, 0.0});
    CHECK(std::isfinite(h.log_magnitude));
    CHECK(h.log_magnitude > 700.0);
    // generating-function check at moderate size: sum H_n(x) t^n / n! = exp(2xt - t^2)
    const double x = 0.7, t = 0.3;
    const auto seq = hermite_log_sequence(80, {x, 0.0});
    double s = 0.0;
    for (int n = 0; n <= 80; ++n)
        s += (seq[n] * LogSigned::from_value(std::pow(t, n)) /
              LogSigned::from_log(log_factorial(n)))
                 .value()
                 .real();
    CHECK_CLOSE(s, std::exp(2 * x * t - t * t), 1e-14);
}

TEST_CASE("hermite_2d: degree zero and domain") {
    RMatrix r{{0.1, 0.2}, {0.1, -0.2}, 0.3, {0.5, 0.1}, {0.5, -0.1}};
    CHECK(hermite_2d(0, r) == Complex{1.0, 0.0});
    CHECK(code_of([&] { hermite_2d(-1, r); }) == ErrorCode::domain);
}

TEST_CASE("hermite_2d: conjugate-symmetric input gives real values") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex r11{u(gen), u(gen)}, y1{u(gen) * 3, u(gen) * 3};
        RMatrix r{r11, std::conj(r11), u(gen), y1, std::conj(y1)};
        for (int n : {1, 2, 5, 11, 20}) {
            const Complex h = hermite_2d(n, r);
            CHECK(std::abs(h.imag()) <= 1e-12 * std::max(1.0, std::abs(h)));
        }
    }
}

TEST_CASE("hermite_2d: vacuum R at zero shift vanishes for n >= 1") {
    const RMatrix r = r_matrix(OneModeGaussianState::vacuum());
    for (int n = 1; n <= 30; ++n)
        CHECK(std::abs(hermite_2d(n, r)) <= 1e-300);
}

TEST_CASE("hermite_2d: scaled route agrees with the automatic route") {
    RMatrix r{{0.21, -0.13}, {0.21, 0.13}, 0.17, {0.4, 0.9}, {0.4, -0.9}};
    const auto a = hermite_2d_over_factorial_log(40, r, HermiteRoute::automatic);
    const auto s = hermite_2d_over_factorial_log(40, r, HermiteRoute::scaled);
    for (int n = 0; n <= 40; ++n)
        CHECK_CLOSE(a[n].value(), s[n].value(), 1e-11);
}

TEST_CASE("scaled Hermite sequence matches (R/2)^{j/2} H_j(w/sqrt(2R))") {
    const Complex R{0.3, 0.2}, w{0.7, -0.5};
    const auto s = scaled_hermite_log_sequence(25, R, w);
    const Complex root = std::sqrt(R / 2.0);
    const Complex z = w / std::sqrt(2.0 * R);
    for (int j = 0; j <= 25; ++j)
        CHECK_CLOSE(s[j].value(), std::pow(root, j) * hermite(j, z), 1e-12);
    // R = 0 leaves w^j
    const auto s0 = scaled_hermite_log_sequence(10, {0.0, 0.0}, w);
    for (int j = 0; j <= 10; ++j)
        CHECK_CLOSE(s0[j].value(), std::pow(w, j), 1e-14);
}

TEST_CASE("laguerre_half: special values") {
    CHECK(laguerre_half(0, 17.0) == 1.0);
    for (double x : {-2.0, 0.0, 0.3, 4.5})
        CHECK_CLOSE(laguerre_half(1, x), 0.5 - x, 1e-15);
    CHECK_CLOSE(laguerre_half(2, 0.0), 3.0 / 8.0, 1e-15);
    // L_n^a(0) = binom(n + a, n)
    double binom = 1.0;
    for (int n = 1; n <= 30; ++n) {
        binom *= (n - 0.5) / n;
        CHECK_CLOSE(laguerre_half(n, 0.0), binom, 1e-13);
    }
}

TEST_CASE("laguerre_half: complex and log forms agree with the real form") {
    for (double x : {-3.0, 0.2, 1.7, 9.0}) {
        const auto seq = laguerre_half_log_sequence(30, {x, 0.0});
        for (int n = 0; n <= 30; ++n) {
            const double v = laguerre_half(n, x);
            CHECK_CLOSE(laguerre_half(n, Complex{x, 0.0}).real(), v, 1e-12);
            CHECK_CLOSE(seq[n].value().real(), v, 1e-11);
        }
    }
}

TEST_CASE("scaled Laguerre sequence equals m^s L_s(u/m), finite at m = 0") {
    const Complex m{0.4, -0.3}, u{0.25, 0.6};
    const auto s = scaled_laguerre_half_log_sequence(25, m, u);
    for (int k = 0; k <= 25; ++k)
        CHECK_CLOSE(s[k].value(), std::pow(m, k) * laguerre_half(k, u / m), 1e-11);
    const auto z = scaled_laguerre_half_log_sequence(12, {0.0, 0.0}, u);
    for (int k = 0; k <= 12; ++k)
        CHECK_CLOSE(z[k].value(), std::pow(-u, k) / std::exp(log_factorial(k)), 1e-13);
}

TEST_CASE("assoc_legendre: special values and domain") {
    for (double x : {-0.7, 0.0, 0.4, 2.0}) {
        CHECK(assoc_legendre(0, 0, x) == 1.0);
        CHECK_CLOSE(assoc_legendre(1, 0, x), x, 1e-15);
        CHECK_CLOSE(assoc_legendre(2, 0, x), (3 * x * x - 1) / 2, 1e-14);
        CHECK_CLOSE(assoc_legendre(1, 1, x), std::sqrt(std::abs(1 - x * x)), 1e-14);
        CHECK_CLOSE(assoc_legendre(2, 2, x), 3 * std::abs(1 - x * x), 1e-14);
        CHECK_CLOSE(assoc_legendre(3, 1, x), 1.5 * (5 * x * x - 1) * std::sqrt(std::abs(1 - x * x)),
                    1e-13);
    }
    CHECK(assoc_legendre(2, 0, 2.0) == doctest::Approx(5.5).epsilon(1e-15));
    CHECK(code_of([] { assoc_legendre(1, 2, 0.3); }) == ErrorCode::domain);
}

TEST_CASE("gauss_2f1_terminating: special values, poles, Chu-Vandermonde") {
    CHECK(gauss_2f1_terminating(0, 0.3, 1.7, 0.9) == 1.0);
    for (double z : {-1.0, 0.25, 0.5, 1.0, 3.0})
        CHECK_CLOSE(gauss_2f1_terminating(1, 0.5, 1.0, z), 1 - z / 2, 1e-15);
    CHECK_CLOSE(gauss_2f1_terminating(2, 0.5, 1.0, 1.0), 3.0 / 8.0, 1e-15);
    CHECK(code_of([] { gauss_2f1_terminating(3, 0.5, -1.0, 0.2); }) == ErrorCode::pole);
    // 2F1(-k, 1/2; 1; 1) = (1/2)_k / (1)_k = (2k)! / (4^k (k!)^2)
    for (int k = 0; k <= 60; ++k) {
        const double expect =
            std::exp(log_factorial(2 * k) - 2 * log_factorial(k) - k * std::log(4.0));
        CHECK_CLOSE(gauss_2f1_terminating(k, 0.5, 1.0, 1.0), expect, 1e-12);
    }
}

TEST_CASE("gauss_2f1_terminating: direct long-double series on (0,1)") {
    for (int k : {1, 4, 9, 20})
        for (double z : {0.1, 0.5, 0.9}) {
            long double term = 1.0L, s = 1.0L;
            for (int j = 0; j < k; ++j) {
                term *= static_cast<long double>(-k + j) * (0.5L + j) / ((1.0L + j) * (j + 1)) * z;
                s += term;
            }
            CHECK_CLOSE(gauss_2f1_terminating(k, 0.5, 1.0, z), static_cast<double>(s), 1e-11);
        }
}

TEST_CASE("log_factorial") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK_CLOSE(log_factorial(10), std::log(3628800.0), 1e-15);
    CHECK_CLOSE(log_factorial(10), 15.104412573075516, 1e-15);
    for (int n : {50, 170, 171, 500, 5000})
        CHECK_CLOSE(log_factorial(n), std::lgamma(n + 1.0), 1e-14);
}
