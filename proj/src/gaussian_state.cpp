#include "photodist/gaussian_state.hpp"

#include <cmath>
#include <string>

#include "photodist/errors.hpp"

namespace photodist {

OneModeGaussianState OneModeGaussianState::thermal(double n_bar) {
    const double v = n_bar + 0.5;
    return {v, v, 0.0, 0.0, 0.0};
}

OneModeGaussianState OneModeGaussianState::squeezed(double r, double theta, double mean_q,
                                                    double mean_p) {
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    return {0.5 * (c + std::cos(theta) * s), 0.5 * (c - std::cos(theta) * s),
            0.5 * std::sin(theta) * s, mean_q, mean_p};
}

UncertaintyVerdict uncertainty_check(const OneModeGaussianState& state) {
    const double det = state.det();
    const double slack = det - 0.25;
    return {det, slack, slack >= 0.0};
}

namespace {

double r_denominator(const OneModeGaussianState& s) {
    const double d = s.trace() + 2.0 * s.det() + 0.5;
    if (d == 0.0)
        fail(ErrorCode::singular_denominator, "r_matrix: Tr + 2 det + 1/2 vanishes");
    return d;
}

} // namespace

RMatrix r_matrix(const OneModeGaussianState& s) {
    const double den = r_denominator(s);
    RMatrix r;
    r.r11 = Complex{s.sigma_pp - s.sigma_qq, -2.0 * s.sigma_pq} / den;
    r.r22 = std::conj(r.r11);
    r.r12 = (0.5 - 2.0 * s.det()) / den;
    if (!s.centered()) {
        const double yden = s.trace() - 2.0 * s.det() - 0.5;
        if (yden == 0.0)
            fail(ErrorCode::singular_denominator,
                 "r_matrix: Tr - 2 det - 1/2 vanishes for a displaced state");
        const Complex z = Complex{s.mean_q, s.mean_p} / std::sqrt(2.0);
        r.y1 = ((s.trace() - 1.0) * std::conj(z) +
                Complex{s.sigma_pp - s.sigma_qq, 2.0 * s.sigma_pq} * z) /
               yden;
        r.y2 = std::conj(r.y1);
    }
    return r;
}

HermiteShift hermite_shift(const OneModeGaussianState& s) {
    const double den = r_denominator(s);
    const Complex z = Complex{s.mean_q, s.mean_p} / std::sqrt(2.0);
    HermiteShift h;
    h.w1 = (Complex{s.sigma_pp - s.sigma_qq, -2.0 * s.sigma_pq} * std::conj(z) +
            (s.trace() + 1.0) * z) /
           den;
    h.w2 = std::conj(h.w1);
    return h;
}

LogSigned p0_log(const OneModeGaussianState& s) {
    const double den = r_denominator(s);
    const double radicand = s.det() + 0.5 * s.trace() + 0.25;
    if (radicand == 0.0)
        fail(ErrorCode::singular_denominator, "p0: det + Tr/2 + 1/4 vanishes");
    const double exponent = (-s.mean_p * s.mean_p * (s.sigma_qq + 0.5) -
                             s.mean_q * s.mean_q * (s.sigma_pp + 0.5) +
                             2.0 * s.sigma_pq * s.mean_q * s.mean_p) /
                            den;
    LogSigned v = LogSigned::from_value(Complex{radicand, 0.0}).pow(-0.5);
    v.log_magnitude += exponent;
    return v;
}

P0Value p0(const OneModeGaussianState& s) {
    P0Value out;
    out.value = p0_log(s).value();
    out.physical = s.det() + 0.5 * s.trace() + 0.25 > 0.0;
    return out;
}

XYTState from_tau(double tau, double y, double t) {
    if (y == 0.0)
        fail(ErrorCode::singular_denominator, "from_tau: y must be nonzero");
    return {(0.25 - tau + t * t) / y, y, t};
}

} // namespace photodist
