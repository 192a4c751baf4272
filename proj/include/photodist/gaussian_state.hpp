#pragma once

#include "photodist/specfun.hpp"

namespace photodist {

// The five Wigner parameters of a one-mode Gaussian state: the dispersion
// matrix [[sigma_pp, sigma_pq], [sigma_pq, sigma_qq]] and the quadrature means.
// Values violating the uncertainty relation are representable on purpose.
struct OneModeGaussianState {
    double sigma_pp = 0.5;
    double sigma_qq = 0.5;
    double sigma_pq = 0.0;
    double mean_q = 0.0;
    double mean_p = 0.0;

    double trace() const { return sigma_pp + sigma_qq; }
    double det() const { return sigma_pp * sigma_qq - sigma_pq * sigma_pq; }
    bool centered() const { return mean_q == 0.0 && mean_p == 0.0; }

    static OneModeGaussianState vacuum() { return {}; }
    static OneModeGaussianState thermal(double n_bar);
    // Squeezed and correlated state with squeeze r and phase theta.
    static OneModeGaussianState squeezed(double r, double theta = 0.0, double mean_q = 0.0,
                                         double mean_p = 0.0);
};

// Centered state with dispersion matrix [[x, t], [t, y]].
struct XYTState {
    double x = 0.5;
    double y = 0.5;
    double t = 0.0;

    OneModeGaussianState to_state() const { return {x, y, t, 0.0, 0.0}; }
};

struct UncertaintyVerdict {
    double det_sigma = 0.0;
    double slack = 0.0; // det - 1/4
    bool valid = false;
};

// slack = sigma_pp sigma_qq - sigma_pq^2 - 1/4; valid iff slack >= 0.
UncertaintyVerdict uncertainty_check(const OneModeGaussianState& state);

// R11 = R22* = (s_pp - s_qq - 2i s_pq) / D, R12 = (1/2 - 2 det) / D with
// D = Tr + 2 det + 1/2, and the Hermite arguments y1 = y2*. Centered states
// get y1 = y2 = 0 without touching the y denominator Tr - 2 det - 1/2.
// Throws Error(singular_denominator).
RMatrix r_matrix(const OneModeGaussianState& state);

// w1 = R11 y1 + R12 y2 and w2 = conj(w1), the combinations through which y
// enters P_n. With the printed y the factor Tr - 2 det - 1/2 cancels:
//   w1 = ((s_pp - s_qq - 2i s_pq) <z*> + (Tr + 1) <z>) / D,
// so displaced states with a vanishing y denominator (coherent states) stay
// regular.
struct HermiteShift {
    Complex w1{0.0, 0.0};
    Complex w2{0.0, 0.0};
};
HermiteShift hermite_shift(const OneModeGaussianState& state);

struct P0Value {
    Complex value{0.0, 0.0};
    // False when det + Tr/2 + 1/4 <= 0: the root is taken on the principal
    // branch and the result is no longer a probability.
    bool physical = true;
};

// Probability of no photon:
//   (det + Tr/2 + 1/4)^{-1/2} exp((-<p>^2(s_qq+1/2) - <q>^2(s_pp+1/2) + 2 s_pq <q><p>) / D)
P0Value p0(const OneModeGaussianState& state);
LogSigned p0_log(const OneModeGaussianState& state);

// State on the family x y - t^2 = 1/4 - tau with given y and t.
XYTState from_tau(double tau, double y, double t);

} // namespace photodist
