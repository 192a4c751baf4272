#pragma once

#include <vector>

#include "photodist/log_signed.hpp"

namespace photodist {

// Two-index Hermite data of a one-mode Gaussian state. For real covariances
// r22 = conj(r11), y2 = conj(y1) and r12 is real.
struct RMatrix {
    Complex r11{0.0, 0.0};
    Complex r22{0.0, 0.0};
    double r12 = 0.0;
    Complex y1{0.0, 0.0};
    Complex y2{0.0, 0.0};
};

// ln(n!). Exact table through 170, lgamma beyond.
double log_factorial(int n);

// Physicists' Hermite polynomial by three-term recurrence. Throws
// Error(range) when the value does not fit in a double; hermite_log never
// overflows.
Complex hermite(int n, Complex z);
LogSigned hermite_log(int n, Complex z);
// H_0(z) .. H_{n_max}(z).
std::vector<LogSigned> hermite_log_sequence(int n_max, Complex z);

// S_j(R, w) = (R/2)^{j/2} H_j(w / sqrt(2R)) for j = 0..n_max. Polynomial in R
// and w (no square roots), so it stays finite as R -> 0:
//   S_0 = 1, S_1 = w, S_{j+1} = w S_j - j R S_{j-1}.
std::vector<LogSigned> scaled_hermite_log_sequence(int n_max, Complex r, Complex w);

// Diagonal two-index Hermite polynomial H_{nn}^{R}(y1, y2) from the finite
// sum rule over products of ordinary Hermite polynomials. The degenerate
// case R11 R22 = 0 goes through the scaled polynomial limit.
Complex hermite_2d(int n, const RMatrix& r, Complex y1, Complex y2);
Complex hermite_2d(int n, const RMatrix& r);
LogSigned hermite_2d_log(int n, const RMatrix& r);
enum class HermiteRoute {
    automatic, // ordinary Hermite polynomials at z = w / sqrt(2R) unless R11 R22 = 0
    scaled,    // always the branch-free scaled polynomials S_j(R, w)
};

// H_{nn}^{R}(y1, y2) / n! for n = 0..n_max, sharing one Hermite sequence.
std::vector<LogSigned> hermite_2d_over_factorial_log(int n_max, const RMatrix& r,
                                                     HermiteRoute route = HermiteRoute::automatic);

// Same sums with the shifted arguments w1 = R11 y1 + R12 y2, w2 = R12 y1 + R22 y2
// supplied directly (scaled route; r.y1 and r.y2 are ignored).
std::vector<LogSigned> hermite_2d_over_factorial_log(int n_max, const RMatrix& r, Complex w1,
                                                     Complex w2);

// Associated Laguerre polynomial L_n^{-1/2}.
double laguerre_half(int n, double x);
Complex laguerre_half(int n, Complex x);
std::vector<LogSigned> laguerre_half_log_sequence(int n_max, Complex x);
// M_s(m, u) = m^s L_s^{-1/2}(u / m) for s = 0..n_max, by the recurrence
//   (s+1) M_{s+1} = ((2s + 1/2) m - u) M_s - (s - 1/2) m^2 M_{s-1}.
// Finite at m = 0, where only the leading coefficient (-u)^s / s! survives.
std::vector<LogSigned> scaled_laguerre_half_log_sequence(int n_max, Complex m, Complex u);

// Associated Legendre function of integer degree l and order m without the
// Condon-Shortley phase:
//   P_l^m(x) = |1 - x^2|^{m/2} d^m P_l(x) / dx^m,
// valid for every real x (for |x| > 1 this is the (x^2 - 1)^{m/2} form).
double assoc_legendre(int l, int m, double x);

// Terminating Gauss series 2F1(-k, b; c; z) = sum_{j<=k} (-k)_j (b)_j / ((c)_j j!) z^j.
// For 0 < z < 1 the Pfaff transform (1-z)^k 2F1(-k, c-b; c; z/(z-1)) is
// summed instead and z = 1 uses Chu-Vandermonde, which avoids the
// alternating-sign cancellation of the direct series.
double gauss_2f1_terminating(int k, double b, double c, double z);

} // namespace photodist
