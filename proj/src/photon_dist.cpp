#include "photodist/photon_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "photodist/errors.hpp"

namespace photodist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSumSlack = 1e-9;
constexpr int kWindow = 5;

Complex to_value(const LogSigned& v) {
    if (v.is_zero())
        return {0.0, 0.0};
    return v.value();
}

void require_n_max(const std::optional<int>& n_max) {
    if (n_max && *n_max < 0)
        fail(ErrorCode::domain, "n_max must be nonnegative, got " + std::to_string(*n_max));
}

// A sequence that is no longer decaying and already exceeds unit magnitude
// cannot turn into a probability by adding terms; doubling further only
// burns time on a divergent series.
bool hopeless(const std::vector<Complex>& values, double tail) {
    double peak = 0.0;
    for (const Complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return true;
        peak = std::max(peak, std::abs(v));
    }
    return std::isinf(tail) && peak > 1.0 + 1e-6;
}

PhotonDistribution finish(std::vector<Complex> values, double tail, const ClassifyTolerances& tol) {
    PhotonDistribution d;
    d.truncation = static_cast<int>(values.size()) - 1;
    d.tail_bound = tail;
    d.classification = classify(values, tail, tol);
    d.values = std::move(values);
    return d;
}

// values_upto(N) returns entries 0..N.
template <class F>
PhotonDistribution evaluate(F&& values_upto, const std::optional<int>& n_max, int cap,
                            const ClassifyTolerances& tol) {
    require_n_max(n_max);
    if (n_max)
        return make_distribution(values_upto(*n_max), tol);
    int n = kAdaptiveStart;
    for (;;) {
        std::vector<Complex> values = values_upto(n);
        const double tail = estimate_tail(values);
        if (tail < kTailTarget || n >= cap || hopeless(values, tail))
            return finish(std::move(values), tail, tol);
        n = std::min(2 * n, cap);
    }
}

// The R block alone; the displacement enters through hermite_shift.
OneModeGaussianState centered(OneModeGaussianState s) {
    s.mean_q = 0.0;
    s.mean_p = 0.0;
    return s;
}

} // namespace

std::string_view to_string(Classification c) {
    switch (c) {
    case Classification::probability: return "probability";
    case Classification::signed_real: return "signed_real";
    case Classification::complex: return "complex";
    case Classification::non_normalized: return "non_normalized";
    }
    return "unknown";
}

Complex PhotonDistribution::sum() const {
    ComplexNeumaierSum s;
    for (const Complex& v : values)
        s.add(v);
    return s.value();
}

std::vector<double> PhotonDistribution::real_values() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const Complex& v : values)
        out.push_back(v.real());
    return out;
}

double estimate_tail(std::span<const Complex> values) {
    const size_t len = values.size();
    if (len == 0)
        return 0.0;
    auto window_max = [&](size_t begin, size_t end) {
        double m = 0.0;
        for (size_t i = begin; i < end; ++i)
            m = std::max(m, std::abs(values[i]));
        return m;
    };
    const size_t w = std::min<size_t>(kWindow, len);
    const double last = window_max(len - w, len);
    if (last == 0.0)
        return 0.0;
    if (!std::isfinite(last) || len < 2 * kWindow)
        return kInf;
    const double before = window_max(len - 2 * kWindow, len - kWindow);
    if (before == 0.0)
        return kInf;
    const double q = last / before;
    if (!(q < 1.0))
        return kInf;
    return kWindow * last * q / (1.0 - q);
}

Classification classify(std::span<const Complex> values, double tail_bound,
                        const ClassifyTolerances& tol) {
    bool negative = false;
    NeumaierSum total;
    for (const Complex& v : values) {
        if (!(std::abs(v.imag()) < tol.tol_imag))
            return Classification::complex;
        if (v.real() < -tol.tol_neg)
            negative = true;
        total.add(v.real());
    }
    if (negative)
        return Classification::signed_real;
    const double s = total.value();
    if (s <= 1.0 + kSumSlack && s >= 1.0 - tail_bound - kSumSlack)
        return Classification::probability;
    return Classification::non_normalized;
}

PhotonDistribution make_distribution(std::vector<Complex> values, const ClassifyTolerances& tol) {
    const double tail = estimate_tail(values);
    return finish(std::move(values), tail, tol);
}

PhotonDistribution pn_hermite(const OneModeGaussianState& state, std::optional<int> n_max,
                              const ClassifyTolerances& tol) {
    const RMatrix r = r_matrix(centered(state));
    const HermiteShift w = hermite_shift(state);
    const LogSigned p0v = p0_log(state);
    auto values_upto = [&](int n) {
        const auto h = hermite_2d_over_factorial_log(n, r, w.w1, w.w2);
        std::vector<Complex> out;
        out.reserve(h.size());
        for (const LogSigned& v : h)
            out.push_back(to_value(p0v * v));
        return out;
    };
    return evaluate(values_upto, n_max, kAdaptiveCapQuadratic, tol);
}

LaguerreArguments laguerre_arguments(const RMatrix& r, const HermiteShift& w) {
    const Complex w1 = w.w1;
    const Complex w2 = w.w2;
    LaguerreArguments a;
    const Complex rho = std::sqrt(r.r11 * r.r22);
    a.minus = r.r12 - rho;
    a.plus = r.r12 + rho;
    // sqrt(R22/R11) = rho/R11 and sqrt(R11/R22) = rho/R22 keep the branch tied
    // to rho. At rho = 0 the sum only depends on x1 + x2, so the ratio terms
    // drop out.
    Complex cross{0.0, 0.0};
    if (rho != Complex{0.0, 0.0})
        cross = rho / r.r11 * w1 * w1 + rho / r.r22 * w2 * w2;
    a.u1 = (2.0 * w1 * w2 - cross) / 4.0;
    a.u2 = (2.0 * w1 * w2 + cross) / 4.0;
    a.x1 = (a.minus == Complex{0.0, 0.0}) ? Complex{0.0, 0.0} : a.u1 / a.minus;
    a.x2 = (a.plus == Complex{0.0, 0.0}) ? Complex{0.0, 0.0} : a.u2 / a.plus;
    return a;
}

PhotonDistribution pn_laguerre(const OneModeGaussianState& state, std::optional<int> n_max,
                               const ClassifyTolerances& tol) {
    const RMatrix r = r_matrix(centered(state));
    const LogSigned p0v = p0_log(state);
    const LaguerreArguments a = laguerre_arguments(r, hermite_shift(state));
    // D(n,s) L_s(x1) L_{n-s}(x2) = P0 (-1)^n M_s(minus, u1) M_{n-s}(plus, u2)
    // with M_s(m, u) = m^s L_s(u/m).
    auto values_upto = [&](int n_top) {
        const auto m1 = scaled_laguerre_half_log_sequence(n_top, a.minus, a.u1);
        const auto m2 = scaled_laguerre_half_log_sequence(n_top, a.plus, a.u2);
        std::vector<Complex> out;
        out.reserve(n_top + 1);
        for (int n = 0; n <= n_top; ++n) {
            LogSum sum;
            for (int s = 0; s <= n; ++s)
                sum.add(m1[s] * m2[n - s]);
            LogSigned v = p0v * sum.result();
            if (n % 2 != 0)
                v.phase = -v.phase;
            out.push_back(to_value(v));
        }
        return out;
    };
    return evaluate(values_upto, n_max, kAdaptiveCapQuadratic, tol);
}

PhotonDistribution pn_centered_xyt(const XYTState& st, std::optional<int> n_max,
                                   const ClassifyTolerances& tol) {
    const double d = st.x * st.y - st.t * st.t;
    const double s = st.x + st.y;
    const double radicand = 4.0 * d + 2.0 * s + 1.0;
    if (radicand == 0.0)
        fail(ErrorCode::singular_denominator, "pn_centered_xyt: 4 det + 2(x+y) + 1 vanishes");
    // (-1)^k (1 - 4d)^k = (4d - 1)^k
    const LogSigned a = LogSigned::from_value(Complex{4.0 * d - 1.0, 0.0});
    const LogSigned b = LogSigned::from_value(Complex{s * s - 4.0 * d, 0.0});
    const LogSigned den = LogSigned::from_value(Complex{radicand, 0.0});
    auto values_upto = [&](int n_top) {
        std::vector<LogSigned> a_pow(n_top + 1), b_pow(n_top / 2 + 1);
        std::vector<double> lf(n_top + 1);
        for (int j = 0; j <= n_top; ++j) {
            a_pow[j] = a.pow(j);
            lf[j] = log_factorial(j);
        }
        for (int i = 0; i <= n_top / 2; ++i)
            b_pow[i] = b.pow(i);
        std::vector<Complex> out;
        out.reserve(n_top + 1);
        for (int n = 0; n <= n_top; ++n) {
            LogSum sum;
            for (int i = 0; 2 * i <= n; ++i) {
                const int k = n - 2 * i;
                LogSigned term = a_pow[k] * b_pow[i];
                if (term.is_zero())
                    continue;
                term.log_magnitude -= lf[k] + 2.0 * lf[i];
                sum.add(term);
            }
            LogSigned v = sum.result() / den.pow(n + 0.5);
            if (!v.is_zero())
                v.log_magnitude += std::log(2.0) + lf[n];
            out.push_back(to_value(v));
        }
        return out;
    };
    return evaluate(values_upto, n_max, kAdaptiveCapQuadratic, tol);
}

PhotonDistribution pn_violation(double tau, double y, double t, std::optional<int> n_max,
                                TauForm form, const ClassifyTolerances& tol) {
    const XYTState st = from_tau(tau, y, t);
    if (form == TauForm::direct)
        return pn_centered_xyt(st, n_max, tol);

    const double t2 = t * t;
    const double y2 = y * y;
    const double num = 1.0 / 16.0 + t2 * t2 + tau * tau + (t2 - tau - y2) / 2.0 -
                       2.0 * t2 * tau + y2 * y2 - 6.0 * y2 * tau + 2.0 * t2 * y2;
    const double den = 0.25 - tau + t2 + y2 + y - 4.0 * y * tau;
    if (den == 0.0)
        fail(ErrorCode::singular_denominator, "pn_violation: tau-form denominator vanishes");
    const LogSigned num_ls = LogSigned::from_value(Complex{num, 0.0});
    const LogSigned den_ls = LogSigned::from_value(Complex{den, 0.0});
    const LogSigned y_ls = LogSigned::from_value(Complex{y, 0.0});
    const LogSigned tau_ls = LogSigned::from_value(Complex{tau, 0.0});
    const double ln2 = std::log(2.0);

    auto values_upto = [&](int n_top) {
        std::vector<Complex> out(n_top + 1, Complex{0.0, 0.0});
        for (int l = 0; 2 * l <= n_top; ++l) {
            LogSum sum;
            for (int i = 0; i <= l; ++i) {
                const int j = l - i;
                LogSigned term = tau_ls.pow(2 * j) * num_ls.pow(i);
                if (term.is_zero())
                    continue;
                const double power = 2.0 * i - 2.0 * l - 0.5;
                term = term / (y_ls.pow(power) * den_ls.pow(2.0 * l + 0.5));
                term.log_magnitude -= log_factorial(i) + 2.0 * log_factorial(2 * j) +
                                      (4.0 * i - 2.0 * l - 0.5) * ln2;
                sum.add(term);
            }
            LogSigned v = sum.result();
            if (!v.is_zero())
                v.log_magnitude += log_factorial(2 * l);
            out[2 * l] = to_value(v);
        }
        return out;
    };
    return evaluate(values_upto, n_max, kAdaptiveCapQuadratic, tol);
}

double mean_photon_xyt(double x, double y) {
    const double den = 6.0 * x - 2.0 * y + 4.0 * x * y + 1.0;
    if (den == 0.0)
        fail(ErrorCode::singular_denominator, "mean_photon_xyt: 6x - 2y + 4xy + 1 vanishes");
    return 2.0 * (x - y) / den;
}

double two_mode_p2k(double s1, double s2, int k) {
    if (!(s1 >= 0.0 && s1 < 1.0) || !(s2 >= 0.0 && s2 < 1.0))
        fail(ErrorCode::domain, "two_mode_p2k: s1, s2 must lie in [0, 1)");
    if (k < 0)
        fail(ErrorCode::domain, "two_mode_p2k: negative k");
    const double norm = std::sqrt(1.0 - s1) * std::sqrt(1.0 - s2);
    if (k == 0)
        return norm;
    // The expression is symmetric under s1 <-> s2; putting the larger value
    // in front keeps the argument in [0, 1] and makes s2 = 0 a regular point.
    const double hi = std::max(s1, s2);
    const double lo = std::min(s1, s2);
    if (hi == 0.0)
        return 0.0;
    const double f = gauss_2f1_terminating(k, 0.5, 1.0, 1.0 - lo / hi);
    if (f == 0.0)
        return 0.0;
    return norm * std::exp(k * std::log(hi) + std::log(f));
}

PhotonDistribution two_mode_distribution(double s1, double s2, std::optional<int> n_max,
                                         const ClassifyTolerances& tol) {
    two_mode_p2k(s1, s2, 0); // domain check
    auto values_upto = [&](int n_top) {
        std::vector<Complex> out(n_top + 1, Complex{0.0, 0.0});
        for (int n = 0; n <= n_top; n += 2)
            out[n] = two_mode_p2k(s1, s2, n / 2);
        return out;
    };
    return evaluate(values_upto, n_max, kAdaptiveCapQuadratic, tol);
}

double TwoModeJointDistribution::total() const {
    NeumaierSum s;
    for (double v : values)
        s.add(v);
    return s.value();
}

namespace {

void check_params(const LegendreParams& p) {
    if (!(p.f1 > 0.0) || !(p.f2 > 0.0))
        fail(ErrorCode::domain, "LegendreParams: F1 and F2 must be positive");
    if (!std::isfinite(p.n_factor) || !std::isfinite(p.f3))
        fail(ErrorCode::domain, "LegendreParams: N and F3 must be finite");
}

double joint_unchecked(const LegendreParams& p, int n1, int n2) {
    const int l = (n1 + n2) / 2;
    const int m = std::abs(n1 - n2) / 2;
    const double leg = assoc_legendre(l, m, p.f3);
    if (leg == 0.0 || p.n_factor == 0.0)
        return 0.0;
    const double log_t = -std::abs(log_factorial(n1) - log_factorial(n2)) +
                         0.5 * (n1 - n2) * std::log(p.f1) + l * std::log(p.f2);
    return p.n_factor * std::exp(log_t + 2.0 * std::log(std::abs(leg)));
}

} // namespace

double two_mode_joint(const LegendreParams& params, int n1, int n2) {
    check_params(params);
    if (n1 < 0 || n2 < 0)
        fail(ErrorCode::domain, "two_mode_joint: negative photon number");
    if ((n1 + n2) % 2 != 0)
        fail(ErrorCode::parity, "two_mode_joint: n1 + n2 = " + std::to_string(n1 + n2) +
                                    " is odd; half-integer Legendre indices are undefined");
    return joint_unchecked(params, n1, n2);
}

TwoModeJointDistribution two_mode_joint_table(const LegendreParams& params, int n1_max,
                                              int n2_max) {
    check_params(params);
    if (n1_max < 0 || n2_max < 0)
        fail(ErrorCode::domain, "two_mode_joint_table: negative truncation");
    TwoModeJointDistribution out;
    out.n1_max = n1_max;
    out.n2_max = n2_max;
    out.values.assign(static_cast<size_t>(n1_max + 1) * (n2_max + 1), 0.0);
    for (int n1 = 0; n1 <= n1_max; ++n1)
        for (int n2 = (n1 % 2); n2 <= n2_max; n2 += 2)
            out.values[static_cast<size_t>(n1) * (n2_max + 1) + n2] =
                joint_unchecked(params, n1, n2);
    // Tail from the decay of complete anti-diagonal sums.
    const int s_max = std::min(n1_max, n2_max);
    std::vector<Complex> diag(s_max + 1, Complex{0.0, 0.0});
    for (int s = 0; s <= s_max; ++s) {
        NeumaierSum d;
        for (int n1 = 0; n1 <= s; ++n1)
            d.add(out.at(n1, s - n1));
        diag[s] = d.value();
    }
    out.tail_bound = estimate_tail(diag);
    return out;
}

LegendreParams normalized_legendre_params(LegendreParams params, int n1_max, int n2_max) {
    params.n_factor = 1.0;
    const double total = two_mode_joint_table(params, n1_max, n2_max).total();
    if (!(total > 0.0) || !std::isfinite(total))
        fail(ErrorCode::unnormalized, "normalized_legendre_params: table sum is not positive");
    params.n_factor = 1.0 / total;
    return params;
}

// Deformed-oscillator and closed-form families.

namespace {

double f_at(const DeformationSpec& s, int j) {
    const size_t i = std::min<size_t>(static_cast<size_t>(j), s.f_values.size() - 1);
    return s.f_values[i];
}

// ln sinh(a) for a > 0 without overflow.
double log_sinh(double a) {
    return a + std::log1p(-std::exp(-2.0 * a)) - std::log(2.0);
}

// ln [j]_lambda with [j] = sinh(lambda j) / sinh(lambda); lambda = 0 gives ln j.
double log_q_number(double lambda, int j) {
    const double a = std::abs(lambda);
    if (a == 0.0)
        return std::log(static_cast<double>(j));
    return log_sinh(a * j) - log_sinh(a);
}

// Streams ln w_0, ln w_1, ... of the f- or q-coherent weights with running
// factorial products.
class WeightCursor {
public:
    explicit WeightCursor(const DeformationSpec& spec) : spec_(spec) {}

    double next() {
        ++n_;
        const double a2 = spec_.alpha_mag2;
        if (spec_.kind == DeformationKind::f_coherent) {
            log_prod_ += std::log(std::abs(f_at(spec_, n_)));
            const double fact = spec_.f_convention == FCoherentConvention::printed
                                    ? 0.5 * log_factorial(n_)
                                    : log_factorial(n_);
            if (n_ == 0)
                return -2.0 * log_prod_;
            return a2 == 0.0 ? -kInf : n_ * std::log(a2) - fact - 2.0 * log_prod_;
        }
        if (n_ == 0)
            return 0.0;
        log_prod_ += log_q_number(spec_.lambda, n_);
        return a2 == 0.0 ? -kInf : n_ * std::log(a2) - log_prod_;
    }

private:
    const DeformationSpec& spec_;
    int n_ = -1;
    double log_prod_ = 0.0;
};

// ln of the normalization sum of the f- and q-coherent weights.
double log_normalization(const DeformationSpec& spec) {
    LogSum total;
    WeightCursor cursor(spec);
    double prev = -kInf;
    for (int n = 0; n <= kAdaptiveCapLinear; ++n) {
        const double lw = cursor.next();
        if (std::isinf(lw)) {
            if (n > 0)
                return total.result().log_magnitude; // alpha = 0: only w_0 survives
            prev = lw;
            continue;
        }
        total.add(LogSigned::from_log(lw));
        if (n > 0 && !std::isinf(prev)) {
            const double log_ratio = lw - prev;
            if (log_ratio < 0.0) {
                // remaining terms are bounded by w_n r / (1 - r) once the
                // ratio r has dropped below one and keeps falling
                const double ratio = std::exp(log_ratio);
                const double rest = lw + log_ratio - std::log1p(-ratio);
                if (rest < total.result().log_magnitude + std::log(1e-17))
                    return total.result().log_magnitude;
            }
        }
        prev = lw;
    }
    fail(ErrorCode::divergent_normalization,
         "deformed family: normalization series fails the ratio test within " +
             std::to_string(kAdaptiveCapLinear) + " terms");
}

double log_poisson(double mean, int n) {
    if (mean == 0.0)
        return n == 0 ? 0.0 : -kInf;
    return -mean + n * std::log(mean) - log_factorial(n);
}

double log_squeezed_vacuum(double r, int n) {
    if (n % 2 != 0)
        return -kInf;
    const int m = n / 2;
    if (r == 0.0)
        return m == 0 ? 0.0 : -kInf;
    return -std::log(std::cosh(r)) + 2.0 * m * std::log(std::abs(std::tanh(r)) / 2.0) +
           log_factorial(2 * m) - 2.0 * log_factorial(m);
}

// P_n = P0 tanh(r)^n / (n! 2^n) |H_n(g)|^2 for n = 0..n_top.
std::vector<double> log_squeezed_correlated(const DeformationSpec& s, int n_top) {
    const double q = s.mean_q;
    const double p = s.mean_p;
    std::vector<double> out(n_top + 1);
    if (s.r == 0.0) {
        const double mean = (q * q + p * p) / 2.0;
        for (int n = 0; n <= n_top; ++n)
            out[n] = log_poisson(mean, n);
        return out;
    }
    const double th = std::tanh(s.r);
    const double log_p0 = -std::log(std::cosh(s.r)) - (p * p + q * q) / 2.0 +
                          th / 2.0 * ((p * p - q * q) * std::cos(s.theta) +
                                      2.0 * p * q * std::sin(s.theta));
    const Complex phase = std::polar(1.0, s.theta);
    const Complex g = std::polar(1.0, -s.theta / 2.0) * std::sqrt(th) *
                      (Complex{q, -p} / 2.0 + phase / th * Complex{q, p} / 2.0);
    const auto h = hermite_log_sequence(n_top, g);
    for (int n = 0; n <= n_top; ++n) {
        if (h[n].is_zero()) {
            out[n] = -kInf;
            continue;
        }
        out[n] = log_p0 + n * std::log(th / 2.0) - log_factorial(n) + 2.0 * h[n].log_magnitude;
    }
    return out;
}

std::vector<double> log_values(const DeformationSpec& spec, int n_top) {
    std::vector<double> out(n_top + 1);
    switch (spec.kind) {
    case DeformationKind::poisson:
        for (int n = 0; n <= n_top; ++n)
            out[n] = log_poisson(spec.alpha_mag2, n);
        break;
    case DeformationKind::squeezed_vacuum:
        for (int n = 0; n <= n_top; ++n)
            out[n] = log_squeezed_vacuum(spec.r, n);
        break;
    case DeformationKind::squeezed_correlated:
        out = log_squeezed_correlated(spec, n_top);
        break;
    case DeformationKind::f_coherent:
    case DeformationKind::q_coherent: {
        const double log_norm = log_normalization(spec);
        WeightCursor cursor(spec);
        for (int n = 0; n <= n_top; ++n)
            out[n] = cursor.next() - log_norm;
        break;
    }
    }
    return out;
}

} // namespace

void validate(const DeformationSpec& spec) {
    if (!(spec.alpha_mag2 >= 0.0) || !std::isfinite(spec.alpha_mag2))
        fail(ErrorCode::invalid_spec, "alpha_mag2 must be finite and nonnegative");
    if (!std::isfinite(spec.r) || !std::isfinite(spec.theta) || !std::isfinite(spec.lambda) ||
        !std::isfinite(spec.mean_q) || !std::isfinite(spec.mean_p))
        fail(ErrorCode::invalid_spec, "deformation parameters must be finite");
    if (spec.kind == DeformationKind::squeezed_correlated && spec.r < 0.0)
        fail(ErrorCode::invalid_spec, "squeezed_correlated: r must be nonnegative");
    if (spec.kind == DeformationKind::f_coherent) {
        if (spec.f_values.empty())
            fail(ErrorCode::invalid_spec, "f_coherent: f_values is empty");
        for (double f : spec.f_values)
            if (f == 0.0 || !std::isfinite(f))
                fail(ErrorCode::invalid_spec, "f_coherent: f_values must be finite and nonzero");
    }
}

double deformed_log_weight(const DeformationSpec& spec, int n) {
    if (n < 0)
        fail(ErrorCode::domain, "deformed weight: negative n");
    if (spec.kind != DeformationKind::f_coherent && spec.kind != DeformationKind::q_coherent)
        fail(ErrorCode::invalid_spec,
             "deformed_log_weight: only f- and q-coherent families have weights");
    WeightCursor cursor(spec);
    double lw = 0.0;
    for (int j = 0; j <= n; ++j)
        lw = cursor.next();
    return lw;
}

double deformed_log_normalization(const DeformationSpec& spec) {
    validate(spec);
    if (spec.kind != DeformationKind::f_coherent && spec.kind != DeformationKind::q_coherent)
        fail(ErrorCode::invalid_spec,
             "deformed_log_normalization: only f- and q-coherent families are weighted");
    return log_normalization(spec);
}

double deformed_pn(const DeformationSpec& spec, int n) {
    validate(spec);
    if (n < 0)
        fail(ErrorCode::domain, "deformed_pn: negative n");
    const double lv = log_values(spec, n)[n];
    return std::isinf(lv) ? 0.0 : std::exp(lv);
}

PhotonDistribution deformed_distribution(const DeformationSpec& spec, std::optional<int> n_max,
                                         const ClassifyTolerances& tol) {
    validate(spec);
    double log_norm = 0.0;
    const bool weighted =
        spec.kind == DeformationKind::f_coherent || spec.kind == DeformationKind::q_coherent;
    if (weighted)
        log_norm = log_normalization(spec);
    auto values_upto = [&](int n_top) {
        std::vector<double> lv;
        if (weighted) {
            WeightCursor cursor(spec);
            lv.resize(n_top + 1);
            for (int n = 0; n <= n_top; ++n)
                lv[n] = cursor.next() - log_norm;
        } else {
            lv = log_values(spec, n_top);
        }
        std::vector<Complex> out(n_top + 1);
        for (int n = 0; n <= n_top; ++n)
            out[n] = std::isinf(lv[n]) ? Complex{0.0, 0.0} : Complex{std::exp(lv[n]), 0.0};
        return out;
    };
    return evaluate(values_upto, n_max, kAdaptiveCapLinear, tol);
}

} // namespace photodist
