#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace photodist {

using Complex = std::complex<double>;

// Compensated (Neumaier) accumulator. Summation order is the caller's order,
// so results are reproducible for a fixed input sequence.
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexNeumaierSum {
public:
    void add(Complex z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    NeumaierSum re_;
    NeumaierSum im_;
};

// Principal argument in (-pi, pi]; negative reals map to +pi regardless of
// the sign of a zero imaginary part.
inline double principal_arg(Complex z) {
    if (z.imag() == 0.0)
        return z.real() < 0.0 ? M_PI : 0.0;
    return std::arg(z);
}

// A value stored as exp(log_magnitude) * phase with |phase| = 1, or exactly
// zero. Used for factorial-heavy terms that would overflow a double.
struct LogSigned {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    Complex phase{0.0, 0.0};

    static LogSigned zero() { return {}; }
    static LogSigned one() { return {0.0, Complex{1.0, 0.0}}; }

    static LogSigned from_log(double log_magnitude, Complex phase = {1.0, 0.0}) {
        return {log_magnitude, phase};
    }

    static LogSigned from_value(Complex z) {
        if (z == Complex{0.0, 0.0})
            return zero();
        const double mag = std::abs(z);
        if (z.imag() == 0.0)
            return {std::log(mag), Complex{z.real() < 0.0 ? -1.0 : 1.0, 0.0}};
        return {std::log(mag), z / mag};
    }

    bool is_zero() const { return phase == Complex{0.0, 0.0}; }

    double arg() const { return principal_arg(phase); }

    Complex value() const {
        if (is_zero())
            return {0.0, 0.0};
        return std::exp(log_magnitude) * phase;
    }

    LogSigned operator*(const LogSigned& o) const {
        if (is_zero() || o.is_zero())
            return zero();
        return {log_magnitude + o.log_magnitude, normalize(phase * o.phase)};
    }

    LogSigned operator/(const LogSigned& o) const {
        if (is_zero())
            return zero();
        return {log_magnitude - o.log_magnitude, normalize(phase * std::conj(o.phase))};
    }

    LogSigned conj() const { return {log_magnitude, std::conj(phase)}; }

    // Principal-branch power: |z|^e * exp(i e Arg z). 0^0 = 1.
    LogSigned pow(double e) const {
        if (e == 0.0)
            return one();
        if (is_zero())
            return zero();
        const double a = arg();
        Complex ph;
        if (a == 0.0)
            ph = {1.0, 0.0};
        else
            ph = std::polar(1.0, std::remainder(e * a, 2.0 * M_PI));
        return {e * log_magnitude, ph};
    }

    LogSigned pow(int n) const {
        if (n == 0)
            return one();
        if (is_zero())
            return zero();
        Complex ph{1.0, 0.0};
        if (phase.imag() == 0.0) {
            ph = {(phase.real() < 0.0 && (n % 2 != 0)) ? -1.0 : 1.0, 0.0};
        } else {
            ph = std::polar(1.0, std::remainder(static_cast<double>(n) * arg(), 2.0 * M_PI));
        }
        return {n * log_magnitude, ph};
    }

private:
    static Complex normalize(Complex p) {
        if (p.imag() == 0.0)
            return {p.real() < 0.0 ? -1.0 : 1.0, 0.0};
        if (p.real() == 0.0)
            return {0.0, p.imag() < 0.0 ? -1.0 : 1.0};
        return p / std::abs(p);
    }
};

// Streaming sum of LogSigned terms. The running total is kept relative to the
// largest magnitude seen so far; the terms themselves never leave log space.
class LogSum {
public:
    void add(const LogSigned& term) {
        if (term.is_zero())
            return;
        if (empty_) {
            scale_ = term.log_magnitude;
            empty_ = false;
        } else if (term.log_magnitude > scale_) {
            const double shrink = std::exp(scale_ - term.log_magnitude);
            re_ = rescaled(re_, shrink);
            im_ = rescaled(im_, shrink);
            scale_ = term.log_magnitude;
        }
        const Complex z = std::exp(term.log_magnitude - scale_) * term.phase;
        re_.add(z.real());
        im_.add(z.imag());
    }

    LogSigned result() const {
        if (empty_)
            return LogSigned::zero();
        const Complex z{re_.value(), im_.value()};
        LogSigned r = LogSigned::from_value(z);
        if (r.is_zero())
            return r;
        r.log_magnitude += scale_;
        return r;
    }

    Complex value() const { return result().value(); }

private:
    static NeumaierSum rescaled(const NeumaierSum& s, double factor) {
        NeumaierSum out;
        out.add(s.value() * factor);
        return out;
    }

    bool empty_ = true;
    double scale_ = 0.0;
    NeumaierSum re_;
    NeumaierSum im_;
};

} // namespace photodist
