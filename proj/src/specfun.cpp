#include "photodist/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "photodist/errors.hpp"

namespace photodist {

namespace {

constexpr int kFactorialTable = 170;
// Plain-path magnitudes above this switch to log space.
constexpr double kOverflowGuard = 1e300 * 1e-16;
constexpr double kMaxLog = 709.0;

const std::array<double, kFactorialTable + 1>& factorial_logs() {
    static const std::array<double, kFactorialTable + 1> table = [] {
        std::array<double, kFactorialTable + 1> t{};
        long double f = 1.0L;
        t[0] = 0.0;
        for (int n = 1; n <= kFactorialTable; ++n) {
            f *= n;
            t[n] = static_cast<double>(std::log(f));
        }
        return t;
    }();
    return table;
}

void require_nonneg(int n, const char* what) {
    if (n < 0)
        fail(ErrorCode::domain, std::string(what) + ": negative index " + std::to_string(n));
}

// v_{j+1} = a(j) v_j + b(j) v_{j-1}, returned in log space. The pair of
// running values shares one log scale that is reset whenever it drifts far
// from unity.
template <class A, class B>
std::vector<LogSigned> recurrence_log(int n_max, Complex v0, Complex v1, A a, B b) {
    std::vector<LogSigned> out;
    out.reserve(n_max + 1);
    out.push_back(LogSigned::from_value(v0));
    if (n_max == 0)
        return out;
    double scale = 0.0;
    Complex prev = v0;
    Complex cur = v1;
    auto emit = [&](Complex v) {
        LogSigned ls = LogSigned::from_value(v);
        if (!ls.is_zero())
            ls.log_magnitude += scale;
        out.push_back(ls);
    };
    emit(cur);
    for (int j = 1; j < n_max; ++j) {
        const Complex next = a(j) * cur + b(j) * prev;
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(cur), std::abs(prev));
        if (mag > 1e150 || (mag < 1e-150 && mag > 0.0)) {
            prev /= mag;
            cur /= mag;
            scale += std::log(mag);
        }
        emit(cur);
    }
    return out;
}

Complex value_or_throw(const LogSigned& v, const char* what) {
    if (v.is_zero())
        return {0.0, 0.0};
    if (v.log_magnitude > kMaxLog)
        fail(ErrorCode::range, std::string(what) + ": value overflows double (log magnitude " +
                                   std::to_string(v.log_magnitude) + ")");
    return v.value();
}

} // namespace

double log_factorial(int n) {
    require_nonneg(n, "log_factorial");
    if (n <= kFactorialTable)
        return factorial_logs()[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

std::vector<LogSigned> hermite_log_sequence(int n_max, Complex z) {
    require_nonneg(n_max, "hermite");
    return recurrence_log(
        n_max, Complex{1.0, 0.0}, 2.0 * z, [z](int) { return 2.0 * z; },
        [](int j) { return Complex{-2.0 * j, 0.0}; });
}

LogSigned hermite_log(int n, Complex z) {
    return hermite_log_sequence(n, z).back();
}

Complex hermite(int n, Complex z) {
    require_nonneg(n, "hermite");
    if (n == 0)
        return {1.0, 0.0};
    Complex prev{1.0, 0.0};
    Complex cur = 2.0 * z;
    for (int j = 1; j < n; ++j) {
        const Complex next = 2.0 * z * cur - 2.0 * static_cast<double>(j) * prev;
        prev = cur;
        cur = next;
        if (!(std::abs(cur) < kOverflowGuard))
            return value_or_throw(hermite_log(n, z), "hermite");
    }
    return cur;
}

std::vector<LogSigned> scaled_hermite_log_sequence(int n_max, Complex r, Complex w) {
    require_nonneg(n_max, "scaled_hermite");
    return recurrence_log(
        n_max, Complex{1.0, 0.0}, w, [w](int) { return w; },
        [r](int j) { return -static_cast<double>(j) * r; });
}

namespace {

struct HermiteFactors {
    std::vector<LogSigned> first;
    std::vector<LogSigned> second;
};

HermiteFactors hermite_factors(int n_max, const RMatrix& r, Complex y1, Complex y2,
                               HermiteRoute route) {
    const Complex w1 = r.r11 * y1 + r.r12 * y2;
    const Complex w2 = r.r12 * y1 + r.r22 * y2;
    if (route == HermiteRoute::scaled || r.r11 * r.r22 == Complex{0.0, 0.0}) {
        return {scaled_hermite_log_sequence(n_max, r.r11, w1),
                scaled_hermite_log_sequence(n_max, r.r22, w2)};
    }
    // One root feeds both the arguments and the prefactor, so the branch
    // choice cancels; r22 = conj(r11) reuses the conjugate root.
    const Complex root1 = std::sqrt(r.r11);
    const Complex root2 = (r.r22 == std::conj(r.r11)) ? std::conj(root1) : std::sqrt(r.r22);
    const Complex z1 = w1 / (std::sqrt(2.0) * root1);
    const Complex z2 = w2 / (std::sqrt(2.0) * root2);
    const LogSigned half_root1 = LogSigned::from_value(root1 / std::sqrt(2.0));
    const LogSigned half_root2 = LogSigned::from_value(root2 / std::sqrt(2.0));
    HermiteFactors f{hermite_log_sequence(n_max, z1), hermite_log_sequence(n_max, z2)};
    for (int j = 0; j <= n_max; ++j) {
        f.first[j] = f.first[j] * half_root1.pow(j);
        f.second[j] = f.second[j] * half_root2.pow(j);
    }
    return f;
}

// H_{nn}/n! = n! sum_k (-r12)^k / (k! (n-k)!^2) A_{n-k} B_{n-k} for n = 0..n_max.
std::vector<LogSigned> hermite_2d_sums(int n_max, double r12, const HermiteFactors& f) {
    std::vector<double> lf(n_max + 1);
    std::vector<LogSigned> r12_pow(n_max + 1);
    std::vector<LogSigned> ab(n_max + 1);
    const LogSigned minus_r12 = LogSigned::from_value(Complex{-r12, 0.0});
    for (int j = 0; j <= n_max; ++j) {
        lf[j] = log_factorial(j);
        r12_pow[j] = minus_r12.pow(j);
        ab[j] = f.first[j] * f.second[j];
    }
    std::vector<LogSigned> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        LogSum sum;
        for (int k = 0; k <= n; ++k) {
            const int j = n - k;
            if (r12_pow[k].is_zero() || ab[j].is_zero())
                continue;
            LogSigned term = r12_pow[k] * ab[j];
            term.log_magnitude += lf[n] - lf[k] - 2.0 * lf[j];
            sum.add(term);
        }
        out.push_back(sum.result());
    }
    return out;
}

} // namespace

std::vector<LogSigned> hermite_2d_over_factorial_log(int n_max, const RMatrix& r,
                                                     HermiteRoute route) {
    require_nonneg(n_max, "hermite_2d");
    return hermite_2d_sums(n_max, r.r12, hermite_factors(n_max, r, r.y1, r.y2, route));
}

std::vector<LogSigned> hermite_2d_over_factorial_log(int n_max, const RMatrix& r, Complex w1,
                                                     Complex w2) {
    require_nonneg(n_max, "hermite_2d");
    const HermiteFactors f{scaled_hermite_log_sequence(n_max, r.r11, w1),
                           scaled_hermite_log_sequence(n_max, r.r22, w2)};
    return hermite_2d_sums(n_max, r.r12, f);
}

LogSigned hermite_2d_log(int n, const RMatrix& r) {
    require_nonneg(n, "hermite_2d");
    const auto sums =
        hermite_2d_sums(n, r.r12, hermite_factors(n, r, r.y1, r.y2, HermiteRoute::automatic));
    return sums.back() * LogSigned::from_log(log_factorial(n));
}

Complex hermite_2d(int n, const RMatrix& r, Complex y1, Complex y2) {
    require_nonneg(n, "hermite_2d");
    const auto sums =
        hermite_2d_sums(n, r.r12, hermite_factors(n, r, y1, y2, HermiteRoute::automatic));
    return value_or_throw(sums.back() * LogSigned::from_log(log_factorial(n)), "hermite_2d");
}

Complex hermite_2d(int n, const RMatrix& r) {
    return hermite_2d(n, r, r.y1, r.y2);
}

std::vector<LogSigned> laguerre_half_log_sequence(int n_max, Complex x) {
    require_nonneg(n_max, "laguerre_half");
    constexpr double alpha = -0.5;
    return recurrence_log(
        n_max, Complex{1.0, 0.0}, Complex{1.0 + alpha, 0.0} - x,
        [x](int k) { return (Complex{2.0 * k + 1.0 + alpha, 0.0} - x) / (k + 1.0); },
        [](int k) { return Complex{-(k + alpha) / (k + 1.0), 0.0}; });
}

Complex laguerre_half(int n, Complex x) {
    require_nonneg(n, "laguerre_half");
    return value_or_throw(laguerre_half_log_sequence(n, x).back(), "laguerre_half");
}

std::vector<LogSigned> scaled_laguerre_half_log_sequence(int n_max, Complex m, Complex u) {
    require_nonneg(n_max, "scaled_laguerre_half");
    constexpr double alpha = -0.5;
    return recurrence_log(
        n_max, Complex{1.0, 0.0}, (1.0 + alpha) * m - u,
        [m, u](int k) { return ((2.0 * k + 1.0 + alpha) * m - u) / (k + 1.0); },
        [m](int k) { return -(k + alpha) * m * m / (k + 1.0); });
}

double laguerre_half(int n, double x) {
    return laguerre_half(n, Complex{x, 0.0}).real();
}

double assoc_legendre(int l, int m, double x) {
    if (l < 0 || m < 0)
        fail(ErrorCode::domain, "assoc_legendre: negative degree or order");
    if (m > l)
        fail(ErrorCode::domain, "assoc_legendre: order " + std::to_string(m) + " exceeds degree " +
                                    std::to_string(l));
    // P_m^m = (2m-1)!! |1-x^2|^{m/2}
    double pmm = 1.0;
    const double root = std::sqrt(std::abs(1.0 - x * x));
    for (int i = 1; i <= m; ++i)
        pmm *= (2.0 * i - 1.0) * root;
    if (l == m)
        return pmm;
    double pm1 = x * (2.0 * m + 1.0) * pmm;
    for (int ll = m + 1; ll < l; ++ll) {
        const double next = ((2.0 * ll + 1.0) * x * pm1 - (ll + m) * pmm) / (ll - m + 1.0);
        pmm = pm1;
        pm1 = next;
    }
    return pm1;
}

namespace {

void check_poles(int k, double c) {
    for (int i = 0; i < k; ++i) {
        if (c + i == 0.0)
            fail(ErrorCode::pole, "gauss_2f1_terminating: (c)_j vanishes at j=" +
                                      std::to_string(i + 1) + " for c=" + std::to_string(c));
    }
}

// Direct terminating sum in log space.
LogSigned direct_2f1(int k, double b, double c, double z) {
    LogSum sum;
    LogSigned term = LogSigned::one();
    sum.add(term);
    for (int j = 0; j < k; ++j) {
        const double ratio = (j - k) * (b + j) / ((c + j) * (j + 1.0)) * z;
        if (ratio == 0.0)
            break;
        term = term * LogSigned::from_value(Complex{ratio, 0.0});
        sum.add(term);
    }
    return sum.result();
}

double pochhammer_ratio(double a, double c, int k) {
    // (a)_k / (c)_k
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= (a + i) / (c + i);
    return r;
}

} // namespace

double gauss_2f1_terminating(int k, double b, double c, double z) {
    require_nonneg(k, "gauss_2f1_terminating");
    if (k == 0)
        return 1.0;
    check_poles(k, c);
    if (z == 1.0)
        return pochhammer_ratio(c - b, c, k);
    LogSigned v;
    if (z > 0.0 && z < 1.0) {
        const LogSigned prefactor = LogSigned::from_value(Complex{1.0 - z, 0.0}).pow(k);
        v = prefactor * direct_2f1(k, c - b, c, z / (z - 1.0));
    } else {
        v = direct_2f1(k, b, c, z);
    }
    return value_or_throw(v, "gauss_2f1_terminating").real();
}

} // namespace photodist
