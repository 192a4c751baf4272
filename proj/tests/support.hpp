#pragma once

#include <cmath>
#include <complex>

#include <doctest.h>

namespace testing {

inline bool close(double a, double b, double rtol, double atol = 0.0) {
    return std::abs(a - b) <= atol || std::abs(a - b) <= rtol * std::max(std::abs(a), std::abs(b));
}

inline bool close(std::complex<double> a, std::complex<double> b, double rtol, double atol = 0.0) {
    return std::abs(a - b) <= atol || std::abs(a - b) <= rtol * std::max(std::abs(a), std::abs(b));
}

} // namespace testing

#define CHECK_CLOSE(a, b, rtol)                                                             \
    do {                                                                                    \
        const auto a_ = (a);                                                                \
        const auto b_ = (b);                                                                \
        INFO("lhs = ", a_, ", rhs = ", b_);                                                 \
        CHECK(testing::close(a_, b_, rtol));                                                \
    } while (0)

#define CHECK_NEAR(a, b, atol)                                                              \
    do {                                                                                    \
        const auto a_ = (a);                                                                \
        const auto b_ = (b);                                                                \
        INFO("lhs = ", a_, ", rhs = ", b_);                                                 \
        CHECK(std::abs(a_ - b_) <= (atol));                                                 \
    } while (0)
