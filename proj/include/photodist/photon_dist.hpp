#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "photodist/gaussian_state.hpp"

namespace photodist {

enum class Classification {
    probability,    // real, nonnegative, sums to 1 within the tail bound
    signed_real,    // real with at least one negative entry
    complex,        // some entry has a non-negligible imaginary part
    non_normalized, // real and nonnegative but the sum misses 1
};

std::string_view to_string(Classification c);

struct ClassifyTolerances {
    double tol_imag = 1e-12;
    double tol_neg = 1e-12;
};

// Truncated photon-number sequence; values[n] is the (possibly complex)
// weight of n photons for n = 0..truncation.
struct PhotonDistribution {
    std::vector<Complex> values;
    int truncation = 0;
    double tail_bound = 0.0;
    Classification classification = Classification::probability;

    Complex sum() const;
    std::vector<double> real_values() const;
};

// Envelope estimate of the omitted mass beyond the last index: the ratio of
// the maxima of the last two windows of five entries is treated as a
// geometric decay rate. Infinite when the envelope is not decaying.
double estimate_tail(std::span<const Complex> values);
Classification classify(std::span<const Complex> values, double tail_bound,
                        const ClassifyTolerances& tol = {});
PhotonDistribution make_distribution(std::vector<Complex> values,
                                     const ClassifyTolerances& tol = {});

// Adaptive truncation starts here and doubles until the tail is below
// kTailTarget or the cap is reached.
inline constexpr int kAdaptiveStart = 32;
inline constexpr double kTailTarget = 1e-12;
inline constexpr int kAdaptiveCapQuadratic = 4096; // O(N^2) polynomial routes
inline constexpr int kAdaptiveCapLinear = 65536;   // closed-form families

// Gaussian-state distributions. n_max = nullopt selects adaptive truncation.
PhotonDistribution pn_hermite(const OneModeGaussianState& state,
                              std::optional<int> n_max = std::nullopt,
                              const ClassifyTolerances& tol = {});
PhotonDistribution pn_laguerre(const OneModeGaussianState& state,
                               std::optional<int> n_max = std::nullopt,
                               const ClassifyTolerances& tol = {});
PhotonDistribution pn_centered_xyt(const XYTState& state, std::optional<int> n_max = std::nullopt,
                                   const ClassifyTolerances& tol = {});

// Laguerre-route ingredients: P_n = sum_s D(n,s) L_s(x1) L_{n-s}(x2).
struct LaguerreArguments {
    Complex x1{0.0, 0.0};
    Complex x2{0.0, 0.0};
    Complex minus{0.0, 0.0}; // R12 - sqrt(R11 R22)
    Complex plus{0.0, 0.0};  // R12 + sqrt(R11 R22)
    Complex u1{0.0, 0.0};    // minus * x1, finite when minus = 0
    Complex u2{0.0, 0.0};    // plus * x2
};
LaguerreArguments laguerre_arguments(const RMatrix& r, const HermiteShift& w);

// Uncertainty-violating family x y - t^2 = 1/4 - tau.
enum class TauForm {
    printed, // the even-index tau expansion (reproduces the closed form at tau=4, y=5)
    direct,  // tau expansion of the centered (x, y, t) sum; odd entries included
};
PhotonDistribution pn_violation(double tau, double y, double t,
                                std::optional<int> n_max = std::nullopt,
                                TauForm form = TauForm::printed,
                                const ClassifyTolerances& tol = {});

// 2(x - y) / (6x - 2y + 4xy + 1), evaluated as written.
double mean_photon_xyt(double x, double y);

// Two independently squeezed modes, s_j = tanh^2 r_j: probability of 2k
// photons in total,
//   sqrt(1-s1) sqrt(1-s2) s2^k 2F1(-k, 1/2; 1; 1 - s1/s2).
double two_mode_p2k(double s1, double s2, int k);
// Distribution over the total photon number (odd entries zero).
PhotonDistribution two_mode_distribution(double s1, double s2,
                                         std::optional<int> n_max = std::nullopt,
                                         const ClassifyTolerances& tol = {});

struct LegendreParams {
    double n_factor = 1.0;
    double f1 = 1.0;
    double f2 = 0.5;
    double f3 = 0.0;
};

struct TwoModeJointDistribution {
    std::vector<double> values; // row-major, (n1_max + 1) x (n2_max + 1)
    int n1_max = 0;
    int n2_max = 0;
    double tail_bound = 0.0;

    double at(int n1, int n2) const { return values[static_cast<size_t>(n1) * (n2_max + 1) + n2]; }
    double total() const;
};

// N T(n1, n2) |L_{(n1+n2)/2}^{|n1-n2|/2}(F3)|^2 with
// T = exp(-|ln(n1!/n2!)|) F1^{(n1-n2)/2} F2^{(n1+n2)/2}. Odd n1 + n2 is
// rejected with Error(parity).
double two_mode_joint(const LegendreParams& params, int n1, int n2);
// Table over 0..n1_max x 0..n2_max; odd-parity cells are zero.
TwoModeJointDistribution two_mode_joint_table(const LegendreParams& params, int n1_max,
                                              int n2_max);
// Copy of params with n_factor chosen so the table sums to one.
LegendreParams normalized_legendre_params(LegendreParams params, int n1_max, int n2_max);

enum class DeformationKind { poisson, f_coherent, q_coherent, squeezed_correlated, squeezed_vacuum };

enum class FCoherentConvention {
    printed,  // |alpha|^{2n} / (sqrt(n!) (f(n)!)^2)
    standard, // |alpha|^{2n} / (n! (f(n)!)^2)
};

struct DeformationSpec {
    DeformationKind kind = DeformationKind::poisson;
    double alpha_mag2 = 0.0; // |alpha|^2, also the Poisson mean
    double lambda = 0.0;     // q-deformation
    double r = 0.0;          // squeeze
    double theta = 0.0;      // squeeze phase
    std::vector<double> f_values{1.0}; // f(0), f(1), ...; the last entry repeats
    double mean_q = 0.0;     // squeezed_correlated displacement
    double mean_p = 0.0;
    FCoherentConvention f_convention = FCoherentConvention::printed;
};

void validate(const DeformationSpec& spec);
double deformed_pn(const DeformationSpec& spec, int n);
PhotonDistribution deformed_distribution(const DeformationSpec& spec,
                                         std::optional<int> n_max = std::nullopt,
                                         const ClassifyTolerances& tol = {});

// ln of the unnormalized weight of n photons for the f- and q-coherent
// families; -inf for an exactly vanishing weight.
double deformed_log_weight(const DeformationSpec& spec, int n);
// ln sum_n w_n for those families. Error(divergent_normalization) when the
// series fails the ratio test within kAdaptiveCapLinear terms.
double deformed_log_normalization(const DeformationSpec& spec);

} // namespace photodist
