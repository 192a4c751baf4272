#pragma once

#include <optional>
#include <string_view>

#include "photodist/entropy.hpp"

namespace photodist {

// Subadditivity written out for a particular representation of the
// distribution. All use the m = 2 partition except legendre, which uses the
// two-mode marginals.
enum class InequalityForm {
    subadditivity, // block entropies of any probability sequence
    hermite,       // two-index Hermite sums H_kk = H_{kk}/k!, P0 kept inside the logs
    laguerre,      // sums of D(k,s) L_s(x1) L_{k-s}(x2)
    legendre,      // T(n1,n2) |L(F3)|^2 with N inside the logs
    f_coherent,    // unnormalized f-coherent weights, C0 inside the logs
    q_coherent,    // parity-split entropy of the q-coherent law, >= 0
};

std::string_view to_string(InequalityForm f);

struct InequalityReport {
    InequalityForm form = InequalityForm::subadditivity;
    double lhs = 0.0; // both sides on the scale of the written inequality
    double rhs = 0.0;
    // normalization * (lhs - rhs); for the forms whose weights are
    // probabilities divided by a constant c this is c, which makes margin the
    // Shannon information. q_coherent has rhs = 0 and normalization = 1.
    double normalization = 1.0;
    double margin = 0.0;
    bool holds = true;
    EntropyReport entropies; // of the underlying normalized distribution
};

InequalityReport subadditivity_inequality(const PhotonDistribution& dist,
                                          PartitionScheme scheme = {});
InequalityReport hermite_inequality(const OneModeGaussianState& state,
                                    std::optional<int> n_max = std::nullopt);
InequalityReport laguerre_inequality(const OneModeGaussianState& state,
                                     std::optional<int> n_max = std::nullopt);
// The table is normalized first (N = 1 / sum T |L|^2).
InequalityReport legendre_inequality(const LegendreParams& params, int n1_max, int n2_max);
InequalityReport f_coherent_inequality(const DeformationSpec& spec,
                                       std::optional<int> n_max = std::nullopt);
InequalityReport q_coherent_inequality(const DeformationSpec& spec,
                                       std::optional<int> n_max = std::nullopt);

} // namespace photodist
