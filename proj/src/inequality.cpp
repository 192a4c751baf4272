#include "photodist/inequality.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "photodist/errors.hpp"

namespace photodist {

std::string_view to_string(InequalityForm f) {
    switch (f) {
    case InequalityForm::subadditivity: return "subadditivity";
    case InequalityForm::hermite: return "hermite";
    case InequalityForm::laguerre: return "laguerre";
    case InequalityForm::legendre: return "legendre";
    case InequalityForm::f_coherent: return "f_coherent";
    case InequalityForm::q_coherent: return "q_coherent";
    }
    return "unknown";
}

namespace {

// w ln(c w), zero for w <= 0.
double wlog(double w, double c) {
    return w > 0.0 ? w * std::log(c * w) : 0.0;
}

// Parity-split subadditivity on weights w with probabilities c w:
//   lhs = -W_even ln(c W_even) - W_odd ln(c W_odd) - sum_k B_k ln(c B_k)
//   rhs = -sum_k w_k ln(c w_k)
InequalityReport written_form(InequalityForm form, const std::vector<double>& w, double c) {
    NeumaierSum even, odd, blocks, joint;
    for (size_t n = 0; n < w.size(); ++n) {
        (n % 2 == 0 ? even : odd).add(w[n]);
        joint.add(-wlog(w[n], c));
        if (n % 2 == 0) {
            const double b = w[n] + (n + 1 < w.size() ? w[n + 1] : 0.0);
            blocks.add(-wlog(b, c));
        }
    }
    InequalityReport r;
    r.form = form;
    r.lhs = -wlog(even.value(), c) - wlog(odd.value(), c) + blocks.value();
    r.rhs = joint.value();
    r.normalization = c;
    r.margin = c * (r.lhs - r.rhs);
    r.holds = r.margin >= -kSubadditivityTolerance;
    std::vector<double> p(w.size());
    for (size_t n = 0; n < w.size(); ++n)
        p[n] = c * w[n];
    r.entropies = block_entropies(p, PartitionScheme{2});
    return r;
}

void require_probability(const PhotonDistribution& d, const char* what) {
    if (d.classification != Classification::probability)
        fail(ErrorCode::classification,
             std::string(what) + ": distribution is " + std::string(to_string(d.classification)) +
                 "; the inequality needs a probability");
}

} // namespace

InequalityReport subadditivity_inequality(const PhotonDistribution& dist, PartitionScheme scheme) {
    const EntropyReport e = block_entropies(dist, scheme);
    InequalityReport r;
    r.form = InequalityForm::subadditivity;
    r.lhs = e.h_sub1 + e.h_sub2;
    r.rhs = e.h_joint;
    r.margin = r.lhs - r.rhs;
    r.holds = e.subadditive;
    r.entropies = e;
    return r;
}

InequalityReport hermite_inequality(const OneModeGaussianState& state, std::optional<int> n_max) {
    const PhotonDistribution d = pn_hermite(state, n_max);
    require_probability(d, "hermite_inequality");
    OneModeGaussianState c = state;
    c.mean_q = 0.0;
    c.mean_p = 0.0;
    const RMatrix r = r_matrix(c);
    const HermiteShift shift = hermite_shift(state);
    const auto h = hermite_2d_over_factorial_log(d.truncation, r, shift.w1, shift.w2);
    std::vector<double> w(h.size());
    for (size_t n = 0; n < h.size(); ++n)
        w[n] = h[n].is_zero() ? 0.0 : h[n].value().real();
    return written_form(InequalityForm::hermite, w, p0(state).value.real());
}

InequalityReport laguerre_inequality(const OneModeGaussianState& state, std::optional<int> n_max) {
    const PhotonDistribution d = pn_laguerre(state, n_max);
    require_probability(d, "laguerre_inequality");
    return written_form(InequalityForm::laguerre, d.real_values(), 1.0);
}

InequalityReport legendre_inequality(const LegendreParams& params, int n1_max, int n2_max) {
    const LegendreParams norm = normalized_legendre_params(params, n1_max, n2_max);
    const TwoModeJointDistribution t = two_mode_joint_table(norm, n1_max, n2_max);
    const EntropyReport e = joint_entropy_report(t);
    InequalityReport r;
    r.form = InequalityForm::legendre;
    // weights T |L|^2 = P / N
    r.normalization = norm.n_factor;
    r.lhs = (e.h_sub1 + e.h_sub2) / norm.n_factor;
    r.rhs = e.h_joint / norm.n_factor;
    r.margin = e.information;
    r.holds = e.subadditive;
    r.entropies = e;
    return r;
}

InequalityReport f_coherent_inequality(const DeformationSpec& spec, std::optional<int> n_max) {
    if (spec.kind != DeformationKind::f_coherent)
        fail(ErrorCode::invalid_spec, "f_coherent_inequality: spec is not f-coherent");
    const PhotonDistribution d = deformed_distribution(spec, n_max);
    const double log_norm = deformed_log_normalization(spec);
    std::vector<double> w(d.values.size());
    for (size_t n = 0; n < w.size(); ++n) {
        const double lw = deformed_log_weight(spec, static_cast<int>(n));
        w[n] = std::isinf(lw) ? 0.0 : std::exp(lw);
        if (!std::isfinite(w[n]))
            fail(ErrorCode::range, "f_coherent_inequality: weight overflows double");
    }
    return written_form(InequalityForm::f_coherent, w, std::exp(-log_norm));
}

InequalityReport q_coherent_inequality(const DeformationSpec& spec, std::optional<int> n_max) {
    if (spec.kind != DeformationKind::q_coherent)
        fail(ErrorCode::invalid_spec, "q_coherent_inequality: spec is not q-coherent");
    const PhotonDistribution d = deformed_distribution(spec, n_max);
    const EntropyReport e = block_entropies(d, PartitionScheme{2});
    InequalityReport r;
    r.form = InequalityForm::q_coherent;
    r.lhs = e.h_sub2;
    r.rhs = 0.0;
    r.margin = r.lhs;
    r.holds = r.margin >= -kSubadditivityTolerance;
    r.entropies = e;
    return r;
}

} // namespace photodist
