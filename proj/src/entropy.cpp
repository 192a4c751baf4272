#include "photodist/entropy.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "photodist/errors.hpp"

namespace photodist {

namespace {

constexpr double kNegTolerance = 1e-12;
constexpr double kSumSlack = 1e-9;

void check_scheme(PartitionScheme s) {
    if (s.block_size < 2)
        fail(ErrorCode::domain, "partition block size must be >= 2, got " +
                                    std::to_string(s.block_size));
}

double plogp(double p) {
    return p > 0.0 ? p * std::log(p) : 0.0;
}

std::vector<double> block_sums(std::span<const double> p, int m) {
    std::vector<double> out((p.size() + m - 1) / m, 0.0);
    for (size_t k = 0; k < out.size(); ++k) {
        NeumaierSum s;
        for (size_t n = k * m; n < std::min(p.size(), (k + 1) * m); ++n)
            s.add(p[n]);
        out[k] = s.value();
    }
    return out;
}

std::vector<double> residue_sums(std::span<const double> p, int m) {
    std::vector<double> out(m, 0.0);
    for (int j = 0; j < m; ++j) {
        NeumaierSum s;
        for (size_t n = j; n < p.size(); n += m)
            s.add(p[n]);
        out[j] = s.value();
    }
    return out;
}

} // namespace

double shannon_entropy(std::span<const double> p) {
    NeumaierSum s;
    for (double v : p)
        s.add(-plogp(v));
    return s.value();
}

EntropyReport block_entropies(std::span<const double> p, PartitionScheme scheme) {
    check_scheme(scheme);
    NeumaierSum total;
    for (double v : p) {
        if (!(v >= -kNegTolerance))
            fail(ErrorCode::classification, "block_entropies: negative or NaN entry");
        total.add(v);
    }
    if (total.value() > 1.0 + kSumSlack)
        fail(ErrorCode::classification, "block_entropies: entries sum above one");
    EntropyReport r;
    r.h_joint = shannon_entropy(p);
    const auto blocks = block_sums(p, scheme.block_size);
    const auto residues = residue_sums(p, scheme.block_size);
    r.h_sub1 = shannon_entropy(blocks);
    r.h_sub2 = shannon_entropy(residues);
    r.information = r.h_sub1 + r.h_sub2 - r.h_joint;
    r.subadditive = r.information >= -kSubadditivityTolerance;
    return r;
}

EntropyReport block_entropies(const PhotonDistribution& dist, PartitionScheme scheme) {
    if (dist.classification != Classification::probability)
        fail(ErrorCode::classification,
             "block_entropies: distribution is " + std::string(to_string(dist.classification)) +
                 ", not a probability; use complex_information");
    const std::vector<double> p = dist.real_values();
    return block_entropies(p, scheme);
}

double information(const PhotonDistribution& dist, PartitionScheme scheme) {
    return block_entropies(dist, scheme).information;
}

SubadditivityResult subadditivity_check(const PhotonDistribution& dist, PartitionScheme scheme) {
    const EntropyReport r = block_entropies(dist, scheme);
    return {r.subadditive, r.information};
}

EntropyReport joint_entropy_report(const TwoModeJointDistribution& joint) {
    const int c = joint.n2_max + 1;
    std::vector<double> m1(joint.n1_max + 1, 0.0);
    std::vector<double> m2(c, 0.0);
    NeumaierSum total;
    for (int n1 = 0; n1 <= joint.n1_max; ++n1) {
        NeumaierSum row;
        for (int n2 = 0; n2 < c; ++n2) {
            const double v = joint.at(n1, n2);
            if (!(v >= -kNegTolerance))
                fail(ErrorCode::classification, "joint_entropy_report: negative or NaN entry");
            row.add(v);
            total.add(v);
        }
        m1[n1] = row.value();
    }
    for (int n2 = 0; n2 < c; ++n2) {
        NeumaierSum col;
        for (int n1 = 0; n1 <= joint.n1_max; ++n1)
            col.add(joint.at(n1, n2));
        m2[n2] = col.value();
    }
    const double t = total.value();
    if (t > 1.0 + kSumSlack || t < 1.0 - joint.tail_bound - kSumSlack)
        fail(ErrorCode::unnormalized,
             "joint_entropy_report: table sums to " + std::to_string(t) + ", not 1");
    EntropyReport r;
    r.h_joint = shannon_entropy(joint.values);
    r.h_sub1 = shannon_entropy(m1);
    r.h_sub2 = shannon_entropy(m2);
    r.information = r.h_sub1 + r.h_sub2 - r.h_joint;
    r.subadditive = r.information >= -kSubadditivityTolerance;
    return r;
}

std::string_view to_string(ComplexReading r) {
    return r == ComplexReading::literal ? "literal" : "block";
}

Complex complex_log(Complex z, int branch) {
    if (z == Complex{0.0, 0.0})
        fail(ErrorCode::domain, "complex_log: logarithm of zero");
    return {std::log(std::abs(z)), principal_arg(z) + 2.0 * M_PI * branch};
}

namespace {

// -sum z ln z over nonzero entries.
Complex complex_entropy(std::span<const Complex> z, int branch) {
    ComplexNeumaierSum s;
    for (const Complex& v : z)
        if (v != Complex{0.0, 0.0})
            s.add(-v * complex_log(v, branch));
    return s.value();
}

} // namespace

ComplexEntropyReport complex_information(const PhotonDistribution& dist, PartitionScheme scheme,
                                         int branch, ComplexReading reading) {
    check_scheme(scheme);
    if (!std::isfinite(dist.tail_bound))
        fail(ErrorCode::divergent_tail,
             "complex_information: values fail the ratio test; the entropy series diverges");
    const int m = scheme.block_size;
    const auto& v = dist.values;

    std::vector<Complex> residues(m, Complex{0.0, 0.0});
    std::vector<double> residue_abs(m, 0.0);
    for (int j = 0; j < m; ++j) {
        ComplexNeumaierSum s;
        NeumaierSum a;
        for (size_t n = j; n < v.size(); n += m) {
            s.add(v[n]);
            a.add(std::abs(v[n]));
        }
        residues[j] = s.value();
        residue_abs[j] = a.value();
    }

    ComplexEntropyReport r;
    r.branch_index = branch;
    r.reading = reading;
    r.h_joint = complex_entropy(v, branch);
    if (reading == ComplexReading::literal) {
        r.h_sub1 = r.h_joint;
        ComplexNeumaierSum h2;
        for (int j = 0; j < m; ++j) {
            if (residues[j] == Complex{0.0, 0.0})
                continue;
            const Complex log_term{std::log(residue_abs[j]),
                                   principal_arg(residues[j]) + 2.0 * M_PI * branch};
            h2.add(-residues[j] * log_term);
        }
        r.h_sub2 = h2.value();
    } else {
        std::vector<Complex> blocks((v.size() + m - 1) / m, Complex{0.0, 0.0});
        for (size_t k = 0; k < blocks.size(); ++k) {
            ComplexNeumaierSum s;
            for (size_t n = k * m; n < std::min(v.size(), (k + 1) * m); ++n)
                s.add(v[n]);
            blocks[k] = s.value();
        }
        r.h_sub1 = complex_entropy(blocks, branch);
        r.h_sub2 = complex_entropy(residues, branch);
    }
    r.information = r.h_sub1 + r.h_sub2 - r.h_joint;
    return r;
}

double poisson_parity_information(double x) {
    if (!(x >= 0.0))
        fail(ErrorCode::domain, "poisson_parity_information: mean must be nonnegative");
    // e^{-x} sinh x and e^{-x} cosh x without overflow
    const double e = std::exp(-2.0 * x);
    const double odd = -0.5 * std::expm1(-2.0 * x);
    const double even = 0.5 * (1.0 + e);
    return -(plogp(odd) + plogp(even));
}

double poisson_mod3_information_printed(double x) {
    const double s3 = std::sqrt(3.0);
    const double decay = std::exp(-1.5 * x);
    const double sin_minus = std::sin((M_PI - 3.0 * s3 * x) / 6.0);
    const double sin_plus = std::sin((M_PI + 3.0 * s3 * x) / 6.0);
    const double cos_term = std::cos(s3 * x / 2.0);

    auto xlog = [](double a, double b) { return a == 0.0 ? 0.0 : a * std::log(b); };
    const double first_weight = (1.0 - 2.0 * decay * sin_minus) / 3.0;
    const double first = xlog(first_weight, 1.0 / 3.0 - 2.0 / 3.0 * decay * sin_minus);
    const double middle_weight = (2.0 * decay * cos_term + 1.0) / 3.0;
    const double middle = xlog(middle_weight, middle_weight);
    const double third = xlog(first_weight, 1.0 / 3.0 - 2.0 / 3.0 * decay * sin_plus);
    return -(first + middle + third);
}

} // namespace photodist
