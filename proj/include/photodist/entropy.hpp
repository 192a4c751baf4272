#pragma once

#include <span>
#include <string_view>

#include "photodist/photon_dist.hpp"

namespace photodist {

// n -> (n / m, n % m): block index and residue class.
struct PartitionScheme {
    int block_size = 2;
};

// All entropies in nats.
struct EntropyReport {
    double h_joint = 0.0; // -sum p_n ln p_n
    double h_sub1 = 0.0;  // over block sums
    double h_sub2 = 0.0;  // over residue-class sums
    double information = 0.0;
    bool subadditive = true;
};

inline constexpr double kSubadditivityTolerance = 1e-12;

// -sum p ln p with 0 ln 0 = 0, compensated, ascending index order.
double shannon_entropy(std::span<const double> p);

// Requires entries >= -1e-12 and a total within 1e-9 of at most one;
// Error(classification) otherwise.
EntropyReport block_entropies(std::span<const double> p, PartitionScheme scheme);
// Requires a Probability-classified distribution; Error(classification)
// otherwise (use complex_information instead).
EntropyReport block_entropies(const PhotonDistribution& dist, PartitionScheme scheme);
double information(const PhotonDistribution& dist, PartitionScheme scheme);

struct SubadditivityResult {
    bool holds = true;
    double margin = 0.0;
};
SubadditivityResult subadditivity_check(const PhotonDistribution& dist, PartitionScheme scheme);

// Mutual information of a two-mode table with proper marginals; h_sub1 is
// the entropy of the n1 marginal. Error(unnormalized) when the table sum
// misses one by more than its tail bound + 1e-9.
EntropyReport joint_entropy_report(const TwoModeJointDistribution& joint);

enum class ComplexReading {
    literal, // subsystem 1 over single values, subsystem 2 with ln(sum |P|)
    block,   // complex entropy of block sums and residue sums
};

std::string_view to_string(ComplexReading r);

struct ComplexEntropyReport {
    Complex h_joint{0.0, 0.0};
    Complex h_sub1{0.0, 0.0};
    Complex h_sub2{0.0, 0.0};
    Complex information{0.0, 0.0};
    int branch_index = 0;
    ComplexReading reading = ComplexReading::literal;
};

// ln z = ln|z| + i(arg z + 2 pi branch), arg in (-pi, pi].
Complex complex_log(Complex z, int branch);

// Entropies of signed or complex "probabilities". Error(divergent_tail) when
// the distribution's tail estimate is not finite.
ComplexEntropyReport complex_information(const PhotonDistribution& dist, PartitionScheme scheme,
                                         int branch = 0,
                                         ComplexReading reading = ComplexReading::literal);

// Poisson closed forms.
//   -e^{-x}(sinh x ln(e^{-x} sinh x) + cosh x ln(e^{-x} cosh x)),
// i.e. the entropy of the even/odd split of a Poisson law.
double poisson_parity_information(double x_bar);
// The three-term m = 3 expression exactly as printed; its third prefactor
// repeats the first one, so it differs from the residue-class entropy.
double poisson_mod3_information_printed(double x_bar);

} // namespace photodist
