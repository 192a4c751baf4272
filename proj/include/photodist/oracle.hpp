#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "photodist/gaussian_state.hpp"

namespace photodist {

// Independent closed forms. None of them touches photon_dist or entropy;
// the only shared code is log_factorial.

// n_bar^n / (n_bar + 1)^{n+1}
double oracle_thermal(double n_bar, int n);
// sech r (tanh r / 2)^{2k} (2k)! / (k!)^2 at n = 2k, zero for odd n.
double oracle_squeezed_vacuum(double r, int n);
// e^{-x} sum_k x^{mk+j} / (mk+j)! = (1/m) sum_{w^m=1} w^{-j} e^{(w-1)x}
double oracle_poisson_blocks(double x_bar, int m, int j);
// The complex example at tau = 4, y = 5, t = 0:
//   (2l)! 2^{6l+1/2} 5^{2l+1/2} / (-215/4)^{2l+1/2} sum_k (17/4096)^k / (k! (2(l-k))!^2)
Complex oracle_eq33(int l);

enum class VerdictKind {
    check,       // counts towards the aggregate status
    discrepancy, // a printed formula compared against an independent value
    measurement, // a reported number with no pass/fail meaning
};

std::string_view to_string(VerdictKind k);

struct OracleVerdict {
    std::string name;
    Complex expected{0.0, 0.0};
    Complex actual{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = true;
    VerdictKind kind = VerdictKind::check;
    std::string note;
};

// pass = abs_err <= atol || rel_err <= rtol
OracleVerdict make_verdict(std::string name, Complex expected, Complex actual, double atol,
                           double rtol, VerdictKind kind = VerdictKind::check);

struct GridConfig {
    std::vector<XYTState> centered_states; // representation agreement, normalization
    int n_compare = 40;
    std::vector<double> thermal_n_bar;
    std::vector<double> squeezed_r;
    int squeezed_n_max = 60;
    std::vector<double> poisson_means;
    std::vector<double> two_mode_s;
    std::vector<double> violation_tau; // y = 5, t = 0
    bool complex_example = false;      // the tau = 4, y = 5 values and I_-
    bool mean_photon_example = false;

    static GridConfig default_grid();
};

// count valid centered states with x, y in [0.5, 3], t in [0, 0.4] and
// det - 1/4 >= 0.01, drawn from a fixed-seed mt19937_64 stream.
std::vector<XYTState> valid_centered_grid(int count, std::uint64_t seed = 20240601);

// Runs every configured cross-check. Failures are verdicts, not exceptions.
std::vector<OracleVerdict> run_suite(const GridConfig& grid);

// True when every check-kind verdict passes.
bool suite_passed(const std::vector<OracleVerdict>& verdicts);

} // namespace photodist
