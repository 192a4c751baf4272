// Acceptance run: one [PASS]/[FAIL] line per criterion, measurements on
// indented lines below it. Exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "photodist/entropy.hpp"
#include "photodist/errors.hpp"
#include "photodist/inequality.hpp"
#include "photodist/oracle.hpp"
#include "photodist/photon_dist.hpp"

using namespace photodist;

namespace {

// pinned tolerances
constexpr double kRepresentationRtol = 1e-9;
constexpr double kRepresentationSeconds = 60.0;
constexpr int kRepresentationStates = 200;
constexpr int kRepresentationNMax = 40;
constexpr double kNormalizationAtol = 1e-9;
constexpr double kSqueezedRtol = 1e-10;
constexpr double kSqueezedOddAtol = 1e-12;
constexpr int kSqueezedNMax = 60;
constexpr double kPoissonClosedFormAtol = 1e-10;
constexpr double kPoissonSmallMean = 1e-8;
constexpr double kPoissonSmallAtol = 1e-6;
constexpr double kPoissonLargeAtol = 1e-6;
constexpr int kRandomSequences = 500;
constexpr double kSubadditivityFloor = -1e-12;
constexpr double kRootsOfUnityAtol = 1e-10;
constexpr double kZeroInformationAtol = 1e-12;
constexpr double kTransitionStep = 1e-3;
constexpr double kClosedFormRtol = 1e-9;
constexpr double kImaginaryOnlyRtol = 1e-12;
constexpr double kMeanPhotonAtol = 1e-12;
constexpr double kTwoModeSqueezedRtol = 1e-10;
constexpr double kTwoModeEqualRtol = 1e-12;
constexpr double kComplexTailMax = 1e-10;
constexpr double kMarginFloor = -kSubadditivityTolerance;
constexpr double kFigureSeconds = 30.0;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double rel_err(Complex a, Complex b) {
    const double d = std::abs(a - b);
    if (d == 0.0)
        return 0.0;
    return d / std::max(std::abs(a), std::abs(b));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome cross_representation() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst_l = 0.0, worst_x = 0.0;
    for (const XYTState& s : valid_centered_grid(kRepresentationStates)) {
        const auto h = pn_hermite(s.to_state(), kRepresentationNMax);
        const auto l = pn_laguerre(s.to_state(), kRepresentationNMax);
        const auto x = pn_centered_xyt(s, kRepresentationNMax);
        for (int n = 0; n <= kRepresentationNMax; ++n) {
            worst_l = std::max(worst_l, rel_err(h.values[n], l.values[n]));
            worst_x = std::max(worst_x, rel_err(h.values[n], x.values[n]));
        }
    }
    const double secs = seconds_since(t0);
    o.pass = worst_l <= kRepresentationRtol && worst_x <= kRepresentationRtol &&
             secs < kRepresentationSeconds;
    o.detail = fmt("%d states, n<=%d: max rel hermite-laguerre %.2e, hermite-xyt %.2e (tol %.0e); "
                   "%.2f s (limit %.0f s)",
                   kRepresentationStates, kRepresentationNMax, worst_l, worst_x,
                   kRepresentationRtol, secs, kRepresentationSeconds);
    return o;
}

Outcome normalization() {
    Outcome o;
    double worst = 0.0;
    int max_trunc = 0;
    for (const XYTState& s : valid_centered_grid(kRepresentationStates)) {
        for (const auto& d : {pn_hermite(s.to_state()), pn_laguerre(s.to_state()), pn_centered_xyt(s)}) {
            worst = std::max(worst, std::abs(d.sum() - 1.0));
            max_trunc = std::max(max_trunc, d.truncation);
        }
    }
    double worst_two = 0.0;
    const double grid[] = {0.0, 0.25, 0.5, 0.8};
    for (double s1 : grid)
        for (double s2 : grid)
            worst_two = std::max(worst_two, std::abs(two_mode_distribution(s1, s2).sum() - 1.0));
    o.pass = worst <= kNormalizationAtol && worst_two <= kNormalizationAtol;
    o.detail = fmt("grid max |sum-1| %.2e (largest adaptive truncation %d); two-mode max |sum-1| %.2e "
                   "(tol %.0e)",
                   worst, max_trunc, worst_two, kNormalizationAtol);
    return o;
}

Outcome squeezed_closed_form() {
    Outcome o;
    double worst_even = 0.0, worst_odd = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
        const OneModeGaussianState s{std::exp(2 * r) / 2, std::exp(-2 * r) / 2, 0.0, 0.0, 0.0};
        const auto d = pn_hermite(s, kSqueezedNMax);
        for (int n = 0; n <= kSqueezedNMax; ++n) {
            if (n % 2)
                worst_odd = std::max(worst_odd, std::abs(d.values[n]));
            else
                worst_even =
                    std::max(worst_even, rel_err(d.values[n], oracle_squeezed_vacuum(r, n)));
        }
    }
    o.pass = worst_even <= kSqueezedRtol && worst_odd < kSqueezedOddAtol;
    o.detail = fmt("r in {0.5,1,2}, n<=%d: max rel err (even) %.2e (tol %.0e); max |P_odd| %.2e "
                   "(limit %.0e)",
                   kSqueezedNMax, worst_even, kSqueezedRtol, worst_odd, kSqueezedOddAtol);
    return o;
}

PhotonDistribution poisson(double x) {
    DeformationSpec s;
    s.alpha_mag2 = x;
    return deformed_distribution(s);
}

Outcome poisson_parity() {
    // The printed closed form is the entropy of the even/odd split (the
    // residue-class entropy); it is checked against that quantity and the
    // mutual information is logged next to it.
    Outcome o;
    double worst = 0.0;
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const EntropyReport e = block_entropies(poisson(x), {2});
        const double closed = poisson_parity_information(x);
        worst = std::max(worst, std::abs(e.h_sub2 - closed));
        o.notes.push_back(fmt("x=%-4g closed form %.12f  residue entropy %.12f  mutual information %.12f",
                              x, closed, e.h_sub2, e.information));
    }
    const double small = block_entropies(poisson(kPoissonSmallMean), {2}).h_sub2;
    const double large = block_entropies(poisson(20.0), {2}).h_sub2;
    const double large_info = block_entropies(poisson(20.0), {2}).information;
    o.pass = worst <= kPoissonClosedFormAtol && std::abs(small) <= kPoissonSmallAtol &&
             std::abs(large - std::log(2.0)) <= kPoissonLargeAtol;
    o.detail = fmt("max |residue entropy - closed form| %.2e (tol %.0e); value at x=%.0e: %.2e; "
                   "|value(20) - ln 2| %.2e (tol %.0e)",
                   worst, kPoissonClosedFormAtol, kPoissonSmallMean, small,
                   std::abs(large - std::log(2.0)), kPoissonLargeAtol);
    o.notes.push_back(fmt("mutual information at x=20 is %.6f, not ln 2", large_info));
    return o;
}

Outcome subadditivity_suite() {
    Outcome o;
    std::mt19937_64 gen(20240601);
    std::uniform_int_distribution<int> len(1, 80);
    std::exponential_distribution<double> w(1.0);
    double worst = INFINITY;
    for (int m : {2, 3, 5})
        for (int trial = 0; trial < kRandomSequences; ++trial) {
            std::vector<double> p(len(gen));
            double s = 0.0;
            for (double& v : p)
                s += (v = w(gen));
            for (double& v : p)
                v /= s;
            worst = std::min(worst, block_entropies(p, {m}).information);
        }
    double worst_oracle = 0.0;
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        double oracle = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double q = oracle_poisson_blocks(x, 3, j);
            oracle -= q > 0 ? q * std::log(q) : 0.0;
        }
        const EntropyReport e = block_entropies(poisson(x), {3});
        worst_oracle = std::max(worst_oracle, std::abs(e.h_sub2 - oracle));
        const double printed = poisson_mod3_information_printed(x);
        o.notes.push_back(fmt("discrepancy: x=%-4g printed m=3 form %.12f vs roots-of-unity %.12f "
                              "(diff %.2e); mutual information %.12f",
                              x, printed, oracle, printed - oracle, e.information));
    }
    o.pass = worst >= kSubadditivityFloor && worst_oracle <= kRootsOfUnityAtol;
    o.detail = fmt("%d sequences x m in {2,3,5}: min information %.2e (floor %.0e); m=3 Poisson "
                   "residue entropy vs roots-of-unity max diff %.2e (tol %.0e)",
                   kRandomSequences, worst, kSubadditivityFloor, worst_oracle, kRootsOfUnityAtol);
    return o;
}

Outcome squeezed_zero_information() {
    Outcome o;
    double worst = 0.0;
    int cells = 0;
    for (int i = 0; i <= 60; ++i, ++cells) {
        DeformationSpec s;
        s.kind = DeformationKind::squeezed_vacuum;
        s.r = 0.05 * i;
        worst = std::max(worst, std::abs(information(deformed_distribution(s), {2})));
    }
    o.pass = worst <= kZeroInformationAtol;
    o.detail = fmt("r in [0,3] step 0.05 (%d cells): max |I| %.2e (tol %.0e)", cells, worst,
                   kZeroInformationAtol);
    return o;
}

Outcome violation_detection() {
    Outcome o;
    // classification along tau for y = 5, t = 0 through the centered route
    bool transition_ok = true;
    double last_probability = NAN, first_other = NAN;
    for (int i = -10; i <= 10; ++i) {
        const double tau = kTransitionStep * i;
        const bool prob =
            pn_centered_xyt(from_tau(tau, 5.0, 0.0)).classification == Classification::probability;
        if (prob)
            last_probability = tau;
        else if (std::isnan(first_other))
            first_other = tau;
        transition_ok = transition_ok && (prob == (i <= 0));
    }
    const auto d = pn_violation(4.0, 5.0, 0.0, 21);
    double worst = 0.0, worst_real = 0.0;
    for (int l = 0; l <= 10; ++l) {
        worst = std::max(worst, rel_err(d.values[2 * l], oracle_eq33(l)));
        worst_real = std::max(worst_real, std::abs(d.values[2 * l].real()) / std::abs(d.values[2 * l]));
    }
    const double mean = mean_photon_xyt(-0.75, 5.0);
    const double mean_err = std::abs(std::abs(mean) - 23.0 / 57.0);
    o.pass = transition_ok && d.classification == Classification::complex &&
             worst <= kClosedFormRtol && worst_real <= kImaginaryOnlyRtol &&
             mean_err <= kMeanPhotonAtol;
    o.detail = fmt("last probability tau %.3g, first non-probability tau %.3g (step %.0e); tau=4: %s, "
                   "max rel err l<=10 %.2e (tol %.0e), max |Re|/|P| %.2e; ||<n>|-23/57| %.2e",
                   last_probability, first_other, kTransitionStep,
                   std::string(to_string(d.classification)).c_str(), worst, kClosedFormRtol,
                   worst_real, mean_err);
    o.notes.push_back(fmt("mean photon formula at x=-3/4, y=5 evaluates to %+.15f (= %s23/57); the text "
                          "states -23/57",
                          mean, mean < 0 ? "-" : "+"));
    return o;
}

Outcome two_mode() {
    Outcome o;
    double worst_sq = 0.0, worst_eq = 0.0;
    for (double s : {0.25, 0.5, 0.8}) {
        const double r = std::atanh(std::sqrt(s));
        for (int k = 0; k <= 30; ++k) {
            worst_sq = std::max(worst_sq, rel_err(two_mode_p2k(0.0, s, k), oracle_squeezed_vacuum(r, 2 * k)));
            worst_eq = std::max(worst_eq, rel_err(two_mode_p2k(s, s, k), (1 - s) * std::pow(s, k)));
        }
    }
    o.pass = worst_sq <= kTwoModeSqueezedRtol && worst_eq <= kTwoModeEqualRtol;
    o.detail = fmt("s in {0.25,0.5,0.8}, k<=30: s1=0 vs one-mode law max rel %.2e (tol %.0e); s1=s2 "
                   "vs (1-s)s^k max rel %.2e (tol %.0e)",
                   worst_sq, kTwoModeSqueezedRtol, worst_eq, kTwoModeEqualRtol);
    return o;
}

Outcome complex_information_measurement() {
    Outcome o;
    const auto d = pn_violation(4.0, 5.0, 0.0);
    bool finite = true;
    std::string parts;
    for (ComplexReading rd : {ComplexReading::literal, ComplexReading::block}) {
        const ComplexEntropyReport r = complex_information(d, {2}, 0, rd);
        finite = finite && std::isfinite(r.information.real()) && std::isfinite(r.information.imag());
        o.notes.push_back(fmt("%-7s reading, branch 0: I = %.12f %+.12fi, distance from the claimed 0: %.12f",
                              std::string(to_string(rd)).c_str(), r.information.real(),
                              r.information.imag(), std::abs(r.information)));
    }
    o.pass = finite && d.tail_bound < kComplexTailMax;
    o.detail = fmt("truncation %d, tail %.2e (limit %.0e); both readings computed",
                   d.truncation, d.tail_bound, kComplexTailMax);
    return o;
}

Outcome deformed_margins() {
    Outcome o;
    double worst_f = INFINITY, worst_q = INFINITY;
    for (int i = 1; i <= 100; ++i) {
        const double alpha = 0.02 * i;
        DeformationSpec f;
        f.kind = DeformationKind::f_coherent;
        f.alpha_mag2 = alpha * alpha;
        worst_f = std::min(worst_f, f_coherent_inequality(f).margin);
        DeformationSpec q;
        q.kind = DeformationKind::q_coherent;
        q.alpha_mag2 = alpha * alpha;
        q.lambda = 1.0;
        worst_q = std::min(worst_q, q_coherent_inequality(q).margin);
    }
    // the figure sweep itself, timed
    const auto t0 = std::chrono::steady_clock::now();
    double worst_fig = INFINITY, worst_fig_info = INFINITY;
    for (int i = 1; i <= 100; ++i) {
        const double alpha = 0.02 * i;
        DeformationSpec q;
        q.kind = DeformationKind::q_coherent;
        q.alpha_mag2 = alpha * alpha;
        q.lambda = 2.0;
        const InequalityReport r = q_coherent_inequality(q);
        worst_fig = std::min(worst_fig, r.margin);
        worst_fig_info = std::min(worst_fig_info, r.entropies.information);
    }
    const double secs = seconds_since(t0);
    worst_q = std::min(worst_q, worst_fig);
    o.pass = worst_f >= kMarginFloor && worst_q >= kMarginFloor && secs < kFigureSeconds;
    o.detail = fmt("alpha in (0,2] step 0.02: min f-coherent (f=1) margin %.2e, min q-coherent margin "
                   "(lambda 1,2) %.2e (floor %.0e); lambda=2 sweep %.3f s (limit %.0f s)",
                   worst_f, worst_q, kMarginFloor, secs, kFigureSeconds);
    o.notes.push_back(fmt("q-coherent lambda=2: min mutual information over the sweep %.3e", worst_fig_info));
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"cross-representation identity", cross_representation},
        {"normalization", normalization},
        {"squeezed-vacuum closed form", squeezed_closed_form},
        {"Poisson parity closed form", poisson_parity},
        {"subadditivity property suite", subadditivity_suite},
        {"squeezed-vacuum zero information", squeezed_zero_information},
        {"violation detection", violation_detection},
        {"two-mode consistency", two_mode},
        {"complex information (measurement)", complex_information_measurement},
        {"deformed-state inequality margins", deformed_margins},
    };
    int failed = 0;
    int id = 0;
    for (const auto& [name, run] : criteria) {
        ++id;
        Outcome o;
        try {
            o = run();
        } catch (const Error& e) {
            o.pass = false;
            o.detail = std::string("error:") + std::string(to_string(e.code())) + ":" + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        for (const auto& n : o.notes)
            std::printf("       %s\n", n.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
