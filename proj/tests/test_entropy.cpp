#include <cmath>
#include <random>
#include <vector>

#include "photodist/entropy.hpp"
#include "photodist/errors.hpp"
#include "photodist/oracle.hpp"
#include "support.hpp"

using namespace photodist;

namespace {

PhotonDistribution poisson(double x) {
    DeformationSpec s;
    s.alpha_mag2 = x;
    return deformed_distribution(s);
}

PhotonDistribution squeezed_vacuum(double r) {
    DeformationSpec s;
    s.kind = DeformationKind::squeezed_vacuum;
    s.r = r;
    return deformed_distribution(s);
}

double plogp(double p) { return p > 0 ? p * std::log(p) : 0.0; }

// entropy of the residue classes from the roots-of-unity filter
double residue_entropy_oracle(double x, int m) {
    double h = 0.0;
    for (int j = 0; j < m; ++j)
        h -= plogp(oracle_poisson_blocks(x, m, j));
    return h;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::invalid_input;
}

} // namespace

TEST_CASE("block_entropies: deterministic and uniform pair") {
    const std::vector<double> det{1.0, 0.0, 0.0, 0.0};
    const EntropyReport a = block_entropies(det, {2});
    CHECK(a.h_joint == 0.0);
    CHECK(a.h_sub1 == 0.0);
    CHECK(a.h_sub2 == 0.0);
    CHECK(a.information == 0.0);

    const std::vector<double> pair{0.5, 0.5, 0.0};
    const EntropyReport b = block_entropies(pair, {2});
    CHECK_CLOSE(b.h_joint, std::log(2.0), 1e-15);
    CHECK(b.h_sub1 == 0.0);
    CHECK_CLOSE(b.h_sub2, std::log(2.0), 1e-15);
    CHECK_NEAR(b.information, 0.0, 1e-15);
}

TEST_CASE("block_entropies: input validation") {
    CHECK(code_of([] { block_entropies(std::vector<double>{1.1, -0.1}, {2}); }) ==
          ErrorCode::classification);
    CHECK(code_of([] { block_entropies(std::vector<double>{0.7, 0.7}, {2}); }) ==
          ErrorCode::classification);
    CHECK(code_of([] { block_entropies(std::vector<double>{1.0}, {1}); }) != ErrorCode::range);
    const auto complex = make_distribution({Complex{0.5, 0.2}, Complex{0.5, -0.2}});
    CHECK(code_of([&] { block_entropies(complex, {2}); }) == ErrorCode::classification);
}

TEST_CASE("squeezed vacuum carries no m = 2 information") {
    for (double r = 0.0; r <= 3.0 + 1e-9; r += 0.25) {
        INFO("r = ", r);
        const EntropyReport e = block_entropies(squeezed_vacuum(r), {2});
        CHECK_NEAR(e.information, 0.0, 1e-12);
        CHECK_NEAR(e.h_sub2, 0.0, 1e-12);
        const SubadditivityResult s = subadditivity_check(squeezed_vacuum(r), {2});
        CHECK(s.holds);
        CHECK_NEAR(s.margin, 0.0, 1e-12);
    }
}

TEST_CASE("Poisson parity split equals the closed form") {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const EntropyReport e = block_entropies(poisson(x), {2});
        CHECK_CLOSE(e.h_sub2, poisson_parity_information(x), 1e-10);
        CHECK(e.information >= -kSubadditivityTolerance);
    }
    // the closed form is the residue-class entropy, not the mutual information
    const EntropyReport one = block_entropies(poisson(1.0), {2});
    CHECK(std::abs(one.information - one.h_sub2) > 0.5);
}

TEST_CASE("Poisson parity split: limits") {
    CHECK(poisson_parity_information(0.0) == 0.0);
    CHECK(poisson_parity_information(1e-8) < 1e-6);
    CHECK_NEAR(poisson_parity_information(20.0), std::log(2.0), 1e-6);
    CHECK_NEAR(block_entropies(poisson(20.0), {2}).h_sub2, std::log(2.0), 1e-6);
    CHECK(std::isfinite(poisson_parity_information(800.0)));
    CHECK(information(poisson(0.0), {2}) == 0.0);
}

TEST_CASE("Poisson m = 3 residue entropy matches the roots-of-unity filter") {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const EntropyReport e = block_entropies(poisson(x), {3});
        CHECK_CLOSE(e.h_sub2, residue_entropy_oracle(x, 3), 1e-10);
    }
    // the printed three-term form repeats a prefactor and misses the filter
    CHECK(std::abs(poisson_mod3_information_printed(1.0) - residue_entropy_oracle(1.0, 3)) > 1e-3);
    CHECK(std::isfinite(poisson_mod3_information_printed(2.5)));
}

TEST_CASE("subadditivity on 500 random sequences per block size") {
    std::mt19937_64 gen(424242);
    std::uniform_int_distribution<int> len(1, 64);
    std::exponential_distribution<double> w(1.0);
    std::bernoulli_distribution zero(0.2);
    for (int m : {2, 3, 5}) {
        double worst = INFINITY;
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<double> p(len(gen));
            double s = 0.0;
            for (double& v : p) {
                v = zero(gen) ? 0.0 : w(gen);
                s += v;
            }
            if (s == 0.0)
                p[0] = s = 1.0;
            for (double& v : p)
                v /= s;
            const EntropyReport e = block_entropies(p, {m});
            worst = std::min(worst, e.information);
            CHECK(e.subadditive);
            CHECK(e.h_sub1 <= e.h_joint + 1e-12); // block sums coarse-grain
            CHECK(e.h_sub2 <= e.h_joint + 1e-12);
        }
        CHECK(worst >= -1e-12);
    }
}

TEST_CASE("appending zeros changes nothing") {
    std::vector<double> p{0.1, 0.2, 0.3, 0.15, 0.25};
    const EntropyReport a = block_entropies(p, {3});
    p.resize(40, 0.0);
    const EntropyReport b = block_entropies(p, {3});
    CHECK(a.h_joint == b.h_joint);
    CHECK(a.h_sub1 == b.h_sub1);
    CHECK(a.h_sub2 == b.h_sub2);
}

TEST_CASE("uniform over six values factorizes for m = 2") {
    const std::vector<double> p(6, 1.0 / 6.0);
    const EntropyReport e = block_entropies(p, {2});
    CHECK_NEAR(e.information, 0.0, 1e-15);
    CHECK_CLOSE(e.h_sub1, std::log(3.0), 1e-15);
    CHECK_CLOSE(e.h_sub2, std::log(2.0), 1e-15);
}

TEST_CASE("joint_entropy_report") {
    // product
    const std::vector<double> a{0.2, 0.5, 0.3}, b{0.6, 0.4};
    TwoModeJointDistribution prod;
    prod.n1_max = 2;
    prod.n2_max = 1;
    for (double x : a)
        for (double y : b)
            prod.values.push_back(x * y);
    const EntropyReport p = joint_entropy_report(prod);
    CHECK_NEAR(p.information, 0.0, 1e-15);

    // diagonal
    TwoModeJointDistribution diag;
    diag.n1_max = diag.n2_max = 2;
    diag.values = {0.2, 0, 0, 0, 0.5, 0, 0, 0, 0.3};
    const EntropyReport d = joint_entropy_report(diag);
    CHECK_CLOSE(d.information, d.h_sub1, 1e-15);
    CHECK_CLOSE(d.information, d.h_sub2, 1e-15);

    // two-mode Legendre table at F3 = 0
    const LegendreParams lp = normalized_legendre_params({1.0, 0.7, 0.4, 0.0}, 40, 40);
    const EntropyReport t = joint_entropy_report(two_mode_joint_table(lp, 40, 40));
    CHECK(t.information >= -1e-12);

    TwoModeJointDistribution half = diag;
    for (double& v : half.values)
        v *= 0.5;
    CHECK(code_of([&] { joint_entropy_report(half); }) == ErrorCode::unnormalized);
}

TEST_CASE("complex_log") {
    CHECK_CLOSE(complex_log({-1.0, 0.0}, 0), Complex(0.0, M_PI), 1e-15);
    CHECK_CLOSE(complex_log({0.0, 2.0}, 1), Complex(std::log(2.0), M_PI / 2 + 2 * M_PI), 1e-15);
    CHECK_CLOSE(complex_log({0.0, -2.0}, -1), Complex(std::log(2.0), -M_PI / 2 - 2 * M_PI), 1e-15);
}

TEST_CASE("complex_information reduces to block entropies for probabilities") {
    const auto d = poisson(1.7);
    const EntropyReport e = block_entropies(d, {3});
    const ComplexEntropyReport c = complex_information(d, {3}, 0, ComplexReading::block);
    CHECK_CLOSE(c.h_joint.real(), e.h_joint, 1e-13);
    CHECK_CLOSE(c.h_sub1.real(), e.h_sub1, 1e-13);
    CHECK_CLOSE(c.h_sub2.real(), e.h_sub2, 1e-13);
    CHECK_NEAR(c.information.real(), e.information, 1e-13);
    CHECK(c.information.imag() == 0.0);
    // the literal reading keeps subsystem 1 over single values
    const ComplexEntropyReport l = complex_information(d, {3}, 0, ComplexReading::literal);
    CHECK(l.h_sub1 == l.h_joint);
    CHECK_CLOSE(l.h_sub2.real(), e.h_sub2, 1e-13);
}

TEST_CASE("complex_information: a rotated two-element sequence, expanded by hand") {
    const double a = 0.3, b = 0.7, phi = 0.4;
    const Complex u = std::polar(1.0, phi);
    std::vector<Complex> v(12, Complex{0.0, 0.0}); // zero padding keeps the tail estimate at 0
    v[0] = a * u;
    v[1] = b * u;
    const auto d = make_distribution(v);
    const Complex i{0.0, 1.0};
    const Complex joint = -u * (a * (std::log(a) + i * phi) + b * (std::log(b) + i * phi));

    const ComplexEntropyReport blk = complex_information(d, {2}, 0, ComplexReading::block);
    CHECK_CLOSE(blk.h_joint, joint, 1e-15);
    CHECK_CLOSE(blk.h_sub2, joint, 1e-15);
    CHECK_CLOSE(blk.h_sub1, -u * (i * phi), 1e-15);
    CHECK_CLOSE(blk.information, -u * (i * phi), 1e-15);

    const ComplexEntropyReport lit = complex_information(d, {2}, 0, ComplexReading::literal);
    CHECK_CLOSE(lit.h_sub2, joint, 1e-15);
    CHECK_CLOSE(lit.information, joint, 1e-15);
}

TEST_CASE("complex_information: branch index shifts by -2 pi i b sum(P)") {
    const auto d = pn_violation(4.0, 5.0, 0.0, 60);
    const Complex s = d.sum();
    for (ComplexReading rd : {ComplexReading::literal, ComplexReading::block}) {
        const ComplexEntropyReport r0 = complex_information(d, {2}, 0, rd);
        for (int b : {-2, 1, 3}) {
            const ComplexEntropyReport rb = complex_information(d, {2}, b, rd);
            const Complex shift = Complex{0.0, -2.0 * M_PI * b} * s;
            CHECK_CLOSE(rb.h_joint, r0.h_joint + shift, 1e-12);
            CHECK_CLOSE(rb.information, r0.information + shift, 1e-12);
            CHECK(rb.branch_index == b);
        }
    }
}

TEST_CASE("complex_information: the tau = 4 example is not zero") {
    const auto d = pn_violation(4.0, 5.0, 0.0);
    CHECK(d.tail_bound < 1e-10);
    const Complex expect{0.883148288362, -0.323757061615};
    for (ComplexReading rd : {ComplexReading::literal, ComplexReading::block}) {
        const ComplexEntropyReport r = complex_information(d, {2}, 0, rd);
        CHECK_NEAR(r.information, expect, 1e-9);
        MESSAGE(to_string(rd), " reading: |I_- - 0| = ", std::abs(r.information));
    }
}

TEST_CASE("complex_information: divergent tails are rejected") {
    const auto d = pn_centered_xyt(from_tau(2.0, 5.0, 0.0), 64);
    CHECK(std::isinf(d.tail_bound));
    CHECK(code_of([&] { complex_information(d, {2}); }) == ErrorCode::divergent_tail);
}
