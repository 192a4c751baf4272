// photodist: photon-number distributions, block entropies, inequality
// margins, uncertainty-violation sweeps and figure data.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "photodist/entropy.hpp"
#include "photodist/errors.hpp"
#include "photodist/inequality.hpp"
#include "photodist/io.hpp"
#include "photodist/oracle.hpp"
#include "photodist/parallel.hpp"
#include "photodist/photon_dist.hpp"

using namespace photodist;
using nlohmann::json;

namespace {

struct Config {
    // selection
    std::string family = "gaussian";
    std::string state_path;
    std::optional<double> x, y, t, tau;
    double mean_q = 0.0, mean_p = 0.0;
    double r = 0.0, theta = 0.0;
    std::optional<double> alpha;
    std::optional<double> x_bar;
    double lambda = 0.0;
    std::vector<double> f_values{1.0};
    std::string f_convention = "printed";
    double s1 = 0.0, s2 = 0.0;
    double n_factor = 1.0, f1 = 1.0, f2 = 0.5, f3 = 0.0;
    int n1_max = 20, n2_max = 20;
    bool normalize = false;
    std::string tau_form = "printed";

    // common
    std::optional<int> n_max;
    int partition = 2;
    double tol_imag = 1e-12, tol_neg = 1e-12;
    int branch = 0;
    std::string format = "csv";
    std::string out;
    std::string reading = "both";
    unsigned threads = 0;

    // inequality
    std::string form = "auto";
    std::optional<double> alpha_min, alpha_max;
    double alpha_step = 0.02;

    // violation
    double tau_min = -1.0, tau_max = 5.0, tau_step = 0.05;
    std::vector<double> ys{5.0};
    std::vector<double> ts{0.0};
    std::string sweep_route = "xyt";

    // figures
    int fig = 0;
    std::string quantity = "paper";
    double fig_lambda = 2.0;
    std::string oracle_format = "json";
    std::optional<double> range_min, range_max, range_step;
};

ClassifyTolerances tolerances(const Config& c) {
    return {c.tol_imag, c.tol_neg};
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v)
        fail(ErrorCode::invalid_input, std::string("missing ") + flag);
    return *v;
}

OneModeGaussianState gaussian_state(const Config& c) {
    if (!c.state_path.empty())
        return load_state_file(c.state_path);
    return {c.x.value_or(0.5), c.y.value_or(0.5), c.t.value_or(0.0), c.mean_q, c.mean_p};
}

double alpha_mag2(const Config& c) {
    if (c.x_bar)
        return *c.x_bar;
    const double a = require(c.alpha, "--alpha (or --x-bar)");
    return a * a;
}

DeformationSpec deformation(const Config& c) {
    DeformationSpec s;
    const std::string& f = c.family;
    if (f == "poisson") {
        s.kind = DeformationKind::poisson;
        s.alpha_mag2 = alpha_mag2(c);
    } else if (f == "f-coherent") {
        s.kind = DeformationKind::f_coherent;
        s.alpha_mag2 = alpha_mag2(c);
        s.f_values = c.f_values;
        if (c.f_convention == "standard")
            s.f_convention = FCoherentConvention::standard;
        else if (c.f_convention != "printed")
            fail(ErrorCode::invalid_input, "unknown --f-convention " + c.f_convention);
    } else if (f == "q-coherent") {
        s.kind = DeformationKind::q_coherent;
        s.alpha_mag2 = alpha_mag2(c);
        s.lambda = c.lambda;
    } else if (f == "squeezed") {
        s.kind = DeformationKind::squeezed_correlated;
        s.r = c.r;
        s.theta = c.theta;
        s.mean_q = c.mean_q;
        s.mean_p = c.mean_p;
    } else if (f == "squeezed-vacuum") {
        s.kind = DeformationKind::squeezed_vacuum;
        s.r = c.r;
    } else {
        fail(ErrorCode::invalid_input, "unknown family " + f);
    }
    return s;
}

bool is_deformed(const std::string& f) {
    return f == "poisson" || f == "f-coherent" || f == "q-coherent" || f == "squeezed" ||
           f == "squeezed-vacuum";
}

TauForm tau_form(const std::string& s) {
    if (s == "printed")
        return TauForm::printed;
    if (s == "direct")
        return TauForm::direct;
    fail(ErrorCode::invalid_input, "unknown --tau-form " + s);
}

PhotonDistribution distribution(const Config& c) {
    const ClassifyTolerances tol = tolerances(c);
    const std::string& f = c.family;
    if (f == "gaussian")
        return pn_hermite(gaussian_state(c), c.n_max, tol);
    if (f == "gaussian-laguerre")
        return pn_laguerre(gaussian_state(c), c.n_max, tol);
    if (f == "xyt") {
        const double y = require(c.y, "--y");
        const double t = c.t.value_or(0.0);
        if (c.tau) {
            const XYTState st = from_tau(*c.tau, y, t);
            if (c.x && std::abs(*c.x - st.x) > 1e-12 * std::max(1.0, std::abs(st.x)))
                fail(ErrorCode::invalid_input,
                     "--x " + format_double(*c.x) + " disagrees with x = (1/4 - tau + t^2)/y = " +
                         format_double(st.x));
            return pn_violation(*c.tau, y, t, c.n_max, tau_form(c.tau_form), tol);
        }
        return pn_centered_xyt({require(c.x, "--x"), y, t}, c.n_max, tol);
    }
    if (f == "two-mode")
        return two_mode_distribution(c.s1, c.s2, c.n_max, tol);
    if (is_deformed(f))
        return deformed_distribution(deformation(c), c.n_max, tol);
    fail(ErrorCode::invalid_input, "unknown family " + f);
}

LegendreParams legendre_params(const Config& c) {
    LegendreParams p{c.n_factor, c.f1, c.f2, c.f3};
    if (c.normalize)
        p = normalized_legendre_params(p, c.n1_max, c.n2_max);
    return p;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                fail(ErrorCode::invalid_input, "cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void check_common(const Config& c) {
    if (c.n_max && *c.n_max < 1)
        fail(ErrorCode::invalid_input, "--n-max must be >= 1");
    if (c.partition < 2)
        fail(ErrorCode::invalid_input, "--partition must be >= 2");
    if (!(c.tol_imag > 0.0) || !(c.tol_neg > 0.0))
        fail(ErrorCode::invalid_input, "tolerances must be positive");
    if (c.format != "csv" && c.format != "json")
        fail(ErrorCode::invalid_input, "--format must be csv or json");
}

Metadata selection_metadata(const Config& c) {
    Metadata m{{"family", c.family}};
    auto add = [&](const char* k, const std::optional<double>& v) {
        if (v)
            m.emplace_back(k, format_double(*v));
    };
    add("x", c.x);
    add("y", c.y);
    add("t", c.t);
    add("tau", c.tau);
    return m;
}

// dist

int cmd_dist(const Config& c) {
    check_common(c);
    Output out(c.out);
    std::ostream& os = out.stream();
    if (c.family == "two-mode-joint") {
        const TwoModeJointDistribution t = two_mode_joint_table(legendre_params(c), c.n1_max, c.n2_max);
        if (c.format == "json")
            os << json{{"family", c.family}, {"distribution", joint_json(t)}}.dump() << '\n';
        else
            write_joint_csv(os, t, {{"family", c.family}});
        return 0;
    }
    const PhotonDistribution d = distribution(c);
    if (c.format == "json")
        os << json{{"family", c.family}, {"distribution", distribution_json(d)}}.dump() << '\n';
    else
        write_distribution_csv(os, d, selection_metadata(c));
    return 0;
}

// entropy

std::vector<ComplexReading> readings(const std::string& s) {
    if (s == "literal")
        return {ComplexReading::literal};
    if (s == "block")
        return {ComplexReading::block};
    if (s == "both")
        return {ComplexReading::literal, ComplexReading::block};
    fail(ErrorCode::invalid_input, "unknown --reading " + s);
}

void write_entropy(std::ostream& os, const Config& c, const EntropyReport& r) {
    if (c.format == "json") {
        os << entropy_json(r).dump() << '\n';
        return;
    }
    os << "h_joint,h_sub1,h_sub2,information,subadditive\n"
       << format_double(r.h_joint) << ',' << format_double(r.h_sub1) << ','
       << format_double(r.h_sub2) << ',' << format_double(r.information) << ','
       << (r.subadditive ? "true" : "false") << '\n';
}

// The notice goes out only once the fallback has succeeded, so a failing
// fallback still leaves a single error line on stderr.
void write_complex_entropies(std::ostream& os, const Config& c, const PhotonDistribution& d,
                             const std::string& notice) {
    std::vector<ComplexEntropyReport> reports;
    for (ComplexReading rd : readings(c.reading))
        reports.push_back(complex_information(d, PartitionScheme{c.partition}, c.branch, rd));
    std::cerr << "notice: " << notice << '\n';
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(complex_entropy_json(r));
        os << json{{"classification", std::string(to_string(d.classification))},
                   {"complex_entropies", arr}}
                  .dump()
           << '\n';
        return;
    }
    os << "# classification=" << to_string(d.classification) << '\n';
    os << "reading,branch,h_joint_re,h_joint_im,h_sub1_re,h_sub1_im,h_sub2_re,h_sub2_im,"
          "information_re,information_im\n";
    for (const auto& r : reports) {
        os << to_string(r.reading) << ',' << r.branch_index;
        for (Complex z : {r.h_joint, r.h_sub1, r.h_sub2, r.information})
            os << ',' << format_double(z.real()) << ',' << format_double(z.imag());
        os << '\n';
    }
}

int cmd_entropy(const Config& c) {
    check_common(c);
    Output out(c.out);
    std::ostream& os = out.stream();
    if (c.family == "two-mode-joint") {
        write_entropy(os, c,
                      joint_entropy_report(two_mode_joint_table(legendre_params(c), c.n1_max, c.n2_max)));
        return 0;
    }
    const PhotonDistribution d = distribution(c);
    if (d.classification == Classification::probability) {
        write_entropy(os, c, block_entropies(d, PartitionScheme{c.partition}));
        return 0;
    }
    write_complex_entropies(os, c, d,
                            "distribution is " + std::string(to_string(d.classification)) +
                                "; reporting complex entropies");
    return 0;
}

// inequality

std::string default_form(const std::string& family) {
    if (family == "gaussian")
        return "hermite";
    if (family == "gaussian-laguerre")
        return "laguerre";
    if (family == "two-mode-joint")
        return "legendre";
    if (family == "f-coherent")
        return "f-coherent";
    if (family == "q-coherent")
        return "q-coherent";
    return "subadditivity";
}

InequalityReport inequality(const Config& c) {
    const std::string form = c.form == "auto" ? default_form(c.family) : c.form;
    if (form == "hermite")
        return hermite_inequality(gaussian_state(c), c.n_max);
    if (form == "laguerre")
        return laguerre_inequality(gaussian_state(c), c.n_max);
    if (form == "legendre")
        return legendre_inequality(LegendreParams{c.n_factor, c.f1, c.f2, c.f3}, c.n1_max, c.n2_max);
    if (form == "f-coherent")
        return f_coherent_inequality(deformation(c), c.n_max);
    if (form == "q-coherent")
        return q_coherent_inequality(deformation(c), c.n_max);
    if (form == "subadditivity")
        return subadditivity_inequality(distribution(c), PartitionScheme{c.partition});
    fail(ErrorCode::invalid_input, "unknown --form " + form);
}

const char* kInequalityHeader = "form,lhs,rhs,normalization,margin,holds,h_joint,h_sub1,h_sub2,information";

std::string inequality_row(const InequalityReport& r) {
    std::ostringstream os;
    os << to_string(r.form) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.normalization) << ',' << format_double(r.margin) << ','
       << (r.holds ? "true" : "false") << ',' << format_double(r.entropies.h_joint) << ','
       << format_double(r.entropies.h_sub1) << ',' << format_double(r.entropies.h_sub2) << ','
       << format_double(r.entropies.information);
    return os.str();
}

int cmd_inequality(const Config& c) {
    check_common(c);
    Output out(c.out);
    std::ostream& os = out.stream();

    if (c.alpha_max) {
        // sweep over |alpha| for the deformed families
        const double lo = c.alpha_min.value_or(c.alpha_step);
        const double hi = *c.alpha_max;
        if (!(c.alpha_step > 0.0) || hi < lo)
            fail(ErrorCode::invalid_input, "bad alpha sweep range");
        const size_t count = static_cast<size_t>(std::floor((hi - lo) / c.alpha_step + 1e-9)) + 1;
        const auto rows = parallel_map(
            count,
            [&](size_t i) {
                Config cell = c;
                cell.x_bar.reset();
                cell.alpha = lo + c.alpha_step * static_cast<double>(i);
                return std::make_pair(*cell.alpha, inequality(cell));
            },
            c.threads);
        if (c.format == "json") {
            json arr = json::array();
            for (const auto& [a, r] : rows) {
                json j = inequality_json(r);
                j["alpha"] = a;
                arr.push_back(j);
            }
            os << arr.dump() << '\n';
        } else {
            os << "alpha," << kInequalityHeader << '\n';
            for (const auto& [a, r] : rows)
                os << format_double(a) << ',' << inequality_row(r) << '\n';
        }
        return 0;
    }

    InequalityReport r;
    try {
        r = inequality(c);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::classification || c.family == "two-mode-joint")
            throw;
        write_complex_entropies(os, c, distribution(c),
                                std::string(e.what()) + "; reporting complex information instead");
        return 0;
    }
    std::optional<double> closed_form;
    if (c.family == "poisson" && c.partition == 2)
        closed_form = poisson_parity_information(alpha_mag2(c));
    if (c.format == "json") {
        json j = inequality_json(r);
        if (closed_form)
            j["poisson_parity_closed_form"] = *closed_form;
        os << j.dump() << '\n';
    } else {
        if (closed_form)
            os << "# poisson_parity_closed_form=" << format_double(*closed_form) << '\n';
        os << kInequalityHeader << '\n' << inequality_row(r) << '\n';
    }
    return 0;
}

// violation

struct ViolationCell {
    double tau = 0, y = 0, t = 0, x = 0, slack = 0;
    std::string classification;
    Complex sum;
    double tail = 0;
    double mean = NAN;
    Complex info_literal{NAN, NAN}, info_block{NAN, NAN};
    std::string note;
};

ViolationCell violation_cell(const Config& c, double tau, double y, double t) {
    ViolationCell cell;
    cell.tau = tau;
    cell.y = y;
    cell.t = t;
    const XYTState st = from_tau(tau, y, t);
    cell.x = st.x;
    cell.slack = uncertainty_check(st.to_state()).slack;
    try {
        cell.mean = mean_photon_xyt(st.x, y);
    } catch (const Error&) {
        cell.note = "mean_singular";
    }
    // A degenerate grid point (e.g. a vanishing denominator) becomes a row
    // note rather than aborting the sweep.
    PhotonDistribution d;
    try {
        d = c.sweep_route == "xyt"
                ? pn_centered_xyt(st, c.n_max, tolerances(c))
                : pn_violation(tau, y, t, c.n_max, tau_form(c.sweep_route), tolerances(c));
    } catch (const Error& e) {
        cell.classification = "undefined";
        cell.sum = {NAN, NAN};
        cell.tail = NAN;
        if (!cell.note.empty())
            cell.note += ';';
        cell.note += std::string(to_string(e.code()));
        return cell;
    }
    cell.classification = std::string(to_string(d.classification));
    cell.sum = d.sum();
    cell.tail = d.tail_bound;
    try {
        cell.info_literal =
            complex_information(d, PartitionScheme{c.partition}, c.branch, ComplexReading::literal)
                .information;
        cell.info_block =
            complex_information(d, PartitionScheme{c.partition}, c.branch, ComplexReading::block)
                .information;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::divergent_tail)
            throw;
        cell.note += cell.note.empty() ? "divergent_tail" : ";divergent_tail";
    }
    return cell;
}

int cmd_violation(const Config& c) {
    check_common(c);
    if (!(c.tau_step > 0.0) || c.tau_max < c.tau_min)
        fail(ErrorCode::invalid_input, "bad tau range");
    if (c.sweep_route != "xyt" && c.sweep_route != "printed" && c.sweep_route != "direct")
        fail(ErrorCode::invalid_input, "--route must be xyt, printed or direct");
    const size_t n_tau = static_cast<size_t>(std::floor((c.tau_max - c.tau_min) / c.tau_step + 1e-9)) + 1;
    struct Key {
        double tau, y, t;
    };
    std::vector<Key> keys;
    for (double y : c.ys)
        for (double t : c.ts)
            for (size_t i = 0; i < n_tau; ++i) {
                double tau = c.tau_min + c.tau_step * static_cast<double>(i);
                if (std::abs(tau) < 1e-9 * c.tau_step)
                    tau = 0.0; // land exactly on the boundary
                keys.push_back({tau, y, t});
            }
    const auto cells = parallel_map(
        keys.size(), [&](size_t i) { return violation_cell(c, keys[i].tau, keys[i].y, keys[i].t); },
        c.threads);

    Output out(c.out);
    std::ostream& os = out.stream();
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& v : cells)
            arr.push_back({{"tau", v.tau},
                           {"y", v.y},
                           {"t", v.t},
                           {"x", v.x},
                           {"slack", v.slack},
                           {"classification", v.classification},
                           {"sum", complex_json(v.sum)},
                           {"tail_bound", std::isfinite(v.tail) ? json(v.tail) : json("inf")},
                           {"mean_photon", std::isfinite(v.mean) ? json(v.mean) : json("nan")},
                           {"information_literal", complex_json(v.info_literal)},
                           {"information_block", complex_json(v.info_block)},
                           {"note", v.note}});
        os << arr.dump() << '\n';
        return 0;
    }
    os << "tau,y,t,x,slack,classification,sum_re,sum_im,tail_bound,mean_photon_abs,"
          "mean_photon_sign,i_literal_re,i_literal_im,i_block_re,i_block_im,note\n";
    for (const auto& v : cells) {
        os << format_double(v.tau) << ',' << format_double(v.y) << ',' << format_double(v.t) << ','
           << format_double(v.x) << ',' << format_double(v.slack) << ',' << v.classification << ','
           << format_double(v.sum.real()) << ',' << format_double(v.sum.imag()) << ','
           << format_double(v.tail) << ',' << format_double(std::abs(v.mean)) << ','
           << (std::isnan(v.mean) ? "" : (v.mean < 0 ? "-" : "+")) << ','
           << format_double(v.info_literal.real()) << ',' << format_double(v.info_literal.imag())
           << ',' << format_double(v.info_block.real()) << ','
           << format_double(v.info_block.imag()) << ',' << v.note << '\n';
    }
    return 0;
}

// figures

double figure_value(const Config& c, int fig, double p) {
    const bool paper = c.quantity == "paper";
    DeformationSpec s;
    switch (fig) {
    case 1: {
        if (paper)
            return poisson_parity_information(p);
        s.kind = DeformationKind::poisson;
        s.alpha_mag2 = p;
        return information(deformed_distribution(s), PartitionScheme{2});
    }
    case 2: {
        s.kind = DeformationKind::poisson;
        s.alpha_mag2 = p;
        const EntropyReport r = block_entropies(deformed_distribution(s), PartitionScheme{3});
        return paper ? r.h_sub2 : r.information;
    }
    case 3: {
        s.kind = DeformationKind::q_coherent;
        s.alpha_mag2 = p * p;
        s.lambda = c.fig_lambda;
        const InequalityReport r = q_coherent_inequality(s);
        return paper ? r.margin : r.entropies.information;
    }
    case 4: {
        s.kind = DeformationKind::squeezed_vacuum;
        s.r = p;
        return information(deformed_distribution(s), PartitionScheme{3});
    }
    }
    fail(ErrorCode::invalid_input, "unknown figure id " + std::to_string(fig));
}

int cmd_figures(const Config& c) {
    if (c.fig < 1 || c.fig > 4)
        fail(ErrorCode::invalid_input, "unknown figure id " + std::to_string(c.fig) + " (expected 1-4)");
    if (c.quantity != "paper" && c.quantity != "mutual")
        fail(ErrorCode::invalid_input, "--quantity must be paper or mutual");
    // default ranges: mean photon number, |alpha|, squeeze parameter
    double lo = 0.0, hi = 10.0, step = 0.05;
    if (c.fig == 3) {
        lo = 0.02;
        hi = 2.0;
        step = 0.02;
    } else if (c.fig == 4) {
        hi = 3.0;
        step = 0.02;
    }
    lo = c.range_min.value_or(lo);
    hi = c.range_max.value_or(hi);
    step = c.range_step.value_or(step);
    if (!(step > 0.0) || hi < lo)
        fail(ErrorCode::invalid_input, "bad figure range");
    const size_t count = static_cast<size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    const auto values = parallel_map(
        count,
        [&](size_t i) {
            const double p = lo + step * static_cast<double>(i);
            return std::make_pair(p, figure_value(c, c.fig, p));
        },
        c.threads);
    Output out(c.out);
    std::ostream& os = out.stream();
    os << "parameter,information\n";
    for (const auto& [p, v] : values)
        os << format_double(p) << ',' << format_double(v + 0.0) << '\n'; // no -0
    return 0;
}

// oracle

int cmd_oracle(const Config& c) {
    const std::vector<OracleVerdict> verdicts = run_suite(GridConfig::default_grid());
    Output out(c.out);
    std::ostream& os = out.stream();
    if (c.oracle_format == "csv") {
        os << "name,kind,pass,expected_re,expected_im,actual_re,actual_im,abs_err,rel_err,note\n";
        for (const auto& v : verdicts)
            os << '"' << v.name << "\"," << to_string(v.kind) << ',' << (v.pass ? "true" : "false")
               << ',' << format_double(v.expected.real()) << ',' << format_double(v.expected.imag())
               << ',' << format_double(v.actual.real()) << ',' << format_double(v.actual.imag())
               << ',' << format_double(v.abs_err) << ',' << format_double(v.rel_err) << ",\""
               << v.note << "\"\n";
    } else {
        for (const auto& v : verdicts)
            os << verdict_json(v).dump() << '\n';
    }
    return suite_passed(verdicts) ? 0 : 1;
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--n-max", c.n_max, "Truncation index (default: adaptive)");
    sub->add_option("--partition", c.partition, "Block size m >= 2");
    sub->add_option("--tol-imag", c.tol_imag, "Imaginary-part tolerance");
    sub->add_option("--tol-neg", c.tol_neg, "Negativity tolerance");
    sub->add_option("--branch", c.branch, "Complex-log branch index");
    sub->add_option("--format", c.format, "csv or json");
    sub->add_option("--out", c.out, "Output path (default: stdout)");
    sub->add_option("--threads", c.threads, "Worker threads for sweeps (0: all cores)");
}

void add_selection(CLI::App* sub, Config& c) {
    sub->add_option("--family", c.family,
                    "gaussian, gaussian-laguerre, xyt, squeezed-vacuum, squeezed, poisson, "
                    "f-coherent, q-coherent, two-mode, two-mode-joint");
    sub->add_option("--state", c.state_path, "JSON state file");
    sub->add_option("--x", c.x, "sigma_pp");
    sub->add_option("--y", c.y, "sigma_qq");
    sub->add_option("--t", c.t, "sigma_pq");
    sub->add_option("--tau", c.tau, "Uncertainty violation 1/4 - det");
    sub->add_option("--tau-form", c.tau_form, "printed or direct");
    sub->add_option("--mean-q", c.mean_q);
    sub->add_option("--mean-p", c.mean_p);
    sub->add_option("--r", c.r, "Squeeze parameter");
    sub->add_option("--theta", c.theta, "Squeeze phase");
    sub->add_option("--alpha", c.alpha, "|alpha|");
    sub->add_option("--x-bar", c.x_bar, "Poisson mean (overrides --alpha)");
    sub->add_option("--lambda", c.lambda, "q-deformation");
    sub->add_option("--f-values", c.f_values, "f(0), f(1), ...; the last value repeats")->delimiter(',');
    sub->add_option("--f-convention", c.f_convention, "printed or standard");
    sub->add_option("--s1", c.s1);
    sub->add_option("--s2", c.s2);
    sub->add_option("--n-factor", c.n_factor);
    sub->add_option("--f1", c.f1);
    sub->add_option("--f2", c.f2);
    sub->add_option("--f3", c.f3);
    sub->add_option("--n1-max", c.n1_max);
    sub->add_option("--n2-max", c.n2_max);
    sub->add_flag("--normalize", c.normalize, "Choose N so the joint table sums to one");
    sub->add_option("--reading", c.reading, "Complex-entropy reading: literal, block or both");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-number distributions, block entropies and uncertainty-violation diagnostics"};
    app.require_subcommand(1);
    Config c;

    auto* dist = app.add_subcommand("dist", "Print a photon-number distribution");
    add_selection(dist, c);
    add_common(dist, c);

    auto* ent = app.add_subcommand("entropy", "Block entropies (complex entropies for non-probabilities)");
    add_selection(ent, c);
    add_common(ent, c);

    auto* ineq = app.add_subcommand("inequality", "Margin of a subadditivity inequality");
    add_selection(ineq, c);
    add_common(ineq, c);
    ineq->add_option("--form", c.form,
                     "auto, subadditivity, hermite, laguerre, legendre, f-coherent, q-coherent");
    ineq->add_option("--alpha-min", c.alpha_min);
    ineq->add_option("--alpha-max", c.alpha_max, "Sweep |alpha| up to this value");
    ineq->add_option("--alpha-step", c.alpha_step);

    auto* viol = app.add_subcommand("violation", "Classification sweep over tau");
    add_common(viol, c);
    viol->add_option("--tau-min", c.tau_min);
    viol->add_option("--tau-max", c.tau_max);
    viol->add_option("--tau-step", c.tau_step);
    viol->add_option("--y", c.ys, "One or more y values");
    viol->add_option("--t", c.ts, "One or more t values");
    viol->add_option("--route", c.sweep_route, "xyt (default), printed or direct");

    auto* figs = app.add_subcommand("figures", "Figure data as parameter,information CSV");
    add_common(figs, c);
    figs->add_option("--fig", c.fig, "Figure id 1-4")->required();
    figs->add_option("--quantity", c.quantity, "paper or mutual");
    figs->add_option("--lambda", c.fig_lambda, "q-deformation for figure 3");
    figs->add_option("--min", c.range_min);
    figs->add_option("--max", c.range_max);
    figs->add_option("--step", c.range_step);

    auto* orc = app.add_subcommand("oracle", "Run the cross-check suite (JSON lines)");
    orc->add_option("--out", c.out);
    orc->add_option("--format", c.oracle_format, "json (default) or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (char& ch : msg)
            if (ch == '\n')
                ch = ' ';
        std::cerr << "error:usage:" << msg << '\n';
        return 2;
    }

    try {
        if (*dist)
            return cmd_dist(c);
        if (*ent)
            return cmd_entropy(c);
        if (*ineq)
            return cmd_inequality(c);
        if (*viol)
            return cmd_violation(c);
        if (*figs)
            return cmd_figures(c);
        if (*orc)
            return cmd_oracle(c);
    } catch (const Error& e) {
        std::string msg = e.what();
        for (char& ch : msg)
            if (ch == '\n')
                ch = ' ';
        std::cerr << "error:" << to_string(e.code()) << ':' << msg << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error:internal:" << e.what() << '\n';
        return 3;
    }
    return 0;
}
