#include "photodist/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "photodist/errors.hpp"

namespace photodist {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// JSON has no inf/nan; those become strings.
json number(double v) {
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

void write_meta(std::ostream& os, const Metadata& meta) {
    for (const auto& [k, v] : meta)
        os << "# " << k << '=' << v << '\n';
}

} // namespace

void write_distribution_csv(std::ostream& os, const PhotonDistribution& d, const Metadata& meta) {
    write_meta(os, meta);
    os << "# classification=" << to_string(d.classification) << '\n';
    os << "# truncation=" << d.truncation << '\n';
    os << "# tail_bound=" << format_double(d.tail_bound) << '\n';
    const Complex s = d.sum();
    os << "# sum_re=" << format_double(s.real()) << '\n';
    os << "# sum_im=" << format_double(s.imag()) << '\n';
    os << "n,re,im\n";
    size_t last = d.values.size();
    while (last > 1 && d.values[last - 1] == Complex{0.0, 0.0})
        --last;
    for (size_t n = 0; n < last; ++n)
        os << n << ',' << format_double(d.values[n].real()) << ','
           << format_double(d.values[n].imag()) << '\n';
}

json distribution_json(const PhotonDistribution& d) {
    json values = json::array();
    for (const Complex& v : d.values)
        values.push_back(json::array({number(v.real()), number(v.imag())}));
    return {{"values", values},
            {"truncation", d.truncation},
            {"tail_bound", number(d.tail_bound)},
            {"classification", std::string(to_string(d.classification))},
            {"sum", complex_json(d.sum())}};
}

void write_joint_csv(std::ostream& os, const TwoModeJointDistribution& t, const Metadata& meta) {
    write_meta(os, meta);
    os << "# tail_bound=" << format_double(t.tail_bound) << '\n';
    os << "# total=" << format_double(t.total()) << '\n';
    os << "n1,n2,p\n";
    for (int n1 = 0; n1 <= t.n1_max; ++n1)
        for (int n2 = 0; n2 <= t.n2_max; ++n2)
            os << n1 << ',' << n2 << ',' << format_double(t.at(n1, n2)) << '\n';
}

json joint_json(const TwoModeJointDistribution& t) {
    json rows = json::array();
    for (int n1 = 0; n1 <= t.n1_max; ++n1) {
        json row = json::array();
        for (int n2 = 0; n2 <= t.n2_max; ++n2)
            row.push_back(number(t.at(n1, n2)));
        rows.push_back(row);
    }
    return {{"values", rows},
            {"truncation", json::array({t.n1_max, t.n2_max})},
            {"tail_bound", number(t.tail_bound)},
            {"total", number(t.total())}};
}

json complex_json(Complex z) {
    return {{"re", number(z.real())}, {"im", number(z.imag())}};
}

json entropy_json(const EntropyReport& r) {
    return {{"h_joint", number(r.h_joint)},
            {"h_sub1", number(r.h_sub1)},
            {"h_sub2", number(r.h_sub2)},
            {"information", number(r.information)},
            {"subadditive", r.subadditive}};
}

json complex_entropy_json(const ComplexEntropyReport& r) {
    return {{"h_joint", complex_json(r.h_joint)},
            {"h_sub1", complex_json(r.h_sub1)},
            {"h_sub2", complex_json(r.h_sub2)},
            {"information", complex_json(r.information)},
            {"branch_index", r.branch_index},
            {"reading", std::string(to_string(r.reading))}};
}

json inequality_json(const InequalityReport& r) {
    return {{"form", std::string(to_string(r.form))},
            {"lhs", number(r.lhs)},
            {"rhs", number(r.rhs)},
            {"normalization", number(r.normalization)},
            {"margin", number(r.margin)},
            {"holds", r.holds},
            {"entropies", entropy_json(r.entropies)}};
}

json verdict_json(const OracleVerdict& v) {
    return {{"name", v.name},
            {"kind", std::string(to_string(v.kind))},
            {"expected", complex_json(v.expected)},
            {"actual", complex_json(v.actual)},
            {"abs_err", number(v.abs_err)},
            {"rel_err", number(v.rel_err)},
            {"pass", v.pass},
            {"note", v.note}};
}

OneModeGaussianState parse_state_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::invalid_input, std::string("state: malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        fail(ErrorCode::invalid_input, "state: expected a JSON object");
    auto field = [&](const char* key) {
        if (!j.contains(key))
            fail(ErrorCode::invalid_input, std::string("state: missing field ") + key);
        if (!j[key].is_number())
            fail(ErrorCode::invalid_input, std::string("state: field ") + key + " is not a number");
        const double v = j[key].get<double>();
        if (!std::isfinite(v))
            fail(ErrorCode::invalid_input, std::string("state: field ") + key + " is not finite");
        return v;
    };
    OneModeGaussianState s;
    s.sigma_pp = field("sigma_pp");
    s.sigma_qq = field("sigma_qq");
    s.sigma_pq = field("sigma_pq");
    s.mean_q = field("mean_q");
    s.mean_p = field("mean_p");
    return s;
}

OneModeGaussianState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::invalid_input, "state: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

} // namespace photodist
