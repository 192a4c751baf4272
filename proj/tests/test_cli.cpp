// Drives the photodist executable end to end.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "photodist/entropy.hpp"
#include "photodist/oracle.hpp"
#include "support.hpp"

using namespace photodist;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, bool capture_stderr = false) {
    const std::string cmd = std::string(PHOTODIST_CLI) + " " + args +
                            (capture_stderr ? " 2>&1 >/dev/null" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        out.push_back(l);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');)
        out.push_back(f);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

// data rows of a CSV with "# " metadata lines and one header
std::vector<std::vector<std::string>> rows(const std::string& csv) {
    std::vector<std::vector<std::string>> out;
    bool header = false;
    for (const auto& l : lines(csv)) {
        if (l.rfind("# ", 0) == 0)
            continue;
        if (!header) {
            header = true;
            continue;
        }
        out.push_back(fields(l));
    }
    return out;
}

std::string meta(const std::string& csv, const std::string& key) {
    for (const auto& l : lines(csv))
        if (l.rfind("# " + key + "=", 0) == 0)
            return l.substr(key.size() + 3);
    return {};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("dist: vacuum state file prints a single row") {
    const std::string path = write_temp(
        "vacuum.json", R"({"sigma_pp":0.5,"sigma_qq":0.5,"sigma_pq":0,"mean_q":0,"mean_p":0})");
    const Run r = run("dist --family gaussian --state " + path);
    CHECK(r.status == 0);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 1u);
    CHECK(data[0] == std::vector<std::string>{"0", "1", "0"});
    CHECK(meta(r.out, "classification") == "probability");
}

TEST_CASE("dist: squeezed vacuum values") {
    const Run r = run("dist --family squeezed-vacuum --r 1.0 --n-max 40");
    CHECK(r.status == 0);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 41u);
    for (int n = 0; n <= 40; ++n)
        CHECK_CLOSE(std::stod(data[n][1]), oracle_squeezed_vacuum(1.0, n), 1e-12);
}

TEST_CASE("dist: the tau = 4 example is complex") {
    const Run r = run("dist --family xyt --x -0.75 --y 5 --t 0 --tau 4 --n-max 20");
    CHECK(r.status == 0);
    CHECK(meta(r.out, "classification") == "complex");
    const auto data = rows(r.out);
    for (int l = 0; l <= 10; ++l)
        CHECK_CLOSE(Complex(std::stod(data[2 * l][1]), std::stod(data[2 * l][2])), oracle_eq33(l),
                    1e-9);
}

TEST_CASE("dist: inconsistent x and tau is rejected") {
    const Run r = run("dist --family xyt --x 0.3 --y 5 --t 0 --tau 4", true);
    CHECK(r.status != 0);
    CHECK(r.out.rfind("error:invalid_input:", 0) == 0);
    CHECK(lines(r.out).size() == 1u);
}

TEST_CASE("errors are single machine-parsable lines") {
    const std::string bad = write_temp("bad.json", R"({"sigma_pp": 0.5})");
    for (const std::string& args :
         {"dist --family gaussian --state " + bad, std::string("dist --family nope"),
          std::string("figures --fig 9"), std::string("dist --family gaussian --partition 1"),
          std::string("dist --family two-mode-joint --n1-max 3 --n2-max 3 --f1 -1"),
          std::string("entropy --family xyt --tau 2 --y 5"), std::string("dist --bogus")}) {
        INFO(args);
        const Run r = run(args, true);
        CHECK(r.status != 0);
        REQUIRE(lines(r.out).size() == 1u);
        CHECK(r.out.rfind("error:", 0) == 0);
    }
}

TEST_CASE("entropy: non-probabilities fall back to complex entropies") {
    const Run r = run("entropy --family xyt --tau 4 --y 5 --t 0");
    CHECK(r.status == 0);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 2u);
    CHECK(data[0][0] == "literal");
    CHECK(data[1][0] == "block");
    CHECK_NEAR(std::stod(data[0][8]), 0.883148288362, 1e-9);
    CHECK_NEAR(std::stod(data[0][9]), -0.323757061615, 1e-9);
    const Run notice = run("entropy --family xyt --tau 4 --y 5 --t 0", true);
    CHECK(notice.out.find("notice:") == 0);
}

TEST_CASE("inequality: Poisson x = 1 reports the closed form and the margin") {
    const Run r = run("inequality --family poisson --x-bar 1 --partition 2");
    CHECK(r.status == 0);
    CHECK_CLOSE(std::stod(meta(r.out, "poisson_parity_closed_form")),
                poisson_parity_information(1.0), 1e-15);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 1u);
    CHECK(data[0][0] == "subadditivity");
    CHECK_CLOSE(std::stod(data[0][8]), poisson_parity_information(1.0), 1e-10); // h_sub2
    CHECK(data[0][5] == "true");
}

TEST_CASE("inequality: squeezed vacuum margin is zero") {
    const Run r = run("inequality --family squeezed-vacuum --r 1.0");
    const auto data = rows(r.out);
    REQUIRE(data.size() == 1u);
    CHECK_NEAR(std::stod(data[0][4]), 0.0, 1e-12);
}

TEST_CASE("inequality: q-coherent alpha sweep") {
    const Run r = run("inequality --family q-coherent --lambda 2 --alpha-max 2");
    CHECK(r.status == 0);
    const auto data = rows(r.out);
    CHECK(data.size() == 100u);
    for (const auto& row : data)
        CHECK(std::stod(row[5]) >= 0.0);
}

TEST_CASE("inequality: classification errors route to complex information") {
    const Run r = run("inequality --family gaussian --x 0.4 --y 0.5");
    CHECK(r.status == 0);
    CHECK(meta(r.out, "classification") == "signed_real");
    CHECK(rows(r.out).size() == 2u);
    // a divergent fallback still ends in one error line
    const Run d = run("inequality --family gaussian --x -0.75 --y 5", true);
    CHECK(d.status != 0);
    CHECK(lines(d.out).size() == 1u);
    CHECK(d.out.rfind("error:divergent_tail:", 0) == 0);
}

TEST_CASE("violation: boundary at tau = 0 and the tau = 4 cell") {
    const Run r = run("violation --y 5 --t 0 --tau-min -0.01 --tau-max 0.01 --tau-step 0.001");
    CHECK(r.status == 0);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 21u);
    for (const auto& row : data) {
        const double tau = std::stod(row[0]);
        CHECK((row[5] == "probability") == (tau <= 0.0));
    }
    CHECK(data[10][0] == "0");

    const Run c = run("violation --y 5 --t 0 --tau-min 4 --tau-max 4");
    const auto cell = rows(c.out);
    REQUIRE(cell.size() == 1u);
    CHECK_CLOSE(std::stod(cell[0][9]), 23.0 / 57.0, 1e-12);
    CHECK(cell[0][10] == "+");

    // x = -1/2 makes the xyt denominator vanish; the sweep keeps going
    const Run s = run("violation --y 5 --t 0");
    CHECK(s.status == 0);
    const auto all = rows(s.out);
    REQUIRE(all.size() == 121u);
    CHECK(all[75][5] == "undefined");
    CHECK(all[75][15] == "singular_denominator");
}

TEST_CASE("figures: anchors") {
    const auto f1 = rows(run("figures --fig 1").out);
    REQUIRE(f1.size() == 201u);
    CHECK(f1.front()[0] == "0");
    CHECK(std::stod(f1.front()[1]) == 0.0);
    CHECK_NEAR(std::stod(f1.back()[1]), std::log(2.0), 1e-8);

    const auto f4 = rows(run("figures --fig 4").out);
    REQUIRE(f4.size() == 151u);
    CHECK(std::stod(f4.front()[1]) == 0.0);

    const auto f3 = rows(run("figures --fig 3").out);
    REQUIRE(f3.size() == 100u);
    CHECK_CLOSE(std::stod(f3.front()[0]), 0.02, 1e-12);
    CHECK_CLOSE(std::stod(f3.back()[0]), 2.0, 1e-12);

    const auto f2 = rows(run("figures --fig 2 --quantity mutual --max 1").out);
    CHECK(f2.size() == 21u);
}

TEST_CASE("output is byte-deterministic across runs and thread counts") {
    for (const std::string args :
         {"figures --fig 2", "violation --y 5 --y 2 --t 0 --t 0.3 --tau-step 0.1",
          "dist --family gaussian --x 1.3 --y 0.7 --t 0.2 --mean-q 0.5",
          "inequality --family q-coherent --lambda 1 --alpha-max 1 --format json"}) {
        INFO(args);
        const Run a = run(args + " --threads 1");
        const Run b = run(args + " --threads 4");
        const Run c = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
        CHECK(a.out.find('\r') == std::string::npos);
    }
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string path = std::string(TEST_TMP_DIR) + "/fig4.csv";
    const Run a = run("figures --fig 4 --out " + path);
    CHECK(a.status == 0);
    CHECK(a.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run("figures --fig 4").out);
}

TEST_CASE("oracle: JSON lines and a passing exit status") {
    const Run r = run("oracle");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    CHECK(ls.size() > 100u);
    for (const auto& l : ls) {
        const auto j = nlohmann::json::parse(l);
        CHECK(j.contains("name"));
        CHECK(j.contains("pass"));
    }
}
