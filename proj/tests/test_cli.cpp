#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = ARCOPUC_CLI_PATH;
const std::string kDir = ARCOPUC_TEST_DIR;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = kDir + "/cli_stdout.txt";
    const std::string cmd = kCli + " " + args + " > " + out_path + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(raw), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double meta_value(const std::string& text, const std::string& key) {
    const auto at = text.find("# " + key + " = ");
    REQUIRE(at != std::string::npos);
    return std::strtod(text.c_str() + at + key.size() + 5, nullptr);
}

} // namespace

TEST_CASE("eqm reproduces the figure-caption band edges") {
    const RunResult r1 = run("eqm --alpha 5pi/6 --xi 32/25");
    CHECK(r1.code == 0);
    CHECK(std::abs(meta_value(r1.out, "beta") - 1.389355) < 2e-6);

    const RunResult r2 = run("eqm --alpha 5pi/6 --xi 7 --grid 0:2.6:41");
    CHECK(r2.code == 0);
    CHECK(std::abs(meta_value(r2.out, "beta") - 2.604199) < 2e-6);
    // L column (4th) stays negative over the grid
    std::istringstream lines(r2.out);
    std::string line;
    bool seen = false;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'p') continue;
        const auto last = line.rfind(',');
        CHECK(std::strtod(line.c_str() + last + 1, nullptr) < 0.0);
        seen = true;
    }
    CHECK(seen);
}

TEST_CASE("eqm at alpha = pi has a vanishing L column") {
    const RunResult r = run("eqm --alpha pi --xi 3 --grid 0:3:31");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'p') continue;
        const auto last = line.rfind(',');
        CHECK(std::abs(std::strtod(line.c_str() + last + 1, nullptr)) < 1e-9);
    }
}

TEST_CASE("eqm exit code for NoBand") {
    CHECK(run("eqm --alpha pi/3 --xi 3/2").code == 2);
}

TEST_CASE("compare produces a table and a slope") {
    const RunResult r = run("compare --b 2 --N 25 --M 10 --grid band");
    CHECK(r.code == 0);
    CHECK(meta_value(r.out, "max_rel_error") <= 0.5);
    CHECK(r.out.find("slope = ") != std::string::npos);
    const RunResult rs = run("compare --b 2 --N 25 --M 10 --grid saturated");
    CHECK(rs.code == 0);
    CHECK(rs.out.find("near-zero") == std::string::npos);  // mid-gap grid avoids the nodes
}

TEST_CASE("compare flags near-zero rows on a node-containing grid") {
    // a numeric grid pinned on a deep-saturation lattice angle
    const RunResult r = run("compare --b 6/5 --N 25 --M 20 --grid 2.513274122:2.513274123:2");
    CHECK(r.code == 0);
    CHECK(r.out.find("near-zero") != std::string::npos);
}

TEST_CASE("missing required option is a usage error") {
    CHECK(run("compare --b 2 --N 25").code == 64);
    CHECK(run("badsub").code == 64);
}

TEST_CASE("conjecture table") {
    const RunResult r = run("conjecture");
    CHECK(r.code == 0);
    CHECK(r.out.find(",2,2,") != std::string::npos);    // xi_alpha(pi/2) exact
    CHECK(r.out.find(",4,") != std::string::npos);      // conjectured value at 3pi/4
    const RunResult nr = run("conjecture --grid 1.0471975511965976:1.0471975511965976:2");
    CHECK(nr.code == 0);
    CHECK(nr.out.find("NoRoot") != std::string::npos);  // alpha = pi/3 row
}

TEST_CASE("project: single mode, malformed csv, count mismatch") {
    const std::string csv = kDir + "/samples.csv";
    {
        std::ofstream f(csv);
        f.precision(17);
        f << "# single mode k=1 of e^{2 pi i x / 2}\n";
        for (int j = 1; j <= 25; ++j) {
            const double x = j / 25.0 - 0.5 - 0.02;
            f << j << "," << std::cos(3.141592653589793 * x) << ","
              << std::sin(3.141592653589793 * x) << "\n";
        }
    }
    const std::string prefix = kDir + "/proj_out";
    const RunResult r = run("project --b 2 --N 25 --M 7 --samples " + csv + " --out " + prefix);
    CHECK(r.code == 0);
    const std::string table = slurp(prefix + ".csv");
    CHECK(meta_value(table, "max_node_error") < 1e-12);
    CHECK(slurp(prefix + ".json").find("coeffs_fourier") != std::string::npos);

    // malformed CSV: parse failure with a line diagnostic, exit 65
    const std::string bad = kDir + "/bad.csv";
    {
        std::ofstream f(bad);
        f << "1,0.5,oops\n";
    }
    CHECK(run("project --b 2 --N 25 --M 7 --samples " + bad).code == 65);

    // row-count mismatch: exit 5
    const std::string shortcsv = kDir + "/short.csv";
    {
        std::ofstream f(shortcsv);
        for (int j = 1; j <= 10; ++j) f << j << ",1,0\n";
    }
    CHECK(run("project --b 2 --N 25 --M 7 --samples " + shortcsv).code == 5);
}

TEST_CASE("deterministic byte-identical output") {
    const std::string o1 = kDir + "/det1.csv";
    const std::string o2 = kDir + "/det2.csv";
    CHECK(run("eqm --b 2 --xi-tilde 5/2 --grid 0:1.5:21 --out " + o1).code == 0);
    CHECK(run("eqm --b 2 --xi-tilde 5/2 --grid 0:1.5:21 --out " + o2).code == 0);
    const std::string s1 = slurp(o1);
    CHECK(!s1.empty());
    CHECK(s1 == slurp(o2));
}

TEST_CASE("json format emits a schema header") {
    const RunResult r = run("eqm --alpha pi/2 --xi 5 --grid 0:1:5 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
    CHECK(r.out.find("\"rows\"") != std::string::npos);
}
