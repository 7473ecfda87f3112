#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "awg/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"awgcalc"};
    storage.insert(storage.end(), args);
    std::vector<const char*> argv;
    for (const auto& a : storage) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = awg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("awgcalc-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }
    std::string str(const std::string& leaf = "") const { return (path_ / leaf).string(); }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::size_t count_files(const fs::path& dir) {
    if (!fs::exists(dir)) return 0;
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
}

std::size_t data_rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::size_t n = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        ++n;
    }
    return n;
}

std::string header_of(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') return line;
    return {};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("materials writes the index table and self check") {
    TempDir dir;
    const auto r = run({"--out", dir.str("m"), "materials"});
    CHECK(r.code == 0);
    const auto csv = slurp(dir.path() / "m" / "materials.csv");
    CHECK(header_of(csv) == "lambda_um,T_C,n1,dn1_dlam,d2n1_dlam2,dn1_dT,n2,dn2_dT");
    CHECK(data_rows(csv) == 65 * 51);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(fs::exists(dir.path() / "m" / "selfcheck.txt"));
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("selfcheck subcommand") {
    TempDir dir;
    const auto r = run({"--out", dir.str(), "selfcheck"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(fs::exists(dir.path() / "selfcheck.txt"));

    // An IR pole just below 1 um makes central differences inaccurate there.
    write(dir.path() / "pole.toml", "[linbo3]\nA9 = 0.9995\n[grid]\nlambda_min = 1.0\n"
                                    "lambda_max = 1.6\nlambda_step = 0.3\n");
    const auto bad = run({"--config", dir.str("pole.toml"), "--out", dir.str("bad"), "materials"});
    CHECK(bad.code == 3);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.path() / "bad"));
}

TEST_CASE("malformed config exits 2 and writes nothing") {
    TempDir dir;
    write(dir.path() / "c.toml", "[design]\nn1 = = 2\n");
    const auto r = run({"--config", dir.str("c.toml"), "--out", dir.str("o"), "materials"});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.path() / "o"));

    write(dir.path() / "u.toml", "[design]\ncolour = 2\n");
    CHECK(run({"--config", dir.str("u.toml"), "--out", dir.str("o"), "figures", "all"}).code == 2);
    CHECK_FALSE(fs::exists(dir.path() / "o"));

    CHECK(run({"--config", dir.str("missing.toml"), "materials"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"--bogus", "materials"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--derivative-mode", "fast", "selfcheck"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("figures") != std::string::npos);
}

TEST_CASE("figures all is complete and reproducible") {
    TempDir dir;
    const auto a = run({"--out", dir.str("a"), "--emit-gnuplot", "figures", "all"});
    REQUIRE(a.code == 0);
    const auto b = run({"--out", dir.str("b"), "--emit-gnuplot", "figures", "all"});
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    for (int i = 4; i <= 13; ++i) {
        const std::string name = "fig" + std::to_string(i);
        CAPTURE(name);
        const auto csv = slurp(dir.path() / "a" / (name + ".csv"));
        CHECK_FALSE(csv.empty());
        CHECK(csv == slurp(dir.path() / "b" / (name + ".csv")));
        CHECK(fs::exists(dir.path() / "a" / (name + ".gp")));
    }
    const auto manifest = slurp(dir.path() / "a" / "manifest.txt");
    CHECK(manifest == slurp(dir.path() / "b" / "manifest.txt"));
    CHECK(manifest.find("[fig13.csv]") != std::string::npos);
    CHECK(count_files(dir.path() / "a") == 21);

    const auto some = run({"--out", dir.str("c"), "figures", "fig5", "fig9"});
    CHECK(some.code == 0);
    CHECK(count_files(dir.path() / "c") == 3);
}

TEST_CASE("unknown figure id exits 2") {
    TempDir dir;
    const auto r = run({"--out", dir.str("o"), "figures", "fig3"});
    CHECK(r.code == 2);
    CHECK_FALSE(fs::exists(dir.path() / "o"));
}

TEST_CASE("athermal scan and solve") {
    TempDir dir;
    const auto r = run({"--out", dir.str(), "athermal"});
    CHECK(r.code == 0);
    CHECK(r.out.find("DEVIATION") != std::string::npos);
    CHECK(r.out.find("0.027") != std::string::npos);
    const auto csv = slurp(dir.path() / "athermal.csv");
    CHECK(csv.find("\n27,840.339103,") != std::string::npos);
    CHECK(data_rows(csv) == 51);
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("27,", 0) == 0) CHECK(line.substr(line.rfind(',')) == ",0");

    const auto none = run({"--out", dir.str(), "athermal", "--solve"});
    CHECK(none.code == 3);
    CHECK(none.err.find("same sign") != std::string::npos);

    const auto degenerate = run({"--out", dir.str(), "athermal", "--solve", "--a-lo", "1e-5"});
    CHECK(degenerate.code == 0);
    CHECK(degenerate.out.find("a* = 1e-05 um") != std::string::npos);
}

TEST_CASE("dispersion and mtdm tables") {
    TempDir dir;
    CHECK(run({"--out", dir.str(), "dispersion"}).code == 0);
    const auto disp = slurp(dir.path() / "dispersion.csv");
    CHECK(header_of(disp) == "lambda_um,Dm,Dw,Dt,delta_tau_ns,Brm_Gbps,BrLink_Gbps,NL,Nch,T_C");
    CHECK(data_rows(disp) == 65);

    CHECK(run({"--out", dir.str(), "mtdm", "--lambda", "1.55"}).code == 0);
    const auto mtdm = slurp(dir.path() / "mtdm.csv");
    CHECK(data_rows(mtdm) == 24);
    CHECK(mtdm.find("1.55,-78.671145,-0.586985959,-79.258131,21.4657438,0.0116464634,0.186343415,24,16,27") !=
          std::string::npos);

    CHECK(run({"--out", dir.str("p"), "--derivative-mode", "paper", "dispersion"}).code == 0);
    CHECK(slurp(dir.path() / "p" / "dispersion.csv") != disp);
}

TEST_CASE("sweep via config") {
    TempDir dir;
    write(dir.path() / "s.toml", "[sweep]\nid = \"w\"\noutputs = [\"n_c\"]\n"
                                 "[sweep.axes]\ndesign.n1 = [2.2, 2.33, 2.46]\ndesign.a = [3, 5, 7]\n");
    const auto r = run({"--config", dir.str("s.toml"), "--out", dir.str("o"), "sweep"});
    CHECK(r.code == 0);
    const auto csv = slurp(dir.path() / "o" / "sweep_w.csv");
    CHECK(header_of(csv) == "design.n1,design.a,n_c");
    CHECK(data_rows(csv) == 9);
    CHECK(fs::exists(dir.path() / "o" / "manifest.txt"));

    CHECK(run({"--out", dir.str("x"), "sweep"}).code == 2);
}

}  // TEST_SUITE
