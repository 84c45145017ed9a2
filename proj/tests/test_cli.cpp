#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_bin() {
    const char* bin = std::getenv("TML_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "TML_CLI_BIN must point at the tml executable");
    return bin;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// A scratch directory per test case, removed on destruction.
struct Scratch {
    fs::path dir;
    Scratch() {
        std::string tmpl = (fs::temp_directory_path() / "tml_cli_XXXXXX").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        REQUIRE(mkdtemp(buf.data()) != nullptr);
        dir = buf.data();
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    fs::path operator/(const std::string& rel) const { return dir / rel; }
};

RunResult run_cli(const Scratch& s, const std::string& args, const std::string& env = "") {
    fs::path out_file = s.dir / "stdout.txt";
    fs::path err_file = s.dir / "stderr.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli_bin() + "' " + args +
                      " > '" + out_file.string() + "' 2> '" + err_file.string() + "'";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    // The point column quotes its commas as "(a;b)", so plain splitting works.
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("rings sweep writes the frozen table") {
    Scratch s;
    auto r = run_cli(s, "rings --d 2 --k 0..3 --symbol one --p 2 --out '" +
                            (s / "o").string() + "'");
    CHECK(r.exit_code == 0);

    auto csv = lines_of(slurp(s / "o/tables/rings.csv"));
    REQUIRE(csv.size() == 5);
    CHECK(csv[0] == "k,ring_sum,mu_k,argmax_n");
    const char* mu[] = {"1", "0.33333333333333331", "0.1111111111111111",
                        "0.037037037037037035"};
    for (int k = 0; k <= 3; ++k) {
        auto f = split_csv(csv[static_cast<std::size_t>(k + 1)]);
        REQUIRE(f.size() == 4);
        CHECK(f[0] == std::to_string(k));
        CHECK(f[2] == mu[k]);
    }
    CHECK(lines_of(r.out).size() >= 4);
}

TEST_CASE("rings with the growth symbol counts points") {
    Scratch s;
    auto r = run_cli(s, "rings --d 2 --k 0 --symbol norm --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    auto csv = lines_of(slurp(s / "o/tables/rings.csv"));
    REQUIRE(csv.size() == 2);
    auto f = split_csv(csv[1]);
    CHECK(f[1] == "24");
    CHECK(f[3] == "(2;2)");
}

TEST_CASE("usage errors exit with code 2") {
    Scratch s;
    CHECK(run_cli(s, "rings --d 2 --k 0").exit_code == 2);        // missing --symbol
    CHECK(run_cli(s, "rings --d 2 --k 0 --symbol one --frobnicate").exit_code == 2);
    CHECK(run_cli(s, "").exit_code == 2);                          // missing subcommand
    CHECK(run_cli(s, "rings --d 9 --k 0 --symbol one").exit_code == 2);
    CHECK(run_cli(s, "rings --d 1 --k 3..1 --symbol one").exit_code == 2);
    auto bad_symbol = run_cli(s, "rings --d 1 --k 0 --symbol wat");
    CHECK(bad_symbol.exit_code == 2);
    CHECK(bad_symbol.err.find("usage error") != std::string::npos);
}

TEST_CASE("budget overruns exit with code 3") {
    Scratch s;
    auto r = run_cli(s, "rings --d 3 --k 8..9 --symbol one --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("budget exceeded") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    Scratch s;
    auto r = run_cli(s, "--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("certify") != std::string::npos);
}

TEST_CASE("sectors lists bins and answers probes") {
    Scratch s;
    auto r = run_cli(s, "sectors --d 2 --N 3 --probe 5,1 --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("axis=1") != std::string::npos);
    auto csv = lines_of(slurp(s / "o/tables/sectors.csv"));
    REQUIRE(csv.size() >= 2);
    CHECK(csv[0] == "axis,bins,centers");
    CHECK(csv.size() == 7);  // 2 * 3 sectors + header
}

TEST_CASE("riesz subcommand certifies and writes fixtures") {
    Scratch s;
    auto r = run_cli(s, "riesz --freqs '2,1;18,9' --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(s / "o/fixtures/riesz.json"));
    auto body = nlohmann::json::parse(slurp(s / "o/reports/riesz_l1.json"));
    CHECK(body.at("claim") == "riesz_l1");
    REQUIRE(body.at("cases").is_array());
    CHECK(body.at("cases").size() == 3);
    for (const auto& c : body.at("cases")) CHECK(c.at("pass") == true);

    // Infeasible frequency lists are usage errors, not crashes.
    CHECK(run_cli(s, "riesz --freqs '2,1;4,2'").exit_code == 2);
    CHECK(run_cli(s, "riesz --freqs ''").exit_code == 2);
}

TEST_CASE("testfn emits the polynomial fixture and transfer table") {
    Scratch s;
    auto r = run_cli(s, "testfn --freqs '2,1;18,1' --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(s / "o/fixtures/testfn.json"));
    CHECK(fs::exists(s / "o/reports/lemgl.json"));

    auto phi = nlohmann::json::parse(slurp(s / "o/fixtures/testfn_phi.json"));
    CHECK(phi.is_array());
    CHECK(phi.size() == 8);  // 3^2 - 1 nonzero patterns

    auto transfer = lines_of(slurp(s / "o/tables/transfer.csv"));
    REQUIRE(transfer.size() >= 2);
    CHECK(transfer[0] == "l,j,half_sum,scaled");
    bool found = false;
    for (std::size_t i = 1; i < transfer.size(); ++i) {
        auto f = split_csv(transfer[i]);
        REQUIRE(f.size() == 4);
        if (f[0] == "2" && f[1] == "2") {
            CHECK(f[2] == "1/20");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("diagnose runs the bounded pipeline end to end") {
    Scratch s;
    auto r = run_cli(s, "diagnose --symbol one --d 1 --k 0..3 --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("schatten_partial") != std::string::npos);
    CHECK(fs::exists(s / "o/tables/rings.csv"));
    for (const char* f : {"krok1", "lema2", "main_sum"}) {
        auto body = nlohmann::json::parse(slurp(s / ("o/reports/" + std::string(f) + ".json")));
        CHECK(body.at("claim") == f);
        for (const auto& c : body.at("cases")) CHECK(c.at("pass") == true);
    }
}

TEST_CASE("diagnose refuses growth symbols without the override") {
    Scratch s;
    auto r = run_cli(s, "diagnose --symbol norm --d 1 --k 0..3 --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 1);
    CHECK_FALSE(fs::exists(s / "o/tables/rings.csv"));  // refusal means no sweep
    auto body = nlohmann::json::parse(slurp(s / "o/reports/krok1.json"));
    std::string note = body.at("cases").at(0).at("note");
    CHECK(note.find("refused") != std::string::npos);

    Scratch s2;
    auto forced = run_cli(s2, "diagnose --symbol norm --d 1 --k 0..3 --run-unbounded --out '" +
                                  (s2 / "o").string() + "'");
    CHECK(forced.exit_code == 1);  // runs, measures, and honestly fails
    CHECK(fs::exists(s2 / "o/tables/rings.csv"));
}

TEST_CASE("certify narrows to one family and succeeds") {
    Scratch s;
    auto r = run_cli(s, "certify --only euck --dims 1 --k-hi 2 --out '" + (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("suite: all claims as expected") != std::string::npos);
    auto suite = nlohmann::json::parse(slurp(s / "o/suite.json"));
    CHECK(suite.at("all_expected") == true);
    REQUIRE(suite.at("claims").size() == 1);
    CHECK(suite.at("claims").at(0).at("claim") == "euck");
    CHECK(suite.at("config").at("dims") == nlohmann::json::array({1}));
    CHECK(fs::exists(s / "o/reports/euck.json"));
}

TEST_CASE("certify flags an unbounded symbol run as a failure") {
    Scratch s;
    auto r = run_cli(s, "certify --only krok1 --symbol norm --dims 1 --k-hi 2 --out '" +
                            (s / "o").string() + "'");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("UNEXPECTED") != std::string::npos);
    auto suite = nlohmann::json::parse(slurp(s / "o/suite.json"));
    CHECK(suite.at("all_expected") == false);
}

TEST_CASE("certify reads config files and lets flags override them") {
    Scratch s;
    fs::path cfg = s / "suite.cfg";
    std::ofstream(cfg) << "dims = 1,2\nN = 2\nk_hi = 2\nsymbol = one\n";
    auto r = run_cli(s, "certify --suite-config '" + cfg.string() + "' --only euck --dims 1 --out '" +
                            (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    auto suite = nlohmann::json::parse(slurp(s / "o/suite.json"));
    CHECK(suite.at("config").at("dims") == nlohmann::json::array({1}));  // flag wins
    CHECK(suite.at("config").at("k_hi") == 2);                           // file survives

    fs::path bad = s / "bad.cfg";
    std::ofstream(bad) << "dims=1\nwhat\n";
    auto rb = run_cli(s, "certify --suite-config '" + bad.string() + "'");
    CHECK(rb.exit_code == 2);
    CHECK(rb.err.find(":2:") != std::string::npos);

    CHECK(run_cli(s, "certify --suite-config '" + (s / "missing.cfg").string() + "'").exit_code ==
          2);
}

TEST_CASE("sharpness explores exponent grids") {
    Scratch s;
    auto r = run_cli(s, "sharpness --symbol one --d 1 --q-grid 3.0,0.5 --K 6 --out '" +
                            (s / "o").string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("q=3: convergent") != std::string::npos);
    CHECK(r.out.find("q=0.5: divergent") != std::string::npos);
    auto csv = lines_of(slurp(s / "o/tables/sharpness.csv"));
    REQUIRE(csv.size() == 13);  // header + 2 exponents x 6 ring counts
    CHECK(csv[0] == "q,K,partial_sum,classifier");

    auto inconclusive = run_cli(s, "sharpness --symbol one --d 1 --q-grid 2.0 --K 1 --out '" +
                                       (s / "o2").string() + "'");
    CHECK(inconclusive.exit_code == 0);
    CHECK(inconclusive.out.find("inconclusive") != std::string::npos);

    CHECK(run_cli(s, "sharpness --symbol one --d 1 --q-grid ''").exit_code == 2);
    CHECK(run_cli(s, "sharpness --symbol one --d 1 --q-grid=-1.0").exit_code == 2);
}

TEST_CASE("the output directory honors flag over environment") {
    Scratch s;
    fs::path env_dir = s / "env_out";
    auto via_env = run_cli(s, "rings --d 1 --k 0 --symbol one",
                           "OUTPUT_DIR='" + env_dir.string() + "'");
    CHECK(via_env.exit_code == 0);
    CHECK(fs::exists(env_dir / "tables/rings.csv"));

    fs::path flag_dir = s / "flag_out";
    auto via_flag = run_cli(s, "rings --d 1 --k 0 --symbol one --out '" + flag_dir.string() + "'",
                            "OUTPUT_DIR='" + env_dir.string() + "'");
    CHECK(via_flag.exit_code == 0);
    CHECK(fs::exists(flag_dir / "tables/rings.csv"));
}

TEST_CASE("repeated certify runs produce identical bytes") {
    Scratch s;
    std::string args = "certify --only lema1 --dims 1 --k-hi 2 --N 2";
    auto a = run_cli(s, args + " --out '" + (s / "a").string() + "'");
    auto b = run_cli(s, args + " --out '" + (s / "b").string() + "'");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(slurp(s / "a/suite.json") == slurp(s / "b/suite.json"));
    CHECK(slurp(s / "a/reports/lema1.json") == slurp(s / "b/reports/lema1.json"));
}
