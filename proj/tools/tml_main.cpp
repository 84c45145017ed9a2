// Command-line front end: fixture builders, diagnostics, certification
// suites, and plot-ready CSV tables.  Single-threaded control flow; all
// output files are deterministic byte-for-byte for a fixed invocation.
//
// Exit codes: 0 pass, 1 certification failure, 2 usage error, 3 resource
// budget exceeded.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tml/certify.hpp"
#include "tml/coeff.hpp"
#include "tml/errors.hpp"
#include "tml/kernels.hpp"
#include "tml/lattice.hpp"
#include "tml/multiplier.hpp"
#include "tml/report.hpp"
#include "tml/trigpoly.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace tml;

namespace {

std::string resolve_out(const std::string& flag_out) {
    if (!flag_out.empty()) return flag_out;
    if (const char* env = std::getenv("OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
    return "out";
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open for writing: " + path.string());
    f << content;
    if (!f) throw Error("short write: " + path.string());
}

std::string point_str(const LatticePoint& n) {
    std::string s = "(";
    for (int j = 0; j < n.dim(); ++j) {
        if (j) s += ';';
        s += std::to_string(n[j]);
    }
    s += ')';
    return s;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        std::size_t a = cur.find_first_not_of(" \t");
        std::size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(cur.substr(a, b - a + 1));
    }
    return out;
}

std::int64_t parse_i64(const std::string& tok, const std::string& what) {
    char* end = nullptr;
    long long v = std::strtoll(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0')
        throw DomainError(what + ": expected an integer, got '" + tok + "'");
    return v;
}

double parse_f64(const std::string& tok, const std::string& what) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw DomainError(what + ": expected a number, got '" + tok + "'");
    return v;
}

std::pair<int, int> parse_k_range(const std::string& text) {
    std::string t = text;
    int lo, hi;
    if (auto pos = t.find(".."); pos != std::string::npos) {
        lo = static_cast<int>(parse_i64(t.substr(0, pos), "--k"));
        hi = static_cast<int>(parse_i64(t.substr(pos + 2), "--k"));
    } else {
        lo = hi = static_cast<int>(parse_i64(t, "--k"));
    }
    if (lo < 0 || hi < lo) throw DomainError("--k: range must satisfy 0 <= LO <= HI");
    return {lo, hi};
}

LatticePoint parse_point(const std::string& text, int d, const std::string& what) {
    auto toks = split_on(text, ',');
    if (static_cast<int>(toks.size()) != d)
        throw DomainError(what + ": expected " + std::to_string(d) + " coordinates, got '" +
                          text + "'");
    std::array<std::int64_t, kMaxDim> c{};
    for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = parse_i64(toks[static_cast<std::size_t>(j)], what);
    return LatticePoint(std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(d)));
}

std::vector<LatticePoint> parse_freqs(const std::string& text) {
    auto groups = split_on(text, ';');
    if (groups.empty()) throw DomainError("--freqs: at least one frequency is required");
    int d = static_cast<int>(split_on(groups[0], ',').size());
    if (d < 1 || d > kMaxDim) throw DomainError("--freqs: dimension must lie in 1..4");
    std::vector<LatticePoint> freqs;
    freqs.reserve(groups.size());
    for (const auto& g : groups) freqs.push_back(parse_point(g, d, "--freqs"));
    return freqs;
}

const std::string& registry_title(const std::string& id) {
    for (const auto& [cid, title] : claim_registry())
        if (cid == id) return title;
    throw DomainError("unregistered claim id: " + id);
}

std::string claim_file_json(const std::string& id,
                            std::span<const CertificationReport> cases) {
    ordered_json j;
    j["schema"] = "tml/1";
    j["claim"] = id;
    j["title"] = registry_title(id);
    ordered_json arr = ordered_json::array();
    for (const auto& r : cases) arr.push_back(ordered_json::parse(report_to_json(r)));
    j["cases"] = arr;
    return j.dump(2) + "\n";
}

void print_case(const CertificationReport& r) {
    std::string status = r.skipped ? "skipped" : (r.pass ? "pass" : "FAIL");
    std::cout << r.claim_id;
    for (const auto& [k, v] : r.params)
        if (k == "kind") std::cout << "[" << v << "]";
    std::cout << ": " << status;
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
}

int dominant_axis(const LatticePoint& n) {
    int best = 0;
    std::int64_t mag = 0;
    for (int j = 0; j < n.dim(); ++j) {
        std::int64_t a = n[j] < 0 ? -n[j] : n[j];
        if (a > mag) {
            mag = a;
            best = j;
        }
    }
    return best;
}

// ---- subcommand payloads --------------------------------------------------------

struct RingsArgs {
    int d = 0;
    std::string k, symbol, out;
    double p = 2.0;
};

int cmd_rings(const RingsArgs& a) {
    auto [k_lo, k_hi] = parse_k_range(a.k);
    MultiplierSymbol sym = MultiplierSymbol::parse(a.symbol, a.d);
    auto stats = ring_stats_range(sym, k_lo, k_hi, a.p);
    std::cout << "k ring_sum mu_k argmax_n\n";
    std::string csv = "k,ring_sum,mu_k,argmax_n\n";
    for (const auto& s : stats) {
        std::cout << s.k << " " << format_double(s.ring_sum) << " " << format_double(s.mu)
                  << " " << point_str(s.argmax) << "\n";
        csv += std::to_string(s.k) + "," + format_double(s.ring_sum) + "," +
               format_double(s.mu) + "," + point_str(s.argmax) + "\n";
    }
    fs::path out = resolve_out(a.out);
    write_file(out / "tables" / "rings.csv", csv);
    return 0;
}

struct SectorsArgs {
    int d = 0, N = 0;
    std::string probe, out;
};

int cmd_sectors(const SectorsArgs& a) {
    SectorPartition part(a.d, a.N);
    Integer count = part.sector_count();
    if (count > Integer(100000))
        throw ResourceError("sector listing of " + count.get_str() + " sectors",
                            "at most 100000");
    std::cout << "d=" << a.d << " N=" << a.N << " sectors=" << count.get_str() << "\n";
    std::string csv = "axis,bins,centers\n";
    // Odometer over the d-1 bin digits (each 1..N) for every dominant axis.
    for (int axis = 0; axis < a.d; ++axis) {
        std::vector<int> bins(static_cast<std::size_t>(a.d - 1), 1);
        while (true) {
            std::string bstr = "(", cstr = "(";
            for (std::size_t i = 0; i < bins.size(); ++i) {
                if (i) {
                    bstr += ';';
                    cstr += ';';
                }
                bstr += std::to_string(bins[i]);
                cstr += format_rational(part.bin_center(bins[i]));
            }
            bstr += ')';
            cstr += ')';
            csv += std::to_string(axis + 1) + "," + bstr + "," + cstr + "\n";
            std::size_t i = 0;
            for (; i < bins.size(); ++i) {
                if (++bins[i] <= a.N) break;
                bins[i] = 1;
            }
            if (i == bins.size()) break;
        }
    }
    fs::path out = resolve_out(a.out);
    write_file(out / "tables" / "sectors.csv", csv);
    if (!a.probe.empty()) {
        LatticePoint n = parse_point(a.probe, a.d, "--probe");
        SectorId id = part.sector_of(n);
        std::string bstr = "(";
        for (int i = 0; i + 1 < a.d; ++i) {
            if (i) bstr += ';';
            bstr += std::to_string(id.bin[static_cast<std::size_t>(i)]);
        }
        bstr += ')';
        std::cout << "probe " << point_str(n) << " -> axis=" << id.axis + 1 << " bins=" << bstr
                  << "\n";
    }
    return 0;
}

struct RieszArgs {
    std::string freqs, out;
    double oversampling = 4.0;
    int M = 32;
    int j0 = 0;  // 1-based flag; 0 = auto
};

int cmd_riesz(const RieszArgs& a) {
    auto freqs = parse_freqs(a.freqs);
    RieszProductSpec spec(freqs);
    int j0 = a.j0 > 0 ? a.j0 - 1 : dominant_axis(freqs.back());
    if (j0 >= spec.dim()) throw DomainError("--j0: axis exceeds the dimension");
    std::vector<CertificationReport> cases;
    cases.push_back(riesz_l1_certify(spec, a.oversampling));
    cases.back().param("kind", "l1");
    cases.push_back(riesz_decomposition_check(spec));
    cases.back().param("kind", "decomposition");
    cases.push_back(riesz_agreement_check(spec, a.M));
    cases.back().param("kind", "agreement");
    fs::path out = resolve_out(a.out);
    KernelSpecJson fx;
    fx.type = KernelSpecJson::Type::riesz_phi;
    fx.d = spec.dim();
    fx.freqs = freqs;
    fx.j0 = j0;
    write_file(out / "fixtures" / "riesz.json", kernel_spec_to_json(fx));
    write_file(out / "reports" / "riesz_l1.json", claim_file_json("riesz_l1", cases));
    bool all = true;
    for (const auto& r : cases) {
        print_case(r);
        all = all && r.expected();
    }
    return all ? 0 : 1;
}

struct TestfnArgs {
    std::string freqs, out;
    double oversampling = 4.0;
    int j0 = 0;  // 1-based flag; 0 = auto
};

int cmd_testfn(const TestfnArgs& a) {
    auto freqs = parse_freqs(a.freqs);
    RieszProductSpec riesz(freqs);
    int j0 = a.j0 > 0 ? a.j0 - 1 : dominant_axis(freqs.back());
    if (j0 >= riesz.dim()) throw DomainError("--j0: axis exceeds the dimension");
    TestPhiSpec spec(std::move(riesz), j0);
    TrigPoly phi = test_phi(spec);
    fs::path out = resolve_out(a.out);
    KernelSpecJson fx;
    fx.type = KernelSpecJson::Type::riesz_phi;
    fx.d = spec.dim();
    fx.freqs = freqs;
    fx.j0 = j0;
    write_file(out / "fixtures" / "testfn.json", kernel_spec_to_json(fx));
    write_file(out / "fixtures" / "testfn_phi.json", trigpoly_to_json(phi));
    GradientReport gr = gradient_report(spec, a.oversampling);
    std::vector<CertificationReport> grad_cases = {gr.cert};
    write_file(out / "reports" / "lemgl.json", claim_file_json("lemgl", grad_cases));
    bool all = gr.cert.expected();
    print_case(gr.cert);
    if (spec.dim() >= 2) {
        std::vector<CertificationReport> hl_cases;
        std::string csv = "l,j,half_sum,scaled\n";
        for (int l = 1; l <= spec.N(); ++l) {
            for (int j = 0; j < spec.dim(); ++j) {
                if (j == spec.j0()) continue;
                hl_cases.push_back(hl_coefficient_bound(spec, l, j));
                HlBound hb = hl_bound_exact(spec, l, j);
                csv += std::to_string(l) + "," + std::to_string(j + 1) + "," +
                       format_rational(hb.max_half_sum) + "," + format_double(hb.scaled) + "\n";
            }
        }
        write_file(out / "tables" / "transfer.csv", csv);
        write_file(out / "reports" / "wspol.json", claim_file_json("wspol", hl_cases));
        for (const auto& r : hl_cases) all = all && r.expected();
        std::cout << "transfer pairs: " << hl_cases.size() << "\n";
    }
    return all ? 0 : 1;
}

struct DiagnoseArgs {
    std::string symbol, out, k = "0..5";
    int d = 0, N = 2;
    double p = 2.0, eps = 0.1;
    bool run_unbounded = false;
};

int cmd_diagnose(const DiagnoseArgs& a) {
    auto [k_lo, k_hi] = parse_k_range(a.k);
    MultiplierSymbol sym = MultiplierSymbol::parse(a.symbol, a.d);
    fs::path out = resolve_out(a.out);
    bool refused = sym.bounded() == Boundedness::no && !a.run_unbounded;
    std::vector<CertificationReport> singles;

    CertificationReport krok1;
    if (refused) {
        krok1 = krok1_flatness_certify(sym, a.p, k_lo, k_hi, false);
    } else {
        int cap = max_enumerable_ring(a.d, kMaxRingSweepPoints);
        int hi = std::min(k_hi, cap);
        if (hi < k_lo)
            throw ResourceError("ring sweep range in dimension " + std::to_string(a.d),
                                "k_lo <= " + std::to_string(cap));
        auto stats = ring_stats_range(sym, k_lo, hi, a.p);
        std::string csv = "k,ring_sum,mu_k,argmax_n\n";
        for (const auto& s : stats)
            csv += std::to_string(s.k) + "," + format_double(s.ring_sum) + "," +
                   format_double(s.mu) + "," + point_str(s.argmax) + "\n";
        write_file(out / "tables" / "rings.csv", csv);
        krok1 = krok1_flatness_from_stats(sym, a.p, stats, a.run_unbounded);
        double sp = schatten_partial(sym, a.p, hi);
        std::cout << "schatten_partial(p=" << format_double(a.p) << ", K=" << hi
                  << ") = " << format_double(sp) << "\n";
        Lema2Report l2 = lema2_from_stats(sym, stats, a.run_unbounded);
        write_file(out / "reports" / "lema2.json",
                   claim_file_json("lema2", std::vector<CertificationReport>{l2.cert}));
        singles.push_back(l2.cert);
    }
    write_file(out / "reports" / "krok1.json",
               claim_file_json("krok1", std::vector<CertificationReport>{krok1}));
    singles.push_back(krok1);
    if (refused) {
        Lema2Report l2 = lema2_decay_report(sym, k_hi, false);
        write_file(out / "reports" / "lema2.json",
                   claim_file_json("lema2", std::vector<CertificationReport>{l2.cert}));
        singles.push_back(l2.cert);
    }
    {
        int K = std::min(k_hi, max_enumerable_ring(a.d, kMaxTermwiseRingPoints));
        DiagnosticsConfig dc(a.d, a.p, a.eps, K, a.N);
        MainSumReport ms = main_sum_partial(sym, dc);
        write_file(out / "reports" / "main_sum.json",
                   claim_file_json("main_sum", std::vector<CertificationReport>{ms.cert}));
        singles.push_back(ms.cert);
    }
    bool all = true;
    for (const auto& r : singles) {
        print_case(r);
        all = all && r.expected();
    }
    return all ? 0 : 1;
}

struct CertifyArgs {
    std::string config, only, out;
    std::string dims, p, N, symbol;
    double eps = 0.0, oversampling = 0.0;
    int k_lo = 0, k_hi = 0;
    std::uint64_t seed = 0;
};

int cmd_certify(const CertifyArgs& a, const CLI::App* sub) {
    SuiteConfig cfg;
    if (!a.config.empty()) {
        std::ifstream f(a.config, std::ios::binary);
        if (!f) throw DomainError("cannot read config file: " + a.config);
        std::ostringstream ss;
        ss << f.rdbuf();
        cfg = suite_config_from_text(ss.str(), a.config);
    }
    // Flags override config-file values.
    if (sub->count("--dims")) {
        cfg.dims.clear();
        for (const auto& t : split_on(a.dims, ','))
            cfg.dims.push_back(static_cast<int>(parse_i64(t, "--dims")));
    }
    if (sub->count("--p")) {
        cfg.p_values.clear();
        for (const auto& t : split_on(a.p, ',')) cfg.p_values.push_back(parse_f64(t, "--p"));
    }
    if (sub->count("--N")) {
        cfg.N_values.clear();
        for (const auto& t : split_on(a.N, ','))
            cfg.N_values.push_back(static_cast<int>(parse_i64(t, "--N")));
    }
    if (sub->count("--eps")) cfg.eps = a.eps;
    if (sub->count("--k-lo")) cfg.k_lo = a.k_lo;
    if (sub->count("--k-hi")) cfg.k_hi = a.k_hi;
    if (sub->count("--oversampling")) cfg.oversampling = a.oversampling;
    if (sub->count("--seed")) cfg.seed = a.seed;
    if (sub->count("--symbol")) cfg.symbol = a.symbol;
    std::vector<std::string> only = split_on(a.only, ',');
    auto reports = run_suite(cfg, only);
    SuiteArtifacts art = assemble_suite(cfg, reports);
    fs::path out = resolve_out(a.out);
    write_file(out / "suite.json", art.suite_json);
    for (const auto& [claim, body] : art.claim_files)
        write_file(out / "reports" / (claim + ".json"), body);
    // One summary line per claim family that ran.
    for (const auto& [id, title] : claim_registry()) {
        int passed = 0, failed = 0, skipped = 0;
        bool present = false, expected = true;
        for (const auto& r : reports) {
            if (r.claim_id != id) continue;
            present = true;
            if (r.skipped)
                ++skipped;
            else if (r.pass)
                ++passed;
            else
                ++failed;
            expected = expected && r.expected();
        }
        if (!present) continue;
        std::cout << id << ": " << passed << " passed, " << failed << " failed, " << skipped
                  << " skipped" << (expected ? "" : "  [UNEXPECTED]") << "\n";
    }
    std::cout << (art.all_expected ? "suite: all claims as expected"
                                   : "suite: unexpected outcomes present")
              << "\n";
    return art.all_expected ? 0 : 1;
}

struct SharpnessArgs {
    std::string symbol, q_grid, p_grid, out;
    int d = 0, K = 8;
};

int cmd_sharpness(const SharpnessArgs& a) {
    std::vector<double> exps;
    for (const auto& t : split_on(a.q_grid, ',')) exps.push_back(parse_f64(t, "--q-grid"));
    for (const auto& t : split_on(a.p_grid, ',')) exps.push_back(parse_f64(t, "--p-grid"));
    if (exps.empty()) throw DomainError("--q-grid/--p-grid: the exponent grid is empty");
    MultiplierSymbol sym = MultiplierSymbol::parse(a.symbol, a.d);
    SharpnessReport rep = sharpness_explore(sym, exps, a.K);
    std::string csv = "q,K,partial_sum,classifier\n";
    for (const auto& row : rep.rows)
        csv += format_double(row.q) + "," + std::to_string(row.K) + "," +
               format_double(row.partial_sum) + "," + row.classifier + "\n";
    fs::path out = resolve_out(a.out);
    write_file(out / "tables" / "sharpness.csv", csv);
    for (const auto& [q, verdict] : rep.verdicts)
        std::cout << "q=" << format_double(q) << ": " << verdict << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale certification toolkit for triadic multiplier diagnostics"};
    app.require_subcommand(1);

    RingsArgs ra;
    auto* rings = app.add_subcommand("rings", "ring sweep statistics for a symbol");
    rings->add_option("--d", ra.d, "ambient dimension")->required();
    rings->add_option("--k", ra.k, "ring index K or range LO..HI")->required();
    rings->add_option("--symbol", ra.symbol, "multiplier symbol")->required();
    rings->add_option("--p", ra.p, "exponent p in (1,2]");
    rings->add_option("--out", ra.out, "output directory");

    SectorsArgs sa;
    auto* sectors = app.add_subcommand("sectors", "direction sector partition tables");
    sectors->add_option("--d", sa.d, "ambient dimension")->required();
    sectors->add_option("--N", sa.N, "sector granularity")->required();
    sectors->add_option("--probe", sa.probe, "classify one point 'n1,...,nd'");
    sectors->add_option("--out", sa.out, "output directory");

    RieszArgs za;
    auto* riesz = app.add_subcommand("riesz", "product kernel fixture and certificates");
    riesz->add_option("--freqs", za.freqs, "frequencies 'n1,n2;m1,m2;...'")->required();
    riesz->add_option("--oversampling", za.oversampling, "quadrature oversampling");
    riesz->add_option("--M", za.M, "agreement grid side");
    riesz->add_option("--j0", za.j0, "distinguished axis (1-based, default: dominant)");
    riesz->add_option("--out", za.out, "output directory");

    TestfnArgs ta;
    auto* testfn = app.add_subcommand("testfn", "antiderivative test function fixture");
    testfn->add_option("--freqs", ta.freqs, "frequencies 'n1,n2;m1,m2;...'")->required();
    testfn->add_option("--j0", ta.j0, "distinguished axis (1-based, default: dominant)");
    testfn->add_option("--oversampling", ta.oversampling, "quadrature oversampling");
    testfn->add_option("--out", ta.out, "output directory");

    DiagnoseArgs da;
    auto* diagnose = app.add_subcommand("diagnose", "multiplier summability diagnostics");
    diagnose->add_option("--symbol", da.symbol, "multiplier symbol")->required();
    diagnose->add_option("--d", da.d, "ambient dimension")->required();
    diagnose->add_option("--p", da.p, "exponent p in (1,2]");
    diagnose->add_option("--eps", da.eps, "diagnostic exponent slack");
    diagnose->add_option("--k", da.k, "ring range LO..HI");
    diagnose->add_option("--N", da.N, "sector granularity");
    diagnose->add_flag("--run-unbounded", da.run_unbounded,
                       "sweep even when the symbol is cataloged unbounded");
    diagnose->add_option("--out", da.out, "output directory");

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "run the certification suite");
    certify->add_option("--suite-config", ca.config, "flat key=value config file");
    certify->add_option("--only", ca.only, "comma list of claim ids");
    certify->add_option("--out", ca.out, "output directory");
    certify->add_option("--dims", ca.dims, "override: dimensions, comma list");
    certify->add_option("--p", ca.p, "override: p grid, comma list");
    certify->add_option("--eps", ca.eps, "override: epsilon");
    certify->add_option("--N", ca.N, "override: sparsity orders, comma list");
    certify->add_option("--k-lo", ca.k_lo, "override: first ring");
    certify->add_option("--k-hi", ca.k_hi, "override: last ring");
    certify->add_option("--oversampling", ca.oversampling, "override: oversampling");
    certify->add_option("--seed", ca.seed, "override: RNG seed");
    certify->add_option("--symbol", ca.symbol, "override: multiplier symbol");

    SharpnessArgs ha;
    auto* sharp = app.add_subcommand("sharpness", "exponent sharpness exploration");
    sharp->add_option("--symbol", ha.symbol, "multiplier symbol")->required();
    sharp->add_option("--d", ha.d, "ambient dimension")->required();
    sharp->add_option("--q-grid", ha.q_grid, "exponents, comma list");
    sharp->add_option("--p-grid", ha.p_grid, "additional exponents, comma list");
    sharp->add_option("--K", ha.K, "number of rings to sum");
    sharp->add_option("--out", ha.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rings->parsed()) return cmd_rings(ra);
        if (sectors->parsed()) return cmd_sectors(sa);
        if (riesz->parsed()) return cmd_riesz(za);
        if (testfn->parsed()) return cmd_testfn(ta);
        if (diagnose->parsed()) return cmd_diagnose(da);
        if (certify->parsed()) return cmd_certify(ca, certify);
        if (sharp->parsed()) return cmd_sharpness(ha);
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConstructionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
