#include "packing/cache.hpp"
#include "packing/json_io.hpp"
#include "packing/stability.hpp"
#include "packing/syzygy.hpp"
#include "packing/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

using namespace packing;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

Tuple parse_tuple(const std::string& csv) {
    Tuple out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("expected comma-separated integers");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("expected a nonempty tuple");
    return out;
}

struct GlobalOptions {
    std::string format = "text";
    int threads = 1;
    std::string cache_dir;
    std::int64_t max_simplices = PackingComplex::kDefaultMaxSimplices;
    std::int64_t max_oracle_entries = 50'000'000;
    bool diagrams = false;
};

struct Session {
    GlobalOptions opts;
    DiskCache cache;
    std::unique_ptr<HomologyEngine> engine;

    void start() {
        std::string dir = opts.cache_dir;
        if (dir.empty())
            if (const char* env = std::getenv("PACKING_CACHE_DIR")) dir = env;
        cache = DiskCache(dir);
        EngineOptions eo;
        eo.max_simplices = opts.max_simplices;
        eo.threads = opts.threads;
        if (cache.enabled()) {
            eo.cache_load = [this](const Tuple& N, const Tuple& d,
                                   int k) -> std::optional<Decomposition> {
                auto text = cache.load(DiskCache::homology_key(N, d, k));
                if (!text) return std::nullopt;
                return decomposition_from_json(nlohmann::json::parse(*text), N);
            };
            eo.cache_store = [this](const Tuple& N, const Tuple& d, int k,
                                    const Decomposition& dec) {
                cache.store(DiskCache::homology_key(N, d, k), to_json(dec).dump());
            };
        }
        engine = std::make_unique<HomologyEngine>(eo);
    }
};

void print_decomposition_text(const Decomposition& dec, bool diagrams) {
    std::cout << dec.str() << "\n";
    if (diagrams && !dec.empty()) {
        for (const auto& [lambda, mult] : dec.entries) {
            if (mult != 1) std::cout << mult << " x\n";
            for (const auto& comp : lambda.components()) std::cout << comp.diagram();
            std::cout << "\n";
        }
    }
}

// --fix N2=3 / --range N1=3..7 style coordinate arguments (1-based).
void parse_fix(const std::vector<std::string>& args, size_t arity,
               std::vector<std::optional<int>>& fixed) {
    static const std::regex pat(R"(^[A-Za-z]+(\d+)=(-?\d+)$)");
    for (const auto& arg : args) {
        std::smatch m;
        if (!std::regex_match(arg, m, pat))
            throw CLI::ValidationError("--fix expects NAME<i>=<value>, e.g. N2=3");
        size_t idx = std::stoul(m[1]);
        if (idx < 1 || idx > arity) throw CLI::ValidationError("--fix coordinate out of range");
        fixed[idx - 1] = std::stoi(m[2]);
    }
}

void parse_ranges(const std::vector<std::string>& args, size_t arity,
                  const std::vector<std::optional<int>>& fixed, Tuple& from, Tuple& to) {
    static const std::regex pat(R"(^[A-Za-z]+(\d+)=(-?\d+)\.\.(-?\d+)$)");
    std::vector<bool> seen(arity, false);
    for (const auto& arg : args) {
        std::smatch m;
        if (!std::regex_match(arg, m, pat))
            throw CLI::ValidationError("--range expects NAME<i>=<lo>..<hi>, e.g. N1=3..7");
        size_t idx = std::stoul(m[1]);
        if (idx < 1 || idx > arity)
            throw CLI::ValidationError("--range coordinate out of range");
        if (fixed[idx - 1])
            throw CLI::ValidationError("coordinate is both fixed and scanned");
        from[idx - 1] = std::stoi(m[2]);
        to[idx - 1] = std::stoi(m[3]);
        if (from[idx - 1] > to[idx - 1]) throw CLI::ValidationError("empty scan range");
        seen[idx - 1] = true;
    }
    for (size_t i = 0; i < arity; ++i)
        if (!fixed[i] && !seen[i])
            throw CLI::ValidationError("every coordinate needs either --fix or --range");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant homology of packing complexes and syzygy tables of "
                 "Segre-Veronese embeddings, in exact arithmetic"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    app.fallthrough();  // global options may follow the subcommand

    Session session;
    app.add_option("--format", session.opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", session.opts.threads, "Worker thread budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--cache-dir", session.opts.cache_dir,
                   "On-disk cache directory (or set PACKING_CACHE_DIR)");
    app.add_option("--max-simplices", session.opts.max_simplices,
                   "Resource cap on simplex counts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-oracle-entries", session.opts.max_oracle_entries,
                   "Resource cap on dimension-oracle matrices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--diagrams", session.opts.diagrams, "Render Young diagrams in text output");

    // ------------------------------------------------------------- homology
    auto* homology = app.add_subcommand("homology", "Equivariant reduced homology of a packing complex");
    std::string hom_N, hom_d;
    std::optional<int> hom_k;
    homology->add_option("--N", hom_N, "Ground set sizes, comma separated")->required();
    homology->add_option("--d", hom_d, "Block sizes, comma separated")->required();
    homology->add_option("--k", hom_k, "Single homology degree (default: all)");

    // ---------------------------------------------------------------- betti
    auto* betti = app.add_subcommand("betti", "Equivariant syzygy table");
    int pmax = 0, qmax = 0;
    std::string betti_d, betti_b;
    betti->add_option("--pmax", pmax, "Largest homological position")->required();
    betti->add_option("--qmax", qmax, "Largest weight row")->required();
    betti->add_option("--d", betti_d, "Embedding degrees")->required();
    betti->add_option("--b", betti_b, "Twist")->required();

    // -------------------------------------------------------- linear-strand
    auto* strand = app.add_subcommand("linear-strand", "Closed-form linear strands");
    std::string family;
    int st_p = 0, st_a = 0, st_n = 2, st_deg = 2;
    strand->add_option("--family", family, "segre or veronese")
        ->check(CLI::IsMember({"segre", "veronese"}))
        ->required();
    strand->add_option("--p", st_p, "Homological position")->required();
    strand->add_option("--a", st_a, "Twist of the first factor (segre)");
    strand->add_option("--n", st_n, "Number of factors (segre)");
    strand->add_option("--deg", st_deg, "Embedding degree (veronese)");

    // ----------------------------------------------------------------- scan
    auto* scan = app.add_subcommand("scan", "Stability scans over lattice windows");
    std::string scan_d;
    std::optional<int> scan_k;
    bool scan_syzygy = false;
    int scan_p = 0, scan_q = 0;
    std::vector<std::string> fix_args, range_args;
    scan->add_option("--d", scan_d, "Block sizes / embedding degrees")->required();
    scan->add_option("--k", scan_k, "Homology degree (homology scan)");
    scan->add_flag("--syzygy", scan_syzygy, "Scan syzygy twists instead of homology sizes");
    scan->add_option("--p", scan_p, "Homological position (syzygy scan)");
    scan->add_option("--q", scan_q, "Weight row (syzygy scan)");
    scan->add_option("--fix", fix_args, "Fixed coordinates, e.g. N2=3 or b2=0");
    scan->add_option("--range", range_args, "Scanned coordinates, e.g. N1=3..7");

    // --------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite;
    verify->add_option("suite", suite, "Suite name or 'all'")->required();

    // ------------------------------------------------------- export-complex
    auto* export_cmd = app.add_subcommand("export-complex", "Write the face list as plain text");
    std::string ex_N, ex_d, ex_out;
    export_cmd->add_option("--N", ex_N, "Ground set sizes")->required();
    export_cmd->add_option("--d", ex_d, "Block sizes")->required();
    export_cmd->add_option("--out", ex_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        session.start();
        HomologyEngine& engine = *session.engine;
        bool json_out = session.opts.format == "json";

        if (*homology) {
            Tuple N = parse_tuple(hom_N), d = parse_tuple(hom_d);
            auto cx = engine.complex(N, d);
            std::vector<int> degrees;
            if (hom_k) degrees.push_back(*hom_k);
            else
                for (int k = -1; k <= cx->top_dimension(); ++k) degrees.push_back(k);

            nlohmann::json results = nlohmann::json::array();
            for (int k : degrees) {
                Decomposition dec = engine.homology_decomposition(N, d, k);
                if (json_out) {
                    results.push_back(homology_json(N, d, k, dec));
                } else {
                    if (cx->empty() && k == -1)
                        std::cout << "empty complex; H~_-1 = trivial\n";
                    std::cout << "H~_" << k << " " << tuple_str(N) << " d=" << tuple_str(d)
                              << ": ";
                    print_decomposition_text(dec, session.opts.diagrams);
                }
            }
            if (json_out) std::cout << results.dump(2) << "\n";
            return kExitOk;
        }

        if (*betti) {
            SyzygyCalculator calc(engine);
            BettiTable table = calc.betti_table(pmax, qmax, parse_tuple(betti_d),
                                                parse_tuple(betti_b));
            if (json_out) std::cout << to_json(table).dump(2) << "\n";
            else std::cout << table.render_text();
            return kExitOk;
        }

        if (*strand) {
            Decomposition dec = family == "segre" ? linear_strand_segre(st_p, st_a, st_n)
                                                  : linear_strand_veronese(st_p, st_deg);
            if (json_out) {
                nlohmann::json j{{"family", family}, {"p", st_p}, {"entries", to_json(dec)}};
                if (family == "segre") {
                    j["a"] = st_a;
                    j["n"] = st_n;
                } else {
                    j["d"] = st_deg;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                print_decomposition_text(dec, session.opts.diagrams);
            }
            return kExitOk;
        }

        if (*scan) {
            Tuple d = parse_tuple(scan_d);
            std::vector<std::optional<int>> fixed(d.size());
            Tuple from(d.size(), 0), to(d.size(), 0);
            parse_fix(fix_args, d.size(), fixed);
            parse_ranges(range_args, d.size(), fixed, from, to);
            if (scan_syzygy) {
                SyzygyStabilityReport r =
                    syzygy_stability_check(engine, scan_p, scan_q, d, fixed, from, to);
                if (json_out) {
                    std::cout << to_json(r).dump(2) << "\n";
                } else {
                    for (const auto& pt : r.points)
                        std::cout << "b=" << tuple_str(pt.N) << ": "
                                  << pt.decomposition.str() << "\n";
                    std::cout << "stable from b=" << tuple_str(r.stabilization_b)
                              << " (bound " << tuple_str(r.theorem_bound) << ")"
                              << (r.meets_bound ? " within bound" : " EXCEEDS BOUND");
                    if (r.sharp) std::cout << (*r.sharp ? "; sharp" : "; not sharp");
                    std::cout << "\n";
                }
                return r.stabilized && r.meets_bound ? kExitOk : kExitVerifyFailure;
            }
            if (!scan_k) throw CLI::ValidationError("--k is required for homology scans");
            StabilityReport r = stable_range_scan(engine, d, *scan_k, fixed, from, to);
            if (json_out) {
                std::cout << to_json(r).dump(2) << "\n";
            } else {
                for (const auto& pt : r.points)
                    std::cout << "N=" << tuple_str(pt.N) << ": " << pt.decomposition.str()
                              << "\n";
                std::cout << "stable from N=" << tuple_str(r.stabilization_point)
                          << " (bound " << tuple_str(r.paper_bound) << ", m=" << r.m << ")"
                          << (r.meets_bound ? " within bound" : " EXCEEDS BOUND") << "\n";
            }
            return r.stabilized && r.meets_bound ? kExitOk : kExitVerifyFailure;
        }

        if (*verify) {
            auto reports = run_suites(suite, engine, session.opts.max_oracle_entries);
            bool all_ok = true;
            for (const auto& rep : reports) {
                for (const auto& check : rep.checks) {
                    std::cout << (check.pass ? "[pass] " : "[FAIL] ") << rep.suite << ": "
                              << check.name;
                    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
                    std::cout << "\n";
                    all_ok = all_ok && check.pass;
                }
            }
            std::cout << (all_ok ? "OK" : "FAILED") << "\n";
            return all_ok ? kExitOk : kExitVerifyFailure;
        }

        if (*export_cmd) {
            auto cx = engine.complex(parse_tuple(ex_N), parse_tuple(ex_d));
            if (ex_out.empty()) {
                cx->export_faces(std::cout);
            } else {
                std::ofstream out(ex_out);
                if (!out) throw std::runtime_error("cannot open " + ex_out);
                cx->export_faces(out);
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
