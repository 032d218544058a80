#include "sbe/cli.hpp"

#include "sbe/dimacs.hpp"
#include "sbe/experiments.hpp"
#include "sbe/oracle.hpp"
#include "sbe/search.hpp"
#include "sbe/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <thread>

namespace sbe {
namespace {

OrderingMode parse_ordering(const std::string& token) {
    if (token == "arb" || token == "arbitrary") return OrderingMode::Arbitrary;
    if (token == "asc" || token == "ascending") return OrderingMode::AscendingDegree;
    if (token == "desc" || token == "descending") return OrderingMode::DescendingDegree;
    throw std::invalid_argument("unknown ordering '" + token +
                                "' (expected arb|asc|desc)");
}

BranchPolicy parse_policy(const std::string& token) {
    if (token == "left" || token == "always-left") return BranchPolicy::AlwaysLeft;
    if (token == "fewest" || token == "fewest-edges") return BranchPolicy::FewestEdges;
    if (token == "stable" || token == "most-stable") return BranchPolicy::MostStable;
    throw std::invalid_argument("unknown policy '" + token +
                                "' (expected left|fewest|most-stable)");
}

EdgeRule parse_edge_rule(const std::string& token) {
    if (token == "lex-first" || token == "lex") return EdgeRule::LexFirst;
    throw std::invalid_argument("unknown edge rule '" + token + "' (expected lex-first)");
}

const std::vector<SearchConfig>& six_variants() {
    static const std::vector<SearchConfig> six = [] {
        std::vector<SearchConfig> out;
        for (auto ordering : {OrderingMode::AscendingDegree, OrderingMode::DescendingDegree})
            for (auto policy : {BranchPolicy::AlwaysLeft, BranchPolicy::FewestEdges,
                                BranchPolicy::MostStable})
                out.push_back({ordering, policy, EdgeRule::LexFirst});
        return out;
    }();
    return six;
}

std::vector<SearchConfig> parse_variants(const std::string& spec, EdgeRule rule) {
    if (spec == "six") return six_variants();
    if (spec == "all") {
        std::vector<SearchConfig> out;
        for (auto ordering : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                              OrderingMode::DescendingDegree})
            for (auto policy : {BranchPolicy::AlwaysLeft, BranchPolicy::FewestEdges,
                                BranchPolicy::MostStable})
                out.push_back({ordering, policy, rule});
        return out;
    }
    std::vector<SearchConfig> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string token =
            spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const std::size_t slash = token.find('/');
        if (token.empty() || slash == std::string::npos)
            throw std::invalid_argument("bad variant '" + token +
                                        "' (expected <ordering>/<policy>)");
        out.push_back({parse_ordering(token.substr(0, slash)),
                       parse_policy(token.substr(slash + 1)), rule});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int env_thread_count() {
    if (const char* env = std::getenv("SBE_THREADS")) {
        const int value = std::atoi(env);
        if (value >= 1) return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_text(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"split-by-edges tree search for maximum independent sets"};
    app.name("sbe-mis");
    app.require_subcommand(0, 1);

    auto* gen = app.add_subcommand("gen", "Generate a seeded uniform G(n,m) graph file");
    int gen_n = 0;
    std::int64_t gen_m = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "edge count")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed (default 1)");
    gen->add_option("--out", gen_out, "output path, - for stdout (default -)");

    auto* solve = app.add_subcommand("solve", "Run one depth-first descent on a graph file");
    std::string solve_input;
    std::string solve_ordering = "arbitrary";
    std::string solve_policy = "most-stable";
    std::string solve_rule = "lex-first";
    bool solve_exact = false;
    bool solve_trace = false;
    solve->add_option("--input", solve_input, "graph file to read")->required();
    solve->add_option("--ordering", solve_ordering, "arb|asc|desc (default arbitrary)");
    solve->add_option("--policy", solve_policy, "left|fewest|most-stable (default most-stable)");
    solve->add_option("--edge-rule", solve_rule, "lex-first (default)");
    solve->add_flag("--exact", solve_exact, "also compute alpha exactly and report success");
    solve->add_flag("--trace", solve_trace, "print each descent step");

    auto* sweep = app.add_subcommand("sweep", "Success-rate sweep over random graphs");
    int sweep_n = 0;
    std::int64_t m_from = 0, m_to = 0, m_step = 1;
    int sweep_graphs = 100;
    std::string sweep_variants = "six";
    std::uint64_t sweep_seed = 1;
    std::string sweep_out = "-";
    int sweep_threads = env_thread_count();
    int sweep_window = 5;
    bool sweep_gnuplot = false;
    sweep->add_option("--n", sweep_n, "vertex count")->required();
    sweep->add_option("--m-from", m_from, "first edge count")->required();
    sweep->add_option("--m-to", m_to, "last edge count")->required();
    sweep->add_option("--m-step", m_step, "edge count step (default 1)");
    sweep->add_option("--graphs", sweep_graphs, "graphs per edge count (default 100)");
    sweep->add_option("--variants", sweep_variants,
                      "comma list of <ordering>/<policy>, or six|all (default six)");
    sweep->add_option("--seed", sweep_seed, "master seed (default 1)");
    sweep->add_option("--out", sweep_out, "output path, - for stdout (default -)");
    sweep->add_option("--threads", sweep_threads, "worker count (default $SBE_THREADS or cores)");
    sweep->add_option("--window", sweep_window, "odd smoothing window for extrema (default 5)");
    sweep->add_flag("--gnuplot", sweep_gnuplot, "emit gnuplot blocks instead of CSV");

    auto* verify = app.add_subcommand("verify", "Run the randomized invariant suites");
    std::string verify_level = "quick";
    verify->add_option("--level", verify_level, "quick|full (default quick)")
        ->check(CLI::IsMember({"quick", "full"}));

    auto* help = app.add_subcommand("help", "Show usage");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (help->parsed() || app.get_subcommands().empty()) {
            out << app.help();
            return help->parsed() ? 0 : 2;
        }

        if (gen->parsed()) {
            const Graph g = random_graph(gen_n, gen_m, gen_seed);
            write_text(gen_out, write_dimacs(g), out);
            return 0;
        }

        if (solve->parsed()) {
            const Graph g = read_dimacs_file(solve_input);
            const SearchConfig cfg{parse_ordering(solve_ordering), parse_policy(solve_policy),
                                   parse_edge_rule(solve_rule)};
            std::optional<int> alpha;
            if (solve_exact) alpha = alpha_exact(g).alpha;
            const SearchResult res = dfs_descend(g, cfg, alpha, solve_trace);
            for (const PathStep& step : res.path)
                out << "step " << step.cardinality << " "
                    << (step.chosen == Side::Left ? "left" : "right") << "\n";
            out << "found:";
            for (int v : res.found) out << " " << v + 1;
            out << "\n";
            out << "size: " << res.size << "\n";
            out << "depth: " << res.depth << "\n";
            if (solve_exact) {
                out << "alpha: " << *res.alpha << "\n";
                out << "success: " << (*res.success ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (sweep->parsed()) {
            if (m_step < 1) throw std::invalid_argument("--m-step must be at least 1");
            SweepConfig cfg;
            cfg.n = sweep_n;
            for (std::int64_t m = m_from; m <= m_to; m += m_step) cfg.m_values.push_back(m);
            cfg.graphs_per_m = sweep_graphs;
            cfg.variants = parse_variants(sweep_variants, EdgeRule::LexFirst);
            cfg.master_seed = sweep_seed;
            cfg.smoothing_window = sweep_window;
            cfg.thread_count = sweep_threads;
            const auto rows = run_sweep(cfg);
            write_text(sweep_out, sweep_gnuplot ? emit_gnuplot(rows) : emit_csv(rows), out);
            for (const SeriesStats& s : collect_series_stats(rows, sweep_window)) {
                out << "v" << s.variant << " "
                    << variant_token(cfg.variants[static_cast<std::size_t>(s.variant - 1)])
                    << ":";
                if (s.extrema_valid)
                    out << " maxima=" << s.local_maxima << " minima=" << s.local_minima;
                else
                    out << " maxima=n/a minima=n/a";
                out << " min_success_rate=" << format_rate(s.min_success_rate)
                    << " argmin_m=" << s.argmin_m << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            const VerifyLevel level =
                verify_level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
            const VerifyReport report = run_verification(level, out);
            out << "verification: " << report.passed << " passed, " << report.failed
                << " failed (level " << verify_level << ")\n";
            if (report.failed > 0) {
                err << "error: verification failed " << report.failed << " check(s)\n";
                return 1;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable
}

} // namespace sbe
