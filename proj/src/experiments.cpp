#include "sbe/experiments.hpp"

#include "sbe/oracle.hpp"
#include "sbe/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sbe {

namespace {

void validate(const SweepConfig& cfg) {
    if (cfg.n < 1) throw std::out_of_range("sweep: vertex count must be at least 1");
    const std::int64_t all = Graph::max_edges(cfg.n);
    for (std::size_t i = 0; i < cfg.m_values.size(); ++i) {
        const std::int64_t m = cfg.m_values[i];
        if (m < 0 || m > all)
            throw std::out_of_range("sweep: edge count " + std::to_string(m) +
                                    " outside [0, " + std::to_string(all) + "]");
        if (i > 0 && m <= cfg.m_values[i - 1])
            throw std::invalid_argument("sweep: m_values must be strictly ascending");
    }
    if (cfg.m_values.empty()) throw std::invalid_argument("sweep: no edge counts given");
    if (cfg.graphs_per_m < 1) throw std::invalid_argument("sweep: graphs_per_m must be at least 1");
    if (cfg.variants.empty()) throw std::invalid_argument("sweep: no variants given");
    if (cfg.smoothing_window < 1 || cfg.smoothing_window % 2 == 0)
        throw std::invalid_argument("sweep: smoothing window must be odd and positive");
    if (cfg.thread_count < 1) throw std::invalid_argument("sweep: thread count must be at least 1");
}

struct TrialResult {
    int alpha = 0;
    std::vector<int> sizes; // per variant
};

} // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::size_t m_count = cfg.m_values.size();
    const std::size_t trials = static_cast<std::size_t>(cfg.graphs_per_m);
    const std::size_t variant_count = cfg.variants.size();
    const std::size_t task_count = m_count * trials;

    std::vector<TrialResult> results(task_count);

    const auto run_task = [&](std::size_t task) {
        const std::size_t mi = task / trials;
        const std::size_t trial = task % trials;
        const std::int64_t m = cfg.m_values[mi];
        const std::uint64_t seed =
            derive_seed(cfg.master_seed, static_cast<std::uint64_t>(m), trial);
        const Graph g = random_graph(cfg.n, m, seed);
        TrialResult& out = results[task];
        out.alpha = alpha_exact(g).alpha;
        out.sizes.reserve(variant_count);
        for (const SearchConfig& variant : cfg.variants)
            out.sizes.push_back(dfs_descend(g, variant).size);
    };

    const auto workers = static_cast<std::size_t>(cfg.thread_count);
    if (workers <= 1 || task_count <= 1) {
        for (std::size_t t = 0; t < task_count; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t; (t = next.fetch_add(1)) < task_count;) {
                    try {
                        run_task(t);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    // Aggregation is a single deterministic pass in trial order, with exact
    // accuracy arithmetic, so the thread schedule cannot leak into the rows.
    using Rational = boost::multiprecision::cpp_rational;
    std::vector<SweepRow> rows;
    rows.reserve(m_count * variant_count);
    for (std::size_t mi = 0; mi < m_count; ++mi) {
        for (std::size_t vi = 0; vi < variant_count; ++vi) {
            SweepRow row;
            row.n = cfg.n;
            row.m = cfg.m_values[mi];
            row.variant = static_cast<int>(vi) + 1;
            row.ordering = cfg.variants[vi].ordering;
            row.policy = cfg.variants[vi].policy;
            row.trials = cfg.graphs_per_m;

            Rational accuracy_sum = 0;
            std::int64_t min_num = 1, min_den = 1; // running min of size/alpha
            for (std::size_t trial = 0; trial < trials; ++trial) {
                const TrialResult& tr = results[mi * trials + trial];
                const int size = tr.sizes[vi];
                if (size == tr.alpha) ++row.successes;
                accuracy_sum += Rational(size, tr.alpha);
                if (static_cast<std::int64_t>(size) * min_den <
                    min_num * static_cast<std::int64_t>(tr.alpha)) {
                    min_num = size;
                    min_den = tr.alpha;
                }
                row.found_total += size;
                row.alpha_total += tr.alpha;
            }
            row.success_rate = static_cast<double>(row.successes) / row.trials;
            row.mean_accuracy =
                (accuracy_sum / row.trials).convert_to<double>();
            row.min_accuracy = static_cast<double>(min_num) / static_cast<double>(min_den);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<double> smooth_series(const std::vector<double>& series, int window) {
    if (window < 1 || window % 2 == 0)
        throw std::invalid_argument("smooth_series: window must be odd and positive");
    if (window == 1) return series;
    const int len = static_cast<int>(series.size());
    const int half = window / 2;
    std::vector<double> out(series.size());
    for (int i = 0; i < len; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(len - 1, i + half);
        double sum = 0;
        for (int j = lo; j <= hi; ++j) sum += series[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = sum / (hi - lo + 1);
    }
    return out;
}

ExtremaCounts count_local_extrema(const std::vector<double>& series, int window) {
    if (window < 1 || window % 2 == 0)
        throw std::invalid_argument("count_local_extrema: window must be odd and positive");
    if (series.size() <= static_cast<std::size_t>(window))
        throw std::out_of_range("count_local_extrema: series not longer than the window");

    const std::vector<double> smoothed = smooth_series(series, window);
    std::vector<double> collapsed; // equal-value plateaus become one point
    for (double v : smoothed)
        if (collapsed.empty() || collapsed.back() != v) collapsed.push_back(v);

    ExtremaCounts out;
    for (std::size_t i = 1; i + 1 < collapsed.size(); ++i) {
        if (collapsed[i] > collapsed[i - 1] && collapsed[i] > collapsed[i + 1]) ++out.maxima;
        if (collapsed[i] < collapsed[i - 1] && collapsed[i] < collapsed[i + 1]) ++out.minima;
    }
    return out;
}

std::vector<SeriesStats> collect_series_stats(const std::vector<SweepRow>& rows, int window) {
    std::vector<SeriesStats> out;
    int max_variant = 0;
    for (const SweepRow& row : rows) max_variant = std::max(max_variant, row.variant);
    for (int v = 1; v <= max_variant; ++v) {
        SeriesStats stats;
        stats.variant = v;
        std::vector<double> series;
        bool first = true;
        for (const SweepRow& row : rows) {
            if (row.variant != v) continue;
            if (first) {
                stats.ordering = row.ordering;
                stats.policy = row.policy;
                stats.min_success_rate = row.success_rate;
                stats.argmin_m = row.m;
                first = false;
            } else if (row.success_rate < stats.min_success_rate) {
                stats.min_success_rate = row.success_rate;
                stats.argmin_m = row.m;
            }
            series.push_back(row.success_rate);
        }
        if (first) continue; // no rows for this variant id
        if (series.size() > static_cast<std::size_t>(window)) {
            const ExtremaCounts counts = count_local_extrema(series, window);
            stats.extrema_valid = true;
            stats.local_maxima = counts.maxima;
            stats.local_minima = counts.minima;
        }
        out.push_back(stats);
    }
    return out;
}

std::string format_rate(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string variant_token(const SearchConfig& cfg) {
    return std::string(ordering_name(cfg.ordering)) + "/" + policy_name(cfg.policy);
}

namespace {

std::string row_fields(const SweepRow& r, char sep) {
    std::string line = std::to_string(r.n);
    line += sep;
    line += std::to_string(r.m);
    line += sep;
    line += "v" + std::to_string(r.variant);
    line += sep;
    line += ordering_name(r.ordering);
    line += sep;
    line += policy_name(r.policy);
    line += sep;
    line += std::to_string(r.trials);
    line += sep;
    line += std::to_string(r.successes);
    line += sep;
    line += format_rate(r.success_rate);
    line += sep;
    line += format_rate(r.mean_accuracy);
    line += sep;
    line += format_rate(r.min_accuracy);
    return line;
}

} // namespace

std::string emit_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "n,m,variant,ordering,policy,trials,successes,success_rate,mean_accuracy,min_accuracy\n";
    for (const SweepRow& row : rows) {
        out += row_fields(row, ',');
        out += '\n';
    }
    return out;
}

std::string emit_gnuplot(const std::vector<SweepRow>& rows) {
    int max_variant = 0;
    for (const SweepRow& row : rows) max_variant = std::max(max_variant, row.variant);
    std::string out;
    bool first_block = true;
    for (int v = 1; v <= max_variant; ++v) {
        std::string block;
        for (const SweepRow& row : rows) {
            if (row.variant != v) continue;
            if (block.empty())
                block = "# n m variant ordering policy trials successes"
                        " success_rate mean_accuracy min_accuracy\n";
            block += row_fields(row, ' ');
            block += '\n';
        }
        if (block.empty()) continue;
        if (!first_block) out += '\n';
        out += block;
        first_block = false;
    }
    return out;
}

} // namespace sbe
