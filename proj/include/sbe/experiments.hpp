#ifndef SBE_EXPERIMENTS_HPP
#define SBE_EXPERIMENTS_HPP

#include "sbe/search.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sbe {

// One success-rate/accuracy sweep over random graphs: for every edge count
// in m_values, graphs_per_m seeded graphs are generated, the exact
// independence number is computed once per graph, and every variant runs
// its descent on that same graph.
struct SweepConfig {
    int n = 0;
    std::vector<std::int64_t> m_values; // ascending
    int graphs_per_m = 1;
    std::vector<SearchConfig> variants;
    std::uint64_t master_seed = 1;
    int smoothing_window = 1; // odd; 1 = no smoothing
    int thread_count = 1;
};

struct SweepRow {
    int n = 0;
    std::int64_t m = 0;
    int variant = 0; // 1-based position in SweepConfig::variants
    OrderingMode ordering = OrderingMode::Arbitrary;
    BranchPolicy policy = BranchPolicy::MostStable;
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    double mean_accuracy = 0.0;
    double min_accuracy = 0.0;
    // Informational, not part of the CSV: per-row sums for ratio-of-sums
    // style aggregation.
    std::int64_t found_total = 0;
    std::int64_t alpha_total = 0;
};

// Per-variant shape statistics of the success-rate series over m.
struct SeriesStats {
    int variant = 0;
    OrderingMode ordering = OrderingMode::Arbitrary;
    BranchPolicy policy = BranchPolicy::MostStable;
    bool extrema_valid = false; // series long enough for the window
    int local_maxima = 0;
    int local_minima = 0;
    double min_success_rate = 0.0;
    std::int64_t argmin_m = 0; // smallest m attaining the minimum
};

struct ExtremaCounts {
    int maxima = 0;
    int minima = 0;
};

// Rows in (m, variant) order; byte-identical output for equal configs
// regardless of thread_count.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// Centered moving average of odd width, truncated at the edges.
std::vector<double> smooth_series(const std::vector<double>& series, int window);

// Interior strict local extrema of the smoothed series, with equal-value
// plateaus collapsed to single points first.
ExtremaCounts count_local_extrema(const std::vector<double>& series, int window);

std::vector<SeriesStats> collect_series_stats(const std::vector<SweepRow>& rows, int window);

// Exact CSV contract:
//   n,m,variant,ordering,policy,trials,successes,success_rate,mean_accuracy,min_accuracy
// with rates printed to 6 decimals (round-half-even), LF endings.
std::string emit_csv(const std::vector<SweepRow>& rows);

// Same columns, space-separated, one block per variant separated by a blank
// line; gnuplot-friendly.
std::string emit_gnuplot(const std::vector<SweepRow>& rows);

// "0.850000"-style fixed 6-decimal formatting used by the CSV.
std::string format_rate(double x);

std::string variant_token(const SearchConfig& cfg); // e.g. "descending/most-stable"

} // namespace sbe

#endif
