#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "burstlab/local_variation.hpp"

namespace burstlab {

/// Half-open popularity bins [edges[k], edges[k+1]). Edges must be strictly
/// increasing with at least two entries (one bin).
struct PopularityBinning {
    std::vector<std::uint64_t> edges;

    // Logarithmic decades 1-9, 10-99, ... wide enough to cover max_p.
    static PopularityBinning decades(std::uint64_t max_p);

    void validate() const;
    std::size_t bin_count() const { return edges.empty() ? 0 : edges.size() - 1; }
    // Bin index for popularity p, or nullopt when p falls outside all bins.
    std::optional<std::size_t> bin_of(std::uint64_t p) const;
};

/// Input row for density aggregation: one train's popularity and its lv,
/// when defined (trains with fewer than 3 spikes carry nullopt).
struct TrainLv {
    std::uint64_t popularity = 0;
    std::optional<double> lv;
};

/// Normalized P(lv) histogram for one popularity bin. Cells are uniform on
/// [0, 3]; density integrates to 1 whenever n_trains > 0. Trains with
/// undefined lv are not histogrammed but reported in excluded, so sparse
/// bins cannot shed small trains invisibly.
struct LvDensity {
    std::size_t bin = 0;
    std::uint64_t pop_lo = 0;
    std::uint64_t pop_hi = 0;
    std::size_t lv_bins = 0;
    std::vector<double> density;   // lv_bins cells
    std::size_t n_trains = 0;      // trains with defined lv
    std::size_t excluded = 0;      // trains with undefined lv
    double mean_lv = 0.0;          // 0 when n_trains == 0
    double peak_lv = 0.0;          // midpoint of the modal cell (lowest on ties)

    double cell_width() const { return 3.0 / static_cast<double>(lv_bins); }
    double cell_lo(std::size_t c) const { return cell_width() * static_cast<double>(c); }
};

// Exact integer histogram of lv values over lv_bins uniform cells on [0, 3].
// Partial histograms over a partition of the input merge by element-wise
// addition into exactly the full histogram.
std::vector<std::uint64_t> histogram_counts(std::span<const double> lv_values,
                                            std::size_t lv_bins);

// One LvDensity per popularity bin that received at least one train.
// Output order follows bin index. lv_bins must be >= 3.
std::vector<LvDensity> density(std::span<const TrainLv> results,
                               const PopularityBinning& binning, std::size_t lv_bins);

}  // namespace burstlab
