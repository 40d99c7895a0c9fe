#include "burstlab/distribution.hpp"

#include <algorithm>
#include <string>

#include "burstlab/errors.hpp"
#include "burstlab/numeric.hpp"

namespace burstlab {

PopularityBinning PopularityBinning::decades(std::uint64_t max_p) {
    PopularityBinning binning;
    std::uint64_t edge = 1;
    binning.edges.push_back(edge);
    while (edge <= max_p && edge <= 1'000'000'000'000ULL) {
        edge *= 10;
        binning.edges.push_back(edge);
    }
    if (binning.edges.size() < 2) binning.edges.push_back(10);
    return binning;
}

void PopularityBinning::validate() const {
    if (edges.size() < 2) {
        throw ConfigError("popularity binning needs at least two edges");
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] <= edges[i - 1]) {
            throw ConfigError("popularity bin edges must be strictly increasing");
        }
    }
}

std::optional<std::size_t> PopularityBinning::bin_of(std::uint64_t p) const {
    if (edges.size() < 2 || p < edges.front() || p >= edges.back()) return std::nullopt;
    const auto it = std::upper_bound(edges.begin(), edges.end(), p);
    return static_cast<std::size_t>(it - edges.begin()) - 1;
}

std::vector<std::uint64_t> histogram_counts(std::span<const double> lv_values,
                                            std::size_t lv_bins) {
    std::vector<std::uint64_t> counts(lv_bins, 0);
    const double width = 3.0 / static_cast<double>(lv_bins);
    for (const double v : lv_values) {
        if (!(v >= 0.0 && v < 3.0)) {
            throw InvariantViolationError("lv value " + std::to_string(v) + " outside [0, 3)");
        }
        auto cell = static_cast<std::size_t>(v / width);
        if (cell >= lv_bins) cell = lv_bins - 1;
        ++counts[cell];
    }
    return counts;
}

std::vector<LvDensity> density(std::span<const TrainLv> results,
                               const PopularityBinning& binning, std::size_t lv_bins) {
    binning.validate();
    if (lv_bins < 3) {
        throw ConfigError("lv_bins must be at least 3");
    }

    const std::size_t n_bins = binning.bin_count();
    std::vector<std::vector<double>> values(n_bins);
    std::vector<std::size_t> excluded(n_bins, 0);
    std::vector<bool> touched(n_bins, false);

    for (const auto& r : results) {
        const auto bin = binning.bin_of(r.popularity);
        if (!bin) continue;
        touched[*bin] = true;
        if (r.lv) {
            values[*bin].push_back(*r.lv);
        } else {
            ++excluded[*bin];
        }
    }

    std::vector<LvDensity> out;
    for (std::size_t b = 0; b < n_bins; ++b) {
        if (!touched[b]) continue;
        LvDensity d;
        d.bin = b;
        d.pop_lo = binning.edges[b];
        d.pop_hi = binning.edges[b + 1];
        d.lv_bins = lv_bins;
        d.n_trains = values[b].size();
        d.excluded = excluded[b];
        d.density.assign(lv_bins, 0.0);

        if (d.n_trains > 0) {
            // Values are summed in sorted order so the result is independent
            // of input permutation.
            std::sort(values[b].begin(), values[b].end());
            const auto counts = histogram_counts(values[b], lv_bins);
            const double width = d.cell_width();
            const double norm = static_cast<double>(d.n_trains) * width;
            std::size_t modal = 0;
            for (std::size_t c = 0; c < lv_bins; ++c) {
                d.density[c] = static_cast<double>(counts[c]) / norm;
                if (counts[c] > counts[modal]) modal = c;
            }
            KahanSum mean;
            for (const double v : values[b]) mean.add(v);
            d.mean_lv = mean.value() / static_cast<double>(d.n_trains);
            d.peak_lv = d.cell_lo(modal) + width / 2.0;
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace burstlab
