#include "burstlab/attention.hpp"

#include <algorithm>
#include <string>

#include "burstlab/errors.hpp"
#include "burstlab/local_variation.hpp"

namespace burstlab {

namespace {

void check_range(std::int64_t range_start, std::int64_t range_end, std::int64_t window_length) {
    if (range_start >= range_end) {
        throw ConfigError("analysis range [" + std::to_string(range_start) + ", " +
                          std::to_string(range_end) + ") is empty or inverted");
    }
    if (window_length < 10) {
        throw ConfigError("window length must be at least 10 seconds");
    }
}

}  // namespace

LvSeries lv_series(const SpikeTrain& train, std::int64_t range_start, std::int64_t range_end,
                   std::int64_t window_length) {
    check_range(range_start, range_end, window_length);

    LvSeries series;
    series.tag = train.tag();
    series.window_length = window_length;
    series.range_start = range_start;
    series.range_end = range_end;

    for (std::int64_t w0 = range_start; w0 < range_end; w0 += window_length) {
        const std::int64_t w1 = std::min(w0 + window_length, range_end);
        WindowStat stat;
        stat.start = w0;
        stat.end = w1;
        const auto piece = slice(train, w0, w1);
        stat.n_spikes = piece.popularity();
        if (const auto r = try_local_variation(piece)) {
            stat.lv = r->lv;
        }
        series.windows.push_back(std::move(stat));
    }
    return series;
}

std::vector<std::pair<std::int64_t, std::size_t>> window_counts(const SpikeTrain& train,
                                                                std::int64_t range_start,
                                                                std::int64_t range_end,
                                                                std::int64_t window_length) {
    check_range(range_start, range_end, window_length);
    std::vector<std::pair<std::int64_t, std::size_t>> out;
    for (std::int64_t w0 = range_start; w0 < range_end; w0 += window_length) {
        const std::int64_t w1 = std::min(w0 + window_length, range_end);
        out.emplace_back(w0, count_in_window(train, w0, w1));
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::size_t>> summed_window_counts(
    std::span<const SpikeTrain> trains, std::int64_t range_start, std::int64_t range_end,
    std::int64_t window_length) {
    check_range(range_start, range_end, window_length);
    std::vector<std::pair<std::int64_t, std::size_t>> out;
    for (std::int64_t w0 = range_start; w0 < range_end; w0 += window_length) {
        out.emplace_back(w0, 0);
    }
    for (const auto& train : trains) {
        std::size_t i = 0;
        for (std::int64_t w0 = range_start; w0 < range_end; w0 += window_length, ++i) {
            const std::int64_t w1 = std::min(w0 + window_length, range_end);
            out[i].second += count_in_window(train, w0, w1);
        }
    }
    return out;
}

std::vector<AttentionEpisode> detect_episodes(const LvSeries& series, double threshold,
                                              std::size_t min_windows) {
    if (min_windows < 1) {
        throw ConfigError("min_windows must be at least 1");
    }
    std::vector<AttentionEpisode> episodes;
    const auto& w = series.windows;
    std::size_t i = 0;
    while (i < w.size()) {
        if (!w[i].lv || !(*w[i].lv < threshold)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < w.size() && w[j].lv && *w[j].lv < threshold) ++j;
        if (j - i >= min_windows) {
            AttentionEpisode ep;
            ep.tag = series.tag;
            ep.start = w[i].start;
            ep.end = w[j - 1].end;
            ep.min_lv = *w[i].lv;
            ep.peak_count = 0;
            for (std::size_t k = i; k < j; ++k) {
                ep.min_lv = std::min(ep.min_lv, *w[k].lv);
                ep.peak_count = std::max(ep.peak_count, w[k].n_spikes);
            }
            episodes.push_back(std::move(ep));
        }
        i = j;
    }
    return episodes;
}

}  // namespace burstlab
