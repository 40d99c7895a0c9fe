#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "burstlab/spike_train.hpp"

namespace burstlab {

/// One tumbling window of an lv(t) series. lv is present iff the window
/// holds at least 3 spikes; quiet windows stay undefined rather than
/// pretending to be regular.
struct WindowStat {
    std::int64_t start = 0;
    std::int64_t end = 0;  // start + window_length, truncated at the range end
    std::size_t n_spikes = 0;
    std::optional<double> lv;
};

/// Windowed local variation of one train. Windows tile [range_start,
/// range_end) without overlap, aligned to range_start.
struct LvSeries {
    std::string tag;
    std::int64_t window_length = 3600;
    std::int64_t range_start = 0;
    std::int64_t range_end = 0;
    std::vector<WindowStat> windows;
};

/// Maximal run of >= min_windows consecutive windows whose lv stayed below
/// the decay threshold: a stretch of saturated, regularized activity.
struct AttentionEpisode {
    std::string tag;
    std::int64_t start = 0;
    std::int64_t end = 0;
    double min_lv = 0.0;
    std::size_t peak_count = 0;  // max spikes in one window of the episode
};

// Per-window slice of the train plus the whole-train lv formula applied to
// each slice. window_length must be >= 10 and the range non-empty
// (ConfigError otherwise).
LvSeries lv_series(const SpikeTrain& train, std::int64_t range_start, std::int64_t range_end,
                   std::int64_t window_length = 3600);

// Spike counts per window for one train.
std::vector<std::pair<std::int64_t, std::size_t>> window_counts(const SpikeTrain& train,
                                                                std::int64_t range_start,
                                                                std::int64_t range_end,
                                                                std::int64_t window_length);

// Union-count mode: per-window counts summed across tags, one entry per
// window. Spikes are not deduplicated across tags.
std::vector<std::pair<std::int64_t, std::size_t>> summed_window_counts(
    std::span<const SpikeTrain> trains, std::int64_t range_start, std::int64_t range_end,
    std::int64_t window_length);

// Runs of defined lv < threshold, at least min_windows long; undefined
// windows break runs. min_windows must be >= 1.
std::vector<AttentionEpisode> detect_episodes(const LvSeries& series, double threshold = 0.3,
                                              std::size_t min_windows = 2);

}  // namespace burstlab
