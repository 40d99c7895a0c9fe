#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "burstlab/attention.hpp"
#include "burstlab/distribution.hpp"
#include "burstlab/event_ingest.hpp"
#include "burstlab/spike_train.hpp"

namespace burstlab {

// Fixed 9-significant-digit rendering so output files are byte-stable.
std::string format_double(double v);

// `tag,timestamp`, sorted by tag then time.
void write_trains_csv(std::ostream& out, std::span<const SpikeTrain> trains);

// `line,reason`
void write_rejects_csv(std::ostream& out, std::span<const RejectedLine> rejects);

struct LvRow {
    std::string tag;
    std::uint64_t popularity = 0;
    std::uint64_t n_spikes = 0;
    std::optional<double> lv;  // empty cell when undefined
    std::string lv_class;      // empty when undefined
};

// `tag,popularity,n_spikes,lv,class`
void write_lv_csv(std::ostream& out, std::span<const LvRow> rows);

// `pop_bin_lo,pop_bin_hi,lv_cell_lo,lv_cell_hi,density,n_trains,excluded`
void write_density_csv(std::ostream& out, std::span<const LvDensity> densities);

// `tag,window_start,n_spikes,lv`
void write_series_csv(std::ostream& out, std::span<const LvSeries> series);

// `tag,start,end,min_lv,peak_count`
void write_episodes_csv(std::ostream& out, std::span<const AttentionEpisode> episodes);

// `window_start,n_spikes`
void write_counts_csv(std::ostream& out,
                      std::span<const std::pair<std::int64_t, std::size_t>> counts);

// FNV-1a 64 digest of a file's bytes, for run manifests. Throws DataError
// when the file cannot be read.
std::uint64_t fnv1a64_of_file(const std::filesystem::path& path);

std::string hex64(std::uint64_t v);

}  // namespace burstlab
