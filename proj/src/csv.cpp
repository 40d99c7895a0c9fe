#include "burstlab/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "burstlab/errors.hpp"
#include "burstlab/numeric.hpp"

namespace burstlab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_trains_csv(std::ostream& out, std::span<const SpikeTrain> trains) {
    std::vector<const SpikeTrain*> order;
    order.reserve(trains.size());
    for (const auto& t : trains) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const SpikeTrain* a, const SpikeTrain* b) { return a->tag() < b->tag(); });

    out << "tag,timestamp\n";
    for (const auto* t : order) {
        for (const auto ts : t->times()) {
            out << t->tag() << ',' << ts << '\n';
        }
    }
}

void write_rejects_csv(std::ostream& out, std::span<const RejectedLine> rejects) {
    out << "line,reason\n";
    for (const auto& r : rejects) {
        out << r.line_no << ',' << r.reason << '\n';
    }
}

void write_lv_csv(std::ostream& out, std::span<const LvRow> rows) {
    out << "tag,popularity,n_spikes,lv,class\n";
    for (const auto& r : rows) {
        out << r.tag << ',' << r.popularity << ',' << r.n_spikes << ',';
        if (r.lv) out << format_double(*r.lv);
        out << ',' << r.lv_class << '\n';
    }
}

void write_density_csv(std::ostream& out, std::span<const LvDensity> densities) {
    out << "pop_bin_lo,pop_bin_hi,lv_cell_lo,lv_cell_hi,density,n_trains,excluded\n";
    for (const auto& d : densities) {
        for (std::size_t c = 0; c < d.lv_bins; ++c) {
            out << d.pop_lo << ',' << d.pop_hi << ',' << format_double(d.cell_lo(c)) << ','
                << format_double(d.cell_lo(c) + d.cell_width()) << ','
                << format_double(d.density[c]) << ',' << d.n_trains << ',' << d.excluded << '\n';
        }
    }
}

void write_series_csv(std::ostream& out, std::span<const LvSeries> series) {
    out << "tag,window_start,n_spikes,lv\n";
    for (const auto& s : series) {
        for (const auto& w : s.windows) {
            out << s.tag << ',' << w.start << ',' << w.n_spikes << ',';
            if (w.lv) out << format_double(*w.lv);
            out << '\n';
        }
    }
}

void write_episodes_csv(std::ostream& out, std::span<const AttentionEpisode> episodes) {
    out << "tag,start,end,min_lv,peak_count\n";
    for (const auto& e : episodes) {
        out << e.tag << ',' << e.start << ',' << e.end << ',' << format_double(e.min_lv) << ','
            << e.peak_count << '\n';
    }
}

void write_counts_csv(std::ostream& out,
                      std::span<const std::pair<std::int64_t, std::size_t>> counts) {
    out << "window_start,n_spikes\n";
    for (const auto& [start, n] : counts) {
        out << start << ',' << n << '\n';
    }
}

std::uint64_t fnv1a64_of_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot read input file: " + path.string());
    }
    Fnv1a64 digest;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        digest.update(buf, static_cast<std::size_t>(in.gcount()));
    }
    return digest.digest();
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace burstlab
