#include "burstlab/spike_train.hpp"

#include <algorithm>

#include "burstlab/errors.hpp"

namespace burstlab {

namespace {

void check_times(const std::string& tag, const std::vector<std::int64_t>& times) {
    if (!times.empty() && times.front() < 0) {
        throw InvariantViolationError("train '" + tag + "' has a negative spike time");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] <= times[i - 1]) {
            throw InvariantViolationError("train '" + tag +
                                          "' spike times are not strictly increasing at index " +
                                          std::to_string(i));
        }
    }
}

}  // namespace

SpikeTrain::SpikeTrain(std::string tag, std::vector<std::int64_t> times)
    : tag_(std::move(tag)), times_(std::move(times)), raw_count_(times_.size()) {
    check_times(tag_, times_);
}

SpikeTrain::SpikeTrain(std::string tag, std::vector<std::int64_t> times, std::uint64_t raw_count)
    : tag_(std::move(tag)), times_(std::move(times)), raw_count_(raw_count) {
    check_times(tag_, times_);
    if (raw_count_ < times_.size()) {
        throw InvariantViolationError("train '" + tag_ + "' raw_count below spike count");
    }
}

SpikeTrain SpikeTrain::from_events(std::string tag, std::vector<std::int64_t> seconds) {
    const std::uint64_t raw = seconds.size();
    std::sort(seconds.begin(), seconds.end());
    seconds.erase(std::unique(seconds.begin(), seconds.end()), seconds.end());
    return SpikeTrain(std::move(tag), std::move(seconds), raw);
}

IsiSequence isi(const SpikeTrain& train) {
    const auto& t = train.times();
    if (t.size() < 2) {
        throw InsufficientSpikesError(train.tag(), t.size(), 2);
    }
    IsiSequence out;
    out.intervals.resize(t.size() - 1);
    for (std::size_t i = 1; i < t.size(); ++i) {
        out.intervals[i - 1] = t[i] - t[i - 1];
    }
    return out;
}

SpikeTrain slice(const SpikeTrain& train, std::int64_t start, std::int64_t end) {
    if (start >= end) {
        throw ConfigError("window [" + std::to_string(start) + ", " + std::to_string(end) +
                          ") is empty or inverted");
    }
    const auto& t = train.times();
    auto lo = std::lower_bound(t.begin(), t.end(), start);
    auto hi = std::lower_bound(lo, t.end(), end);
    std::vector<std::int64_t> times(lo, hi);
    const auto n = times.size();
    return SpikeTrain(train.tag(), std::move(times), n);
}

std::size_t count_in_window(const SpikeTrain& train, std::int64_t start, std::int64_t end) {
    if (start >= end) return 0;
    const auto& t = train.times();
    auto lo = std::lower_bound(t.begin(), t.end(), start);
    auto hi = std::lower_bound(lo, t.end(), end);
    return static_cast<std::size_t>(hi - lo);
}

}  // namespace burstlab
