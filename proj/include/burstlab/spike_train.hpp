#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burstlab {

/// One tag's spike train: strictly increasing integer-second spike times.
///
/// Trains are immutable after construction; every analysis produces a new
/// value, so trains can be shared freely across threads. The number of
/// spikes is the train's popularity. raw_count keeps the pre-dedup event
/// count for reporting; it is never used in the statistics.
class SpikeTrain {
public:
    SpikeTrain() = default;

    // Throws InvariantViolationError unless times are strictly increasing,
    // non-negative, and raw_count >= times.size().
    SpikeTrain(std::string tag, std::vector<std::int64_t> times);
    SpikeTrain(std::string tag, std::vector<std::int64_t> times, std::uint64_t raw_count);

    // Sorts and deduplicates unordered event seconds; raw_count is the
    // pre-dedup count.
    static SpikeTrain from_events(std::string tag, std::vector<std::int64_t> seconds);

    const std::string& tag() const { return tag_; }
    const std::vector<std::int64_t>& times() const { return times_; }
    std::size_t popularity() const { return times_.size(); }
    std::uint64_t raw_count() const { return raw_count_; }
    bool empty() const { return times_.empty(); }

private:
    std::string tag_;
    std::vector<std::int64_t> times_;
    std::uint64_t raw_count_ = 0;
};

/// Inter-spike intervals of one train, every entry >= 1.
struct IsiSequence {
    std::vector<std::int64_t> intervals;

    std::size_t size() const { return intervals.size(); }
};

// Consecutive differences of the spike times; requires >= 2 spikes
// (throws InsufficientSpikesError naming the tag).
IsiSequence isi(const SpikeTrain& train);

// Sub-train with spikes in [start, end); throws ConfigError if start >= end.
SpikeTrain slice(const SpikeTrain& train, std::int64_t start, std::int64_t end);

// Number of spikes in [start, end) without materializing the sub-train.
std::size_t count_in_window(const SpikeTrain& train, std::int64_t start, std::int64_t end);

}  // namespace burstlab
