#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burstlab/spike_train.hpp"

namespace burstlab {

/// One raw (timestamp, tag) observation. Timestamps are whole seconds since
/// epoch; sub-second inputs are rejected at parse time rather than rounded.
/// Tags keep their bytes as read (surrounding whitespace trimmed); there is
/// no case folding or Unicode normalization.
struct EventRecord {
    std::int64_t timestamp = 0;
    std::string tag;

    bool operator==(const EventRecord&) const = default;
};

enum class InputFormat { csv, jsonl };

// Throws ConfigError for anything other than "csv" or "jsonl".
InputFormat parse_format(const std::string& token);

struct RejectedLine {
    std::size_t line_no = 0;  // 1-based, header included
    std::string reason;
};

struct ParseResult {
    std::vector<EventRecord> records;  // file order
    std::vector<RejectedLine> rejects;
    std::size_t lines_read = 0;
};

// Reads the whole stream. Malformed lines land in rejects with their line
// number; the parse keeps going. Throws DataError when the stream is
// unreadable or the CSV header lacks the timestamp/tag columns.
ParseResult parse_events(std::istream& source, InputFormat format);

struct TimeRange {
    std::int64_t start = 0;  // inclusive
    std::int64_t end = 0;    // exclusive

    bool contains(std::int64_t t) const { return t >= start && t < end; }
};

struct CorpusStats {
    std::uint64_t total_events = 0;
    std::uint64_t unique_tags = 0;
    std::uint64_t events_in_range = 0;
    std::uint64_t duplicates_collapsed = 0;  // events_in_range - sum of popularities
};

struct Corpus {
    std::map<std::string, SpikeTrain> trains;  // keyed by tag, so iteration is sorted
    CorpusStats stats;
};

// Groups events per tag, restricts to the half-open range when given, sorts
// and deduplicates to one spike per second per tag. The output depends only
// on the multiset of events, not their order.
Corpus build_trains(const std::vector<EventRecord>& events,
                    std::optional<TimeRange> range = std::nullopt);

}  // namespace burstlab
