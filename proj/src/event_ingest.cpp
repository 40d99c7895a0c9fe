#include "burstlab/event_ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

#include "burstlab/errors.hpp"

namespace burstlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_timestamp(std::string_view field, std::int64_t& out) {
    field = trim(field);
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

struct CsvLayout {
    std::size_t timestamp_col = 0;
    std::size_t tag_col = 1;
};

CsvLayout parse_csv_header(std::string_view line) {
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
        throw DataError("CSV header must name the timestamp and tag columns");
    }
    const auto first = trim(line.substr(0, comma));
    const auto second = trim(line.substr(comma + 1));
    if (first == "timestamp" && second == "tag") return {0, 1};
    if (first == "tag" && second == "timestamp") return {1, 0};
    throw DataError("CSV header must be 'timestamp,tag' or 'tag,timestamp', got '" +
                    std::string(trim(line)) + "'");
}

// The timestamp is always the integer field, so the split keeps the tag side
// whole: timestamp-first lines split at the first comma, tag-first lines at
// the last. Tags containing commas survive a round trip this way.
void parse_csv_line(const std::string& line, std::size_t line_no, const CsvLayout& layout,
                    ParseResult& out) {
    std::string_view view = trim(line);
    if (view.empty()) {
        out.rejects.push_back({line_no, "empty line"});
        return;
    }
    const auto comma = layout.timestamp_col == 0 ? view.find(',') : view.rfind(',');
    if (comma == std::string_view::npos) {
        out.rejects.push_back({line_no, "expected 2 comma-separated fields"});
        return;
    }
    const std::string_view left = view.substr(0, comma);
    const std::string_view right = view.substr(comma + 1);
    const std::string_view ts_field = layout.timestamp_col == 0 ? left : right;
    const std::string_view tag_field = layout.timestamp_col == 0 ? right : left;

    std::int64_t ts = 0;
    if (!parse_timestamp(ts_field, ts)) {
        out.rejects.push_back({line_no, "non-integer timestamp"});
        return;
    }
    if (ts < 0) {
        out.rejects.push_back({line_no, "negative timestamp"});
        return;
    }
    const auto tag = trim(tag_field);
    if (tag.empty()) {
        out.rejects.push_back({line_no, "empty tag"});
        return;
    }
    out.records.push_back({ts, std::string(tag)});
}

void parse_jsonl_line(const std::string& line, std::size_t line_no, ParseResult& out) {
    const auto view = trim(line);
    if (view.empty()) {
        out.rejects.push_back({line_no, "empty line"});
        return;
    }
    const auto doc = nlohmann::json::parse(view, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        out.rejects.push_back({line_no, "invalid JSON object"});
        return;
    }
    const auto t_it = doc.find("t");
    const auto tag_it = doc.find("tag");
    if (t_it == doc.end() || tag_it == doc.end()) {
        out.rejects.push_back({line_no, "missing 't' or 'tag' field"});
        return;
    }
    if (!t_it->is_number_integer() && !t_it->is_number_unsigned()) {
        out.rejects.push_back({line_no, "non-integer timestamp"});
        return;
    }
    const auto ts = t_it->get<std::int64_t>();
    if (ts < 0) {
        out.rejects.push_back({line_no, "negative timestamp"});
        return;
    }
    if (!tag_it->is_string()) {
        out.rejects.push_back({line_no, "tag is not a string"});
        return;
    }
    const auto tag = trim(tag_it->get_ref<const std::string&>());
    if (tag.empty()) {
        out.rejects.push_back({line_no, "empty tag"});
        return;
    }
    if (tag.find('\n') != std::string_view::npos || tag.find('\r') != std::string_view::npos) {
        out.rejects.push_back({line_no, "tag contains a line break"});
        return;
    }
    out.records.push_back({ts, std::string(tag)});
}

}  // namespace

InputFormat parse_format(const std::string& token) {
    if (token == "csv") return InputFormat::csv;
    if (token == "jsonl") return InputFormat::jsonl;
    throw ConfigError("unknown input format '" + token + "' (expected csv or jsonl)");
}

ParseResult parse_events(std::istream& source, InputFormat format) {
    if (!source) {
        throw DataError("input stream is not readable");
    }
    ParseResult out;
    std::string line;
    std::size_t line_no = 0;

    CsvLayout layout;
    if (format == InputFormat::csv) {
        if (!std::getline(source, line)) {
            throw DataError("CSV input is empty; expected a header line");
        }
        ++line_no;
        layout = parse_csv_header(line);
    }
    out.lines_read = line_no;

    while (std::getline(source, line)) {
        ++line_no;
        if (format == InputFormat::csv) {
            parse_csv_line(line, line_no, layout, out);
        } else {
            parse_jsonl_line(line, line_no, out);
        }
    }
    if (source.bad()) {
        throw DataError("I/O failure while reading input");
    }
    out.lines_read = line_no;
    return out;
}

Corpus build_trains(const std::vector<EventRecord>& events, std::optional<TimeRange> range) {
    std::unordered_map<std::string, std::vector<std::int64_t>> by_tag;
    std::uint64_t in_range = 0;
    for (const auto& ev : events) {
        if (range && !range->contains(ev.timestamp)) continue;
        ++in_range;
        by_tag[ev.tag].push_back(ev.timestamp);
    }

    Corpus corpus;
    corpus.stats.total_events = events.size();
    corpus.stats.events_in_range = in_range;
    corpus.stats.unique_tags = by_tag.size();

    std::uint64_t spikes_total = 0;
    for (auto& [tag, seconds] : by_tag) {
        auto train = SpikeTrain::from_events(tag, std::move(seconds));
        spikes_total += train.popularity();
        corpus.trains.emplace(tag, std::move(train));
    }
    corpus.stats.duplicates_collapsed = in_range - spikes_total;
    return corpus;
}

}  // namespace burstlab
