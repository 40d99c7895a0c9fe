#include "burstlab/local_variation.hpp"

#include <string>

#include "burstlab/errors.hpp"
#include "burstlab/numeric.hpp"

namespace burstlab {

namespace {

double pair_term(std::int64_t a, std::int64_t b) {
    const double num = static_cast<double>(b) - static_cast<double>(a);
    const double den = static_cast<double>(b) + static_cast<double>(a);
    const double r = num / den;
    return r * r;
}

void check_intervals(const IsiSequence& intervals) {
    for (std::size_t i = 0; i < intervals.intervals.size(); ++i) {
        if (intervals.intervals[i] <= 0) {
            throw InvariantViolationError("interval " + std::to_string(i) +
                                          " is non-positive: " +
                                          std::to_string(intervals.intervals[i]));
        }
    }
}

}  // namespace

const char* to_string(LvClass c) {
    switch (c) {
        case LvClass::regular: return "regular";
        case LvClass::poisson_like: return "poisson_like";
        case LvClass::bursty: return "bursty";
    }
    return "?";
}

LvResult local_variation(const IsiSequence& intervals) {
    const auto& d = intervals.intervals;
    if (d.size() < 2) {
        throw InsufficientSpikesError("(intervals)", d.size() + 1);
    }
    check_intervals(intervals);

    KahanSum sum;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        sum.add(pair_term(d[i], d[i + 1]));
    }
    const std::size_t terms = d.size() - 1;
    LvResult out;
    out.terms = terms;
    out.n_spikes = d.size() + 1;
    out.lv = 3.0 / static_cast<double>(terms) * sum.value();
    return out;
}

std::vector<double> lv_terms(const IsiSequence& intervals) {
    const auto& d = intervals.intervals;
    if (d.size() < 2) {
        throw InsufficientSpikesError("(intervals)", d.size() + 1);
    }
    check_intervals(intervals);
    std::vector<double> out;
    out.reserve(d.size() - 1);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        out.push_back(pair_term(d[i], d[i + 1]));
    }
    return out;
}

std::optional<LvResult> try_local_variation(const SpikeTrain& train) {
    if (train.popularity() < 3) return std::nullopt;
    return local_variation(isi(train));
}

LvClass classify(double lv, double low_cut, double high_cut) {
    if (!(lv >= 0.0 && lv < 3.0)) {
        throw InvariantViolationError("lv value " + std::to_string(lv) +
                                      " outside [0, 3)");
    }
    if (!(low_cut <= high_cut)) {
        throw ConfigError("classification cuts are inverted");
    }
    if (lv < low_cut) return LvClass::regular;
    if (lv <= high_cut) return LvClass::poisson_like;
    return LvClass::bursty;
}

}  // namespace burstlab
