#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "burstlab/spike_train.hpp"

namespace burstlab {

/// Local variation of one train.
///
/// For N spikes with intervals d_1..d_{N-1}:
///
///   lv = 3/(N-2) * sum over consecutive pairs (a, b) of ((b - a)/(b + a))^2
///
/// Each summand lies in [0, 1), so lv is always in [0, 3). 0 means a
/// perfectly regular train, values near 1 are Poisson-like, values toward 3
/// are extremely bursty.
struct LvResult {
    double lv = 0.0;
    std::size_t terms = 0;     // N - 2 summands
    std::size_t n_spikes = 0;  // N
};

enum class LvClass { regular, poisson_like, bursty };

const char* to_string(LvClass c);

// Requires >= 2 intervals (N >= 3 spikes); throws InsufficientSpikesError
// otherwise and InvariantViolationError on any non-positive interval.
// Summation is compensated and runs in index order, so the result does not
// depend on how trains are partitioned across threads.
LvResult local_variation(const IsiSequence& intervals);

// Per-pair summands of the formula above, in index order. local_variation
// is exactly 3/(N-2) times their compensated sum.
std::vector<double> lv_terms(const IsiSequence& intervals);

// Whole-train convenience: nullopt when the train has fewer than 3 spikes
// (lv is undefined there, never 0 or a sentinel).
std::optional<LvResult> try_local_variation(const SpikeTrain& train);

// Bands are configuration; defaults split [0,3) at 0.5 and 1.5. Throws
// InvariantViolationError when lv is outside [0,3).
LvClass classify(double lv, double low_cut = 0.5, double high_cut = 1.5);

}  // namespace burstlab
