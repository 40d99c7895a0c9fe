#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "burstlab/spike_train.hpp"

namespace burstlab {

/// Union of all spike times across the corpus, deduplicated to one spike per
/// second. Serves as the sampling pool for randomized surrogate trains.
struct MergedTrain {
    std::vector<std::int64_t> times;  // strictly increasing

    std::size_t size() const { return times.size(); }
};

MergedTrain merge(std::span<const SpikeTrain> trains);

/// Draws p distinct spike times uniformly without replacement from the
/// merged train and returns them sorted ascending, tagged "surrogate:<p>".
///
/// The procedure is pinned so identical (merged, p, seed) triples give
/// identical trains everywhere: an index array 0..M-1 undergoes a partial
/// Fisher-Yates pass driven by mt19937_64(seed) with unbiased bounded draws
/// (see rng.hpp), and the first p entries are the sample.
///
/// Throws InfeasibleSampleError when p exceeds the merged size.
SpikeTrain sample_surrogate(const MergedTrain& merged, std::size_t p, std::uint64_t seed);

/// Seed for the (p, replica) cell of an ensemble:
///
///   seed = splitmix64(splitmix64(splitmix64(master_seed) ^ p) ^ replica)
///
/// Derivation depends only on the cell coordinates, so ensembles are
/// reproducible no matter which order (or how many threads) the cells run in.
std::uint64_t derive_surrogate_seed(std::uint64_t master_seed, std::uint64_t p,
                                    std::uint64_t replica);

/// replicas surrogates per entry of p_list, tagged "surrogate:<p>:<replica>".
/// Output order is p_list order, replica-minor.
std::vector<SpikeTrain> surrogate_ensemble(const MergedTrain& merged,
                                           std::span<const std::size_t> p_list,
                                           std::size_t replicas, std::uint64_t master_seed,
                                           unsigned threads = 1);

}  // namespace burstlab
