#include "burstlab/null_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "burstlab/errors.hpp"
#include "burstlab/numeric.hpp"
#include "burstlab/rng.hpp"

namespace burstlab {

MergedTrain merge(std::span<const SpikeTrain> trains) {
    MergedTrain merged;
    std::size_t total = 0;
    for (const auto& t : trains) total += t.popularity();
    merged.times.reserve(total);
    for (const auto& t : trains) {
        merged.times.insert(merged.times.end(), t.times().begin(), t.times().end());
    }
    std::sort(merged.times.begin(), merged.times.end());
    merged.times.erase(std::unique(merged.times.begin(), merged.times.end()),
                       merged.times.end());
    return merged;
}

namespace {

std::vector<std::int64_t> sample_times(const MergedTrain& merged, std::size_t p,
                                       std::uint64_t seed) {
    const std::size_t m = merged.size();
    if (p > m) {
        throw InfeasibleSampleError("cannot draw " + std::to_string(p) +
                                    " distinct times from a merged train of " +
                                    std::to_string(m));
    }
    if (m > 0xffffffffULL) {
        throw InfeasibleSampleError("merged train too large for index sampling");
    }
    std::vector<std::uint32_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0u);
    Rng rng(seed);
    for (std::size_t i = 0; i < p; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<std::int64_t> times(p);
    for (std::size_t i = 0; i < p; ++i) {
        times[i] = merged.times[idx[i]];
    }
    std::sort(times.begin(), times.end());
    return times;
}

}  // namespace

SpikeTrain sample_surrogate(const MergedTrain& merged, std::size_t p, std::uint64_t seed) {
    auto times = sample_times(merged, p, seed);
    return SpikeTrain("surrogate:" + std::to_string(p), std::move(times), p);
}

std::uint64_t derive_surrogate_seed(std::uint64_t master_seed, std::uint64_t p,
                                    std::uint64_t replica) {
    return splitmix64(splitmix64(splitmix64(master_seed) ^ p) ^ replica);
}

std::vector<SpikeTrain> surrogate_ensemble(const MergedTrain& merged,
                                           std::span<const std::size_t> p_list,
                                           std::size_t replicas, std::uint64_t master_seed,
                                           unsigned threads) {
    for (const auto p : p_list) {
        if (p > merged.size()) {
            throw InfeasibleSampleError("cannot draw " + std::to_string(p) +
                                        " distinct times from a merged train of " +
                                        std::to_string(merged.size()));
        }
    }
    std::vector<SpikeTrain> out(p_list.size() * replicas);
    parallel_for(out.size(), threads, [&](std::size_t cell) {
        const std::size_t p_index = cell / replicas;
        const std::size_t replica = cell % replicas;
        const std::size_t p = p_list[p_index];
        const auto seed = derive_surrogate_seed(master_seed, p, replica);
        auto times = sample_times(merged, p, seed);
        out[cell] = SpikeTrain("surrogate:" + std::to_string(p) + ":" + std::to_string(replica),
                               std::move(times), p);
    });
    return out;
}

}  // namespace burstlab
