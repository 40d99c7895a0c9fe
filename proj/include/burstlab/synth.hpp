#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "burstlab/spike_train.hpp"

namespace burstlab {

enum class GeneratorKind { poisson, gamma, alternating, saturated };

GeneratorKind parse_generator_kind(const std::string& token);
const char* to_string(GeneratorKind k);

/// Recipe for a synthetic train. Exactly the fields a kind uses may be set:
///
///   poisson      rate, one of n_spikes | duration
///   gamma        rate, shape, one of n_spikes | duration
///   alternating  isi_pair, one of n_spikes | duration
///   saturated    duration
///
/// validate() throws ConfigError on missing, extraneous, or non-positive
/// parameters.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::poisson;
    std::optional<double> rate;                                     // mean events/second
    std::optional<double> shape;                                    // Gamma shape
    std::optional<std::pair<std::int64_t, std::int64_t>> isi_pair;  // alternating gaps
    std::optional<std::uint64_t> n_spikes;
    std::optional<std::int64_t> duration;  // seconds from t = 0
    std::uint64_t seed = 1;
    std::string tag;  // defaults to "synth:<kind>"

    void validate() const;
};

/// Generated train plus quantization accounting. Continuous processes are
/// accumulated in real time and floored to whole seconds; spikes landing in
/// an already-used second are dropped, exactly like ingestion dedup. When
/// more than half of the proposed spikes collapse this way the rate is too
/// high for 1-second resolution and quantization_warning() turns on.
struct SynthResult {
    SpikeTrain train;
    std::uint64_t proposed = 0;
    std::uint64_t collapsed = 0;

    bool quantization_warning() const {
        return proposed > 0 && 2 * collapsed > proposed;
    }
};

SynthResult generate(const GeneratorSpec& spec);

}  // namespace burstlab
