#include "burstlab/synth.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "burstlab/errors.hpp"
#include "burstlab/rng.hpp"

namespace burstlab {

GeneratorKind parse_generator_kind(const std::string& token) {
    if (token == "poisson") return GeneratorKind::poisson;
    if (token == "gamma") return GeneratorKind::gamma;
    if (token == "alternating") return GeneratorKind::alternating;
    if (token == "saturated") return GeneratorKind::saturated;
    throw ConfigError("unknown generator kind '" + token + "'");
}

const char* to_string(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::poisson: return "poisson";
        case GeneratorKind::gamma: return "gamma";
        case GeneratorKind::alternating: return "alternating";
        case GeneratorKind::saturated: return "saturated";
    }
    return "?";
}

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ConfigError(msg);
}

void require_absent(bool present, const std::string& kind, const std::string& field) {
    if (present) {
        throw ConfigError("generator kind '" + kind + "' does not take " + field);
    }
}

}  // namespace

void GeneratorSpec::validate() const {
    const std::string name = to_string(kind);
    const bool sized = n_spikes.has_value() || duration.has_value();
    require(!(n_spikes.has_value() && duration.has_value()),
            "give either n_spikes or duration, not both");
    switch (kind) {
        case GeneratorKind::poisson:
            require(rate.has_value() && *rate > 0.0, "poisson requires a positive rate");
            require_absent(shape.has_value(), name, "shape");
            require_absent(isi_pair.has_value(), name, "isi_pair");
            require(sized, "poisson requires n_spikes or duration");
            break;
        case GeneratorKind::gamma:
            require(rate.has_value() && *rate > 0.0, "gamma requires a positive rate");
            require(shape.has_value() && *shape > 0.0, "gamma requires a positive shape");
            require_absent(isi_pair.has_value(), name, "isi_pair");
            require(sized, "gamma requires n_spikes or duration");
            break;
        case GeneratorKind::alternating:
            require(isi_pair.has_value(), "alternating requires isi_pair");
            require(isi_pair->first >= 1 && isi_pair->second >= 1,
                    "alternating intervals must be >= 1 second");
            require_absent(rate.has_value(), name, "rate");
            require_absent(shape.has_value(), name, "shape");
            require(sized, "alternating requires n_spikes or duration");
            break;
        case GeneratorKind::saturated:
            require(duration.has_value() && *duration > 0, "saturated requires a positive duration");
            require_absent(rate.has_value(), name, "rate");
            require_absent(shape.has_value(), name, "shape");
            require_absent(isi_pair.has_value(), name, "isi_pair");
            require_absent(n_spikes.has_value(), name, "n_spikes");
            break;
    }
    if (duration.has_value()) {
        require(*duration > 0, "duration must be positive");
    }
}

namespace {

constexpr std::uint64_t kProposalCap = 200'000'000;

SynthResult finish(const GeneratorSpec& spec, std::vector<std::int64_t> times,
                   std::uint64_t proposed, std::uint64_t collapsed) {
    std::string tag = spec.tag.empty() ? "synth:" + std::string(to_string(spec.kind)) : spec.tag;
    SynthResult out{SpikeTrain(std::move(tag), std::move(times), proposed), proposed, collapsed};
    return out;
}

SynthResult generate_renewal(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    const double rate = *spec.rate;
    const bool gamma_kind = spec.kind == GeneratorKind::gamma;
    const double shape = gamma_kind ? *spec.shape : 1.0;
    const double scale = gamma_kind ? 1.0 / (shape * rate) : 1.0 / rate;

    std::vector<std::int64_t> times;
    if (spec.n_spikes) times.reserve(*spec.n_spikes);

    double t = 0.0;
    std::int64_t last = -1;
    std::uint64_t proposed = 0;
    std::uint64_t collapsed = 0;
    for (;;) {
        if (spec.n_spikes && times.size() >= *spec.n_spikes) break;
        const double isi_value = gamma_kind ? rng.gamma(shape, scale) : rng.exponential(scale);
        t += isi_value;
        if (spec.duration && t >= static_cast<double>(*spec.duration)) break;
        ++proposed;
        if (proposed > kProposalCap) {
            throw ConfigError("rate too high to reach the target size at 1-second resolution");
        }
        const auto q = static_cast<std::int64_t>(std::floor(t));
        if (q > last) {
            times.push_back(q);
            last = q;
        } else {
            ++collapsed;
        }
    }
    return finish(spec, std::move(times), proposed, collapsed);
}

SynthResult generate_alternating(const GeneratorSpec& spec) {
    const auto [first_gap, second_gap] = *spec.isi_pair;
    std::vector<std::int64_t> times;
    std::int64_t t = 0;
    std::size_t k = 0;
    for (;;) {
        if (spec.n_spikes && times.size() >= *spec.n_spikes) break;
        if (spec.duration && t >= *spec.duration) break;
        times.push_back(t);
        t += (k % 2 == 0) ? first_gap : second_gap;
        ++k;
    }
    const auto n = static_cast<std::uint64_t>(times.size());
    return finish(spec, std::move(times), n, 0);
}

SynthResult generate_saturated(const GeneratorSpec& spec) {
    const auto d = *spec.duration;
    std::vector<std::int64_t> times(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) times[static_cast<std::size_t>(i)] = i;
    return finish(spec, std::move(times), static_cast<std::uint64_t>(d), 0);
}

}  // namespace

SynthResult generate(const GeneratorSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case GeneratorKind::poisson:
        case GeneratorKind::gamma:
            return generate_renewal(spec);
        case GeneratorKind::alternating:
            return generate_alternating(spec);
        case GeneratorKind::saturated:
            return generate_saturated(spec);
    }
    throw ConfigError("unreachable generator kind");
}

}  // namespace burstlab
