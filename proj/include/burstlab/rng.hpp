#pragma once

#include <cstdint>
#include <random>

namespace burstlab {

// SplitMix64 finalizer (Steele, Lea, Vigna; the java.util.SplittableRandom
// mixer). Used both to derive per-task seeds and to decorrelate user seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seeded random source with a pinned identity.
///
/// The engine is std::mt19937_64, whose output sequence for a given seed is
/// fixed by the C++ standard, so streams are identical across platforms and
/// compilers. All derived draws below are implemented here rather than with
/// std::*_distribution (whose streams are library-specific):
///
///   unit()          53-bit mantissa: (x >> 11) * 2^-53, uniform on [0, 1)
///   below(n)        unbiased bounded draw by rejection on the top range
///   exponential(m)  inverse CDF: -m * log(1 - unit())
///   normal()        Box-Muller on two uniforms; second value cached
///   gamma(k, s)     Marsaglia-Tsang squeeze for k >= 1; for k < 1 the
///                   boost via gamma(k+1) * pow(U, 1/k)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

    double exponential(double mean);
    double normal();
    double gamma(double shape, double scale);

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace burstlab
