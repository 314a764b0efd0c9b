#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace slc {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(mix64(mix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

/// Log-uniform samples in [lo, hi]. Doubles are built directly from the
/// engine's bits so the stream does not depend on the standard library's
/// distribution implementations.
class LogUniformSampler {
public:
    LogUniformSampler(std::uint64_t seed, double lo, double hi)
        : engine_(seed), log_lo_(std::log(lo)), log_span_(std::log(hi) - std::log(lo)) {}

    double next() {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return std::exp(log_lo_ + u * log_span_);
    }

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double log_lo_;
    double log_span_;
};

}  // namespace slc
