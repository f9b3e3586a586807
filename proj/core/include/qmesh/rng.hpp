// rng.hpp
// Deterministic random number generation. Every stochastic operation in the
// toolkit takes either an explicit seed or an Rng&; there is no global RNG.
//
// Substream scheme: a run owns one master seed. Component seeds are derived
// as substream_seed(master, name) where name is a stable label such as
// "train-init", "split", "measure-Z" or "trajectory-17". Derivation hashes
// the label (FNV-1a 64) into the master seed and mixes with SplitMix64, so
// re-ordering component calls never changes any component's stream.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qmesh {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits; identical across platforms for
    // a given seed, unlike std::uniform_real_distribution.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, bound). bound must be >= 1.
    int next_int(int bound) {
        int v = static_cast<int>(next_double() * static_cast<double>(bound));
        return v >= bound ? bound - 1 : v;
    }

    bool bernoulli(double p) { return next_double() < p; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view text);
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t master, std::string_view name);

} // namespace qmesh
