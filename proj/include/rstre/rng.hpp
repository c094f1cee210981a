#pragma once
// Deterministic RNG plumbing: a splitmix64 mixer, a xoshiro256++ engine
// usable as a std URBG, and labeled seed streams for parallel trials.
//
// Every Monte Carlo trial in this project draws its own child seed from a
// SeedStream, so trials are replayable in isolation and results do not
// depend on thread scheduling.

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string_view>

namespace rstre {

// Finalizing mixer from the splitmix64 generator (Steele et al.).
// Bijective on 64-bit words; used both for seeding and for hashing.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// xoshiro256++ (Blackman & Vigna). State seeded through splitmix64 so that
// any 64-bit seed, including 0, yields a well-mixed nonzero state.
class Xoshiro256pp {
  public:
    using result_type = std::uint64_t;

    explicit Xoshiro256pp(std::uint64_t seed = 0) noexcept {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += kGolden64;
            word = splitmix64_mix(z);
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform integer in [0, bound) by Lemire's rejection method.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        __uint128_t m = static_cast<__uint128_t>((*this)()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                m = static_cast<__uint128_t>((*this)()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return uniform01() < p; }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// Binomial(t, p) draw. Delegates to the standard library's sampler, which
// switches to a rejection method when t*p is large.
inline std::int64_t binomial(Xoshiro256pp& rng, std::int64_t trials, double p) {
    if (trials < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("binomial: bad parameters");
    if (trials == 0 || p == 0.0) return 0;
    if (p == 1.0) return trials;
    std::binomial_distribution<std::int64_t> dist(trials, p);
    return dist(rng);
}

// Labeled, indexed derivation of child seeds from one master seed.
// Children are splitmix64-mixed combinations of (master, label hash, index):
// distinct (label, index) pairs collide only with ~2^-64 probability.
class SeedStream {
  public:
    explicit SeedStream(std::uint64_t master_seed) noexcept
        : master_(master_seed) {}

    std::uint64_t master() const noexcept { return master_; }

    std::uint64_t child(std::string_view label, std::uint64_t index) const noexcept {
        const std::uint64_t base = splitmix64_mix(master_ ^ fnv1a64(label));
        return splitmix64_mix(base + kGolden64 * (index + 1));
    }

    Xoshiro256pp engine(std::string_view label, std::uint64_t index) const noexcept {
        return Xoshiro256pp(child(label, index));
    }

  private:
    std::uint64_t master_;
};

}  // namespace rstre
