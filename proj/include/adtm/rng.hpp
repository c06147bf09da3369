#ifndef ADTM_RNG_HPP
#define ADTM_RNG_HPP

#include <cstdint>
#include <vector>

namespace adtm {

// Stateless 64-bit finalizer (splitmix64 output function). Used for stream
// derivation so that substreams are a pure function of (seed, keys).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// xoshiro256++ generator. Self-contained so that results are identical across
// platforms and standard libraries; std:: distributions are never used for
// anything that affects experiment output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s = mix64(s);
            word = s;
        }
        state_[0] |= 1; // never all-zero
    }

    // Substream keyed by up to three indices (e.g. sample serial, clause id).
    // Streams with distinct keys are independent for all practical purposes.
    static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
        std::uint64_t h = mix64(seed);
        h = mix64(h ^ a);
        h = mix64(h ^ b);
        h = mix64(h ^ c);
        return Rng(h);
    }

    std::uint64_t next_u64() {
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

    // Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // One fair bit.
    bool coin() { return (next_u64() >> 63) != 0; }

    // Unbiased integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Fisher-Yates; deterministic given the stream state.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// Fixed stream tags; keep stable, they are part of the reproducibility
// contract (same seed => same artifacts).
namespace stream {
inline constexpr std::uint64_t kClauseUpdate = 0x01;
inline constexpr std::uint64_t kEpochShuffle = 0x02;
inline constexpr std::uint64_t kSplit = 0x03;
inline constexpr std::uint64_t kSynthetic = 0x04;
inline constexpr std::uint64_t kBandit = 0x05;
} // namespace stream

} // namespace adtm

#endif
