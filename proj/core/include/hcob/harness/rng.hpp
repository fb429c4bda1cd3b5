#pragma once

// Per-trial random streams. The stream for (seed, suite, trial) is
//   splitmix64(splitmix64(splitmix64(seed) ^ fnv1a64(suite)) ^ trial)
// fed to std::mt19937_64; bounded draws use rejection sampling on the raw
// 64-bit output, so results do not depend on the standard library.

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace hcob::harness {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);
std::uint64_t stream_seed(std::uint64_t seed, std::string_view suite, std::uint64_t trial);

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    static Rng for_trial(std::uint64_t seed, std::string_view suite, std::uint64_t trial) {
        return Rng(stream_seed(seed, suite, trial));
    }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    std::size_t index(std::size_t size) { return static_cast<std::size_t>(below(size)); }
    bool coin() { return (next() >> 63) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace hcob::harness
