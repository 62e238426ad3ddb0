#pragma once

#include <cstdint>
#include <vector>

namespace shopflow {

// splitmix64 step; the standard finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic per-run seed from (master, delta, attempt index). The delta
// is quantized to microseconds so textual and binary round-trips agree.
std::uint64_t derive_seed(std::uint64_t master_seed, double delta_s, std::uint64_t attempt);

// xoshiro-free minimal generator: splitmix64 stream. Self-contained so runs
// are reproducible independent of the standard library's distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; no cached spare, keeping the draw count predictable.
    double normal(double mean, double stddev);

    // index into an (unnormalized) weight row
    std::size_t pick_weighted(const std::vector<double>& weights);

  private:
    std::uint64_t state_;
};

}  // namespace shopflow
