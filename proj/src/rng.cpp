#include "shopflow/rng.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace shopflow {

std::uint64_t derive_seed(std::uint64_t master_seed, double delta_s, std::uint64_t attempt) {
    const std::uint64_t delta_us = std::uint64_t(std::llround(delta_s * 1e6));
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ delta_us);
    h = splitmix64(h ^ attempt);
    return h;
}

double Rng::normal(double mean, double stddev) {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::pick_weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw std::invalid_argument("pick_weighted: nonpositive total");
    double u = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        u -= weights[i];
        if (u < 0.0) return i;
    }
    return weights.size() - 1;
}

}  // namespace shopflow
