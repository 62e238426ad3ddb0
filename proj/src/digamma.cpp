#include "shopflow/digamma.hpp"

#include <cmath>
#include <stdexcept>

#include "shopflow/continuous.hpp"

namespace shopflow {

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: x must be positive");
    double acc = 0.0;
    while (x < 10.0) {  // psi(x) = psi(x+1) - 1/x
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // ln x - 1/(2x) - sum B_2n / (2n x^{2n})
    double series = std::log(x) - 0.5 * inv;
    series -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
              inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return acc + series;
}

FirstExitCheck digamma_check(const ModelParams& p) {
    require_positive(p);
    FirstExitCheck chk;
    chk.j1_log = first_exit_continuous(p);

    const double ca1 = p.ca1();
    const double target = p.mf() / ca1;
    // psi is strictly increasing; bisect on J1.
    double lo = 1.0;
    double hi = 2.0;
    while (digamma(ca1 + hi - 1.0) - digamma(ca1) < target) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("digamma_check: no bracket");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (digamma(ca1 + mid - 1.0) - digamma(ca1) < target)
            lo = mid;
        else
            hi = mid;
    }
    chk.j1_psi = 0.5 * (lo + hi);
    return chk;
}

}  // namespace shopflow
