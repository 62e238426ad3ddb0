#pragma once

#include "shopflow/params.hpp"

namespace shopflow {

// psi(x) for x > 0 by upward recurrence into x > 10 plus the asymptotic
// Bernoulli series. Cross-check path only; nothing on the main dynamics
// depends on it.
double digamma(double x);

struct FirstExitCheck {
    double j1_psi = 0.0;  // root of Mf/cA1 = psi(cA1 + J1 - 1) - psi(cA1)
    double j1_log = 0.0;  // cA1 (e^{Mf/cA1} - 1) + 1, the log-form value
};

FirstExitCheck digamma_check(const ModelParams& params);

}  // namespace shopflow
