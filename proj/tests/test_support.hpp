#pragma once

#include <cmath>
#include <random>

namespace awg::test {

inline double rel_err(double value, double expected) {
    return std::abs(value - expected) / std::abs(expected);
}

template <class F>
double central_diff(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Deterministic uniform generator for the hand-rolled property tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

}  // namespace awg::test
