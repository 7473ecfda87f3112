#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "awg/errors.hpp"

namespace awg {

namespace detail {
inline std::string num(double v) {
    std::ostringstream ss;
    ss.precision(9);
    ss << v;
    return ss.str();
}
}  // namespace detail

struct BisectionOptions {
    double residual_tolerance = 1e-9;
    double bracket_tolerance = 1e-12;
    int max_iterations = 200;
};

struct RootResult {
    double root = 0;
    double residual = 0;
    int iterations = 0;
};

/// Bracketed bisection on a continuous residual.
///
/// Succeeds once |f(x)| < residual_tolerance. Throws NoBracketError when the
/// endpoint residuals share a sign and ConvergenceError when the bracket
/// collapses below bracket_tolerance (or the iteration cap is hit) without
/// meeting the residual tolerance.
template <class Residual>
RootResult bisect(Residual&& f, double lo, double hi, const BisectionOptions& opts = {}) {
    if (!(lo < hi)) throw NoBracketError("bisection bracket must satisfy lo < hi");
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (!std::isfinite(f_lo) || !std::isfinite(f_hi))
        throw NoBracketError("residual is not finite at a bracket endpoint");
    if (std::abs(f_lo) < opts.residual_tolerance) return {lo, f_lo, 0};
    if (std::abs(f_hi) < opts.residual_tolerance) return {hi, f_hi, 0};
    if (std::signbit(f_lo) == std::signbit(f_hi))
        throw NoBracketError("residual has the same sign at both ends of [" + detail::num(lo) +
                             ", " + detail::num(hi) + "]: " + detail::num(f_lo) + ", " +
                             detail::num(f_hi));

    for (int it = 1; it <= opts.max_iterations; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        const double f_mid = f(mid);
        if (std::abs(f_mid) < opts.residual_tolerance) return {mid, f_mid, it};
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if (hi - lo < opts.bracket_tolerance)
            throw ConvergenceError("bracket collapsed to " + detail::num(lo) +
                                   " without meeting the residual tolerance (|f| = " +
                                   detail::num(std::abs(f_mid)) + ")");
    }
    throw ConvergenceError("bisection hit the iteration cap of " +
                           std::to_string(opts.max_iterations));
}

}  // namespace awg
