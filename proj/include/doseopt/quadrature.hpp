#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace doseopt {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;  ///< estimated, QUADPACK-style
    int evaluations = 0;
    bool converged = false;
};

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi],
/// seeded with the given interior breakpoints. Never evaluates f at lo or hi.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              std::span<const double> breakpoints = {},
                              const QuadOptions& opts = {});

}  // namespace doseopt
