#pragma once

// Floating-point companions: the principal tree function on [0, 1/e) and a
// sanity table for the growth of Q(n).

#include <span>
#include <stdexcept>
#include <vector>

namespace lacasse {

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TreeEvalResult {
    double z = 0.0;
    double y = 0.0;  ///< solution of y = z e^y in [0, 1)
    int iterations = 0;
    double residual = 0.0;  ///< |y - z e^y|
};

/// Solves y e^{-y} = z by Newton iteration from y0 = z.
/// Throws std::domain_error unless 0 <= z < 1/e, NonConvergenceError if the
/// residual is still above 1e-12 after 64 steps.
TreeEvalResult tree_eval(double z);

/// Q(n) rounded to the nearest double.
double q_float(long n);

struct QGrowthRow {
    long n = 0;
    double q = 0.0;
    double ratio = 0.0;  ///< Q(n) / sqrt(pi n / 2)
};

struct QGrowthTable {
    std::vector<QGrowthRow> rows;
    /// Every row with n >= 100 has ratio in [0.97, 1.01].
    bool within_window = true;
    /// Ratios increase with n and stay below 1.
    bool monotone_from_below = true;
};

QGrowthTable q_growth_check(std::span<const long> n_values);

}  // namespace lacasse
