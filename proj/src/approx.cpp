#include "lacasse/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lacasse/identity.hpp"

namespace lacasse {

namespace {

constexpr int kMaxIterations = 64;
constexpr double kTargetResidual = 1e-14;
constexpr double kAcceptResidual = 1e-12;

double residual_of(double y, double z) { return std::abs(y - z * std::exp(y)); }

}  // namespace

TreeEvalResult tree_eval(double z) {
    const double singularity = 1.0 / std::numbers::e;
    if (!(z >= 0.0) || z >= singularity) {
        throw std::domain_error("tree_eval requires 0 <= z < 1/e, got " + std::to_string(z));
    }
    TreeEvalResult out{z, z, 0, residual_of(z, z)};
    // f(y) = y e^{-y} - z is concave and increasing on [0, 1); iterates from
    // y0 = z approach the root from below.
    while (out.residual > kTargetResidual && out.iterations < kMaxIterations) {
        const double e = std::exp(-out.y);
        const double f = out.y * e - z;
        const double df = e * (1.0 - out.y);
        const double next = out.y - f / df;
        ++out.iterations;
        if (next == out.y) break;
        out.y = std::min(next, std::nextafter(1.0, 0.0));
        out.residual = residual_of(out.y, z);
    }
    if (out.residual > kAcceptResidual) {
        throw NonConvergenceError("tree_eval(" + std::to_string(z) + ") stalled at residual " +
                                  std::to_string(out.residual));
    }
    return out;
}

double q_float(long n) { return ramanujan_q(n).to_double(); }

QGrowthTable q_growth_check(std::span<const long> n_values) {
    QGrowthTable table;
    for (long n : n_values) {
        QGrowthRow row;
        row.n = n;
        row.q = q_float(n);
        row.ratio = row.q / std::sqrt(std::numbers::pi * static_cast<double>(n) / 2.0);
        if (n >= 100 && (row.ratio < 0.97 || row.ratio > 1.01)) table.within_window = false;
        if (row.ratio >= 1.0) table.monotone_from_below = false;
        if (!table.rows.empty()) {
            const QGrowthRow& prev = table.rows.back();
            if (n <= prev.n || row.ratio <= prev.ratio) table.monotone_from_below = false;
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace lacasse
