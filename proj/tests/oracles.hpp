#pragma once

// Reference computations used only by tests. Each one takes a deliberately
// different path from the library code it checks: plain loops, Pascal's
// triangle, recursive enumeration, definition-level sums.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "lacasse/exact.hpp"
#include "lacasse/series.hpp"

namespace oracle {

using lacasse::ExactInt;
using lacasse::ExactRational;
using lacasse::TruncatedSeries;

inline ExactInt factorial(long n) {
    ExactInt out = 1;
    for (long i = 2; i <= n; ++i) out = out * i;
    return out;
}

inline ExactInt power(long base, long exp) {
    ExactInt out = 1;
    for (long i = 0; i < exp; ++i) out = out * base;
    return out;  // 0^0 = 1 falls out of the empty product
}

/// Row `n` of Pascal's triangle by repeated addition.
inline std::vector<ExactInt> pascal_row(long n) {
    std::vector<ExactInt> row{1};
    for (long r = 1; r <= n; ++r) {
        std::vector<ExactInt> next(static_cast<std::size_t>(r) + 1, 1);
        for (long i = 1; i < r; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return row;
}

inline ExactInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    return pascal_row(n)[static_cast<std::size_t>(k)];
}

/// prod_i C(k_1 + ... + k_i, k_i)
inline ExactInt multinomial_iterated(const std::vector<long>& parts) {
    ExactInt out = 1;
    long running = 0;
    for (long p : parts) {
        running += p;
        out *= binomial(running, p);
    }
    return out;
}

/// Calls visit on every weak composition of n into d parts, recursively.
inline void for_each_composition(long n, long d, const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> parts;
    std::function<void(long, long)> rec = [&](long remaining, long slots) {
        if (slots == 1) {
            parts.push_back(remaining);
            visit(parts);
            parts.pop_back();
            return;
        }
        for (long k = 0; k <= remaining; ++k) {
            parts.push_back(k);
            rec(remaining - k, slots - 1);
            parts.pop_back();
        }
    };
    rec(n, d);
}

/// sum over compositions of multinomial * prod k^k, via Pascal binomials.
inline ExactInt composition_sum(long n, long d) {
    ExactInt total = 0;
    for_each_composition(n, d, [&](const std::vector<long>& parts) {
        ExactInt term = multinomial_iterated(parts);
        for (long k : parts) term *= power(k, k);
        total += term;
    });
    return total;
}

/// exp(a) as the literal sum of a^j / j! for j = 0..order.
inline TruncatedSeries exp_by_powers(const TruncatedSeries& a) {
    const std::size_t n = a.order();
    TruncatedSeries result = TruncatedSeries::one(n);
    TruncatedSeries p = TruncatedSeries::one(n);
    for (std::size_t j = 1; j <= n; ++j) {
        p = p * a;
        std::vector<ExactRational> scaled(p.coeffs());
        for (auto& c : scaled) c = c / ExactRational(factorial(static_cast<long>(j)));
        result = result + TruncatedSeries(std::move(scaled));
    }
    return result;
}

/// Q(n) straight from n!/((n-k)! n^k).
inline ExactRational ramanujan_q(long n) {
    ExactRational sum = 0;
    for (long k = 1; k <= n; ++k) {
        sum += ExactRational(factorial(n), factorial(n - k) * power(n, k));
    }
    return sum;
}

/// Partial sum of n^{n-1} z^n / n! for n = 1..terms, in doubles via logs.
inline double tree_partial_sum(double z, int terms) {
    if (z == 0.0) return 0.0;
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        const double log_term = (n - 1) * std::log(static_cast<double>(n)) + n * std::log(z) -
                                std::lgamma(n + 1.0);
        sum += std::exp(log_term);
    }
    return sum;
}

}  // namespace oracle
