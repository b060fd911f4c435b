#pragma once

// Truncated formal power series over exact rationals, and the two series the
// library is built on: the tree function y(z) = z e^{y(z)} and the powers
// (1/(1-y))^d whose scaled coefficients give alpha, beta and s_d.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lacasse/exact.hpp"

namespace lacasse {

/// Dense series c_0 + c_1 z + ... + c_N z^N, exact modulo z^{N+1}.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Takes ownership of the coefficients; must be non-empty.
    explicit TruncatedSeries(std::vector<ExactRational> coeffs);
    TruncatedSeries(std::initializer_list<ExactRational> coeffs);

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries one(std::size_t order);
    /// The series z (zero when order == 0).
    static TruncatedSeries variable(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const ExactRational& operator[](std::size_t i) const { return coeffs_[i]; }
    /// Bounds-checked access; throws std::out_of_range past the order.
    const ExactRational& coeff(std::size_t i) const;
    const std::vector<ExactRational>& coeffs() const { return coeffs_; }

    /// Drops every term above `order` (no-op when order >= this->order()).
    TruncatedSeries truncated(std::size_t order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    /// Cauchy product, truncated at the smaller order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<ExactRational> coeffs_;
};

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

/// Multiplication by z: shifts coefficients up one place, keeping the order.
TruncatedSeries shift_up(const TruncatedSeries& a);

/// exp(a) = sum_j a^j / j!, for a with zero constant term.
/// Throws std::domain_error when a[0] != 0.
TruncatedSeries exp_trunc(const TruncatedSeries& a);

/// y(z) from the coefficient formula n^{n-1}/n!.
TruncatedSeries tree_series_formula(std::size_t order);

/// y(z) as the fixed point of y <- z exp(y), iterated order+1 times from 0.
TruncatedSeries tree_series_fixed_point(std::size_t order);

/// y(z) to the given order. Builds it both ways and throws ConsistencyError
/// if the constructions disagree.
TruncatedSeries tree_series(std::size_t order);

/// 1/(1-y) for y with zero constant term.
TruncatedSeries inverse_one_minus(const TruncatedSeries& y);

/// (1/(1-y))^d truncated at min(order, y.order()).
/// Throws std::domain_error when y[0] != 0 or d < 1.
TruncatedSeries geom_power(const TruncatedSeries& y, long d, std::size_t order);

/// n! [z^n] s. Throws std::out_of_range when n > s.order().
ExactRational egf_coeff(const TruncatedSeries& s, std::size_t n);

}  // namespace lacasse
