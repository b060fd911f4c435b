#pragma once

// The scaled sums
//
//   alpha(n) = n^n xi(n)   = sum_k C(n,k) k^k (n-k)^(n-k)
//   beta(n)  = n^n xi_2(n) = sum_{k1+k2+k3=n} n!/(k1!k2!k3!) k1^k1 k2^k2 k3^k3
//
// computed by enumeration, by closed form and by series coefficient
// extraction, together with the check beta(n) - alpha(n) = n^(n+1).

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lacasse/exact.hpp"
#include "lacasse/series.hpp"

namespace lacasse {

enum class Route { closed, brute, series };

std::string_view route_label(Route route);
/// Inverse of route_label. Throws std::invalid_argument.
Route parse_route(std::string_view label);

ExactInt alpha_direct(long n);
/// sum_k (n!/k!) n^k, with n!/k! accumulated as a falling factorial.
ExactInt alpha_closed(long n);
ExactInt beta_direct(long n);
/// sum_k (n!/k!) (n+1-k) n^k
ExactInt beta_closed(long n);

/// n! [z^n] (1/(1-y))^d via the binomial sum
///   sum_j (n!/j!) C(n-j+d-2, d-2) n^j,
/// with s_1(n) = n^n.
ExactInt s_d_closed(long n, long d);

/// sum over weak compositions k of n into d parts of
/// n!/(k_1!...k_d!) prod k_i^k_i. Costs C(n+d-1, d-1) terms.
ExactInt xi_scaled_brute(long n, long d);

/// alpha(n)/n^n. Throws std::domain_error for n < 1.
ExactRational xi(long n);
/// beta(n)/n^n. Throws std::domain_error for n < 1.
ExactRational xi2(long n);

/// sum_k (n!/k!) (n-k) n^k, checked against its telescoped form n^(n+1).
/// Throws ConsistencyError if they differ.
ExactInt telescoping_difference(long n);

/// Q(n) = sum_{k=1..n} n!/((n-k)! n^k). Throws std::domain_error for n < 1.
ExactRational ramanujan_q(long n);

/// Precomputed n! [z^n] (1/(1-y))^d for every n <= order and d <= max_d, from
/// one tree series. Immutable once built, so one table can serve many
/// concurrent verifications.
class SeriesRoute {
public:
    SeriesRoute(std::size_t order, long max_d);

    std::size_t order() const { return order_; }
    long max_d() const { return max_d_; }
    /// Throws std::out_of_range outside the table.
    const ExactInt& value(long n, long d) const;

private:
    std::size_t order_;
    long max_d_;
    std::vector<std::vector<ExactInt>> values_;  // [d-1][n]
};

/// Two routes produced different values for the same quantity.
class RouteDisagreement : public ConsistencyError {
public:
    RouteDisagreement(long n, std::string quantity, Route first, Route second);
    long n;
    std::string quantity;
    Route first;
    Route second;
};

/// beta(n) - alpha(n) != n^(n+1).
class IdentityFailure : public ConsistencyError {
public:
    IdentityFailure(long n, const ExactInt& difference, const ExactInt& expected);
    long n;
};

struct VerifyOptions {
    /// The closed form always runs; these are the extra routes requested.
    std::set<Route> routes{Route::brute, Route::series};
    /// Brute force runs only while C(n+2, 2) stays within this many terms.
    std::uint64_t brute_cutoff = 2'000'000;
};

struct VerificationReport {
    long n = 0;
    ExactInt alpha;
    ExactInt beta;
    ExactInt difference;
    ExactInt expected;
    std::vector<Route> routes_compared;
    bool passed = false;
};

/// Computes alpha and beta by every admitted route, requires them to agree
/// and requires beta - alpha = n^(n+1). `shared` supplies series values when
/// it covers n; otherwise the series route builds its own table.
/// Throws std::domain_error for n < 1, RouteDisagreement, IdentityFailure.
VerificationReport verify_lacasse(long n, const VerifyOptions& options = {},
                                  const SeriesRoute* shared = nullptr);

}  // namespace lacasse
