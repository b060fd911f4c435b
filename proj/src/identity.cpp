#include "lacasse/identity.hpp"

#include <optional>
#include <stdexcept>

#include "lacasse/composition.hpp"

namespace lacasse {

namespace {

ExactInt to_exact(long v) { return ExactInt(v); }

// base^0 .. base^top
std::vector<ExactInt> powers_of(long base, long top) {
    std::vector<ExactInt> out(static_cast<std::size_t>(top) + 1);
    out[0] = 1;
    for (long k = 1; k <= top; ++k) out[k] = out[k - 1] * base;
    return out;
}

// k^k for k = 0 .. top, with 0^0 = 1
std::vector<ExactInt> self_powers(long top) {
    std::vector<ExactInt> out(static_cast<std::size_t>(top) + 1);
    for (long k = 0; k <= top; ++k) out[k] = ipow00(to_exact(k), static_cast<unsigned long>(k));
    return out;
}

void require_nonnegative(long n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + " requires n >= 0, got " + std::to_string(n));
}

void require_positive(long n, const char* what) {
    if (n < 1) {
        throw std::domain_error(std::string(what) + "(" + std::to_string(n) +
                                ") is undefined: requires n >= 1");
    }
}

// sum_{k=0..n} (n!/k!) weight(k) n^k, walking k downward so that n!/k! is
// a running product.
template <typename Weight>
ExactInt falling_weighted_sum(long n, Weight weight) {
    const auto pw = powers_of(n, n);
    ExactInt acc = 0;
    ExactInt ff = 1;  // n!/k!
    for (long k = n; k >= 0; --k) {
        acc += ff * weight(k) * pw[k];
        ff *= k;
    }
    return acc;
}

}  // namespace

std::string_view route_label(Route route) {
    switch (route) {
        case Route::closed: return "closed";
        case Route::brute: return "brute";
        case Route::series: return "series";
    }
    return "unknown";
}

Route parse_route(std::string_view label) {
    if (label == "closed") return Route::closed;
    if (label == "brute") return Route::brute;
    if (label == "series") return Route::series;
    throw std::invalid_argument("unknown route '" + std::string(label) + "'");
}

ExactInt alpha_direct(long n) {
    require_nonnegative(n, "alpha");
    const auto sp = self_powers(n);
    ExactInt acc = 0;
    for (long k = 0; k <= n; ++k) acc += binomial(n, k) * sp[k] * sp[n - k];
    return acc;
}

ExactInt alpha_closed(long n) {
    require_nonnegative(n, "alpha");
    return falling_weighted_sum(n, [](long) { return ExactInt(1); });
}

ExactInt beta_direct(long n) {
    require_nonnegative(n, "beta");
    return xi_scaled_brute(n, 3);
}

ExactInt beta_closed(long n) {
    require_nonnegative(n, "beta");
    return falling_weighted_sum(n, [n](long k) { return ExactInt(n + 1 - k); });
}

ExactInt s_d_closed(long n, long d) {
    require_nonnegative(n, "s_d");
    if (d < 1) throw std::domain_error("s_d requires d >= 1, got " + std::to_string(d));
    // C(k-1, -1) = [k = 0]: only the j = n term survives.
    if (d == 1) return ipow00(to_exact(n), static_cast<unsigned long>(n));
    return falling_weighted_sum(n, [n, d](long j) { return binomial(n - j + d - 2, d - 2); });
}

ExactInt xi_scaled_brute(long n, long d) {
    require_nonnegative(n, "xi_scaled_brute");
    if (d < 1) throw std::domain_error("xi_scaled_brute requires d >= 1, got " + std::to_string(d));
    const auto sp = self_powers(n);
    std::vector<ExactInt> fact(static_cast<std::size_t>(n) + 1);
    fact[0] = 1;
    for (long k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;

    ExactInt acc = 0;
    ExactInt den;
    ExactInt term;
    CompositionCursor cursor(n, d);
    do {
        den = 1;
        term = fact[n];
        for (long k : cursor.current()) {
            if (k > 1) den *= fact[k];
        }
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
        for (long k : cursor.current()) {
            if (k > 1) term *= sp[k];
        }
        acc += term;
    } while (cursor.next());
    return acc;
}

ExactRational xi(long n) {
    require_positive(n, "xi");
    return ExactRational(alpha_closed(n), ipow00(to_exact(n), static_cast<unsigned long>(n)));
}

ExactRational xi2(long n) {
    require_positive(n, "xi2");
    return ExactRational(beta_closed(n), ipow00(to_exact(n), static_cast<unsigned long>(n)));
}

ExactInt telescoping_difference(long n) {
    require_nonnegative(n, "telescoping_difference");
    const auto pw = powers_of(n, n + 1);

    // ff[k] = n!/k!
    std::vector<ExactInt> ff(static_cast<std::size_t>(n) + 1);
    ff[n] = 1;
    for (long k = n; k >= 1; --k) ff[k - 1] = ff[k] * k;

    ExactInt terms = 0;
    ExactInt upper = 0;  // sum_{k=0..n}   (n!/k!)     n^(k+1)
    ExactInt lower = 0;  // sum_{k=1..n}   (n!/(k-1)!) n^k
    for (long k = 0; k <= n; ++k) {
        terms += ff[k] * (n - k) * pw[k];
        upper += ff[k] * pw[k + 1];
        if (k >= 1) {
            // n!/(k-1)! = (n!/k!) k; the k-th lower term cancels the (k-1)-th upper term
            const ExactInt shifted = ff[k] * k * pw[k];
            if (shifted != ff[k - 1] * pw[k]) {
                throw ConsistencyError("telescoping pair mismatch at k=" + std::to_string(k));
            }
            lower += shifted;
        }
    }
    const ExactInt expected = pw[n + 1];
    if (upper - lower != expected) {
        throw ConsistencyError("telescoped sums do not collapse to n^(n+1) at n=" + std::to_string(n));
    }
    if (terms != expected) {
        throw ConsistencyError("term sum " + to_string(terms) + " != n^(n+1) = " +
                               to_string(expected) + " at n=" + std::to_string(n));
    }
    return terms;
}

ExactRational ramanujan_q(long n) {
    require_positive(n, "Q");
    // term_k = n!/((n-k)! n^k) = prod_{i<k} (n-i)/n
    ExactRational term = 1;
    ExactRational sum = term;
    for (long k = 1; k < n; ++k) {
        term *= ExactRational(to_exact(n - k), to_exact(n));
        sum += term;
    }
    return sum;
}

SeriesRoute::SeriesRoute(std::size_t order, long max_d) : order_(order), max_d_(max_d) {
    if (max_d < 1) throw std::domain_error("SeriesRoute requires max_d >= 1");
    const TruncatedSeries tree = tree_series(order);
    values_.resize(static_cast<std::size_t>(max_d));
    for (long d = 1; d <= max_d; ++d) {
        const TruncatedSeries g = geom_power(tree, d, order);
        auto& row = values_[d - 1];
        row.reserve(order + 1);
        ExactInt fact = 1;
        for (std::size_t n = 0; n <= order; ++n) {
            if (n > 0) fact *= static_cast<unsigned long>(n);
            const ExactRational scaled = g[n] * ExactRational(fact);
            if (!scaled.is_integer()) {
                throw ConsistencyError("n! [z^n] (1/(1-y))^" + std::to_string(d) +
                                       " is not an integer at n=" + std::to_string(n) + ": " +
                                       scaled.to_string());
            }
            row.push_back(scaled.numerator());
        }
    }
}

const ExactInt& SeriesRoute::value(long n, long d) const {
    if (n < 0 || static_cast<std::size_t>(n) > order_ || d < 1 || d > max_d_) {
        throw std::out_of_range("series table covers n <= " + std::to_string(order_) +
                                ", d <= " + std::to_string(max_d_));
    }
    return values_[d - 1][static_cast<std::size_t>(n)];
}

RouteDisagreement::RouteDisagreement(long n, std::string quantity, Route first, Route second)
    : ConsistencyError(quantity + "(" + std::to_string(n) + "): routes " +
                       std::string(route_label(first)) + " and " +
                       std::string(route_label(second)) + " disagree"),
      n(n),
      quantity(std::move(quantity)),
      first(first),
      second(second) {}

IdentityFailure::IdentityFailure(long n, const ExactInt& difference, const ExactInt& expected)
    : ConsistencyError("beta(" + std::to_string(n) + ") - alpha(" + std::to_string(n) + ") = " +
                       to_string(difference) + ", expected n^(n+1) = " + to_string(expected)),
      n(n) {}

VerificationReport verify_lacasse(long n, const VerifyOptions& options, const SeriesRoute* shared) {
    require_positive(n, "verify_lacasse");
    VerificationReport report;
    report.n = n;
    report.alpha = alpha_closed(n);
    report.beta = beta_closed(n);
    report.routes_compared.push_back(Route::closed);

    auto check = [&](const char* quantity, const ExactInt& reference, const ExactInt& other, Route route) {
        if (reference != other) throw RouteDisagreement(n, quantity, Route::closed, route);
    };

    if (options.routes.contains(Route::brute) &&
        CompositionCursor::count(n, 3) <= ExactInt(std::to_string(options.brute_cutoff))) {
        check("alpha", report.alpha, alpha_direct(n), Route::brute);
        check("beta", report.beta, beta_direct(n), Route::brute);
        report.routes_compared.push_back(Route::brute);
    }

    if (options.routes.contains(Route::series)) {
        std::optional<SeriesRoute> local;
        const SeriesRoute* table = shared;
        if (table == nullptr || table->order() < static_cast<std::size_t>(n) || table->max_d() < 3) {
            local.emplace(static_cast<std::size_t>(n), 3);
            table = &*local;
        }
        check("alpha", report.alpha, table->value(n, 2), Route::series);
        check("beta", report.beta, table->value(n, 3), Route::series);
        report.routes_compared.push_back(Route::series);
    }

    report.difference = report.beta - report.alpha;
    report.expected = ipow00(to_exact(n), static_cast<unsigned long>(n + 1));
    if (report.difference != report.expected) {
        throw IdentityFailure(n, report.difference, report.expected);
    }
    report.passed = true;
    return report;
}

}  // namespace lacasse
