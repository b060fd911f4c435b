#include "lacasse/series.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lacasse {

namespace {

void require_zero_constant(const TruncatedSeries& a, const char* what) {
    if (!a[0].is_zero()) {
        throw std::domain_error(std::string(what) + " requires a zero constant term, got " +
                                a[0].to_string());
    }
}

// Coefficients of `a` padded with zeros (or truncated) to the given order.
std::vector<ExactRational> resized(const TruncatedSeries& a, std::size_t order) {
    std::vector<ExactRational> out(a.coeffs().begin(),
                                   a.coeffs().begin() + std::min(a.order(), order) + 1);
    out.resize(order + 1);
    return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<ExactRational> coeffs)
    : TruncatedSeries(std::vector<ExactRational>(coeffs)) {}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries out(order);
    out.coeffs_[0] = 1;
    return out;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries out(order);
    if (order >= 1) out.coeffs_[1] = 1;
    return out;
}

const ExactRational& TruncatedSeries::coeff(std::size_t i) const {
    if (i > order()) {
        throw std::out_of_range("coefficient " + std::to_string(i) + " beyond truncation order " +
                                std::to_string(order()));
    }
    return coeffs_[i];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<ExactRational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] + b[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<ExactRational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] - b[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<ExactRational> out(a.coeffs());
    for (auto& c : out) c = -c;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<ExactRational> out(n + 1);
    mpq_class term;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            mpq_mul(term.get_mpq_t(), a[i].raw().get_mpq_t(), b[j].raw().get_mpq_t());
            mpq_add(out[i + j].raw().get_mpq_t(), out[i + j].raw().get_mpq_t(), term.get_mpq_t());
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries shift_up(const TruncatedSeries& a) {
    std::vector<ExactRational> out(a.order() + 1);
    for (std::size_t i = 1; i <= a.order(); ++i) out[i] = a[i - 1];
    return TruncatedSeries(std::move(out));
}

namespace {

// When every j! a_j is an integer A_j, F_k = k! [z^k] exp(a) is an integer too:
//   F_k = sum_{j=1..k} C(k-1, j-1) A_j F_{k-j}.
// Integer arithmetic avoids a gcd per term. Returns nullopt otherwise.
std::optional<std::vector<ExactRational>> exp_egf_integral(const TruncatedSeries& a) {
    const std::size_t n = a.order();
    std::vector<ExactInt> scaled(n + 1);
    ExactInt fact = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        fact *= static_cast<unsigned long>(j);
        const mpq_class s = a[j].raw() * fact;
        if (s.get_den() != 1) return std::nullopt;
        scaled[j] = s.get_num();
    }
    std::vector<ExactInt> big_f(n + 1);
    big_f[0] = 1;
    std::vector<ExactInt> row{1};  // C(k-1, 0..k-1)
    ExactInt term;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<ExactInt> next(k);
            next[0] = 1;
            next[k - 1] = 1;
            for (std::size_t i = 1; i + 1 < k; ++i) next[i] = row[i - 1] + row[i];
            row = std::move(next);
        }
        ExactInt& acc = big_f[k];
        for (std::size_t j = 1; j <= k; ++j) {
            if (scaled[j] == 0) continue;
            mpz_mul(term.get_mpz_t(), row[j - 1].get_mpz_t(), scaled[j].get_mpz_t());
            mpz_addmul(acc.get_mpz_t(), term.get_mpz_t(), big_f[k - j].get_mpz_t());
        }
    }
    std::vector<ExactRational> out(n + 1);
    fact = 1;
    out[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        fact *= static_cast<unsigned long>(k);
        out[k] = ExactRational(big_f[k], fact);
    }
    return out;
}

}  // namespace

TruncatedSeries exp_trunc(const TruncatedSeries& a) {
    require_zero_constant(a, "exp_trunc");
    if (auto integral = exp_egf_integral(a)) return TruncatedSeries(std::move(*integral));
    // f = exp(a) satisfies f' = a' f, i.e. k f_k = sum_{j=1..k} j a_j f_{k-j}.
    const std::size_t n = a.order();
    std::vector<ExactRational> f(n + 1);
    f[0] = 1;
    mpq_class acc, term, weighted;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j].is_zero()) continue;
            weighted = a[j].raw() * static_cast<unsigned long>(j);
            mpq_mul(term.get_mpq_t(), weighted.get_mpq_t(), f[k - j].raw().get_mpq_t());
            acc += term;
        }
        acc /= static_cast<unsigned long>(k);
        f[k].raw() = acc;
    }
    return TruncatedSeries(std::move(f));
}

TruncatedSeries tree_series_formula(std::size_t order) {
    std::vector<ExactRational> coeffs(order + 1);
    ExactInt fact = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        fact *= static_cast<unsigned long>(n);
        coeffs[n] = ExactRational(ipow00(ExactInt(static_cast<unsigned long>(n)), n - 1), fact);
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries tree_series_fixed_point(std::size_t order) {
    // Pass p fixes the coefficient of z^p, so pass p only needs to work
    // through order min(p, N); the result equals N+1 full-order passes.
    TruncatedSeries y(0);
    for (std::size_t pass = 1; pass <= order + 1; ++pass) {
        const std::size_t working = std::min(pass, order);
        y = shift_up(exp_trunc(TruncatedSeries(resized(y, working))));
    }
    return y;
}

TruncatedSeries tree_series(std::size_t order) {
    TruncatedSeries by_formula = tree_series_formula(order);
    const TruncatedSeries by_iteration = tree_series_fixed_point(order);
    if (by_formula != by_iteration) {
        for (std::size_t i = 0; i <= order; ++i) {
            if (by_formula[i] != by_iteration[i]) {
                throw ConsistencyError("tree series mismatch at z^" + std::to_string(i) +
                                       ": formula " + by_formula[i].to_string() +
                                       " vs fixed point " + by_iteration[i].to_string());
            }
        }
        throw ConsistencyError("tree series constructions differ in order");
    }
    return by_formula;
}

TruncatedSeries inverse_one_minus(const TruncatedSeries& y) {
    require_zero_constant(y, "inverse_one_minus");
    // g (1 - y) = 1  =>  g_k = sum_{j=1..k} y_j g_{k-j}
    const std::size_t n = y.order();
    std::vector<ExactRational> g(n + 1);
    g[0] = 1;
    mpq_class term;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 1; j <= k; ++j) {
            if (y[j].is_zero()) continue;
            mpq_mul(term.get_mpq_t(), y[j].raw().get_mpq_t(), g[k - j].raw().get_mpq_t());
            g[k].raw() += term;
        }
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries geom_power(const TruncatedSeries& y, long d, std::size_t order) {
    if (d < 1) throw std::domain_error("geom_power requires d >= 1, got " + std::to_string(d));
    require_zero_constant(y, "geom_power");
    TruncatedSeries base = inverse_one_minus(y.truncated(order));
    TruncatedSeries result = TruncatedSeries::one(base.order());
    for (unsigned long e = static_cast<unsigned long>(d);;) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e == 0) break;
        base = base * base;
    }
    return result;
}

ExactRational egf_coeff(const TruncatedSeries& s, std::size_t n) {
    return s.coeff(n) * ExactRational(factorial(static_cast<long>(n)));
}

}  // namespace lacasse
