#include "lacasse/exact.hpp"

#include <mpfr.h>

namespace lacasse {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char c : text) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

ExactRational::ExactRational(const ExactInt& numerator, const ExactInt& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_int(text));
    const auto den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    return ExactRational(parse_int(text.substr(0, slash)), parse_int(den));
}

std::string ExactRational::to_string() const {
    if (is_integer()) return lacasse::to_string(value_.get_num());
    return lacasse::to_string(value_.get_num()) + "/" + lacasse::to_string(value_.get_den());
}

double ExactRational::to_double() const {
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
    const double out = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    return out;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string to_string(const ExactInt& value) { return value.get_str(10); }

ExactInt parse_int(std::string_view text) {
    if (!is_decimal_integer(text)) {
        throw std::invalid_argument("malformed integer: " + std::string(text));
    }
    if (text.front() == '+') text.remove_prefix(1);
    return ExactInt(std::string(text), 10);
}

ExactInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer " + std::to_string(n));
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

ExactInt falling_factorial(long n, long k) {
    if (k < 0 || k > n) throw std::domain_error("falling_factorial requires 0 <= k <= n");
    ExactInt out = 1;
    for (long i = k + 1; i <= n; ++i) out *= i;
    return out;
}

ExactInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial with negative n " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ExactInt multinomial(std::span<const long> parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw std::domain_error("multinomial with negative part " + std::to_string(p));
        total += p;
    }
    ExactInt out = factorial(total);
    for (long p : parts) {
        if (p > 1) out /= factorial(p);
    }
    return out;
}

ExactInt ipow00(const ExactInt& base, unsigned long exp) {
    // mpz_pow_ui already defines 0^0 = 1
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace lacasse
