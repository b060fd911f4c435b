#pragma once

// Exact integer and rational arithmetic plus the combinatorial primitives
// used by every sum in the library. All values are arbitrary precision.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lacasse {

/// Arbitrary-precision signed integer.
using ExactInt = mpz_class;

/// Base for errors that indicate an internal arithmetic bug rather than bad
/// input: two constructions of the same quantity produced different values.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Rational number kept in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const ExactInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const ExactInt& numerator, const ExactInt& denominator);

    /// Parses "p" or "p/q" (decimal). Throws std::invalid_argument.
    static ExactRational parse(std::string_view text);

    ExactInt numerator() const { return value_.get_num(); }
    ExactInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// "p" when integral, else "p/q".
    std::string to_string() const;

    /// Correctly rounded (nearest, ties to even) conversion to double.
    double to_double() const;

    ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
    ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
    ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(ExactRational a) { a.value_ = -a.value_; return a; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
        return os << r.to_string();
    }

    /// Underlying GMP value, for hot loops that want to avoid temporaries.
    const mpq_class& raw() const { return value_; }
    mpq_class& raw() { return value_; }

private:
    mpq_class value_;
};

/// Decimal rendering of an integer, never in scientific notation.
std::string to_string(const ExactInt& value);

/// Parses a decimal integer. Throws std::invalid_argument.
ExactInt parse_int(std::string_view text);

/// n! for n >= 0. Throws std::domain_error on negative n.
ExactInt factorial(long n);

/// n!/k! = n(n-1)...(k+1) for 0 <= k <= n, built as a product.
ExactInt falling_factorial(long n, long k);

/// C(n, k), zero when k < 0 or k > n. Throws std::domain_error on negative n.
ExactInt binomial(long n, long k);

/// (sum of parts)! / prod(parts_i!). Throws std::domain_error on a negative part.
ExactInt multinomial(std::span<const long> parts);

/// base^exp with 0^0 = 1.
ExactInt ipow00(const ExactInt& base, unsigned long exp);

}  // namespace lacasse
