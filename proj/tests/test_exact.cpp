#include "doctest.h"

#include <random>
#include <vector>

#include "lacasse/exact.hpp"
#include "oracles.hpp"

using namespace lacasse;

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == parse_int("2432902008176640000"));
    for (long n = 0; n <= 60; ++n) CHECK(factorial(n) == oracle::factorial(n));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);

    SUBCASE("matches Pascal's triangle") {
        for (long n = 0; n <= 40; ++n) {
            const auto row = oracle::pascal_row(n);
            for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == row[k]);
        }
    }
    SUBCASE("C(n,k) k! (n-k)! = n!") {
        for (long n = 0; n <= 50; ++n) {
            for (long k = 0; k <= n; ++k) {
                CHECK(binomial(n, k) * factorial(k) * factorial(n - k) == factorial(n));
            }
        }
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(std::vector<long>{1, 1, 1}) == 6);
    CHECK(multinomial(std::vector<long>{3, 0, 0}) == 1);
    CHECK(multinomial(std::vector<long>{2, 2, 1}) == 30);
    CHECK(multinomial(std::vector<long>{}) == 1);
    CHECK_THROWS_AS(multinomial(std::vector<long>{2, -1}), std::domain_error);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> part(0, 9), len(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> parts(static_cast<std::size_t>(len(rng)));
        for (auto& p : parts) p = part(rng);
        CHECK(multinomial(parts) == oracle::multinomial_iterated(parts));
    }
}

TEST_CASE("ipow00") {
    CHECK(ipow00(0, 0) == 1);
    CHECK(ipow00(0, 3) == 0);
    CHECK(ipow00(3, 3) == 27);
    CHECK(ipow00(2, 10) == 1024);
    CHECK(ipow00(7, 40) == oracle::power(7, 40));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5, 5) == 1);
    CHECK(falling_factorial(5, 2) == 60);
    for (long n = 0; n <= 30; ++n) {
        for (long k = 0; k <= n; ++k) CHECK(falling_factorial(n, k) * factorial(k) == factorial(n));
    }
    CHECK_THROWS_AS(falling_factorial(3, 4), std::domain_error);
}

TEST_CASE("ExactRational normalization") {
    const ExactRational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(ExactRational(10, 5).to_string() == "2");
    CHECK(ExactRational(1, 6) + ExactRational(1, 3) == ExactRational(1, 2));
    CHECK((ExactRational(1, 6) + ExactRational(1, 3)).denominator() == 2);
    CHECK_THROWS_AS(ExactRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);

    SUBCASE("a/b = am/bm") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<long> num(-500, 500), den(1, 500), mult(1, 1000);
        for (int trial = 0; trial < 300; ++trial) {
            const long a = num(rng), b = den(rng), m = mult(rng);
            const ExactRational x(a, b), y(ExactInt(a) * m, ExactInt(b) * m);
            CHECK(x == y);
            CHECK(x.denominator() == y.denominator());
            CHECK(x.denominator() > 0);
        }
    }
}

TEST_CASE("ExactRational parse and render round-trip") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (int trial = 0; trial < 200; ++trial) {
        const ExactRational x(num(rng), den(rng));
        CHECK(ExactRational::parse(x.to_string()) == x);
    }
    const ExactInt big = oracle::power(300, 301);
    CHECK(parse_int(to_string(big)) == big);
    CHECK_THROWS_AS(ExactRational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
}

TEST_CASE("ExactRational to_double rounds to nearest") {
    CHECK(ExactRational(3, 2).to_double() == 1.5);
    CHECK(ExactRational(1, 3).to_double() == 1.0 / 3.0);
    CHECK(ExactRational(2, 3).to_double() == 2.0 / 3.0);
    // 2^53 + 1 sits exactly between two doubles; ties go to even.
    CHECK(ExactRational(oracle::power(2, 53) + 1).to_double() == 9007199254740992.0);
    CHECK(ExactRational(oracle::power(2, 53) + 3).to_double() == 9007199254740996.0);
}
