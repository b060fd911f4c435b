#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lacasse/approx.hpp"
#include "lacasse/identity.hpp"
#include "oracles.hpp"

using namespace lacasse;

TEST_CASE("tree_eval basics") {
    const auto zero = tree_eval(0.0);
    CHECK(zero.y == 0.0);
    CHECK(zero.iterations == 0);

    const auto r = tree_eval(0.2);
    CHECK(std::abs(r.y - oracle::tree_partial_sum(0.2, 60)) <= 1e-12);
    CHECK(std::abs(r.y * std::exp(-r.y) - 0.2) <= 1e-12);
    CHECK(r.residual <= 1e-12);

    CHECK_THROWS_AS(tree_eval(-1e-9), std::domain_error);
    CHECK_THROWS_AS(tree_eval(1.0 / std::numbers::e), std::domain_error);
    CHECK_THROWS_AS(tree_eval(0.5), std::domain_error);
    CHECK_THROWS_AS(tree_eval(std::nan("")), std::domain_error);
}

TEST_CASE("tree_eval against series partial sums") {
    std::mt19937_64 rng(42);
    // order 60 truncates below 1e-12 only up to z ~ 0.2577
    std::uniform_real_distribution<double> near(0.0, 0.25), wide(0.0, 0.3);
    for (int i = 0; i < 200; ++i) {
        const double z = near(rng);
        const auto r = tree_eval(z);
        CHECK(std::abs(r.y - oracle::tree_partial_sum(z, 60)) <= 1e-12);
        CHECK(r.iterations <= 20);
    }
    for (int i = 0; i < 200; ++i) {
        const double z = wide(rng);
        const auto r = tree_eval(z);
        CHECK(std::abs(r.y - oracle::tree_partial_sum(z, 400)) <= 1e-12);
        CHECK(r.iterations <= 20);
    }
}

TEST_CASE("tree_eval round-trip up to the singularity") {
    const double top = 1.0 / std::numbers::e - 1e-6;
    for (int i = 0; i <= 1000; ++i) {
        const double z = top * i / 1000.0;
        const auto r = tree_eval(z);
        CHECK(r.y >= 0.0);
        CHECK(r.y < 1.0);
        CHECK(std::abs(r.y * std::exp(-r.y) - z) <= 1e-12);
        CHECK(r.residual <= 1e-12);
    }
}

TEST_CASE("q_float") {
    CHECK(q_float(1) == 1.0);
    CHECK(q_float(2) == 1.5);
    const double q100 = q_float(100);
    CHECK(q100 > 12.0);
    CHECK(q100 < 12.3);

    SUBCASE("within one ulp of the exact value") {
        auto exact_of = [](double x) {
            const mpq_class m(x);
            return ExactRational(m.get_num(), m.get_den());
        };
        for (long n : {3L, 7L, 50L, 123L}) {
            const ExactRational exact = ramanujan_q(n);
            const double q = q_float(n);
            CHECK(exact_of(std::nextafter(q, 0.0)) < exact);
            CHECK(exact < exact_of(std::nextafter(q, 100.0)));
        }
    }
}

TEST_CASE("q_growth_check") {
    const std::vector<long> grid{100, 200, 400};
    const auto table = q_growth_check(grid);
    REQUIRE(table.rows.size() == 3);
    for (const auto& row : table.rows) {
        CHECK(row.ratio >= 0.97);
        CHECK(row.ratio <= 1.01);
    }
    CHECK(table.within_window);
    CHECK(table.monotone_from_below);

    const std::vector<long> one{1};
    const auto single = q_growth_check(one);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].ratio == doctest::Approx(0.7978845608).epsilon(1e-9));

    CHECK(q_growth_check(std::vector<long>{}).rows.empty());

    const auto shuffled = q_growth_check(std::vector<long>{200, 100});
    CHECK_FALSE(shuffled.monotone_from_below);
}
