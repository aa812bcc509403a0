#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "normext/winding.hpp"

using namespace normext;

TEST_CASE("hand-computed chord lengths") {
    // x = 1: the chord spans half a turn, (cos pi - 1)^2 + sin^2 pi = 4,
    // plus the height (2^-2 * 1)^2 = 1/16.
    CHECK(winding_norm(1, 1.0) == doctest::Approx(std::sqrt(4.0625)).epsilon(1e-15));
    // x = 0 is the zero element.
    CHECK(winding_norm(3, 0.0) == 0.0);
    // Negation symmetry.
    for (double x : {0.25, 1.0, 2.0, 17.5})
        CHECK(winding_norm(2, x) == doctest::Approx(winding_norm(2, -x)).epsilon(1e-15));
}

TEST_CASE("halving the generator collapses the norm") {
    for (int k = 1; k <= 20; ++k) {
        // 2 e_k winds a full turn: only the height 2^{-(k+1)} * 2 remains.
        CHECK(std::fabs(winding_norm(k, 2.0) - std::ldexp(1.0, -k)) <= 1e-12);
        // e_k itself spans half a turn and never drops below 2.
        CHECK(winding_norm(k, 1.0) > 2.0);
    }
}

TEST_CASE("pair distance agrees with the norm of the difference") {
    const double pts[] = {-7.25, -1.0, 0.0, 0.5, 3.0, 41.0};
    for (int k : {1, 4})
        for (double t : pts)
            for (double s : pts)
                CHECK(std::fabs(pair_distance(k, t, s) - winding_norm(k, t - s)) <= 1e-12);
}

TEST_CASE("sum norm adds the summand norms of the support") {
    FinSupportVector v;
    v.entries[1] = 1.0;
    v.entries[3] = 2.0;
    v.entries[5] = 0.0; // explicit zero entries do not contribute
    CHECK(sum_norm(v) ==
          doctest::Approx(winding_norm(1, 1.0) + winding_norm(3, 2.0)).epsilon(1e-15));
    CHECK(sum_norm(FinSupportVector{}) == 0.0);
}

TEST_CASE("discontinuity report rows are internally consistent") {
    const auto rows = discontinuity_report(12);
    REQUIRE(rows.size() == 12);
    for (int k = 1; k <= 12; ++k) {
        const auto& row = rows[static_cast<std::size_t>(k - 1)];
        CHECK(row.k == k);
        CHECK(row.e_norm == winding_norm(k, 1.0));
        CHECK(row.two_e_norm == winding_norm(k, 2.0));
        CHECK(row.ratio == row.e_norm / row.two_e_norm);
        CHECK(row.e_norm > 2.0);
        CHECK(std::fabs(row.two_e_norm - std::ldexp(1.0, -k)) <= 1e-12);
    }
    // The ratio diverges: each row at least (nearly) doubles the last.
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > 1.9 * rows[i - 1].ratio);
}

TEST_CASE("sampled metric checks pass and are deterministic") {
    const auto a = sample_winding_checks(2, 2000, 2000, 77);
    const auto b = sample_winding_checks(2, 2000, 2000, 77);
    CHECK(a.k == 2);
    CHECK(a.triangle_samples == 2000);
    CHECK(a.identity_samples == 2000);
    CHECK(a.triangle_max_violation <= 1e-12);
    CHECK(a.identity_max_err <= 1e-12);
    CHECK(a.triangle_max_violation == b.triangle_max_violation);
    CHECK(a.identity_max_err == b.identity_max_err);
    const auto c = sample_winding_checks(2, 2000, 2000, 78);
    CHECK(c.identity_max_err <= 1e-12);
}

TEST_CASE("summand index must be positive") {
    CHECK_THROWS_AS(winding_norm(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pair_distance(-1, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(discontinuity_report(0), std::invalid_argument);
    CHECK_THROWS_AS(sample_winding_checks(0, 1, 1, 1), std::invalid_argument);
}
