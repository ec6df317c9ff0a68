#include <doctest.h>

#include "trigbn/cohomology.hpp"
#include "trigbn/curve.hpp"

using namespace trigbn;

namespace {

// h0(kT) via Riemann-Roch: 3k - g + 1 + h0(K - kT).
long long h0_of_pencil_multiple(const CurveParams& p, int k) {
    return 3LL * k - p.g + 1 + h0_twist(p, -k).h0;
}

} // namespace

TEST_CASE("twist fixtures for the genus-5 case") {
    const CurveParams p{5, 2, 1, 1};

    auto t = h0_twist(p, 0);
    CHECK(t.h0 == 5); // h0(K) = g
    CHECK(t.degree == 8);

    t = h0_twist(p, -1);
    CHECK(t.h0 == 3);
    CHECK(t.degree == 5);

    t = h0_twist(p, -2);
    CHECK(t.h0 == 1);
    CHECK(t.summands == std::array<long long, 3>{1, 0, 0});
    CHECK(t.degree == 2);
}

TEST_CASE("canonical, adjoint and pencil dimensions across all valid parameters") {
    for (int g = 5; g <= 30; ++g) {
        const auto [lo, hi] = maroni_range(g);
        for (int m = lo; m <= hi; ++m) {
            const CurveParams p{g, 1, 1, m};
            REQUIRE(is_valid(p));
            CHECK(h0_twist(p, 0).h0 == g);
            CHECK(h0_twist(p, -1).h0 == g - 2);
            CHECK(h0_of_pencil_multiple(p, 1) == 2); // T is a pencil
        }
    }
}

TEST_CASE("h0 is nondecreasing in the twist") {
    const CurveParams p{12, 4, 1, 3};
    long long prev = h0_twist(p, -12).h0;
    for (int k = -11; k <= 12; ++k) {
        const long long cur = h0_twist(p, k).h0;
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("uv_intersection_possible examples") {
    CHECK(uv_intersection_possible({5, 2, 1, 1}, 4, 1));
    CHECK(!uv_intersection_possible({6, 2, 1, 2}, 4, 1));
    CHECK(uv_intersection_possible({12, 4, 1, 3}, 9, 1));
}

TEST_CASE("uv_intersection_possible agrees with the vanishing criterion") {
    for (int g = 5; g <= 20; ++g) {
        const auto [lo, hi] = maroni_range(g);
        for (int m = lo; m <= hi; ++m) {
            const CurveParams p{g, 1, 1, m};
            for (int d = 0; d < g; ++d)
                for (int r = 1; r <= 10; ++r) {
                    const bool via_inequality = uv_intersection_possible(p, d, r);
                    const bool via_h0 = h0_twist(p, -(g - d + 2 * r - 1)).h0 > 0;
                    CHECK(via_inequality == via_h0);
                }
        }
    }
}

TEST_CASE("witness class degree helper") {
    CHECK(uv_witness_class_degree({5, 2, 1, 1}, 4, 1) == 2);
    CHECK(uv_witness_class_degree({12, 4, 1, 3}, 9, 1) == 10);
}

TEST_CASE("base_point_count") {
    auto count = base_point_count({5, 2, 1, 1}, 4, 1);
    REQUIRE(count.ok());
    CHECK(count.value() == 2);

    count = base_point_count({6, 3, 1, 1}, 5, 1);
    REQUIRE(count.ok());
    CHECK(count.value() == 1);

    count = base_point_count({12, 4, 1, 3}, 9, 1);
    REQUIRE(count.ok());
    CHECK(count.value() == 1);

    CHECK(!base_point_count({7, 2, 1, 2}, 6, 1).ok());  // g-d+r-1 != m
    CHECK(!base_point_count({10, 2, 1, 4}, 6, 1).ok()); // m > d-2r-1
}

TEST_CASE("lemma_gdm_membership") {
    auto member = lemma_gdm_membership({5, 2, 1, 1}, 4, 1);
    REQUIRE(member.ok());
    CHECK(member.value());

    member = lemma_gdm_membership({7, 2, 1, 2}, 6, 1);
    REQUIRE(member.ok());
    CHECK(!member.value());

    member = lemma_gdm_membership({12, 4, 1, 3}, 9, 1);
    REQUIRE(member.ok());
    CHECK(member.value());

    CHECK(!lemma_gdm_membership({5, 2, 1, 1}, 4, 2).ok()); // outside the precondition
}

TEST_CASE("membership equality matches the cohomological criterion") {
    for (int g = 5; g <= 20; ++g) {
        const auto [lo, hi] = maroni_range(g);
        for (int m = lo; m <= hi; ++m) {
            const CurveParams p{g, 1, 1, m};
            for (int d = 1; d < g; ++d)
                for (int r = 1; 3 * r <= d; ++r) {
                    auto member = lemma_gdm_membership(p, d, r);
                    if (!member.ok()) continue;
                    const bool via_h0 = h0_twist(p, -(d - r - 1)).h0 > 0;
                    CHECK(member.value() == via_h0);
                }
        }
    }
}
