#include <doctest.h>

#include <random>

#include "trigbn/classifier.hpp"
#include "trigbn/harness.hpp"

using namespace trigbn;

namespace {

ComponentLabel label_at(std::vector<int> indices, long long degree) {
    return ComponentLabel{std::move(indices), degree};
}

} // namespace

TEST_CASE("class expression text round-trips") {
    auto expr = ClassExpr::parse("K - 2*T", 2);
    REQUIRE(expr.ok());
    CHECK(expr.value().kappa_coeff == 1);
    CHECK(expr.value().tau_coeff == -2);
    CHECK(expr.value().to_string() == "1*K - 2*T");

    expr = ClassExpr::parse("1*K - 2*T + 3*R(1,a)", 2);
    REQUIRE(expr.ok());
    CHECK(expr.value().remainder.multiplicity(PointLabel::real(1, "a")) == 3);
    CHECK(expr.value().to_string() == "1*K - 2*T + 3*R(1,a)");

    CHECK(ClassExpr::parse("0", 2).value().to_string() == "0");
    CHECK(!ClassExpr::parse("K +", 2).ok());
    CHECK(!ClassExpr::parse("2*X", 2).ok());
}

TEST_CASE("class signatures") {
    const CurveParams g5{5, 2, 1, 1};

    ClassExpr canonical(2);
    canonical.kappa_coeff = 1;
    auto sig = class_signature(g5, canonical);
    CHECK(sig.degree == 8);
    CHECK(sig.parity.is_zero());

    ClassExpr adjoint(2); // K - 2T ~ the distinguished point pair
    adjoint.kappa_coeff = 1;
    adjoint.tau_coeff = -2;
    sig = class_signature(g5, adjoint);
    CHECK(sig.degree == 2);
    CHECK(sig.parity.is_zero());
    CHECK(sig.delta() == 0);

    const CurveParams d3{6, 3, 3, 1};
    ClassExpr pencil(3);
    pencil.tau_coeff = 1;
    sig = class_signature(d3, pencil);
    CHECK(sig.degree == 3);
    CHECK(sig.parity.to_string() == "(1,1,1)");
    CHECK(sig.delta() == 3);
}

TEST_CASE("pencil members by shape") {
    const CurveParams g5{5, 3, 1, 1};

    auto member = pencil_member(g5, AllRealOn{2});
    REQUIRE(member.ok());
    CHECK(member.value().degree() == 3);
    CHECK(member.value().delta() == 1);
    CHECK(member.value().parity() == pencil_parity(g5));
    CHECK(member.value().multiplicity(PointLabel::real(1, "p2")) == 1);
    CHECK(member.value().multiplicity(PointLabel::real(2, "q2")) == 1);

    member = pencil_member(g5, WithPair{});
    REQUIRE(member.ok());
    CHECK(member.value().degree() == 3);
    CHECK(member.value().delta() == 1);

    CHECK(!pencil_member(g5, TripleForm{}).ok());

    const CurveParams d3{6, 3, 3, 1};
    member = pencil_member(d3, TripleForm{});
    REQUIRE(member.ok());
    CHECK(member.value().delta() == 3);
    CHECK(member.value().parity() == pencil_parity(d3));
    CHECK(!pencil_member(d3, AllRealOn{2}).ok());
    CHECK(!pencil_member(d3, WithPair{}).ok());
}

TEST_CASE("signature is invariant under swapping pencil members") {
    std::mt19937_64 rng(2025);
    const CurveParams p{9, 4, 1, 2};
    for (int trial = 0; trial < 200; ++trial) {
        ClassExpr expr(p.n);
        expr.kappa_coeff = static_cast<long long>(rng() % 5) - 2;
        expr.tau_coeff = static_cast<long long>(rng() % 5) - 2;
        for (int i = 0; i < 3; ++i)
            expr.remainder.add(PointLabel::real(1 + static_cast<int>(rng() % p.n),
                                                "x" + std::to_string(rng() % 3)),
                               static_cast<long long>(rng() % 5) - 2);

        const int c1 = 1 + static_cast<int>(rng() % p.n);
        const int c2 = 1 + static_cast<int>(rng() % p.n);
        const RealDivisor m1 = pencil_member(p, AllRealOn{c1}).value();
        const RealDivisor m2 = rng() % 2 == 0 ? pencil_member(p, AllRealOn{c2}).value()
                                              : pencil_member(p, WithPair{}).value();

        ClassExpr swapped = expr;
        swapped.remainder += m1 - m2; // both are representatives of T

        const Signature a = class_signature(p, expr);
        const Signature b = class_signature(p, swapped);
        CHECK(a.degree == b.degree);
        CHECK(a.parity == b.parity);
    }
}

TEST_CASE("Case1 certificate matches the quoted construction") {
    const CurveParams p{10, 1, 1, 2};
    auto cert = run_case(p, 8, 1, Case1{});
    REQUIRE(cert.ok());
    CHECK(cert.value().pass());
    // 2d - g - 3r = 3, so D2 = 2 q1 + q2 + q3
    CHECK(cert.value().d2.multiplicity(PointLabel::real(1, "q1")) == 2);
    CHECK(cert.value().d2.multiplicity(PointLabel::real(1, "q2")) == 1);
    CHECK(cert.value().d2.multiplicity(PointLabel::real(1, "q3")) == 1);
    CHECK(cert.value().target == label_at({}, 4)); // s = 4 even

    // deterministic: identical reruns give identical certificates
    auto again = run_case(p, 8, 1, Case1{});
    REQUIRE(again.ok());
    CHECK(again.value().to_string() == cert.value().to_string());

    CHECK(!run_case({10, 2, 1, 2}, 8, 1, Case1{}).ok()); // n != 1
    CHECK(!run_case(p, 7, 1, Case1{}).ok());             // outside the regime
}

TEST_CASE("Case2 certificates cover all label shapes") {
    // g = 12, m = 3, r = 1 sits in the regime with s = 4
    const CurveParams p{12, 4, 1, 3};
    const int d = 9, r = 1;

    auto cert = run_case(p, d, r, Case2{label_at({2, 3}, 4)});
    REQUIRE(cert.ok());
    CHECK(cert.value().pass());

    cert = run_case(p, d, r, Case2{label_at({}, 4)}); // V(0)
    REQUIRE(cert.ok());
    CHECK(cert.value().pass());

    cert = run_case(p, d, r, Case2{label_at({1, 2}, 4)}); // j_1 = 1
    REQUIRE(cert.ok());
    CHECK(cert.value().pass());

    cert = run_case(p, d, r, Case2{label_at({1, 2, 3, 4}, 4)}); // l = s with j_1 = 1
    REQUIRE(cert.ok());
    CHECK(cert.value().pass());

    // exceptional labels are the obstruction's business
    const CurveParams p5{12, 5, 1, 3};
    auto exceptional = run_case(p5, d, r, Case2{label_at({2, 3, 4, 5}, 4)});
    REQUIRE(!exceptional.ok());
    CHECK(run_case(p5, d, r, Theorem2Obstruction{label_at({2, 3, 4, 5}, 4)}).ok());
    // malformed labels
    CHECK(!run_case(p, d, r, Case2{label_at({2, 2}, 4)}).ok());
    CHECK(!run_case(p, d, r, Case2{label_at({2}, 4)}).ok()); // parity mismatch
    CHECK(!run_case(p, d, r, Case2{label_at({2, 3}, 6)}).ok()); // wrong degree
}

TEST_CASE("Case2 with an odd V-side degree handles single-index labels") {
    // g = 9, m = 2, r = 1: d = 7, s = 3
    const CurveParams p{9, 4, 1, 2};
    for (const auto& indices : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{4},
                                std::vector<int>{1, 2, 3}, std::vector<int>{1, 3, 4}}) {
        auto cert = run_case(p, 7, 1, Case2{label_at(indices, 3)});
        REQUIRE(cert.ok());
        CHECK(cert.value().pass());
    }
}

TEST_CASE("Case3 certificates") {
    // g = 8, m = 2: region point d = 6, r = 1, with two base points
    const CurveParams p{8, 3, 3, 2};
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            auto cert = run_case(p, 6, 1, Case3{std::array<int, 2>{i, j}});
            REQUIRE(cert.ok());
            CHECK(cert.value().pass());
            CHECK(cert.value().target == label_at({i, j}, 2));
        }
    auto v0 = run_case(p, 6, 1, Case3{std::nullopt});
    REQUIRE(v0.ok());
    CHECK(v0.value().pass());

    // single base point: the parameters are self-contradictory
    auto rejected = run_case({6, 3, 3, 1}, 5, 1, Case3{std::nullopt});
    REQUIRE(!rejected.ok());
    CHECK(rejected.error().kind == ErrorKind::InconsistentParams);

    CHECK(!run_case(p, 6, 1, Case3{std::array<int, 2>{2, 1}}).ok());
    CHECK(!run_case(p, 6, 1, Case3{std::array<int, 2>{1, 4}}).ok());
}

TEST_CASE("Case3 with one pencil translate pairs t1 with a base point") {
    // g = 10, m = 3, d = 7, r = 1: c = 1, three base points spread over circles
    const CurveParams p{10, 3, 3, 3};
    auto cert = run_case(p, 7, 1, Case3{std::nullopt});
    REQUIRE(cert.ok());
    CHECK(cert.value().pass());
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            auto pair_cert = run_case(p, 7, 1, Case3{std::array<int, 2>{i, j}});
            REQUIRE(pair_cert.ok());
            CHECK(pair_cert.value().pass());
        }
}

TEST_CASE("obstruction refutes the exceptional components") {
    auto cert = run_case({6, 3, 1, 1}, 5, 1, Theorem2Obstruction{label_at({2, 3}, 2)});
    REQUIRE(cert.ok());
    CHECK(cert.value().pass());

    // only exceptional labels qualify
    CHECK(!run_case({6, 3, 1, 1}, 5, 1, Theorem2Obstruction{label_at({1, 2}, 2)}).ok());
    CHECK(!run_case({6, 3, 1, 1}, 5, 1, Theorem2Obstruction{label_at({2}, 2)}).ok());
    // base point count must be 1: for g = 5 the segment carries 2
    CHECK(!run_case({5, 3, 1, 1}, 4, 1, Theorem2Obstruction{label_at({2, 3}, 2)}).ok());
}

TEST_CASE("certificates agree with the classifier across a small sweep") {
    for (int g = 5; g <= 12; ++g)
        for (int n = 1; n <= 5 && n <= g + 1; ++n)
            for (int deltaT : {1, 3})
                for (int m = 1; m <= g; ++m) {
                    const CurveParams p{g, n, deltaT, m};
                    if (!is_valid(p)) continue;
                    for (const auto& pt : admissible_region(p)) {
                        if (p.m >= pt.d - 2 * pt.r - 1) continue; // strict regime only
                        const long long s = 2LL * pt.d - g - 3LL * pt.r + 1;
                        const auto labels = enumerate_labels(n, s);

                        if (deltaT == 3 && pt.base_points != 1 && s % 2 == 0) {
                            for (const auto& label : labels) {
                                HarnessCase c = Case3{std::nullopt};
                                if (label.k() == 2)
                                    c = Case3{std::array<int, 2>{label.indices[0],
                                                                 label.indices[1]}};
                                else if (label.k() != 0)
                                    continue;
                                auto cert = run_case(p, pt.d, pt.r, c);
                                REQUIRE(cert.ok());
                                CHECK(cert.value().pass());
                            }
                        }
                        if (deltaT != 1) continue;

                        count_t exceptional = 0;
                        for (const auto& label : labels) {
                            const bool is_exceptional =
                                label.k() == static_cast<int>(s) && !label.indices.empty() &&
                                label.indices.front() != 1;
                            if (n == 1) continue; // Case1 territory
                            if (is_exceptional && pt.base_points == 1) {
                                auto cert =
                                    run_case(p, pt.d, pt.r, Theorem2Obstruction{label});
                                REQUIRE(cert.ok());
                                CHECK(cert.value().pass());
                                ++exceptional;
                            } else if (!is_exceptional) {
                                auto cert = run_case(p, pt.d, pt.r, Case2{label});
                                REQUIRE(cert.ok());
                                CHECK(cert.value().pass());
                            }
                        }
                        if (n == 1) {
                            auto cert = run_case(p, pt.d, pt.r, Case1{});
                            REQUIRE(cert.ok());
                            CHECK(cert.value().pass());
                        }
                        if (pt.base_points == 1) {
                            // exact count = components of U plus refuted components of V
                            auto c = classify(p, pt.d, pt.r);
                            REQUIRE(c.ok());
                            REQUIRE(c.value().is_exact());
                            CHECK(c.value().value ==
                                  s_n_k(n, pt.d - 3 * pt.r) + (n == 1 ? 0 : exceptional));
                            CHECK(exceptional == binomial(n - 1, s));
                        }
                    }
                }
}

TEST_CASE("lemma34_check") {
    auto res = lemma34_check({6, 3, 1, 1}, 5, 1);
    REQUIRE(res.ok());
    CHECK(res.value().verdict == "δ(T)=1 forced");
    CHECK(res.value().consistent[0]);
    CHECK(!res.value().consistent[1]);
    CHECK(res.value().reflected_delta[1] + res.value().translate_delta[1] == 3);

    res = lemma34_check({12, 2, 1, 3}, 9, 1);
    REQUIRE(res.ok());
    CHECK(res.value().verdict == "δ(T)=1 forced");

    CHECK(!lemma34_check({5, 2, 1, 1}, 4, 1).ok()); // two base points
}

TEST_CASE("lemma31_disjoint certifies the added counts") {
    auto report = lemma31_disjoint({6, 2, 1, 2}, 4, 1);
    REQUIRE(report.ok());
    CHECK(report.value().pass());
    CHECK(report.value().class_degree == 1); // 3d - g - 6r + 1

    CHECK(!lemma31_disjoint({5, 2, 1, 1}, 4, 1).ok());  // m = d-2r-1, not above it
    CHECK(!lemma31_disjoint({10, 2, 1, 2}, 4, 1).ok()); // g-d+r-1 > m
}
