#include <doctest.h>

#include <random>
#include <vector>

#include "trigbn/components.hpp"

using namespace trigbn;

namespace {

// Pascal-triangle oracle, independent of binomial().
count_t pascal(int n, long long k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<count_t>> rows(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

count_t snk_oracle(int n, long long d) {
    if (d < 0) return 0;
    count_t total = 0;
    for (long long k = d % 2; k <= d; k += 2) total += pascal(n, k);
    return total;
}

} // namespace

TEST_CASE("binomial") {
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("s_n_k examples") {
    CHECK(s_n_k(3, 2) == 4);
    for (int n = 1; n <= 10; ++n) CHECK(s_n_k(n, 0) == 1);
    CHECK(s_n_k(1, 5) == 1);
    CHECK(s_n_k(4, 3) == 8);
    CHECK(s_n_k(5, -1) == 0);
    CHECK(s_n_k(64, 120) == (count_t{1} << 63)); // stabilized, exact at the type's edge
}

TEST_CASE("enumerate_labels examples") {
    auto labels = enumerate_labels(3, 2);
    REQUIRE(labels.size() == 4);
    CHECK(labels[0].indices.empty());
    CHECK(labels[1].indices == std::vector<int>{1, 2});
    CHECK(labels[2].indices == std::vector<int>{1, 3});
    CHECK(labels[3].indices == std::vector<int>{2, 3});
    CHECK(labels[0].to_string() == "V(0)@2");
    CHECK(labels[3].to_string() == "V(2,3)@2");

    labels = enumerate_labels(1, 4);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].indices.empty());

    labels = enumerate_labels(2, 1);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0].indices == std::vector<int>{1});
    CHECK(labels[1].indices == std::vector<int>{2});
}

TEST_CASE("labels come out in lexicographic order with no repeats") {
    const auto labels = enumerate_labels(4, 5);
    for (std::size_t i = 1; i < labels.size(); ++i) {
        CHECK(std::lexicographical_compare(labels[i - 1].indices.begin(),
                                           labels[i - 1].indices.end(),
                                           labels[i].indices.begin(),
                                           labels[i].indices.end()));
    }
    for (const auto& label : labels) CHECK(label_valid(label, 4));
}

TEST_CASE("enumeration length matches the closed formula and an independent oracle") {
    for (int n = 1; n <= 8; ++n)
        for (long long d = 0; d <= 12; ++d) {
            const count_t formula = s_n_k(n, d);
            CHECK(enumerate_labels(n, d).size() == formula);
            CHECK(formula == snk_oracle(n, d));
        }
}

TEST_CASE("component counts stabilize at 2^(n-1)") {
    for (int n = 1; n <= 10; ++n)
        for (long long d = n; d <= 2 * n; ++d)
            CHECK(s_n_k(n, d) == (count_t{1} << (n - 1)));
}

TEST_CASE("labels with exactly k indices number C(n,k)") {
    const int n = 5;
    const long long d = 7;
    std::vector<count_t> by_k(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& label : enumerate_labels(n, d)) ++by_k[static_cast<std::size_t>(label.k())];
    for (int k = 0; k <= n; ++k) {
        const bool parity_ok = (d - k) % 2 == 0 && k <= d;
        CHECK(by_k[static_cast<std::size_t>(k)] == (parity_ok ? pascal(n, k) : 0));
    }
}

TEST_CASE("label_of reads the odd circles") {
    RealDivisor pair(3);
    pair.add(PointLabel::pair("x"), 1);
    auto label = label_of(pair);
    REQUIRE(label.ok());
    CHECK(label.value() == ComponentLabel{{}, 2});

    RealDivisor d(2);
    d.add(PointLabel::real(1, "p"), 1);
    d.add(PointLabel::real(2, "q"), 1);
    d.add(PointLabel::real(2, "qt"), 1);
    label = label_of(d);
    REQUIRE(label.ok());
    CHECK(label.value() == ComponentLabel{{1}, 3});

    RealDivisor t(3);
    for (int c = 1; c <= 3; ++c) t.add(PointLabel::real(c, "t"), 1);
    label = label_of(t);
    REQUIRE(label.ok());
    CHECK(label.value() == ComponentLabel{{1, 2, 3}, 3});

    RealDivisor bad(2);
    bad.add(PointLabel::real(1, "p"), -1);
    CHECK(!label_of(bad).ok());
}

TEST_CASE("adding a conjugate pair keeps the pseudo-lines") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        RealDivisor d(n);
        const int terms = static_cast<int>(rng() % 6);
        for (int i = 0; i < terms; ++i)
            d.add(PointLabel::real(1 + static_cast<int>(rng() % n),
                                   "x" + std::to_string(rng() % 4)),
                  static_cast<long long>(rng() % 3));
        RealDivisor with_pair = d;
        with_pair.add(PointLabel::pair("fresh"), 1);
        const auto before = label_of(d);
        const auto after = label_of(with_pair);
        REQUIRE(before.ok());
        REQUIRE(after.ok());
        CHECK(after.value().indices == before.value().indices);
        CHECK(after.value().degree == before.value().degree + 2);
    }
}

TEST_CASE("count_w0") {
    CHECK(count_w0({5, 2, 1, 1}, 3) == 2);
    CHECK(count_w0({5, 3, 1, 1}, 2) == 4);
    for (long long d = 5; d <= 10; ++d) CHECK(count_w0({7, 5, 1, 1}, d) == 16);
    // against the enumeration oracle
    for (long long d = 1; d <= 9; ++d)
        CHECK(count_w0({8, 4, 1, 2}, d) == enumerate_labels(4, d).size());
}

TEST_CASE("label validity rules") {
    CHECK(label_valid({{1, 3}, 4}, 3));
    CHECK(!label_valid({{3, 1}, 4}, 3));  // not increasing
    CHECK(!label_valid({{1, 4}, 4}, 3));  // index beyond n
    CHECK(!label_valid({{1, 2}, 3}, 3));  // parity mismatch
    CHECK(!label_valid({{1, 2}, 1}, 3));  // k > d
    CHECK(label_valid({{}, 0}, 3));
}
