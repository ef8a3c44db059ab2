#include <doctest.h>

#include "spinsym/golden.hpp"
#include "spinsym/spin_green.hpp"

using namespace spinsym;

namespace {

struct Fixture {
    VertexEngine v;
    QKostkaEngine k{v};
    SpinGreenEngine g{k};
};

}  // namespace

TEST_SUITE("spin_green") {

TEST_CASE("sample value") {
    Fixture f;
    const TPoly expected = TPoly({0, -2, 0, 2});  // 2t(t^2-1)
    CHECK(f.g.y_recursive(Partition{4, 3}, Partition{5, 1, 1}) == expected);
    CHECK(f.g.y_direct(Partition{4, 3}, Partition{5, 1, 1}) == expected);
    CHECK(f.g.y_via_l(Partition{4, 3}, Partition{5, 1, 1}) == expected);
    CHECK(y_two_row(4, 7, Partition{5, 1, 1}) == expected);
}

TEST_CASE("three routes agree") {
    Fixture f;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : enumerate_strict(n)) {
            for (const auto& mu : enumerate_odd(n)) {
                CAPTURE(lambda.to_string());
                CAPTURE(mu.to_string());
                const TPoly y = f.g.y_recursive(lambda, mu);
                CHECK(y == f.g.y_direct(lambda, mu));
                CHECK(y == f.g.y_via_l(lambda, mu));
            }
        }
    }
}

TEST_CASE("one-row and two-row closed forms") {
    Fixture f;
    for (int n = 1; n <= 9; ++n) {
        for (const auto& mu : enumerate_odd(n)) {
            CHECK(f.g.y_recursive(Partition{n}, mu) == TPoly(1));
            for (int k = n / 2 + 1; k < n; ++k) {
                CHECK(y_two_row(k, n, mu) == f.g.y_recursive(Partition{k, n - k}, mu));
            }
        }
    }
}

TEST_CASE("input validation") {
    Fixture f;
    CHECK_THROWS_AS(f.g.y_recursive(Partition{2, 2}, Partition{3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(f.g.y_recursive(Partition{3, 1}, Partition{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(f.g.y_direct(Partition{3}, Partition{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(f.g.y_table(-1), std::invalid_argument);
    CHECK_THROWS_AS(y_two_row(2, 4, Partition{3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(y_two_row(4, 4, Partition{3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(y_two_row(3, 4, Partition{3}), std::invalid_argument);
    CHECK_THROWS_AS(f.g.spin_character(Partition{3, 1}, Partition{2, 1, 1}), std::invalid_argument);
}

TEST_CASE("spin characters of the double cover of S_4") {
    Fixture f;
    const SpinCharTable z = f.g.spin_char_table(4);
    CHECK(z.kind == "zeta");
    CHECK(z.rows == std::vector<Partition>{{4}, {3, 1}});
    CHECK(z.cols == std::vector<Partition>{{3, 1}, {1, 1, 1, 1}});
    CHECK(z.entries == std::vector<std::vector<Rational>>{{1, 2}, {-1, 4}});
}

TEST_CASE("character degrees square-sum to n!") {
    // Associate pairs (n - l(lambda) odd) count twice.
    Fixture f;
    long factorial = 1;
    for (int n = 1; n <= 9; ++n) {
        factorial *= n;
        Rational total = 0;
        const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lambda : enumerate_strict(n)) {
            const Rational d = f.g.spin_character(lambda, ones);
            total += d * d * (epsilon(lambda) == 1 ? 2 : 1);
        }
        CHECK(total == factorial);
    }
}

TEST_CASE("tables match the published data for n = 3..6") {
    Fixture f;
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(f.g.y_table(n, 2) == golden_y_table(n).to_table());
    }
}

TEST_CASE("published n = 7 table contradicts the two-row formula in one cell") {
    Fixture f;
    const YTable published = golden_y_table(7).to_table();
    const YTable computed = f.g.y_table(7, 2);
    REQUIRE(published.rows == computed.rows);
    REQUIRE(published.cols == computed.cols);
    const Partition lambda{4, 3}, mu{3, 1, 1, 1, 1};
    CHECK(published.at(lambda, mu) == TPoly::parse("2t^3+4t-1"));
    CHECK(y_two_row(4, 7, mu) == TPoly::parse("2t^3+4t^2-1"));
    CHECK(computed.at(lambda, mu) == y_two_row(4, 7, mu));
    int differing = 0;
    for (std::size_t r = 0; r < computed.rows.size(); ++r) {
        for (std::size_t c = 0; c < computed.cols.size(); ++c) {
            if (computed.entries[r][c] != published.entries[r][c]) ++differing;
        }
    }
    CHECK(differing == 1);
}

TEST_CASE("golden lookup") {
    CHECK(golden_y_tables().size() == 5);
    CHECK_THROWS(golden_y_table(8));
    CHECK(golden_y_table(3).to_table().at(Partition{2, 1}, Partition{1, 1, 1}) == TPoly({1, 2}));
}

TEST_CASE("parallel table equals serial table") {
    Fixture a, b;
    CHECK(a.g.y_table(8, 1) == b.g.y_table(8, 6));
}

}
