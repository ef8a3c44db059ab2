#include <doctest.h>

#include <thread>

#include "spinsym/vertex_ops.hpp"

using namespace spinsym;

namespace {

const TPoly t = TPoly::t();

GammaElement p(const Partition& mu) { return GammaElement::p_monomial(mu); }

GammaElement at_zero(const GammaElement& f) {
    GammaElement out;
    for (const auto& [mu, c] : f.terms()) out.add_term(mu, TPoly(c.eval(0)));
    return out;
}

}  // namespace

TEST_SUITE("vertex_ops") {

TEST_CASE("one-row generators") {
    VertexEngine v;
    CHECK(v.q_row(0) == GammaElement::one());
    CHECK(v.q_row(-1).is_zero());
    CHECK(v.q_row(1) == p({1}) * TPoly(2));
    CHECK(v.q_row(2) == p({1, 1}) * TPoly(2));
    // q_3 = 2/3 p_3 + 4/3 p_1^3
    CHECK(v.q_row(3) == p({3}) * TPoly(Rational(2, 3)) + p({1, 1, 1}) * TPoly(Rational(4, 3)));
    CHECK(v.schur_q(Partition{1}) == p({1}) * TPoly(2));
}

TEST_CASE("annihilation kills the vacuum for positive modes") {
    VertexEngine v;
    for (int m = 1; m <= 5; ++m) {
        CHECK(v.apply(OperatorSpec::schur_q(), -m, GammaElement::one()).is_zero());
        CHECK(v.apply(OperatorSpec::hall_littlewood(), -m, GammaElement::one()).is_zero());
        CHECK(v.apply(OperatorSpec::hall_littlewood_dual(), m, GammaElement::one()).is_zero());
    }
    CHECK(v.apply(OperatorSpec::schur_q(), 0, GammaElement::one()) == GammaElement::one());
}

TEST_CASE("Q functions are orthogonal") {
    VertexEngine v;
    for (int n = 0; n <= 7; ++n) {
        for (const auto& a : enumerate_strict(n)) {
            for (const auto& b : enumerate_strict(n)) {
                const TPoly expected = a == b ? TPoly(pow2(static_cast<int>(a.length()))) : TPoly();
                CHECK(pair(v.schur_q(a), v.schur_q(b)) == expected);
            }
        }
    }
}

TEST_CASE("schur_q and qhl reject non-strict indices") {
    VertexEngine v;
    CHECK_THROWS_AS(v.schur_q(Partition{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(v.qhl(Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("Hall-Littlewood functions specialise to Q at t = 0") {
    VertexEngine v;
    for (int n = 0; n <= 7; ++n) {
        for (const auto& lambda : enumerate_strict(n)) CHECK(at_zero(v.qhl(lambda)) == v.schur_q(lambda));
    }
}

TEST_CASE("expansions of G in the Q basis") {
    VertexEngine v;
    const QExpansion g32 = v.q_expansion(v.qhl(Partition{3, 2}));
    CHECK(g32 == QExpansion{{Partition{5}, TPoly::monomial(2, 2)},
                            {Partition{4, 1}, TPoly::monomial(2, 1)},
                            {Partition{3, 2}, TPoly(1)}});
    const QExpansion g41 = v.q_expansion(v.qhl(Partition{4, 1}));
    CHECK(g41 == QExpansion{{Partition{5}, TPoly::monomial(2, 1)}, {Partition{4, 1}, TPoly(1)}});
    CHECK(v.q_expansion(v.qhl(Partition{5})) == QExpansion{{Partition{5}, TPoly(1)}});
}

TEST_CASE("inner product of two Hall-Littlewood functions") {
    VertexEngine v;
    CHECK(pair(v.qhl(Partition{3, 2}), v.qhl(Partition{4, 1})) == TPoly({0, 8, 0, 8}));
}

TEST_CASE("G_1 G_1 on the vacuum") {
    VertexEngine v;
    CHECK(v.qhl_modes({1, 1}) == v.schur_q(Partition{2}) * t * TPoly(2));
    CHECK(v.apply_sequence(OperatorSpec::hall_littlewood(), {1, 1}, GammaElement::one()) == v.qhl_modes({1, 1}));
}

TEST_CASE("Q_n Q_-n anticommutator on a sample vector") {
    VertexEngine v;
    const auto Q = OperatorSpec::schur_q();
    const GammaElement f = p({3, 1});
    for (int n = 1; n <= 4; ++n) {
        const GammaElement lhs = v.apply(Q, n, v.apply(Q, -n, f)) + v.apply(Q, -n, v.apply(Q, n, f));
        CHECK(lhs == f * TPoly(n % 2 == 0 ? 2 : -2));
    }
    CHECK(v.apply(Q, 2, v.apply(Q, 2, GammaElement::one())).is_zero());
}

TEST_CASE("vacuum expansion of G*_{-n}") {
    VertexEngine v;
    for (int n = 0; n <= 7; ++n) {
        GammaElement expected;
        for (const auto& rho : enumerate_odd(n)) expected.add_term(rho, inv_z_t(rho));
        CHECK(v.apply(OperatorSpec::hall_littlewood_dual(), -n, GammaElement::one()) == expected);
    }
}

TEST_CASE("closed form for G*_k on Q_lambda") {
    VertexEngine v;
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lambda : enumerate_strict(n)) {
            for (int k = 1; k <= 6; ++k) {
                CHECK(v.gstar_on_schur(k, lambda) ==
                      v.apply(OperatorSpec::hall_littlewood_dual(), k, v.schur_q(lambda)));
            }
        }
    }
}

TEST_CASE("concurrent use matches serial results") {
    VertexEngine serial, shared;
    std::vector<Partition> all;
    for (int n = 0; n <= 8; ++n) for (auto& l : enumerate_strict(n)) all.push_back(l);
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i) {
        threads.emplace_back([&] {
            for (const auto& l : all) {
                shared.schur_q(l);
                shared.qhl(l);
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& l : all) {
        CHECK(shared.schur_q(l) == serial.schur_q(l));
        CHECK(shared.qhl(l) == serial.qhl(l));
    }
}

TEST_CASE("memo seeding is honoured") {
    VertexEngine a, b;
    a.schur_q(Partition{3, 1});
    for (const auto& [k, val] : a.schur_q_entries()) b.seed_schur_q(k, val);
    CHECK(b.schur_q_entries() == a.schur_q_entries());
    CHECK(b.schur_q(Partition{3, 1}) == a.schur_q(Partition{3, 1}));
}

}
