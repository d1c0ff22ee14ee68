#include "chern/riemann_roch.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace chern;

namespace {
ChernData cd(long rank, std::vector<long> c) {
    std::vector<Integer> v(c.begin(), c.end());
    const int n = static_cast<int>(v.size());
    return ChernData(n, rank, std::move(v));
}
Rational q(long a, long b = 1) { return Rational(a, b); }
}  // namespace

TEST_CASE("chern character") {
    CHECK(chern_character(ChernData::trivial(3, 4)).series == TruncatedSeries(3, {q(4), q(0), q(0), q(0)}));
    CHECK(chern_character(cd(1, {1, 0})).series == TruncatedSeries(2, {q(1), q(1), q(1, 2)}));
    CHECK(chern_character(cd(2, {0, -1})).series == TruncatedSeries(2, {q(2), q(0), q(1)}));
    CHECK(chern_character(cd(2, {0, -1})).power_sum(2) == q(2));
}

TEST_CASE("todd class of projective space") {
    CHECK(todd_class(1) == TruncatedSeries(1, {q(1), q(1)}));
    CHECK(todd_class(2) == TruncatedSeries(2, {q(1), q(3, 2), q(1)}));
    for (int n = 1; n <= 6; ++n) {
        CHECK(todd_class(n)[static_cast<std::size_t>(n)] == q(1));
    }
    CHECK_THROWS_AS(todd_class(0), std::invalid_argument);
}

TEST_CASE("euler characteristics") {
    CHECK(euler_char(ChernData::trivial(2, 1)) == q(1));
    CHECK(euler_char(cd(2, {0, 1})) == q(1));
    CHECK(euler_char(cd(2, {0, 1, 0})) == q(0));
    CHECK(euler_char_poly(ChernData::trivial(3, 1)) == binom_poly(3));

    // binom(t+2,3) + binom(t+4,3) - 2t - 4
    const Polynomial nc = binom_poly(3).shifted(q(-1)) + binom_poly(3).shifted(q(1)) -
                          Polynomial({q(4), q(2)});
    CHECK(euler_char_poly(cd(2, {0, 1, 0})) == nc);
}

TEST_CASE("property: surface formula") {
    testing::Gen g(31);
    for (int round = 0; round < 200; ++round) {
        const long n = g.range(1, 8);
        const Integer c1 = g.integer(-50, 50);
        const Integer c2 = g.integer(-200, 200);
        const Rational expect = Rational(c1 * c1 + 3 * c1, Integer(2)) - Rational(c2) + Rational(n);
        CHECK(euler_char(ChernData(2, n, {c1, c2})) == expect);
    }
}

TEST_CASE("property: split bundles count sections") {
    testing::Gen g(32);
    for (int round = 0; round < 300; ++round) {
        const int n_dim = static_cast<int>(g.range(1, 6));
        const SplittingType b = g.splitting(static_cast<std::size_t>(g.range(1, 4)), -3, 3);
        const Polynomial chi = euler_char_poly(split_chern(b, n_dim));
        Polynomial sum;
        for (long x : b.entries()) {
            sum += binom_poly(static_cast<unsigned>(n_dim)).shifted(q(x));
        }
        CHECK(chi == sum);
        for (long t = -b.last(); t <= -b.last() + 5; ++t) {
            Integer h0 = 0;
            for (long x : b.entries()) {
                h0 += h0_line_bundle(x + t, static_cast<unsigned>(n_dim));
            }
            CHECK(chi(q(t)) == Rational(h0));
        }
    }
}

TEST_CASE("property: chi of a twist is the shifted polynomial") {
    testing::Gen g(33);
    for (int round = 0; round < 200; ++round) {
        const int n_dim = static_cast<int>(g.range(1, 5));
        const ChernData c = g.chern(n_dim, g.range(1, 4), -6, 6);
        const Polynomial p = euler_char_poly(c);
        CHECK(p.degree() <= n_dim);
        CHECK(p(q(0)) == euler_char(c));
        const long l = g.range(-4, 4);
        CHECK(euler_char_poly(twist_numeric(c, l)) == p.shifted(q(l)));
        CHECK(euler_char(twist_numeric(c, l)) == p(q(l)));
    }
}
