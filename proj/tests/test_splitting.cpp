#include "chern/splitting.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace chern;

namespace {
SplittingType st(std::vector<long> e) { return SplittingType(std::move(e)); }
}  // namespace

TEST_CASE("splitting types must be non-increasing") {
    CHECK_THROWS_AS(st({}), std::invalid_argument);
    CHECK_THROWS_AS(st({0, 1}), std::invalid_argument);
    const SplittingType b = st({2, 0, -1});
    CHECK(b.sum() == 1);
    CHECK(b.sum_of_squares() == 5);
    CHECK(b.elementary(2) == -2);
    CHECK(b.diameter() == 3);
    CHECK(b.dual() == st({1, 0, -2}));
    CHECK(b.shifted(2) == st({4, 2, 1}));
    CHECK(b.str() == "[2,0,-1]");
}

TEST_CASE("no-gap sequences") {
    CHECK(no_gap(st({1, 0, -1})));
    CHECK_FALSE(no_gap(st({1, 1, -1})));
    CHECK(no_gap(st({5})));
}

TEST_CASE("componentwise order") {
    CHECK(leq(st({0, -1}), st({0, 0})));
    CHECK(leq(st({3, 1}), st({3, 1})));
    CHECK_FALSE(leq(st({1, 0}), st({0, 0})));
    CHECK_THROWS_AS(leq(st({1}), st({1, 0})), std::invalid_argument);
}

TEST_CASE("residue of c1 modulo the rank") {
    CHECK(cbar(7, 3) == 1);
    CHECK(cbar(-5, 4) == 1);
    CHECK(cbar(6, 4) == 2);
    CHECK(cbar(0, 1) == 0);
}

TEST_CASE("extremal no-gap sequences") {
    CHECK(extremal_nogap_sequence(4, 2) == st({2, 1, 0, -1}));
    CHECK(extremal_nogap_sequence(4, 2).sum_of_squares() == 6);
    CHECK(extremal_nogap_sequence(3, 0) == st({1, 0, -1}));
    CHECK(extremal_nogap_sequence(1, 5) == st({5}));
    CHECK(brute_force_max_sumsq(4, 2) == 6);
    CHECK(brute_force_max_sumsq(2, 0) == 0);
    CHECK(brute_force_max_sumsq(1, -7) == 49);
    CHECK_THROWS_AS(brute_force_max_sumsq(11, 0), std::length_error);
}

TEST_CASE("property: extremal construction matches enumeration") {
    for (long n = 1; n <= 8; ++n) {
        for (long c1 = -2 * n; c1 <= 2 * n; ++c1) {
            const SplittingType b = extremal_nogap_sequence(n, c1);
            CHECK(static_cast<long>(b.size()) == n);
            CHECK(b.sum() == c1);
            CHECK(no_gap(b));
            CHECK(b.sum_of_squares() == brute_force_max_sumsq(n, c1));
        }
    }
}

TEST_CASE("gst matrices") {
    const GstMatrix m(3, {st({0, 0}), st({0, -1}), st({-1, -1})});
    CHECK(m.complete());
    CHECK(m.rank() == 2);
    CHECK(m.require_row(2) == st({0, -1}));
    CHECK_THROWS_AS(GstMatrix(2, {st({0, 0}), st({1, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(GstMatrix(2, {st({0, 0}), st({0})}), std::invalid_argument);
    const GstMatrix partial(3, {st({0, 0}), std::nullopt, st({-1, -1})});
    CHECK_FALSE(partial.complete());
    CHECK_THROWS_AS(partial.require_row(2), std::invalid_argument);
}

TEST_CASE("invariant sets convert to the full set") {
    InvariantInput bc2;
    bc2.rank = 3;
    bc2.b = st({1, 0, -1});
    bc2.c2 = Integer(5);
    const InvariantSet full = invariant_convert(bc2);
    CHECK(full.c1 == 0);
    CHECK(full.d == 2);
    CHECK(*full.delta2 == 6);

    InvariantInput bd;
    bd.rank = 4;
    bd.b = st({0, 0, 0, 0});
    bd.delta2 = Integer(7);
    CHECK(*invariant_convert(bd).c2 == 7);

    InvariantInput cd;
    cd.rank = 3;
    cd.c1 = Integer(0);
    cd.c2 = Integer(2);
    cd.d = 2;
    const InvariantSet loose = invariant_convert(cd);
    CHECK(loose.entry_lower == Rational(-2));
    CHECK(loose.entry_upper == Rational(2));

    InvariantInput bad;
    bad.rank = 2;
    bad.c1 = Integer(0);
    CHECK_THROWS_AS(invariant_convert(bad), std::invalid_argument);
}

TEST_CASE("property: splitting types with given sum and diameter") {
    for (long n = 1; n <= 4; ++n) {
        for (long c1 = -3; c1 <= 3; ++c1) {
            for (long d = 0; d <= 3; ++d) {
                const auto found = splitting_types_with(n, c1, d);
                std::size_t expect = 0;
                for (const auto& b : testing::all_splittings(static_cast<std::size_t>(n), -6, 6)) {
                    if (b.sum() == c1 && b.diameter() == d) {
                        ++expect;
                    }
                }
                CHECK(found.size() == expect);
                for (const auto& b : found) {
                    CHECK(b.sum() == c1);
                    CHECK(b.diameter() == d);
                }
            }
        }
    }
}
