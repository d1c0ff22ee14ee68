#include "chern/bounds.hpp"
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
SplittingType st(std::vector<long> e) { return SplittingType(std::move(e)); }

GstMatrix null_correlation_gst() { return GstMatrix(3, {st({0, 0}), st({0, -1}), st({-1, -1})}); }

// Rows of the extension 0 -> O^{n-1} -> F -> I_L -> 0 on P^3.
GstMatrix line_extension_gst(long n) {
    std::vector<long> zero(static_cast<std::size_t>(n), 0);
    std::vector<long> low = zero;
    low.back() = -1;
    return GstMatrix(3, {st(zero), st(low), st(low)});
}

// h^i of O(b)(k) on P^N.
Integer split_h(const SplittingType& b, int n_dim, int i, long k) {
    Integer h = 0;
    for (long x : b.entries()) {
        if (i == 0) {
            h += h0_line_bundle(x + k, static_cast<unsigned>(n_dim));
        } else if (i == n_dim) {
            h += h0_line_bundle(-x - k - n_dim - 1, static_cast<unsigned>(n_dim));
        }
    }
    return h;
}
}  // namespace

TEST_CASE("section counts of the splitting type") {
    CHECK(h0_upper(st({0, 0}), 3) == 2);
    CHECK(h0_upper(st({2, -1}), 2) == 6);
    for (long n = 1; n <= 4; ++n) {
        for (int N = 1; N <= 5; ++N) {
            CHECK(h0_upper(st(std::vector<long>(static_cast<std::size_t>(n), 1)), N) == n * (N + 1));
        }
    }
    CHECK(hN_upper(st({0, 0}), 3) == 0);
    CHECK(hN_upper(st({-4}), 2) == 3);
    CHECK(hN_upper(st({-3}), 2) == 1);
}

TEST_CASE("section bound from global-section types") {
    CHECK(grossa_rhs(null_correlation_gst()) == 2);
    const SplittingType b = st({2, 1, -1});
    CHECK(grossa_rhs(GstMatrix(3, {b, b, b})) == 0);
    for (long n = 1; n <= 4; ++n) {
        CHECK(grossa_rhs(line_extension_gst(n)) == 1);
    }
    CHECK_THROWS_AS(grossa_rhs(GstMatrix(2, {st({0}), std::nullopt})), std::invalid_argument);
    CHECK(grossa_rhs(null_correlation_gst(), GrossaReading::literal) >= 0);
}

TEST_CASE("twisted section bound") {
    for (long t = 1; t <= 20; ++t) {
        CHECK(rigrossa_rhs(null_correlation_gst(), t) == t + 2);
        CHECK(rigrossa_rhs(line_extension_gst(3), t) == t + 1);
    }
    CHECK_THROWS_AS(rigrossa_rhs(null_correlation_gst(), 0), std::invalid_argument);
}

TEST_CASE("upper section bounds from the plane type") {
    CHECK(menogrande2_rhs(st({1, 0}), st({1, 0}), 3) == h0_upper(st({1, 0}), 3));
    // 8 - h0_{P^1}(0) h0_{P^2}(0)
    CHECK(menogrande2_rhs(st({1, 1}), st({1, 0}), 3) == 7);
    CHECK(menogrande2_rhs(st({2}), st({0}), 2) == 3);
    CHECK_THROWS_AS(menogrande2_rhs(st({0, 0}), st({1, 0}), 3), std::invalid_argument);
    CHECK(menogrande_rhs(st({1, 1}), st({1, 0}), 3) >= menogrande2_rhs(st({1, 1}), st({1, 0}), 3));
}

TEST_CASE("second Chern class floor") {
    CHECK(c2_lower(st({0, 0}), st({0, -1})) == 1);
    CHECK(c2_lower(st({2, -2}), st({2, -3})) == -3);
    CHECK(c2_lower(st({3, 1, -2}), st({3, 1, -2})) == st({3, 1, -2}).elementary(2));
    CHECK_THROWS_AS(c2_lower(st({0, 0}), st({1, 0})), std::invalid_argument);
    CHECK(c2_twisted(cd(2, {0, -3})) == Polynomial({Rational(-3), Rational(0), Rational(1)}));
}

TEST_CASE("twists with non-positive second class") {
    CHECK(negative_c2_window(cd(2, {0, -3})).values == std::vector<long>{-1, 0, 1});
    CHECK(negative_c2_window(cd(2, {0, 1})).values.empty());
    CHECK(negative_c2_window(cd(2, {0, 0})).values == std::vector<long>{0});
    CHECK(negative_c2_window(cd(1, {0, -2})).unbounded);
    CHECK_FALSE(negative_c2_window(cd(1, {0, 2})).unbounded);
    for (long b = 1; b <= 5; ++b) {
        const TwistWindow w = negative_c2_window(cd(2, {0, 1 - b * b}));
        CHECK(static_cast<long>(w.values.size()) == 2 * b - 1);
        CHECK(w.values.front() == -b + 1);
        CHECK(w.values.back() == b - 1);
    }
}

TEST_CASE("discriminant floors") {
    CHECK(delta_lower_nogap(3, 0) == -6);
    CHECK(delta_lower_uniform(3) == -6);
    CHECK(delta_lower_nogap(4, 2) == -20);
    CHECK(delta_lower_uniform(4) == -20);
    CHECK(delta_lower_nogap(2, 0) == 0);
    CHECK(delta_lower_uniform(2) == -1);
    CHECK(semistable_delta_floor(2, true) == Rational(3));
    CHECK(semistable_delta_floor(2, false) == Rational(4));
    CHECK(semistable_delta_floor(4, true) == Rational(12));
}

TEST_CASE("property: discriminant floor is attained by the extremal sequence") {
    for (long n = 2; n <= 10; ++n) {
        for (long c1 = -2 * n; c1 <= 2 * n; ++c1) {
            // Delta of O(b) is c1^2 - n sum b^2.
            const SplittingType b = extremal_nogap_sequence(n, c1);
            const Integer delta = Integer(c1) * c1 - n * b.sum_of_squares();
            CHECK(delta == delta_lower_nogap(n, c1));
            CHECK(delta_lower_nogap(n, c1) >= delta_lower_uniform(n));
        }
    }
}

TEST_CASE("lambda polynomials") {
    CHECK(lambda_s(cd(3, {0, 1, 2}), st({0, 0, 0}), 3) == Polynomial({Rational(2), Rational(1)}));
    const SplittingType b = st({2, 1, 0, -1});
    CHECK(lambda_s(split_chern(b, 4), b, 3).is_zero());
    CHECK(lambda_s(split_chern(b, 4), b, 4).is_zero());
    CHECK_THROWS_AS(lambda_s(cd(2, {0, 1, 0}), st({0, 0}), 3), std::invalid_argument);
    CHECK_THROWS_AS(lambda_s(cd(3, {1, 1, 2}), st({0, 0, 0}), 3), std::invalid_argument);
}

TEST_CASE("property: lambda degree and leading coefficient") {
    testing::Gen g(41);
    int nonzero = 0;
    for (int round = 0; round < 300; ++round) {
        const long n = g.range(3, 6);
        const int n_dim = static_cast<int>(g.range(3, 6));
        const SplittingType b = g.splitting(static_cast<std::size_t>(n), -3, 3);
        std::vector<Integer> c(static_cast<std::size_t>(n_dim));
        c[0] = b.sum();
        for (std::size_t i = 1; i < c.size(); ++i) {
            c[i] = g.integer(-9, 9);
        }
        const ChernData data(n_dim, n, c);
        const Integer delta2 = data.c(2) - b.elementary(2);
        const int s = static_cast<int>(g.range(3, std::min<long>(n, n_dim)));
        const Polynomial lam = lambda_s(data, b, s);
        CHECK(lam.degree() <= s - 2);
        const Integer lead = binomial(n - 2, static_cast<unsigned long>(s - 2)) * delta2;
        CHECK(lam.coeff(static_cast<std::size_t>(s - 2)) == Rational(lead));
        nonzero += lead != 0;
    }
    CHECK(nonzero > 100);
}

TEST_CASE("splitting predicates") {
    CHECK(split_predicates(st({1, 0}), st({1, 0}), 3).verdict == Verdict::equality);
    std::map<long, Integer> nc_h0{{0, 0}, {1, 5}, {2, 16}};
    const BoundReport nc = split_predicates(st({0, 0}), st({-1, -1}), 3, nc_h0);
    CHECK(nc.verdict == Verdict::satisfied);
    CHECK_FALSE(split_conditions(st({0, 0}), st({-1, -1}), 3, nc_h0).gst_equals_b);
    const SplitConditions c = split_conditions(st({0, 0}), st({0, -1}), 3, {{1, 5}});
    CHECK(c.equal_everywhere == false);
    // Contradictory data: gst equals b yet sections are missing.
    CHECK(split_predicates(st({0, 0}), st({0, 0}), 3, {{1, 5}}).verdict == Verdict::violated);
}

TEST_CASE("sum of the global-section type") {
    CHECK(louso_check(st({-1, -1}), 0).verdict == Verdict::satisfied);
    CHECK(louso_check(st({0, 0}), 0).verdict == Verdict::equality);
    CHECK(louso_check(st({1, 1}), 1).verdict == Verdict::violated);
}

TEST_CASE("cohomology bounds base cases") {
    const CohomologyBounds o = cohomology_bounds(1, 2, 0, 0, st({0}));
    CHECK(o.per_index_bounds == std::vector<Integer>{1, 0, 0});
    CHECK(o.vanishing_threshold == 3);
    CHECK(o.chern_bounds.empty());
    const RegularityBound r = regularity_bound(o, 2);
    CHECK(r.regularity == 3);
    CHECK(r.generation == 5);

    const CohomologyBounds h = cohomology_bounds(2, 2, 0, 1, st({0, 0}));
    CHECK(h.P(0) == 2);
    CHECK(h.P(1) == 1);
    CHECK(h.P(2) == 0);

    CHECK_THROWS_AS(cohomology_bounds(1, 1, 0, 0, st({0})), std::invalid_argument);
    CHECK_THROWS_AS(cohomology_bounds(2, 2, 1, 0, st({0, 0})), std::invalid_argument);
}

TEST_CASE("vanishing threshold grows with c2") {
    for (int n_dim = 2; n_dim <= 3; ++n_dim) {
        for (const auto& b : testing::all_splittings(2, -1, 1)) {
            Integer prev = -1000;
            for (long c2 = b.elementary(2).get_si(); c2 <= b.elementary(2).get_si() + 4; ++c2) {
                const Integer q = cohomology_bounds(2, n_dim, b.sum(), c2, b).vanishing_threshold;
                CHECK(q >= prev);
                prev = q;
            }
        }
    }
}

TEST_CASE("property: bounds dominate split cohomology") {
    for (int n_dim = 2; n_dim <= 4; ++n_dim) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& b : testing::all_splittings(n, -3, 3)) {
                const Integer c2 = b.elementary(2);
                const CohomologyBounds cb = cohomology_bounds(static_cast<long>(n), n_dim, b.sum(), c2, b);
                for (int i = 0; i <= n_dim; ++i) {
                    CHECK(split_h(b, n_dim, i, 0) <= cb.P(i));
                }
                const long q = cb.vanishing_threshold.get_si();
                for (long k = q; k <= q + 3; ++k) {
                    for (int i = 1; i <= n_dim; ++i) {
                        CHECK(split_h(b, n_dim, i, k) == 0);
                    }
                    CHECK(split_h(b, n_dim, 0, -k) == 0);
                }
                CHECK(regularity_bound(cb, n_dim).regularity >= -b.last());
                for (int s = 3; s <= n_dim; ++s) {
                    CHECK(abs(split_chern(b, n_dim).c(s)) <= cb.C(s));
                }
            }
        }
    }
}

TEST_CASE("bounds over an invariant set cover every candidate") {
    InvariantInput in;
    in.rank = 2;
    in.c1 = Integer(0);
    in.c2 = Integer(1);
    in.d = 2;
    const InvariantSet set = invariant_convert(in);
    const CohomologyBounds all = cohomology_bounds(set, 2);
    const CohomologyBounds one = cohomology_bounds(2, 2, 0, 1, st({1, -1}));
    for (int i = 0; i <= 2; ++i) {
        CHECK(all.P(i) >= one.P(i));
    }
    CHECK(all.vanishing_threshold >= one.vanishing_threshold);
}
