#include "chern/catalog.hpp"

#include "chern/json_io.hpp"
#include "chern/riemann_roch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace chern {

namespace detail {
extern const std::string_view kBuiltinCatalogJson;
}

const Integer& CohomologyTable::at(int i, long k) const {
    if (k < kmin || k > kmax) {
        throw std::out_of_range("twist " + std::to_string(k) + " outside the cohomology window");
    }
    return h.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k - kmin));
}

std::optional<Integer> SheafDescriptor::h0(long t) const {
    if (h0_series.empty()) {
        return std::nullopt;
    }
    const H0Piece* hit = nullptr;
    for (const auto& piece : h0_series) {
        if (piece.min_t <= t) {
            hit = &piece;
        }
    }
    if (!hit) {
        return Integer(0);
    }
    return hit->poly(Rational(t)).to_integer();
}

void SheafDescriptor::validate() const {
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("descriptor " + name + ": " + why);
    };
    if (static_cast<std::size_t>(rank()) != splitting.size()) {
        fail("splitting type length differs from the rank");
    }
    if (splitting.sum() != chern.c(1)) {
        fail("splitting type does not sum to c1");
    }
    if (gst) {
        if (gst->ambient_dim() != ambient_dim()) {
            fail("gst matrix has the wrong number of rows");
        }
        if (gst->rank() != splitting.size()) {
            fail("gst rows have the wrong length");
        }
        if (gst->row(1) && !(*gst->row(1) == splitting)) {
            fail("gst row 1 differs from the splitting type");
        }
    }
    for (std::size_t i = 1; i < h0_series.size(); ++i) {
        if (h0_series[i].min_t <= h0_series[i - 1].min_t) {
            fail("h0_series thresholds must increase");
        }
    }
    if (!h0_series.empty() && !(h0_series.back().poly == euler_char_poly(chern))) {
        fail("last h0_series piece is not chi(F(t))");
    }
    if (cohomology) {
        const auto& c = *cohomology;
        if (c.kmax < c.kmin) {
            fail("empty cohomology window");
        }
        if (c.h.size() != static_cast<std::size_t>(ambient_dim()) + 1) {
            fail("cohomology table needs N+1 rows");
        }
        for (const auto& row : c.h) {
            if (row.size() != static_cast<std::size_t>(c.kmax - c.kmin + 1)) {
                fail("cohomology row length differs from the window");
            }
        }
    }
}

// ---------------------------------------------------------------------------

static TruncatedSeries line_bundle_series(long d, std::size_t cap) {
    return TruncatedSeries(cap, {Rational(1), Rational(d)});
}

// c of sum_k (-1)^k binom(m, k) O(-k): the Koszul complex of m linear forms.
static TruncatedSeries koszul_linear(long m, std::size_t cap) {
    TruncatedSeries num = TruncatedSeries::one(cap);
    TruncatedSeries den = TruncatedSeries::one(cap);
    for (long k = 0; k <= m; ++k) {
        const unsigned e = static_cast<unsigned>(binomial(Integer(m), static_cast<unsigned long>(k)).get_ui());
        const TruncatedSeries f = line_bundle_series(-k, cap).pow(e);
        if (k % 2 == 0) {
            num = num * f;
        } else {
            den = den * f;
        }
    }
    return num * series_inverse(den);
}

ChernData chern_from_koszul(const Subvariety& y, int ambient_dim) {
    if (ambient_dim < 2) {
        throw std::invalid_argument("ideal sheaves need codimension >= 2, so N >= 2");
    }
    const std::size_t cap = static_cast<std::size_t>(ambient_dim);
    TruncatedSeries structure = TruncatedSeries::one(cap);
    switch (y.kind) {
        case Subvariety::Kind::points:
            if (y.count < 1) {
                throw std::invalid_argument("need at least one point");
            }
            structure = koszul_linear(ambient_dim, cap).pow(static_cast<unsigned>(y.count));
            break;
        case Subvariety::Kind::line:
            if (ambient_dim < 3) {
                throw std::invalid_argument("a line has codimension >= 2 only for N >= 3");
            }
            structure = koszul_linear(ambient_dim - 1, cap);
            break;
        case Subvariety::Kind::complete_intersection:
            if (y.d1 < 1 || y.d2 < 1) {
                throw std::invalid_argument("complete intersection degrees must be positive");
            }
            structure = line_bundle_series(-y.d1 - y.d2, cap) *
                        series_inverse(line_bundle_series(-y.d1, cap) *
                                       line_bundle_series(-y.d2, cap));
            break;
        default:
            throw std::invalid_argument("unsupported subvariety");
    }
    // 0 -> I_Y -> O -> O_Y -> 0.
    return ChernData::from_series(1, series_inverse(structure));
}

// ---------------------------------------------------------------------------

namespace {

Polynomial forms(int r, long shift) { return binom_poly(static_cast<unsigned>(r)).shifted(Rational(shift)); }

Integer h0_int(long a, int r) { return h0_line_bundle(Integer(a), static_cast<unsigned>(r)); }

GstMatrix gst_rows(int n_dim, const std::vector<std::vector<long>>& rows) {
    std::vector<std::optional<SplittingType>> out;
    for (const auto& r : rows) {
        out.emplace_back(SplittingType(r));
    }
    return GstMatrix(n_dim, std::move(out));
}

CohomologyTable table_from(long kmin, long kmax, int n_dim,
                           const std::function<Integer(int, long)>& h) {
    CohomologyTable t;
    t.kmin = kmin;
    t.kmax = kmax;
    for (int i = 0; i <= n_dim; ++i) {
        std::vector<Integer> row;
        for (long k = kmin; k <= kmax; ++k) {
            row.push_back(h(i, k));
        }
        t.h.push_back(std::move(row));
    }
    return t;
}

SheafDescriptor null_correlation() {
    const int n_dim = 3;
    // 0 -> O(-1) -> F -> I_Y(1) -> 0 with Y two disjoint lines.
    const ChernData sub(n_dim, 1, {-1, 0, 0});
    // Two disjoint lines: c(I_Y) = c(I_L)^2.
    const ChernData two_lines = ChernData::from_series(
        1, chern_from_koszul(Subvariety::line(), n_dim).chern_polynomial().pow(2));
    SheafDescriptor d{"null_correlation",
                      whitney(sub, twist_numeric(two_lines, 1)),
                      SplittingType({0, 0}),
                      gst_rows(n_dim, {{0, 0}, {0, -1}, {-1, -1}}),
                      {},
                      std::nullopt,
                      {true, true, false, true, true},
                      "0 -> O(-1) -> F -> I_Y(1) -> 0 with Y two disjoint lines; "
                      "h0 F(t) = h0 O(t-1) + h0 I_Y(t+1)"};
    d.h0_series = {{0, forms(3, -1) + forms(3, 1) - Polynomial({Rational(4), Rational(2)})}};
    auto h0 = [d](long k) { return *d.h0(k); };
    d.cohomology = table_from(-8, 4, n_dim, [h0](int i, long k) -> Integer {
        switch (i) {
            case 0: return h0(k);
            case 1: return k == -1 ? 1 : 0;
            case 2: return k == -3 ? 1 : 0;
            default: return h0(-k - 4);
        }
    });
    return d;
}

SheafDescriptor null_correlation_plane() {
    const int n_dim = 2;
    SheafDescriptor d{"null_correlation_plane",
                      ChernData(n_dim, 2, {0, 1}),
                      SplittingType({0, 0}),
                      std::nullopt,
                      {},
                      std::nullopt,
                      {true, true, false, true, false},
                      "restriction of the null-correlation bundle to a plane: "
                      "0 -> O -> F -> I_p -> 0 with p the pole of the plane"};
    d.h0_series = {{0, forms(2, 0).scaled(Rational(2)) - Polynomial::constant(1)}};
    auto h0 = [d](long k) { return *d.h0(k); };
    d.cohomology = table_from(-7, 4, n_dim, [h0](int i, long k) -> Integer {
        switch (i) {
            case 0: return h0(k);
            case 1: return (k == -1 || k == -2) ? 1 : 0;
            default: return h0(-k - 3);
        }
    });
    return d;
}

// k copies of F with 0 -> O^{n-1} -> F -> I_L -> 0 on P^3.
SheafDescriptor line_extension(long n, long k) {
    const int n_dim = 3;
    const ChernData f = n == 1 ? chern_from_koszul(Subvariety::line(), n_dim)
                               : whitney(ChernData::trivial(n_dim, n - 1),
                                         chern_from_koszul(Subvariety::line(), n_dim));
    ChernData g = f;
    for (long i = 1; i < k; ++i) {
        g = whitney(g, f);
    }
    const long rank = n * k;
    std::vector<long> b(static_cast<std::size_t>(rank), 0);
    std::vector<long> a = b;
    for (long i = 0; i < k; ++i) {
        a[static_cast<std::size_t>(rank - 1 - i)] = -1;
    }
    SheafDescriptor d{"line_extension_n=" + std::to_string(n) + "_k=" + std::to_string(k),
                      g,
                      SplittingType(b),
                      gst_rows(n_dim, {b, a, a}),
                      {},
                      std::nullopt,
                      {false, true, false, false, false},
                      "direct sum of " + std::to_string(k) + " copies of F with 0 -> O^" +
                          std::to_string(n - 1) +
                          " -> F -> I_L -> 0, L a line; the rank-consistent reading of the "
                          "construction (a trivial part of rank n would give rank n+1)"};
    // h0 F(t) = n h0 O(t) - (t+1) for t >= 0.
    d.h0_series = {{0, (forms(3, 0).scaled(Rational(n)) - Polynomial({Rational(1), Rational(1)}))
                           .scaled(Rational(k))}};
    return d;
}

// 0 -> O(b') -> F -> I_Y -> 0 with Y a plane curve of degree r in P^3.
SheafDescriptor ci_extension(long r, long bp) {
    const int n_dim = 3;
    const ChernData iy = chern_from_koszul(Subvariety::complete_intersection(r, 1), n_dim);
    SheafDescriptor d{"ci_extension_r=" + std::to_string(r) + "_b=" + std::to_string(bp),
                      whitney(ChernData(n_dim, 1, {bp, 0, 0}), iy),
                      SplittingType({bp, 0}),
                      std::nullopt,
                      {},
                      std::nullopt,
                      {false, true, false, false, false},
                      "0 -> O(" + std::to_string(bp) + ") -> F -> I_Y -> 0 with Y a complete "
                      "intersection of type (" + std::to_string(r) + ",1); c2 = c2(O(b)) + deg Y"};
    // h0 I_Y(t) = h0 O(t-r) + h0 O(t-1) - h0 O(t-r-1). A term h0 O(t+s) is
    // polynomial for t >= -s-3 and zero below, so it enters the series there.
    const std::vector<std::pair<long, Polynomial>> terms{{-bp - 3, forms(3, bp)},
                                                         {r - 3, forms(3, -r)},
                                                         {-2, forms(3, -1)},
                                                         {r - 2, -forms(3, -r - 1)}};
    std::map<long, Polynomial> pieces;
    for (const auto& [start, p] : terms) {
        pieces[start];
    }
    for (auto& [t, q] : pieces) {
        for (const auto& [start, p] : terms) {
            if (start <= t) {
                q += p;
            }
        }
    }
    for (const auto& [t, q] : pieces) {
        if (d.h0_series.empty() && q.is_zero()) {
            continue;
        }
        d.h0_series.push_back({t, q});
    }
    return d;
}

// 0 -> O(b) -> F -> I_L(-b) -> 0 on P^3, splitting type [b,-b].
SheafDescriptor wide_window(long b) {
    const int n_dim = 3;
    const ChernData il = chern_from_koszul(Subvariety::line(), n_dim);
    SheafDescriptor d{"wide_window_b=" + std::to_string(b),
                      whitney(ChernData(n_dim, 1, {b, 0, 0}), twist_numeric(il, -b)),
                      SplittingType({b, -b}),
                      gst_rows(n_dim, {{b, -b}, {b, -b - 1}, {b, -b - 1}}),
                      {},
                      std::nullopt,
                      {false, true, false, false, false},
                      "0 -> O(" + std::to_string(b) + ") -> F -> I_L(" + std::to_string(-b) +
                          ") -> 0, L a line; gst rows 2 and 3 inferred from sharpness of the "
                          "c2 floor"};
    // h0 F(t) = h0 O(b+t) + h0 I_L(t-b), h0 I_L(m) = h0 O(m) - (m+1) for m >= 0.
    Polynomial first = forms(3, b);
    Polynomial both = first + forms(3, -b) - Polynomial({Rational(1 - b), Rational(1)});
    d.h0_series = {{-b, first}, {b, both}};
    return d;
}

SheafDescriptor points(long m, int n_dim, long rank) {
    const ChernData iy = chern_from_koszul(Subvariety::points(m), n_dim);
    const ChernData c = rank == 1 ? iy : whitney(ChernData::trivial(n_dim, rank - 1), iy);
    std::string name = "points_M=" + std::to_string(m) + "_P" + std::to_string(n_dim);
    if (rank > 1) {
        name += "_rank" + std::to_string(rank);
    }
    SheafDescriptor d{name,
                      c,
                      SplittingType(std::vector<long>(static_cast<std::size_t>(rank), 0)),
                      std::nullopt,
                      {},
                      std::nullopt,
                      {false, true, false, false, false},
                      "ideal sheaf of " + std::to_string(m) + " general points" +
                          (rank > 1 ? " plus O^" + std::to_string(rank - 1) : std::string()) +
                          "; c_N taken from the Koszul computation, the sign of c_N "
                          "alternates with N"};
    // General points impose independent conditions until the forms run out.
    long t0 = 0;
    while (h0_int(t0, n_dim) < m) {
        ++t0;
    }
    const Polynomial trivial_part = forms(n_dim, 0).scaled(Rational(rank - 1));
    const Polynomial ideal_part = forms(n_dim, 0) - Polynomial::constant(Rational(m));
    if (rank > 1 && t0 > 0) {
        d.h0_series.push_back({0, trivial_part});
    }
    d.h0_series.push_back({t0, trivial_part + ideal_part});
    return d;
}

SheafDescriptor split_bundle(const SplittingType& b, int n_dim) {
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(n_dim), b.entries());
    SheafDescriptor d{"split_" + b.str() + "_P" + std::to_string(n_dim),
                      split_chern(b, n_dim),
                      b,
                      gst_rows(n_dim, rows),
                      {},
                      std::nullopt,
                      {true, true, true, false, false},
                      "direct sum of line bundles O(b_i)"};
    d.flags.semistable = b.diameter() == 0;
    d.flags.stable = b.size() == 1;
    // A summand O(b_i) contributes once t >= -b_i.
    std::vector<long> starts;
    for (long x : b.entries()) {
        starts.push_back(-x);
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    for (long s : starts) {
        Polynomial p;
        for (long x : b.entries()) {
            if (-x <= s) {
                p += forms(n_dim, x);
            }
        }
        d.h0_series.push_back({s, p});
    }
    return d;
}

void split_grid(std::vector<SheafDescriptor>& out) {
    for (int n_dim = 2; n_dim <= 4; ++n_dim) {
        for (long n = 1; n <= 3; ++n) {
            std::vector<long> cur(static_cast<std::size_t>(n));
            std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long upper) {
                if (pos == cur.size()) {
                    out.push_back(split_bundle(SplittingType(cur), n_dim));
                    return;
                }
                for (long v = upper; v >= -3; --v) {
                    cur[pos] = v;
                    rec(pos + 1, v);
                }
            };
            rec(0, 3);
        }
    }
}

}  // namespace

std::vector<SheafDescriptor> generate_builtin_catalog() {
    std::vector<SheafDescriptor> out;
    out.push_back(null_correlation());
    out.push_back(null_correlation_plane());
    for (long n = 1; n <= 3; ++n) {
        for (long k = 1; k <= 5; ++k) {
            out.push_back(line_extension(n, k));
        }
    }
    for (long r = 1; r <= 3; ++r) {
        for (long bp = 0; bp <= 2; ++bp) {
            out.push_back(ci_extension(r, bp));
        }
    }
    for (long b = 1; b <= 5; ++b) {
        out.push_back(wide_window(b));
    }
    for (int n_dim = 2; n_dim <= 4; ++n_dim) {
        for (long m = 1; m <= 10; ++m) {
            out.push_back(points(m, n_dim, 1));
        }
        out.push_back(points(5, n_dim, 2));
        out.push_back(points(5, n_dim, 3));
    }
    split_grid(out);
    for (const auto& d : out) {
        d.validate();
    }
    return out;
}

std::string_view builtin_catalog_json() { return detail::kBuiltinCatalogJson; }

const std::vector<SheafDescriptor>& builtin_catalog() {
    static const std::vector<SheafDescriptor> cat = catalog_from_json(std::string(builtin_catalog_json()));
    return cat;
}

const SheafDescriptor& find_descriptor(const std::vector<SheafDescriptor>& catalog,
                                       const std::string& name) {
    for (const auto& d : catalog) {
        if (d.name == name) {
            return d;
        }
    }
    throw std::out_of_range("no descriptor named " + name);
}

}  // namespace chern
