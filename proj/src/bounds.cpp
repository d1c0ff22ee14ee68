#include "chern/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace chern {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::equality: return "equality";
        case Verdict::violated: return "violated";
        case Verdict::no_oracle: return "no-oracle";
    }
    return "no-oracle";
}

static Verdict compare_verdict(const Integer& bound, const Integer& oracle, bool upper) {
    if (oracle == bound) {
        return Verdict::equality;
    }
    const bool ok = upper ? oracle < bound : oracle > bound;
    return ok ? Verdict::satisfied : Verdict::violated;
}

static BoundReport scalar_report(std::string name, const Integer& bound,
                                 std::optional<Integer> oracle, std::string note, bool upper) {
    BoundReport r;
    r.name = std::move(name);
    r.bound = bound;
    r.note = std::move(note);
    if (oracle) {
        r.verdict = compare_verdict(bound, *oracle, upper);
        r.oracle = *oracle;
    }
    return r;
}

static BoundReport vector_report(std::string name, const std::vector<Integer>& bound,
                                 const std::vector<Integer>& oracle, std::string note, bool upper) {
    if (bound.size() != oracle.size()) {
        throw std::invalid_argument("bound and oracle lists differ in length");
    }
    BoundReport r;
    r.name = std::move(name);
    r.bound = bound;
    r.oracle = oracle;
    r.note = std::move(note);
    if (bound.empty()) {
        r.verdict = Verdict::no_oracle;
        return r;
    }
    bool all_equal = true;
    for (std::size_t i = 0; i < bound.size(); ++i) {
        Verdict v = compare_verdict(bound[i], oracle[i], upper);
        if (v == Verdict::violated) {
            r.verdict = Verdict::violated;
            return r;
        }
        all_equal = all_equal && v == Verdict::equality;
    }
    r.verdict = all_equal ? Verdict::equality : Verdict::satisfied;
    return r;
}

BoundReport BoundReport::upper(std::string name, const Integer& bound,
                               std::optional<Integer> oracle, std::string note) {
    return scalar_report(std::move(name), bound, std::move(oracle), std::move(note), true);
}

BoundReport BoundReport::lower(std::string name, const Integer& bound,
                               std::optional<Integer> oracle, std::string note) {
    return scalar_report(std::move(name), bound, std::move(oracle), std::move(note), false);
}

BoundReport BoundReport::upper(std::string name, const std::vector<Integer>& bound,
                               const std::vector<Integer>& oracle, std::string note) {
    return vector_report(std::move(name), bound, oracle, std::move(note), true);
}

BoundReport BoundReport::lower(std::string name, const std::vector<Integer>& bound,
                               const std::vector<Integer>& oracle, std::string note) {
    return vector_report(std::move(name), bound, oracle, std::move(note), false);
}

BoundReport BoundReport::decided(std::string name, BoundValue bound,
                                 std::optional<BoundValue> oracle, Verdict verdict,
                                 std::string note) {
    BoundReport r;
    r.name = std::move(name);
    r.bound = std::move(bound);
    r.oracle = std::move(oracle);
    r.verdict = verdict;
    r.note = std::move(note);
    return r;
}

// ---------------------------------------------------------------------------

static Integer h0(long a, int r) { return h0_line_bundle(Integer(a), static_cast<unsigned>(r)); }

Integer h0_upper(const SplittingType& b, int ambient_dim) {
    Integer s;
    for (long x : b.entries()) {
        s += h0(x, ambient_dim);
    }
    return s;
}

Integer hN_upper(const SplittingType& b, int ambient_dim) {
    Integer s;
    for (long x : b.entries()) {
        s += h0(-x - ambient_dim - 1, ambient_dim);
    }
    return s;
}

static void require_complete(const GstMatrix& m) {
    if (!m.complete()) {
        throw std::invalid_argument("bound needs every gst row");
    }
}

Integer grossa_rhs(const GstMatrix& m, GrossaReading reading) {
    require_complete(m);
    const int n_dim = m.ambient_dim();
    Integer first;
    Integer second;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        for (int j = 2; j <= n_dim; ++j) {
            const long a = m.require_row(j)[i];
            const long prev = m.require_row(j - 1)[i];
            if (a < 0) {
                first += h0(prev, reading == GrossaReading::section_dim ? j - 1 : n_dim);
                continue;
            }
            for (int k = j; k <= n_dim; ++k) {
                second += h0(a, n_dim - k) * h0(prev - a - 1, k);
            }
        }
    }
    return first + second;
}

Integer rigrossa_rhs(const GstMatrix& m, long t) {
    require_complete(m);
    long lowest = 0;
    for (const auto& row : m.rows()) {
        lowest = std::min(lowest, row->last());
    }
    if (t < -lowest) {
        throw std::invalid_argument("rigrossa needs t >= " + std::to_string(-lowest) + ", got " +
                                    std::to_string(t));
    }
    const int n_dim = m.ambient_dim();
    Integer s;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        for (int j = 2; j <= n_dim; ++j) {
            const long a = m.require_row(j)[i];
            const long prev = m.require_row(j - 1)[i];
            for (int k = j; k <= n_dim; ++k) {
                s += h0(a + t, n_dim - k) * h0(prev - a - 1, k);
            }
        }
    }
    return s;
}

static void require_plane_row(const SplittingType& b, const SplittingType& a) {
    if (!leq(a, b)) {
        throw std::invalid_argument("plane-section type " + a.str() + " must not exceed " + b.str());
    }
}

static void require_nonnegative(const SplittingType& a) {
    if (a.last() < 0) {
        throw std::invalid_argument("plane-section type " + a.str() + " must be non-negative");
    }
}

Integer menogrande2_rhs(const SplittingType& b, const SplittingType& a, int ambient_dim) {
    require_plane_row(b, a);
    require_nonnegative(a);
    if (ambient_dim < 2) {
        throw std::invalid_argument("needs N >= 2");
    }
    Integer s = h0_upper(b, ambient_dim);
    for (std::size_t i = 0; i < b.size(); ++i) {
        s -= h0(a[i], ambient_dim - 2) * h0(b[i] - a[i] - 1, 2);
    }
    return s;
}

Integer menogrande_rhs(const SplittingType& b, const SplittingType& a, int ambient_dim) {
    require_plane_row(b, a);
    require_nonnegative(a);
    if (ambient_dim < 2) {
        throw std::invalid_argument("needs N >= 2");
    }
    Integer s = h0_upper(b, ambient_dim);
    for (std::size_t i = 0; i < b.size(); ++i) {
        s -= h0(b[i] - a[i] - 1, 2);
    }
    return s;
}

// ---------------------------------------------------------------------------

Integer c2_lower(const SplittingType& b, const SplittingType& a) {
    require_plane_row(b, a);
    Integer s = b.elementary(2);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Integer g = b[i] - a[i];
        s += g * (g + 1) / 2;
    }
    return s;
}

Polynomial c2_twisted(const ChernData& c) {
    if (c.ambient_dim() < 2) {
        throw std::invalid_argument("c2 needs N >= 2");
    }
    const long n = c.rank();
    return Polynomial({Rational(c.c(2)), Rational(Integer(n - 1) * c.c(1)),
                       Rational(Integer(n * (n - 1) / 2))});
}

TwistWindow negative_c2_window(const ChernData& c) {
    const Polynomial q = c2_twisted(c);
    TwistWindow w;
    if (c.rank() == 1) {
        w.unbounded = c.c(2) <= 0;
        return w;
    }
    // q is convex; its non-positive set is an interval around the vertex -c1/n.
    const Rational vertex(-c.c(1), Integer(c.rank()));
    const long guard = 10000000;
    auto nonpositive = [&](long t) { return q(Rational(t)).sign() <= 0; };
    long start = vertex.floor().get_si();
    if (!nonpositive(start)) {
        ++start;
        if (!nonpositive(start)) {
            return w;
        }
    }
    long lo = start;
    while (nonpositive(lo - 1)) {
        if (start - lo > guard) {
            throw std::range_error("negative c2 window too large");
        }
        --lo;
    }
    long hi = start;
    while (nonpositive(hi + 1)) {
        if (hi - start > guard) {
            throw std::range_error("negative c2 window too large");
        }
        ++hi;
    }
    for (long t = lo; t <= hi; ++t) {
        w.values.push_back(t);
    }
    return w;
}

// ---------------------------------------------------------------------------

Integer delta_lower_nogap(long n, long c1) {
    if (n < 1) {
        throw std::invalid_argument("rank must be >= 1");
    }
    const Integer c = cbar(c1, n);
    const Integer nn = n;
    if (n % 2 == 0) {
        return -(nn / 2) * binomial(nn, 3) - (nn - 1) * c * c;
    }
    const Rational head = Rational(nn * binomial(nn + 1, 3), Integer(2));
    return -head.to_integer() + (nn - 1) * c * (nn - c);
}

Integer delta_lower_uniform(long n) {
    if (n < 1) {
        throw std::invalid_argument("rank must be >= 1");
    }
    const Integer nn = n;
    return -(nn * nn * (nn * nn - 1)) / 12;
}

Rational semistable_delta_floor(long n, bool stable) {
    if (n < 1) {
        throw std::invalid_argument("rank must be >= 1");
    }
    if (stable) {
        return Rational(Integer(3 * n * n), Integer(4));
    }
    return Rational(2 * n);
}

Polynomial lambda_s(const ChernData& c, const SplittingType& b, int s) {
    const long n = c.rank();
    if (static_cast<std::size_t>(n) != b.size()) {
        throw std::invalid_argument("splitting type length differs from the rank");
    }
    if (s < 3 || s > std::min<long>(n, c.ambient_dim())) {
        throw std::invalid_argument("lambda_s needs 3 <= s <= min(n, N), got s=" +
                                    std::to_string(s));
    }
    if (c.c(1) != b.sum()) {
        throw std::invalid_argument("lambda_s needs c1 = sum of the splitting type");
    }
    return twist_symbolic(c).c(s) - twist_symbolic(split_chern(b, c.ambient_dim())).c(s);
}

// ---------------------------------------------------------------------------

SplitConditions split_conditions(const SplittingType& b, const SplittingType& gst, int ambient_dim,
                                 const std::map<long, Integer>& h0_values) {
    SplitConditions out;
    out.gst_equals_b = gst == b;
    if (h0_values.empty()) {
        return out;
    }
    bool every = true;
    std::optional<bool> some;
    for (const auto& [t, value] : h0_values) {
        const bool eq = value == h0_upper(b.shifted(t), ambient_dim);
        every = every && eq;
        if (t >= -gst.last()) {
            some = some.value_or(false) || eq;
        }
    }
    out.equal_everywhere = every;
    out.equal_somewhere = some;
    return out;
}

BoundReport split_predicates(const SplittingType& b, const SplittingType& gst, int ambient_dim,
                             const std::map<long, Integer>& h0_values) {
    const SplitConditions sc = split_conditions(b, gst, ambient_dim, h0_values);
    std::vector<bool> held{sc.gst_equals_b};
    std::string note = std::string("a=b ") + (sc.gst_equals_b ? "holds" : "fails");
    if (sc.equal_everywhere) {
        held.push_back(*sc.equal_everywhere);
        note += std::string("; h0 equal at every t ") + (*sc.equal_everywhere ? "holds" : "fails");
    }
    if (sc.equal_somewhere) {
        held.push_back(*sc.equal_somewhere);
        note += std::string("; h0 equal at some t >= -a_n ") +
                (*sc.equal_somewhere ? "holds" : "fails");
    }
    const bool all = std::all_of(held.begin(), held.end(), [](bool x) { return x; });
    const bool none = std::none_of(held.begin(), held.end(), [](bool x) { return x; });
    const Verdict v = all ? Verdict::equality : (none ? Verdict::satisfied : Verdict::violated);
    return BoundReport::decided("split_predicates", Integer(held.size()),
                                Integer(std::count(held.begin(), held.end(), true)), v,
                                note + (all ? " (split)" : none ? " (non-split)" : " (inconsistent)"));
}

BoundReport louso_check(const SplittingType& gst, const Integer& c1) {
    return BoundReport::lower("louso", gst.sum(), c1, "c1 >= sum of gst entries; equality forces a trivial sheaf");
}

}  // namespace chern
