#include "chern/verify.hpp"

#include "chern/riemann_roch.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace chern {

bool VerificationReport::pass() const {
    return std::none_of(reports.begin(), reports.end(),
                        [](const BoundReport& r) { return r.verdict == Verdict::violated; });
}

const BoundReport* VerificationReport::find(const std::string& name) const {
    for (const auto& r : reports) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

namespace {

constexpr long kTopTwist = 20;

std::string join(const std::vector<long>& xs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i ? "," : "") << xs[i];
    }
    os << "}";
    return os.str();
}

Integer h0_split(const SplittingType& b, int n_dim, long t) { return h0_upper(b.shifted(t), n_dim); }

// True cohomology when it is known: closed form for split sheaves, else the table.
std::function<std::optional<Integer>(int, long)> cohomology_oracle(const SheafDescriptor& d) {
    const int n_dim = d.ambient_dim();
    if (d.flags.split) {
        const SplittingType b = d.splitting;
        return [b, n_dim](int i, long k) -> std::optional<Integer> {
            if (i == 0) {
                return h0_split(b, n_dim, k);
            }
            if (i == n_dim) {
                return hN_upper(b.shifted(k), n_dim);
            }
            return Integer(0);
        };
    }
    if (d.cohomology) {
        const CohomologyTable t = *d.cohomology;
        return [t](int i, long k) -> std::optional<Integer> {
            if (k < t.kmin || k > t.kmax) {
                return std::nullopt;
            }
            return t.at(i, k);
        };
    }
    return {};
}

// Smallest m in [lo, hi] with h^i F(m'-i) = 0 for every i > 0 and every m' >= m
// that the oracle covers.
std::optional<long> observed_regularity(const std::function<std::optional<Integer>(int, long)>& h,
                                        int n_dim, long lo, long hi) {
    std::optional<long> best;
    for (long m = hi; m >= lo; --m) {
        bool ok = true;
        for (int i = 1; i <= n_dim && ok; ++i) {
            auto v = h(i, m - i);
            ok = !v || *v == 0;
        }
        if (!ok) {
            break;
        }
        best = m;
    }
    return best;
}

void section_reports(const SheafDescriptor& d, std::vector<BoundReport>& out) {
    const int n_dim = d.ambient_dim();
    const SplittingType& b = d.splitting;
    if (d.h0_series.empty()) {
        out.push_back(BoundReport::decided("h0_upper", h0_upper(b, n_dim), std::nullopt,
                                           Verdict::no_oracle, "no section counts stored"));
        return;
    }
    std::vector<Integer> bound;
    std::vector<Integer> oracle;
    for (long t = -b.first() - n_dim - 1; t <= kTopTwist; ++t) {
        bound.push_back(h0_split(b, n_dim, t));
        oracle.push_back(*d.h0(t));
    }
    out.push_back(BoundReport::upper("h0_upper", bound, oracle,
                                     "h0 F(t) <= h0 O(b+t) for t in [" +
                                         std::to_string(-b.first() - n_dim - 1) + "," +
                                         std::to_string(kTopTwist) + "]"));

    if (!d.gst || !d.gst->complete()) {
        return;
    }
    const GstMatrix& m = *d.gst;
    out.push_back(BoundReport::lower("grossa", grossa_rhs(m), h0_split(b, n_dim, 0) - *d.h0(0),
                                     "h0 O(b) - h0 F >= bound"));

    long lowest = 0;
    for (const auto& row : m.rows()) {
        lowest = std::min(lowest, row->last());
    }
    const long t0 = std::max(1L, -lowest);
    std::vector<Integer> rb;
    std::vector<Integer> ro;
    std::vector<Integer> mb;
    std::vector<Integer> mo;
    for (long t = t0; t <= kTopTwist; ++t) {
        const Integer h0t = *d.h0(t);
        rb.push_back(rigrossa_rhs(m, t));
        ro.push_back(h0_split(b, n_dim, t) - h0t);
        if (n_dim >= 2) {
            mb.push_back(menogrande2_rhs(b.shifted(t), m.require_row(2).shifted(t), n_dim));
            mo.push_back(h0t);
        }
    }
    const std::string range = " for t in [" + std::to_string(t0) + "," + std::to_string(kTopTwist) + "]";
    out.push_back(BoundReport::lower("rigrossa", rb, ro, "h0 O(b+t) - h0 F(t) >= bound" + range));
    if (n_dim >= 2) {
        out.push_back(BoundReport::upper("menogrande2", mb, mo, "h0 F(t) <= bound" + range));
    }
}

void chern_reports(const SheafDescriptor& d, std::vector<BoundReport>& out) {
    const int n_dim = d.ambient_dim();
    const long n = d.rank();
    const SplittingType& b = d.splitting;
    const ChernData& c = d.chern;
    if (n_dim < 2) {
        return;
    }
    const Integer c2 = c.c(2);
    const std::optional<SplittingType> plane =
        d.gst ? d.gst->row(2) : std::optional<SplittingType>();
    // Strict inequalities for non-split sheaves need the plane section to see
    // the non-splitting: reflexive sheaves, surfaces, or a plane row below b.
    const bool strict = !d.flags.split &&
                        (d.flags.reflexive || n_dim == 2 || (plane && !(*plane == b)));

    if (plane) {
        out.push_back(BoundReport::lower("c2_lower", c2_lower(b, *plane), c2,
                                         "c2 >= e2(b) + sum (b_i-a_i)(b_i-a_i+1)/2"));
    }
    BoundReport floor = BoundReport::lower("c2_split_floor", b.elementary(2), c2,
                                           "c2 >= e2(b), equality only for split sheaves");
    if (floor.verdict == Verdict::equality && strict) {
        floor.verdict = Verdict::violated;
        floor.note += "; equality on a non-split sheaf";
    }
    out.push_back(floor);

    if (strict) {
        const TwistWindow w = negative_c2_window(c);
        const Integer allowed = std::max<long>(0, b.diameter() - 1);
        if (w.unbounded) {
            out.push_back(BoundReport::decided("negative_c2_window", allowed, std::nullopt,
                                               Verdict::violated, "c2(F(t)) <= 0 for every t"));
        } else {
            out.push_back(BoundReport::upper("negative_c2_window", allowed,
                                             Integer(static_cast<long>(w.values.size())),
                                             "t with c2(F(t)) <= 0: " + join(w.values)));
        }
    }

    const Integer delta = discriminant(c);
    if (no_gap(b)) {
        const long c1 = c.c(1).get_si();
        out.push_back(BoundReport::lower("delta_nogap", delta_lower_nogap(n, c1), delta,
                                         "no-gap splitting type, residue cbar = " +
                                             std::to_string(cbar(c1, n))));
        out.push_back(BoundReport::lower("delta_uniform", delta_lower_uniform(n), delta,
                                         "no-gap splitting type"));
    }
    if (!d.flags.split && (d.flags.semistable || d.flags.stable)) {
        const Rational f = semistable_delta_floor(n, d.flags.stable);
        const Rational dv(delta);
        const Verdict v = dv == f ? Verdict::equality : (dv > f ? Verdict::satisfied : Verdict::violated);
        out.push_back(BoundReport::decided(d.flags.stable ? "delta_stable" : "delta_semistable", f,
                                           delta, v, "declared flag"));
    }

    for (int s = 3; s <= std::min<long>(n, n_dim); ++s) {
        const Polynomial lam = lambda_s(c, b, s);
        const Integer delta2 = c2 - b.elementary(2);
        const Integer lead = binomial(Integer(n - 2), static_cast<unsigned long>(s - 2)) * delta2;
        const bool ok = lam.degree() <= s - 2 && lam.coeff(static_cast<std::size_t>(s - 2)) == Rational(lead);
        out.push_back(BoundReport::decided("lambda_s=" + std::to_string(s), lam, lead,
                                           ok ? Verdict::equality : Verdict::violated,
                                           "degree <= s-2 with t^{s-2} coefficient binom(n-2,s-2) delta2"));
    }

    // chi(O(b)(t)) - chi(F(t)) has t-degree N-2 and leading coefficient delta2/(N-2)!.
    const Integer delta2 = c2 - b.elementary(2);
    const Polynomial diff = euler_char_poly(split_chern(b, n_dim)) - euler_char_poly(c);
    const Rational want(delta2, factorial(static_cast<unsigned long>(n_dim - 2)));
    const bool ok = delta2 == 0 ? diff.degree() < n_dim - 2
                                : diff.degree() == n_dim - 2 && diff.leading() == want;
    out.push_back(BoundReport::decided("chi_difference_degree", diff, want,
                                       ok ? Verdict::equality : Verdict::violated,
                                       "chi(O(b)(t)) - chi(F(t))"));
}

void gst_reports(const SheafDescriptor& d, std::vector<BoundReport>& out) {
    if (!d.gst) {
        return;
    }
    const int n_dim = d.ambient_dim();
    const auto& top = d.gst->row(n_dim);
    if (!top) {
        return;
    }
    BoundReport l = louso_check(*top, d.chern.c(1));
    if (l.verdict == Verdict::equality && !d.flags.split) {
        l.verdict = Verdict::violated;
        l.note += "; equality on a non-split sheaf";
    }
    out.push_back(l);

    std::map<long, Integer> h0s;
    if (!d.h0_series.empty()) {
        for (long t = -d.splitting.first() - n_dim - 1; t <= kTopTwist; ++t) {
            h0s[t] = *d.h0(t);
        }
    }
    BoundReport sp = split_predicates(d.splitting, *top, n_dim, h0s);
    const bool says_split = sp.verdict == Verdict::equality;
    if (sp.verdict != Verdict::violated && says_split != d.flags.split) {
        sp.verdict = Verdict::violated;
        sp.note += "; disagrees with the split flag";
    }
    out.push_back(sp);
}

void cohomology_reports(const SheafDescriptor& d, std::vector<BoundReport>& out) {
    const int n_dim = d.ambient_dim();
    if (n_dim < 2) {
        return;
    }
    const long n = d.rank();
    const SplittingType& b = d.splitting;
    const CohomologyBounds cb = cohomology_bounds(n, n_dim, d.chern.c(1), d.chern.c(2), b);
    const auto h = cohomology_oracle(d);
    const long q = cb.vanishing_threshold.get_si();

    if (d.flags.reflexive) {
        std::vector<Integer> bound;
        std::vector<Integer> oracle;
        for (int s = 3; s <= n_dim; ++s) {
            bound.push_back(cb.C(s));
            oracle.push_back(abs(d.chern.c(s)));
        }
        if (!bound.empty()) {
            out.push_back(BoundReport::upper("chern_C", bound, oracle, "|c_s| <= C_s for s = 3..N"));
        }
    }
    if (!d.flags.split && !d.flags.reflexive && n_dim > 2) {
        // Points on P^N change h^1 without moving c1, c2 or b.
        out.push_back(BoundReport::decided("cohomology_P", cb.per_index_bounds, std::nullopt,
                                           Verdict::no_oracle, "torsion-free with N >= 3: not covered"));
        return;
    }
    if (!h) {
        out.push_back(BoundReport::decided("cohomology_P", cb.per_index_bounds, std::nullopt,
                                           Verdict::no_oracle, "true cohomology unknown"));
        return;
    }

    // h^i F(k) <= P^i(F(k)) across the twists the oracle covers.
    long lo = -b.first() - n_dim - 2;
    long hi = std::max(-b.last() + 2, 2L);
    if (d.cohomology) {
        lo = std::max(lo, d.cohomology->kmin);
        hi = std::min(hi, d.cohomology->kmax);
    }
    std::vector<Integer> pb;
    std::vector<Integer> po;
    for (long k = lo; k <= hi; ++k) {
        const Integer kk = k;
        const Integer c1k = d.chern.c(1) + n * kk;
        const Integer c2k = d.chern.c(2) + (n - 1) * kk * d.chern.c(1) + Integer(n * (n - 1) / 2) * kk * kk;
        const CohomologyBounds ck = cohomology_bounds(n, n_dim, c1k, c2k, b.shifted(k));
        for (int i = 0; i <= n_dim; ++i) {
            if (auto v = h(i, k)) {
                pb.push_back(ck.P(i));
                po.push_back(*v);
            }
        }
    }
    out.push_back(BoundReport::upper("cohomology_P", pb, po,
                                     "h^i F(k) <= P^i for k in [" + std::to_string(lo) + "," +
                                         std::to_string(hi) + "]"));

    // Vanishing from Q on.
    std::vector<long> bad;
    for (long k = q; k <= q + 4; ++k) {
        for (int i = 1; i <= n_dim; ++i) {
            auto v = h(i, k);
            if (v && *v != 0) {
                bad.push_back(k);
            }
        }
        for (int i : {0, 1}) {
            auto v = h(i, -k);
            if (v && *v != 0) {
                bad.push_back(-k);
            }
        }
    }
    out.push_back(BoundReport::decided("vanishing_Q", cb.vanishing_threshold, std::nullopt,
                                       bad.empty() ? Verdict::satisfied : Verdict::violated,
                                       bad.empty() ? "h^i F(k), h^1 F(-k), h^0 F(-k) vanish for k in [Q,Q+4]"
                                                   : "non-vanishing at " + join(bad)));

    std::optional<long> reg;
    if (d.flags.split) {
        reg = -b.last();
    } else if (d.cohomology) {
        reg = observed_regularity(h, n_dim, d.cohomology->kmin + n_dim, d.cohomology->kmax);
    }
    if (reg) {
        const RegularityBound rb = regularity_bound(cb, n_dim);
        out.push_back(BoundReport::upper("regularity", rb.regularity, Integer(*reg),
                                         "regularity <= Q; global generation from " +
                                             rb.generation.get_str()));
    }
}

void consistency_reports(const SheafDescriptor& d, std::vector<BoundReport>& out) {
    const Polynomial chi = euler_char_poly(d.chern);
    bool integral = true;
    for (long t = -6; t <= 6; ++t) {
        integral = integral && chi(Rational(t)).is_integer();
    }
    out.push_back(BoundReport::decided("chi_integral", chi, std::nullopt,
                                       integral ? Verdict::satisfied : Verdict::violated,
                                       "chi(F(t)) integral for t in [-6,6]"));
    if (!d.h0_series.empty()) {
        const Polynomial& tail = d.h0_series.back().poly;
        out.push_back(BoundReport::decided("chi_h0_series", chi, tail,
                                           tail == chi ? Verdict::equality : Verdict::violated,
                                           "last h0 piece equals chi(F(t))"));
    }
    if (d.cohomology) {
        const auto& tab = *d.cohomology;
        std::vector<Integer> want;
        std::vector<Integer> got;
        bool ok = true;
        for (long k = tab.kmin; k <= tab.kmax; ++k) {
            Integer alt;
            for (int i = 0; i <= d.ambient_dim(); ++i) {
                alt += (i % 2 == 0) ? tab.at(i, k) : Integer(-tab.at(i, k));
            }
            want.push_back(chi(Rational(k)).to_integer());
            got.push_back(alt);
            ok = ok && alt == want.back();
            if (!d.h0_series.empty()) {
                ok = ok && *d.h0(k) == tab.at(0, k);
            }
        }
        out.push_back(BoundReport::decided("chi_table", want, got,
                                           ok ? Verdict::equality : Verdict::violated,
                                           "alternating sum of the table equals chi(F(k))"));
    }
}

}  // namespace

VerificationReport verify(const SheafDescriptor& d) {
    VerificationReport rep{d.name, {}};
    section_reports(d, rep.reports);
    chern_reports(d, rep.reports);
    gst_reports(d, rep.reports);
    cohomology_reports(d, rep.reports);
    consistency_reports(d, rep.reports);
    return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<SheafDescriptor>& catalog) {
    std::vector<VerificationReport> out(catalog.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::exception_ptr> errors(catalog.size());
    auto work = [&] {
        for (std::size_t i = next++; i < catalog.size(); i = next++) {
            try {
                out[i] = verify(catalog[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

}  // namespace chern
