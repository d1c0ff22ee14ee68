// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include "chern/bounds.hpp"
#include "chern/catalog.hpp"
#include "chern/cli.hpp"
#include "chern/json_io.hpp"
#include "chern/riemann_roch.hpp"
#include "chern/verify.hpp"
#include "generators.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace chern;
using chern::testing::Gen;
using chern::testing::all_splittings;

namespace {

// Collects the first few mismatches of a criterion.
struct Outcome {
    long checks = 0;
    long failures = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            if (failures < 3) {
                detail << (failures ? "; " : "") << what;
            }
            ++failures;
        }
    }
};

const SheafDescriptor& get(const std::string& name) { return find_descriptor(builtin_catalog(), name); }

Integer oracle_gap(const SheafDescriptor& d, long t) {
    return h0_upper(d.splitting.shifted(t), d.ambient_dim()) - *d.h0(t);
}

void c1_null_correlation(Outcome& o) {
    const SheafDescriptor& d = get("null_correlation");
    for (long t = 1; t <= 20; ++t) {
        const Integer bound = rigrossa_rhs(*d.gst, t);
        o.expect(bound == t + 2, "t=" + std::to_string(t) + " bound " + bound.get_str());
        o.expect(oracle_gap(d, t) == t + 2, "t=" + std::to_string(t) + " oracle " + oracle_gap(d, t).get_str());
    }
}

void c2_line_extensions(Outcome& o) {
    long families = 0;
    for (const auto& d : builtin_catalog()) {
        if (d.name.rfind("line_extension_", 0) != 0) {
            continue;
        }
        ++families;
        const long k = d.chern.c(2).get_si();
        for (long t = 1; t <= 20; ++t) {
            const std::string at = d.name + " t=" + std::to_string(t);
            o.expect(rigrossa_rhs(*d.gst, t) == k * (t + 1), at + " bound");
            o.expect(oracle_gap(d, t) == k * (t + 1), at + " oracle");
        }
    }
    for (long k = 1; k <= 5; ++k) {
        o.expect(get("line_extension_n=1_k=" + std::to_string(k)).chern.c(2) == k, "k missing");
    }
    o.expect(families >= 5, "too few families");
}

void c3_surface_formula(Outcome& o) {
    Gen g(3);
    for (int i = 0; i < 200; ++i) {
        const long n = g.range(1, 10);
        const Integer c1 = g.integer(-1000, 1000);
        const Integer c2 = g.integer(-100000, 100000);
        const Rational expect = Rational(c1 * c1 + 3 * c1, Integer(2)) - Rational(c2) + Rational(n);
        o.expect(euler_char(ChernData(2, n, {c1, c2})) == expect, "n=" + std::to_string(n));
    }
}

void c4_split_sections(Outcome& o) {
    for (int n_dim = 1; n_dim <= 5; ++n_dim) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (const auto& b : all_splittings(n, -3, 3)) {
                const Polynomial chi = euler_char_poly(split_chern(b, n_dim));
                for (long t = -b.last(); t <= -b.last() + 10; ++t) {
                    Integer direct = 0;
                    for (long x : b.entries()) {
                        direct += h0_line_bundle(x + t, static_cast<unsigned>(n_dim));
                    }
                    o.expect(chi(Rational(t)) == Rational(direct), b.str() + " N=" + std::to_string(n_dim));
                }
            }
        }
    }
}

void c5_c2_floor(Outcome& o) {
    const Integer nc = c2_lower(SplittingType({0, 0}), SplittingType({0, -1}));
    o.expect(nc == 1, "null-correlation floor " + nc.get_str());
    o.expect(get("null_correlation").chern.c(2) == nc, "catalog c2");
    Gen g(5);
    for (int i = 0; i < 100; ++i) {
        const SplittingType b = g.splitting(static_cast<std::size_t>(g.range(1, 8)), -9, 9);
        o.expect(c2_lower(b, b) == b.elementary(2), b.str());
    }
}

void c6_discriminant(Outcome& o) {
    for (long n = 2; n <= 12; ++n) {
        Integer best = delta_lower_nogap(n, 0);
        for (long c1 = 1; c1 <= n; ++c1) {
            best = std::min(best, delta_lower_nogap(n, c1));
        }
        o.expect(best == delta_lower_uniform(n), "n=" + std::to_string(n));
    }
}

void c7_extremal(Outcome& o) {
    for (long n = 1; n <= 8; ++n) {
        for (long c1 = -2 * n; c1 <= 2 * n; ++c1) {
            const SplittingType b = extremal_nogap_sequence(n, c1);
            o.expect(no_gap(b) && b.sum() == c1 && b.sum_of_squares() == brute_force_max_sumsq(n, c1),
                     "n=" + std::to_string(n) + " c1=" + std::to_string(c1));
        }
    }
}

void c8_lambda(Outcome& o) {
    Gen g(8);
    for (int i = 0; i < 300; ++i) {
        const long n = g.range(3, 6);
        const int n_dim = static_cast<int>(g.range(3, 6));
        const SplittingType b = g.splitting(static_cast<std::size_t>(n), -4, 4);
        std::vector<Integer> c(static_cast<std::size_t>(n_dim));
        c[0] = b.sum();
        for (std::size_t k = 1; k < c.size(); ++k) {
            c[k] = g.integer(-20, 20);
        }
        const ChernData data(n_dim, n, c);
        const int s = static_cast<int>(g.range(3, std::min<long>(n, n_dim)));
        const Polynomial lam = lambda_s(data, b, s);
        const Integer lead = binomial(n - 2, static_cast<unsigned long>(s - 2)) * (data.c(2) - b.elementary(2));
        const std::string at = "n=" + std::to_string(n) + " s=" + std::to_string(s);
        o.expect(lam.degree() <= s - 2, at + " degree");
        if (lead != 0) {
            o.expect(lam.degree() == s - 2 && lam.leading() == Rational(lead), at + " leading");
        }
    }
}

void c9_points(Outcome& o) {
    for (int n_dim = 2; n_dim <= 4; ++n_dim) {
        for (long m = 1; m <= 10; ++m) {
            const ChernData c = chern_from_koszul(Subvariety::points(m), n_dim);
            bool low = true;
            for (int i = 1; i < n_dim; ++i) {
                low = low && c.c(i) == 0;
            }
            const Integer expect = m * factorial(static_cast<unsigned long>(n_dim - 1));
            o.expect(low && c.c(n_dim) == expect, "M=" + std::to_string(m) + " N=" + std::to_string(n_dim) +
                                                      ": c_N=" + c.c(n_dim).get_str() + ", expected " +
                                                      expect.get_str());
        }
    }
}

void c10_window(Outcome& o) {
    for (long b = 1; b <= 5; ++b) {
        const SheafDescriptor& d = get("wide_window_b=" + std::to_string(b));
        const TwistWindow w = negative_c2_window(d.chern);
        std::vector<long> expect;
        for (long t = -b + 1; t <= b - 1; ++t) {
            expect.push_back(t);
        }
        o.expect(!w.unbounded && w.values == expect, "b=" + std::to_string(b));
        o.expect(static_cast<long>(w.values.size()) == d.splitting.diameter() - 1, "size b=" + std::to_string(b));
    }
}

void c11_soundness(Outcome& o) {
    long covered = 0;
    for (int n_dim = 2; n_dim <= 4; ++n_dim) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& b : all_splittings(n, -3, 3)) {
                const SheafDescriptor& d = get("split_" + b.str() + "_P" + std::to_string(n_dim));
                const VerificationReport r = verify(d);
                const BoundReport* p = r.find("cohomology_P");
                const BoundReport* q = r.find("vanishing_Q");
                const BoundReport* reg = r.find("regularity");
                const bool ok = p && q && reg && p->verdict != Verdict::violated &&
                                p->verdict != Verdict::no_oracle && q->verdict != Verdict::violated &&
                                reg->verdict != Verdict::violated;
                o.expect(ok, d.name);
                covered += ok;
            }
        }
    }
    const VerificationReport plane = verify(get("null_correlation_plane"));
    const BoundReport* p = plane.find("cohomology_P");
    o.expect(p && p->verdict != Verdict::violated && p->verdict != Verdict::no_oracle, "plane null-correlation");
    o.expect(covered == 3 * 119, "split grid coverage " + std::to_string(covered));
}

void c12_algebra(Outcome& o) {
    Gen g(12);
    for (int i = 0; i < 500; ++i) {
        const int n_dim = static_cast<int>(g.range(1, 6));
        const ChernData c = g.chern(n_dim, g.range(1, 5), -12, 12);
        const ChernData e = g.chern(n_dim, g.range(1, 5), -12, 12);
        const long l = g.range(-6, 6);
        const long m = g.range(-6, 6);
        const SplittingType b = g.splitting(static_cast<std::size_t>(c.rank()), -5, 5);
        const bool ok = twist_numeric(twist_numeric(c, l), -l) == c &&
                        twist_numeric(twist_numeric(c, l), m) == twist_numeric(c, l + m) &&
                        twist_symbolic(c).at(l) == twist_numeric(c, l) && dual(dual(c)) == c &&
                        whitney_quotient(whitney(c, e), c) == e && whitney(c, e) == whitney(e, c) &&
                        twist_numeric(whitney(c, e), l) == whitney(twist_numeric(c, l), twist_numeric(e, l)) &&
                        twist_numeric(split_chern(b, n_dim), l) == split_chern(b.shifted(l), n_dim) &&
                        (n_dim < 2 || discriminant(twist_numeric(c, l)) == discriminant(c));
        o.expect(ok, "instance " + std::to_string(i));
    }
}

void c13_end_to_end(Outcome& o) {
    const CommandResult r = execute({"--json", "catalog", "verify"});
    o.expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    if (r.exit_code != 0) {
        return;
    }
    const Json j = Json::parse(r.payload);
    auto sharp_in = [&](const std::string& name, const std::string& marker) {
        for (const auto& d : j.at("descriptors")) {
            if (d.at("descriptor") == name) {
                for (const auto& s : d.at("sharp")) {
                    if (s == marker) {
                        return true;
                    }
                }
            }
        }
        return false;
    };
    o.expect(j.at("overall") == "pass", "overall");
    o.expect(sharp_in("null_correlation", "rigrossa"), "criterion 1 marker");
    for (long k = 1; k <= 5; ++k) {
        o.expect(sharp_in("line_extension_n=2_k=" + std::to_string(k), "rigrossa"), "criterion 2 marker");
    }
    o.expect(sharp_in("null_correlation", "c2_lower"), "criterion 5 marker");
    for (long b = 1; b <= 5; ++b) {
        o.expect(sharp_in("wide_window_b=" + std::to_string(b), "negative_c2_window"), "criterion 10 marker");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "null-correlation section gap is t+2 and sharp", c1_null_correlation},
        {2, "line-extension family gap is k(t+1) and sharp", c2_line_extensions},
        {3, "Euler characteristic on P^2", c3_surface_formula},
        {4, "Riemann-Roch against section counts of split bundles", c4_split_sections},
        {5, "c2 floor from the plane type", c5_c2_floor},
        {6, "no-gap discriminant floor meets the uniform floor", c6_discriminant},
        {7, "extremal no-gap sequence against enumeration", c7_extremal},
        {8, "lambda polynomial degree and leading coefficient", c8_lambda},
        {9, "top Chern class of ideal sheaves of points", c9_points},
        {10, "negative c2 window of the wide-window family", c10_window},
        {11, "P/Q bounds dominate known cohomology", c11_soundness},
        {12, "Whitney and twist identities", c12_algebra},
        {13, "catalog verify end to end", c13_end_to_end},
    };

    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        Outcome o;
        std::string error;
        try {
            c.run(o);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const bool pass = error.empty() && o.failures == 0 && o.checks > 0;
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << o.checks
                  << " checks";
        if (o.failures) {
            std::cout << ", " << o.failures << " failed: " << o.detail.str();
        }
        if (!error.empty()) {
            std::cout << ", exception: " << error;
        }
        std::cout << ")\n";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed in " << secs << " s\n";
    return failed ? 1 : 0;
}
