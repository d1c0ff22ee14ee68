#include "chern/bounds.hpp"
#include "chern/riemann_roch.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace chern {

namespace {

// The recursion only ever looks at (n, b, c1, c2); c1 is the sum of b.
struct Inv {
    long n;
    SplittingType b;
    Integer c1;
    Integer c2;
};

Inv twisted(const Inv& d, long k) {
    const Integer kk = k;
    return Inv{d.n, d.b.shifted(k), d.c1 + d.n * kk,
               d.c2 + (d.n - 1) * kk * d.c1 + Integer(d.n * (d.n - 1) / 2) * kk * kk};
}

Inv dualized(const Inv& d) { return Inv{d.n, d.b.dual(), -d.c1, d.c2}; }

constexpr long kRangeGuard = 1000000;

long checked_range(const Integer& q) {
    if (q > kRangeGuard) {
        throw std::range_error("cohomology bound recursion range exceeds " +
                               std::to_string(kRangeGuard));
    }
    return q.get_si();
}

class Memo {
public:
    std::optional<Integer> find(const std::string& key) const {
        std::shared_lock lock(mu_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    void put(const std::string& key, const Integer& v) {
        std::unique_lock lock(mu_);
        table_.emplace(key, v);
    }
    void clear() {
        std::unique_lock lock(mu_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, Integer> table_;
};

Memo& memo() {
    static Memo m;
    return m;
}

std::string key(char kind, int i, int n_dim, const Inv& d) {
    return std::string(1, kind) + "|" + std::to_string(i) + "|" + std::to_string(n_dim) + "|" +
           d.c2.get_str() + "|" + d.b.str();
}

Integer q_bound(int n_dim, const Inv& d);

// Bound for h^i of a sheaf on P^N with invariants d.
Integer p_bound(int i, int n_dim, const Inv& d) {
    if (i == 0) {
        return h0_upper(d.b, n_dim);
    }
    if (i == n_dim) {
        return hN_upper(d.b, n_dim);
    }
    const std::string k = key('p', i, n_dim, d);
    if (auto hit = memo().find(k)) {
        return *hit;
    }
    Integer out;
    if (n_dim == 2) {
        // h^1 = h^0 + h^2 - chi.
        const Integer chi = (d.c1 * d.c1 + 3 * d.c1) / 2 - d.c2 + d.n;
        out = h0_upper(d.b, 2) + hN_upper(d.b, 2) - chi;
        if (out < 0) {
            out = 0;
        }
    } else {
        const long qp = checked_range(q_bound(n_dim - 1, d));
        if (i == 1) {
            // h^1 F(-k) <= h^1 F(-k-1) + h^1 F_H(-k), and h^1 F(-k) = 0 once k >= Q'.
            for (long k2 = 0; k2 <= qp; ++k2) {
                out += p_bound(1, n_dim - 1, twisted(d, -k2));
            }
        } else {
            // h^i F(k) <= h^i F(k+1) + h^{i-1} F_H(k+1), vanishing from Q' on.
            for (long k2 = 0; k2 <= qp; ++k2) {
                out += p_bound(i - 1, n_dim - 1, twisted(d, k2 + 1));
            }
        }
    }
    memo().put(k, out);
    return out;
}

Integer q_bound(int n_dim, const Inv& d) {
    const std::string k = key('q', 0, n_dim, d);
    if (auto hit = memo().find(k)) {
        return *hit;
    }
    const long b1 = d.b.first();
    const long bn = d.b.last();
    std::vector<Integer> cands{Integer(b1 + 1), Integer(-bn - n_dim), Integer(1)};
    if (n_dim == 2) {
        cands.push_back(-bn + p_bound(1, 2, twisted(d, -bn)));
        const Inv dv = dualized(d);
        cands.push_back(3 + b1 + p_bound(1, 2, twisted(dv, -dv.b.last())));
    } else {
        const Integer qp = q_bound(n_dim - 1, d);
        const long k2 = checked_range(qp + 1);
        cands.push_back(qp);
        cands.push_back(qp + 1 + p_bound(1, n_dim, twisted(d, k2)));
    }
    const Integer out = *std::max_element(cands.begin(), cands.end());
    memo().put(k, out);
    return out;
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

void clear_cohomology_cache() { memo().clear(); }

CohomologyBounds cohomology_bounds(long n, int ambient_dim, const Integer& c1, const Integer& c2,
                                   const SplittingType& b) {
    if (ambient_dim < 2) {
        throw std::invalid_argument("cohomology bounds need N >= 2");
    }
    if (static_cast<std::size_t>(n) != b.size()) {
        throw std::invalid_argument("splitting type length differs from the rank");
    }
    if (c1 != b.sum()) {
        throw std::invalid_argument("c1 must equal the sum of the splitting type");
    }
    const Inv d{n, b, c1, c2};
    CohomologyBounds out;
    out.ambient_dim = ambient_dim;
    for (int i = 0; i <= ambient_dim; ++i) {
        out.per_index_bounds.push_back(p_bound(i, ambient_dim, d));
    }
    out.vanishing_threshold = q_bound(ambient_dim, d);

    // chi(F restricted to P^s) = (-1)^{s-1} c_s/(s-1)! + terms in c_1..c_{s-1};
    // bound every such term with the majorants C_j.
    std::vector<Integer> cj{abs_int(c1), abs_int(c2)};
    for (int s = 3; s <= ambient_dim; ++s) {
        Rational chi_hat;
        for (int i = 0; i <= s; ++i) {
            chi_hat += Rational(p_bound(i, s, d));
        }
        std::vector<Integer> p_hat(static_cast<std::size_t>(s) + 1);
        for (int k = 1; k <= s; ++k) {
            Integer acc;
            for (int i = 1; i < k; ++i) {
                acc += cj[static_cast<std::size_t>(i - 1)] * p_hat[static_cast<std::size_t>(k - i)];
            }
            if (k < s) {
                acc += Integer(k) * cj[static_cast<std::size_t>(k - 1)];
            }
            p_hat[static_cast<std::size_t>(k)] = acc;
        }
        const TruncatedSeries td = todd_class(s);
        Rational rest = Rational(Integer(n)) * td[static_cast<std::size_t>(s)].abs();
        for (int k = 1; k <= s; ++k) {
            rest += Rational(p_hat[static_cast<std::size_t>(k)], factorial(static_cast<unsigned long>(k))) *
                    td[static_cast<std::size_t>(s - k)].abs();
        }
        const Integer cs = (Rational(factorial(static_cast<unsigned long>(s - 1))) * (chi_hat + rest)).ceil();
        out.chern_bounds.push_back(cs);
        cj.push_back(cs);
    }
    return out;
}

CohomologyBounds cohomology_bounds(const InvariantSet& g, int ambient_dim) {
    auto c2_for = [&](const SplittingType& b) -> Integer {
        if (g.c2) {
            return *g.c2;
        }
        if (g.delta2) {
            return *g.delta2 + b.elementary(2);
        }
        throw std::invalid_argument("invariant set fixes neither c2 nor delta2");
    };
    if (g.b) {
        return cohomology_bounds(g.rank, ambient_dim, g.c1, c2_for(*g.b), *g.b);
    }
    std::optional<CohomologyBounds> best;
    for (const auto& b : splitting_types_with(g.rank, g.c1, g.d)) {
        CohomologyBounds cb = cohomology_bounds(g.rank, ambient_dim, g.c1, c2_for(b), b);
        if (!best) {
            best = std::move(cb);
            continue;
        }
        for (std::size_t i = 0; i < cb.per_index_bounds.size(); ++i) {
            best->per_index_bounds[i] = std::max(best->per_index_bounds[i], cb.per_index_bounds[i]);
        }
        best->vanishing_threshold = std::max(best->vanishing_threshold, cb.vanishing_threshold);
        for (std::size_t i = 0; i < cb.chern_bounds.size(); ++i) {
            best->chern_bounds[i] = std::max(best->chern_bounds[i], cb.chern_bounds[i]);
        }
    }
    if (!best) {
        throw std::invalid_argument("no splitting type matches the invariant set");
    }
    return *best;
}

RegularityBound regularity_bound(const CohomologyBounds& bounds, int ambient_dim) {
    return RegularityBound{bounds.vanishing_threshold, bounds.vanishing_threshold + ambient_dim};
}

}  // namespace chern
