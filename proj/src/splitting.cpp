#include "chern/splitting.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chern {

SplittingType::SplittingType(std::vector<long> entries) : e_(std::move(entries)) {
    if (e_.empty()) {
        throw std::invalid_argument("splitting type must have at least one entry");
    }
    for (std::size_t i = 1; i < e_.size(); ++i) {
        if (e_[i] > e_[i - 1]) {
            throw std::invalid_argument("splitting type must be non-increasing: " + str());
        }
    }
}

Integer SplittingType::sum() const {
    Integer s;
    for (long x : e_) {
        s += x;
    }
    return s;
}

Integer SplittingType::sum_of_squares() const {
    Integer s;
    for (long x : e_) {
        s += Integer(x) * x;
    }
    return s;
}

Integer SplittingType::elementary(std::size_t k) const {
    // e_k of (b_1..b_n) = coefficient of t^k in prod (1 + b_i t).
    std::vector<Integer> e(k + 1);
    e[0] = 1;
    for (long x : e_) {
        for (std::size_t j = k; j >= 1; --j) {
            e[j] += e[j - 1] * x;
        }
    }
    return e[k];
}

SplittingType SplittingType::shifted(long t) const {
    std::vector<long> out = e_;
    for (auto& x : out) {
        x += t;
    }
    return SplittingType(std::move(out));
}

SplittingType SplittingType::dual() const {
    std::vector<long> out(e_.rbegin(), e_.rend());
    for (auto& x : out) {
        x = -x;
    }
    return SplittingType(std::move(out));
}

std::string SplittingType::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        os << (i ? "," : "") << e_[i];
    }
    os << "]";
    return os.str();
}

bool no_gap(const SplittingType& b) {
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (b[i - 1] - b[i] > 1) {
            return false;
        }
    }
    return true;
}

bool leq(const SplittingType& a, const SplittingType& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cannot compare sequences of lengths " +
                                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

long cbar(long c1, long n) {
    if (n <= 0) {
        throw std::invalid_argument("cbar needs a positive rank");
    }
    long r = ((c1 % n) + n) % n;
    return std::min(r, n - r);
}

SplittingType extremal_nogap_sequence(long n, long c1) {
    if (n <= 0) {
        throw std::invalid_argument("extremal_nogap_sequence needs a positive rank");
    }
    const long c = cbar(c1, n);
    std::vector<long> seq;
    seq.reserve(static_cast<std::size_t>(n));
    if (n % 2 == 0) {
        for (long v = -(n - 2) / 2; v <= (n - 2) / 2; ++v) {
            seq.push_back(v);
        }
        seq.push_back(c);
    } else {
        for (long v = -(n - 3) / 2; v <= (n - 1) / 2 && n > 1; ++v) {
            seq.push_back(v);
        }
        seq.push_back(c - (n - 1) / 2);
    }
    std::sort(seq.begin(), seq.end(), std::greater<>());
    // seq sums to c. Reach c1 by a shift, after dualizing when c1 = -c mod n.
    SplittingType base(std::move(seq));
    long residue = ((c1 % n) + n) % n;
    if (residue != c) {
        base = base.dual();
        return base.shifted((c1 + c) / n);
    }
    return base.shifted((c1 - c) / n);
}

Integer brute_force_max_sumsq(long n, long c1) {
    if (n <= 0) {
        throw std::invalid_argument("brute_force_max_sumsq needs a positive rank");
    }
    if (n > 10) {
        throw std::length_error("brute_force_max_sumsq enumeration guard: n must be <= 10");
    }
    // A no-gap sequence is b_n = m plus drops d_i in {0,1} between neighbours;
    // b_i = m + sum_{j >= i} d_j.
    std::optional<Integer> best;
    const unsigned long patterns = 1ul << (n - 1);
    for (unsigned long mask = 0; mask < patterns; ++mask) {
        std::vector<long> offsets(static_cast<std::size_t>(n), 0);
        for (long i = n - 2; i >= 0; --i) {
            offsets[static_cast<std::size_t>(i)] =
                offsets[static_cast<std::size_t>(i + 1)] + static_cast<long>((mask >> i) & 1ul);
        }
        long offset_sum = 0;
        for (long o : offsets) {
            offset_sum += o;
        }
        long rest = c1 - offset_sum;
        if (((rest % n) + n) % n != 0) {
            continue;
        }
        long m = rest / n;
        Integer sq;
        for (long o : offsets) {
            sq += Integer(m + o) * (m + o);
        }
        if (!best || sq > *best) {
            best = sq;
        }
    }
    if (!best) {
        throw std::logic_error("no no-gap sequence found");
    }
    return *best;
}

// ---------------------------------------------------------------------------

GstMatrix::GstMatrix(int ambient_dim, std::vector<std::optional<SplittingType>> rows)
    : n_dim_(ambient_dim), rows_(std::move(rows)) {
    if (ambient_dim < 1) {
        throw std::invalid_argument("gst matrix needs ambient dimension >= 1");
    }
    if (rows_.size() != static_cast<std::size_t>(ambient_dim)) {
        throw std::invalid_argument("gst matrix needs exactly N rows (absent rows as null)");
    }
    const SplittingType* prev = nullptr;
    int prev_j = 0;
    for (int j = 1; j <= ambient_dim; ++j) {
        const auto& r = rows_[static_cast<std::size_t>(j - 1)];
        if (!r) {
            continue;
        }
        if (rank_ == 0) {
            rank_ = r->size();
        } else if (r->size() != rank_) {
            throw std::invalid_argument("gst rows have different lengths");
        }
        if (prev && !leq(*r, *prev)) {
            throw std::invalid_argument("gst row " + std::to_string(j) + " " + r->str() +
                                        " exceeds row " + std::to_string(prev_j) + " " +
                                        prev->str());
        }
        prev = &*r;
        prev_j = j;
    }
    if (rank_ == 0) {
        throw std::invalid_argument("gst matrix has no rows");
    }
}

const std::optional<SplittingType>& GstMatrix::row(int j) const {
    if (j < 1 || j > n_dim_) {
        throw std::out_of_range("gst row index " + std::to_string(j));
    }
    return rows_[static_cast<std::size_t>(j - 1)];
}

bool GstMatrix::complete() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.has_value(); });
}

const SplittingType& GstMatrix::require_row(int j) const {
    const auto& r = row(j);
    if (!r) {
        throw std::invalid_argument("gst row " + std::to_string(j) + " is absent");
    }
    return *r;
}

// ---------------------------------------------------------------------------

InvariantSet invariant_convert(const InvariantInput& g) {
    InvariantSet out;
    const bool has_b = g.b.has_value();
    const int mask = (has_b ? 1 : 0) | (g.c1 ? 2 : 0) | (g.c2 ? 4 : 0) | (g.d ? 8 : 0) |
                     (g.delta2 ? 16 : 0);
    if (has_b) {
        const SplittingType& b = *g.b;
        if (g.rank != 0 && static_cast<std::size_t>(g.rank) != b.size()) {
            throw std::invalid_argument("rank does not match the splitting type length");
        }
        out.rank = static_cast<long>(b.size());
        out.b = b;
        out.c1 = b.sum();
        out.d = b.diameter();
        const Integer e2 = b.elementary(2);
        if (mask == (1 | 16)) {
            out.delta2 = *g.delta2;
            out.c2 = *g.delta2 + e2;
        } else if (mask == (1 | 4)) {
            out.c2 = *g.c2;
            out.delta2 = *g.c2 - e2;
        } else {
            throw std::invalid_argument("unsupported invariant set: with b give exactly one of c2, delta2");
        }
        out.entry_lower = Rational(b.last());
        out.entry_upper = Rational(b.first());
        return out;
    }
    if (mask != (2 | 4 | 8) && mask != (2 | 8 | 16)) {
        throw std::invalid_argument(
            "unsupported invariant set: expected {b,delta2}, {b,c2}, {c1,c2,d} or {c1,d,delta2}");
    }
    if (g.rank <= 0) {
        throw std::invalid_argument("rank is required when b is not given");
    }
    if (*g.d < 0) {
        throw std::invalid_argument("diameter must be non-negative");
    }
    out.rank = g.rank;
    out.c1 = *g.c1;
    out.d = *g.d;
    out.c2 = g.c2;
    out.delta2 = g.delta2;
    const Rational mean(*g.c1, Integer(g.rank));
    out.entry_lower = mean - Rational(*g.d);
    out.entry_upper = mean + Rational(*g.d);
    return out;
}

std::vector<SplittingType> splitting_types_with(long rank, const Integer& c1, long d,
                                                std::size_t limit) {
    if (rank <= 0 || d < 0) {
        throw std::invalid_argument("splitting_types_with needs rank > 0 and d >= 0");
    }
    std::vector<SplittingType> out;
    if (rank == 1) {
        if (d == 0) {
            out.emplace_back(std::vector<long>{c1.get_si()});
        }
        return out;
    }
    // b_n = m and b_1 = m + d with every entry in [m, m + d], so
    // c1/n - d <= m <= c1/n.
    const Rational mean(c1, Integer(rank));
    const long m_lo = (mean - Rational(d)).floor().get_si();
    const long m_hi = mean.ceil().get_si();
    std::vector<long> cur(static_cast<std::size_t>(rank));
    for (long m = m_lo; m <= m_hi; ++m) {
        const long top = m + d;
        cur.front() = top;
        cur.back() = m;
        // Fill positions 1..n-2 non-increasing within [m, top].
        std::function<void(std::size_t, long, long)> fill = [&](std::size_t pos, long upper,
                                                                long partial) {
            if (pos == cur.size() - 1) {
                if (Integer(partial + m) == c1) {
                    if (out.size() >= limit) {
                        throw std::length_error("too many candidate splitting types");
                    }
                    out.emplace_back(cur);
                }
                return;
            }
            for (long v = upper; v >= m; --v) {
                cur[pos] = v;
                fill(pos + 1, v, partial + v);
            }
        };
        fill(1, top, top);
    }
    return out;
}

}  // namespace chern
