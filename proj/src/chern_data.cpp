#include "chern/chern_data.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chern {

ChernData::ChernData(int ambient_dim, long rank, std::vector<Integer> classes)
    : ambient_dim_(ambient_dim), rank_(rank), classes_(std::move(classes)) {
    if (ambient_dim_ < 1) {
        throw std::invalid_argument("ambient dimension must be >= 1");
    }
    if (rank_ < 1) {
        throw std::invalid_argument("rank must be >= 1");
    }
    if (classes_.size() != static_cast<std::size_t>(ambient_dim_)) {
        throw std::invalid_argument("expected " + std::to_string(ambient_dim_) +
                                    " Chern classes, got " + std::to_string(classes_.size()));
    }
}

ChernData ChernData::trivial(int ambient_dim, long rank) {
    return ChernData(ambient_dim, rank, std::vector<Integer>(static_cast<std::size_t>(ambient_dim)));
}

ChernData ChernData::from_series(long rank, const TruncatedSeries& series) {
    if (series[0] != Rational(1)) {
        throw std::domain_error("Chern polynomial must have constant term 1");
    }
    std::vector<Integer> cls;
    for (std::size_t k = 1; k <= series.cap(); ++k) {
        cls.push_back(series[k].to_integer());
    }
    return ChernData(static_cast<int>(series.cap()), rank, std::move(cls));
}

Integer ChernData::c(int i) const {
    if (i == 0) {
        return 1;
    }
    if (i < 0 || i > ambient_dim_) {
        throw std::out_of_range("Chern class index " + std::to_string(i) + " outside 0.." +
                                std::to_string(ambient_dim_));
    }
    return classes_[static_cast<std::size_t>(i - 1)];
}

TruncatedSeries ChernData::chern_polynomial() const {
    std::vector<Rational> co;
    co.emplace_back(1);
    for (const auto& x : classes_) {
        co.emplace_back(x);
    }
    return TruncatedSeries(static_cast<std::size_t>(ambient_dim_), std::move(co));
}

std::string ChernData::str() const {
    std::ostringstream os;
    os << "P^" << ambient_dim_ << " rank " << rank_ << " c=(";
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        os << (i ? "," : "") << classes_[i].get_str();
    }
    os << ")";
    return os.str();
}

ChernData TwistedChern::at(long t) const {
    std::vector<Integer> cls;
    for (const auto& p : symbolic_classes) {
        cls.push_back(p(Rational(t)).to_integer());
    }
    return ChernData(base.ambient_dim(), base.rank(), std::move(cls));
}

static void require_same_ambient(const ChernData& a, const ChernData& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("ambient dimension mismatch: P^" +
                                    std::to_string(a.ambient_dim()) + " vs P^" +
                                    std::to_string(b.ambient_dim()));
    }
}

ChernData whitney(const ChernData& sub, const ChernData& quot) {
    require_same_ambient(sub, quot);
    return ChernData::from_series(sub.rank() + quot.rank(),
                                  series_mul(sub.chern_polynomial(), quot.chern_polynomial()));
}

ChernData whitney_quotient(const ChernData& total, const ChernData& sub) {
    require_same_ambient(total, sub);
    const long rank = total.rank() - sub.rank();
    if (rank <= 0) {
        throw std::invalid_argument("quotient would have rank " + std::to_string(rank));
    }
    return ChernData::from_series(
        rank, series_mul(total.chern_polynomial(), series_inverse(sub.chern_polynomial())));
}

ChernData split_chern(const SplittingType& b, int ambient_dim) {
    std::vector<Integer> cls;
    for (int l = 1; l <= ambient_dim; ++l) {
        cls.push_back(b.elementary(static_cast<std::size_t>(l)));
    }
    return ChernData(ambient_dim, static_cast<long>(b.size()), std::move(cls));
}

ChernData twist_numeric(const ChernData& c, long l) {
    const long n = c.rank();
    std::vector<Integer> cls;
    for (int i = 1; i <= c.ambient_dim(); ++i) {
        Integer acc;
        Integer lk = 1;
        for (int k = 0; k <= i; ++k) {
            acc += binomial(Integer(n - i + k), static_cast<unsigned long>(k)) * lk * c.c(i - k);
            lk *= l;
        }
        cls.push_back(acc);
    }
    return ChernData(c.ambient_dim(), n, std::move(cls));
}

TwistedChern twist_symbolic(const ChernData& c) {
    const long n = c.rank();
    TwistedChern out{c, {}};
    for (int i = 1; i <= c.ambient_dim(); ++i) {
        std::vector<Rational> co;
        for (int k = 0; k <= i; ++k) {
            co.emplace_back(binomial(Integer(n - i + k), static_cast<unsigned long>(k)) * c.c(i - k));
        }
        out.symbolic_classes.emplace_back(std::move(co));
    }
    return out;
}

ChernData dual(const ChernData& c) {
    std::vector<Integer> cls = c.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if ((i + 1) % 2 == 1) {
            cls[i] = -cls[i];
        }
    }
    return ChernData(c.ambient_dim(), c.rank(), std::move(cls));
}

ChernData restrict_hyperplane(const ChernData& c) {
    if (c.ambient_dim() < 2) {
        throw std::invalid_argument("cannot restrict data on P^1 to a hyperplane");
    }
    std::vector<Integer> cls(c.classes().begin(), c.classes().end() - 1);
    return ChernData(c.ambient_dim() - 1, c.rank(), std::move(cls));
}

Integer discriminant(const ChernData& c) {
    if (c.ambient_dim() < 2) {
        throw std::invalid_argument("discriminant needs N >= 2");
    }
    const Integer c1 = c.c(1);
    return 2 * Integer(c.rank()) * c.c(2) - Integer(c.rank() - 1) * c1 * c1;
}

Polynomial high_chern_tail(const ChernData& c, int s) {
    if (s <= c.rank() || s > c.ambient_dim()) {
        throw std::invalid_argument("high_chern_tail needs rank < s <= N, got s=" +
                                    std::to_string(s));
    }
    return twist_symbolic(c).c(s);
}

}  // namespace chern
