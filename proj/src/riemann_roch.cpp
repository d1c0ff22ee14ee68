#include "chern/riemann_roch.hpp"

#include <stdexcept>

namespace chern {

Rational CharacterSeries::power_sum(std::size_t k) const {
    return series[k] * Rational(factorial(k));
}

CharacterSeries chern_character(const ChernData& c) {
    const std::size_t cap = static_cast<std::size_t>(c.ambient_dim());
    // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
    std::vector<Integer> p(cap + 1);
    std::vector<Rational> ch(cap + 1);
    ch[0] = Rational(Integer(c.rank()));
    for (std::size_t k = 1; k <= cap; ++k) {
        Integer acc;
        for (std::size_t i = 1; i < k; ++i) {
            const Integer term = c.c(static_cast<int>(i)) * p[k - i];
            acc += (i % 2 == 1) ? term : Integer(-term);
        }
        const Integer last = Integer(static_cast<long>(k)) * c.c(static_cast<int>(k));
        acc += (k % 2 == 1) ? last : Integer(-last);
        p[k] = acc;
        ch[k] = Rational(acc, factorial(k));
    }
    return CharacterSeries{TruncatedSeries(cap, std::move(ch))};
}

TruncatedSeries todd_class(int ambient_dim) {
    if (ambient_dim < 1) {
        throw std::invalid_argument("todd_class needs N >= 1");
    }
    const std::size_t cap = static_cast<std::size_t>(ambient_dim);
    // (1 - e^{-t}) / t = sum_{k>=0} (-1)^k t^k / (k+1)!
    std::vector<Rational> q(cap + 1);
    for (std::size_t k = 0; k <= cap; ++k) {
        q[k] = Rational(Integer(k % 2 == 0 ? 1 : -1), factorial(k + 1));
    }
    return series_inverse(TruncatedSeries(cap, std::move(q))).pow(static_cast<unsigned>(cap + 1));
}

Rational euler_char(const ChernData& c) {
    const auto prod = series_mul(chern_character(c).series, todd_class(c.ambient_dim()));
    return prod[static_cast<std::size_t>(c.ambient_dim())];
}

Polynomial euler_char_poly(const ChernData& c) {
    // ch(F(t)) = ch(F) e^{tH}, so the t^j coefficient of chi(F(t)) is
    // [ch td]_{N-j} / j!.
    const std::size_t n_dim = static_cast<std::size_t>(c.ambient_dim());
    const auto prod = series_mul(chern_character(c).series, todd_class(c.ambient_dim()));
    std::vector<Rational> co(n_dim + 1);
    for (std::size_t j = 0; j <= n_dim; ++j) {
        co[j] = prod[n_dim - j] / Rational(factorial(j));
    }
    return Polynomial(std::move(co));
}

}  // namespace chern
