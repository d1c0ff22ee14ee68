#include "chern/arith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chern {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw std::domain_error("rational " + str() + " is not an integer");
    }
    return v_.get_num();
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer binomial(const Integer& top, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    return r;
}

Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer h0_line_bundle(const Integer& a, unsigned r) {
    if (a < 0) {
        return 0;
    }
    return binomial(a + r, r);
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::size_t cap) : coeffs_(cap + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t cap, std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(cap + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t cap) {
    TruncatedSeries s(cap);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries result = one(cap());
    TruncatedSeries base = *this;
    while (e != 0) {
        if (e & 1u) {
            result = series_mul(result, base);
        }
        e >>= 1u;
        if (e != 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) {
        c *= s;
    }
    return r;
}

static void require_same_cap(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap() != b.cap()) {
        throw std::invalid_argument("series cap mismatch: " + std::to_string(a.cap()) +
                                    " vs " + std::to_string(b.cap()));
    }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_cap(a, b);
    TruncatedSeries r = a;
    for (std::size_t k = 0; k <= a.cap(); ++k) {
        r.coeffs_[k] += b.coeffs_[k];
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_cap(a, b);
    TruncatedSeries r = a;
    for (std::size_t k = 0; k <= a.cap(); ++k) {
        r.coeffs_[k] -= b.coeffs_[k];
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_cap(a, b);
    const std::size_t cap = a.cap();
    std::vector<Rational> out(cap + 1);
    for (std::size_t i = 0; i <= cap; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= cap; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(cap, std::move(out));
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
    if (a[0].is_zero()) {
        throw std::domain_error("series with zero constant term is not invertible");
    }
    const std::size_t cap = a.cap();
    std::vector<Rational> inv(cap + 1);
    const Rational c0 = Rational(1) / a[0];
    inv[0] = c0;
    for (std::size_t k = 1; k <= cap; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += a[j] * inv[k - j];
        }
        inv[k] = -acc * c0;
    }
    return TruncatedSeries(cap, std::move(inv));
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    os << Polynomial(coeffs_).str() << " + O(t^" << cap() + 1 << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Rational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
    // Horner in the polynomial ring: p(t+s) = (...(a_d (t+s) + a_{d-1})(t+s) ...).
    const Polynomial lin({shift, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin + constant(*it);
    }
    return acc;
}

Polynomial Polynomial::scaled(const Rational& s) const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) {
        x *= s;
    }
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            os << mag.str();
        }
        if (k >= 1) {
            if (!unit) {
                os << "*";
            }
            os << var;
            if (k > 1) {
                os << "^" << k;
            }
        }
    }
    return os.str();
}

Polynomial binom_poly(unsigned r) {
    Polynomial p = Polynomial::constant(1);
    for (unsigned i = 1; i <= r; ++i) {
        p = p * Polynomial({Rational(static_cast<long>(i)), Rational(1)});
    }
    return p.scaled(Rational(Integer(1), factorial(r)));
}

}  // namespace chern
