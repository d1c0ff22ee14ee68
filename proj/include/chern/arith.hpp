#pragma once

// Exact arithmetic substrate: big integers, reduced rationals, truncated
// power series and univariate polynomials over Q. Nothing here ever rounds.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace chern {

using Integer = mpz_class;

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}
    Rational(int value) : v_(static_cast<long>(value)) {}
    Rational(const Integer& value) : v_(value) {}
    Rational(const Integer& num, const Integer& den);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Throws std::domain_error unless the value is integral.
    Integer to_integer() const;
    Integer floor() const;
    Integer ceil() const;
    Rational abs() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

/// binomial(top, k) for any integer top (negative tops use the usual
/// falling-factorial extension) and k >= 0.
Integer binomial(const Integer& top, unsigned long k);
Integer factorial(unsigned long k);

/// Dimension of the space of degree-a forms on P^r: binomial(a+r, r) for
/// a >= 0 and 0 otherwise.
Integer h0_line_bundle(const Integer& a, unsigned r);

/// Rational series truncated above degree `cap`.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t cap);
    /// Coefficients beyond `cap` are dropped, missing ones are zero.
    TruncatedSeries(std::size_t cap, std::vector<Rational> coefficients);

    static TruncatedSeries one(std::size_t cap);

    std::size_t cap() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    TruncatedSeries pow(unsigned e) const;
    TruncatedSeries scaled(const Rational& s) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the common cap; caps must agree.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; throws std::domain_error for a zero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// Univariate polynomial over Q in the twist variable t. Never carries
/// trailing zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(std::vector<Rational>(coefficients)) {}

    static Polynomial constant(const Rational& c);
    /// The polynomial t.
    static Polynomial variable();

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const;
    Rational leading() const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& t) const;

    /// p(t + shift).
    Polynomial shifted(const Rational& shift) const;
    Polynomial scaled(const Rational& s) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return scaled(Rational(-1)); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// (t+1)(t+2)...(t+r)/r!, the Euler characteristic of O_{P^r}(t).
Polynomial binom_poly(unsigned r);

}  // namespace chern
