#pragma once

// Euler characteristics on P^N through the Chern character and the Todd
// class of P^N.

#include "chern/arith.hpp"
#include "chern/chern_data.hpp"

namespace chern {

/// ch(F) in powers of the hyperplane class, truncated at degree N.
struct CharacterSeries {
    TruncatedSeries series;

    /// Power sum p_k = k! * [t^k] ch.
    Rational power_sum(std::size_t k) const;
};

CharacterSeries chern_character(const ChernData& c);

/// (t / (1 - e^{-t}))^{N+1} mod t^{N+1}. Needs N >= 1.
TruncatedSeries todd_class(int ambient_dim);

/// The t^N coefficient of ch(F) td(P^N).
Rational euler_char(const ChernData& c);

/// chi(F(t)) as a polynomial of degree N in t.
Polynomial euler_char_poly(const ChernData& c);

}  // namespace chern
