#pragma once

// Chern data of a sheaf on P^N: the classes c_1..c_N as integers, with the
// Chern polynomial living in Z[t]/(t^{N+1}).

#include "chern/arith.hpp"
#include "chern/splitting.hpp"

#include <string>
#include <vector>

namespace chern {

class ChernData {
public:
    /// classes holds c_1..c_N; throws std::invalid_argument unless
    /// N >= 1, rank >= 1 and classes.size() == N.
    ChernData(int ambient_dim, long rank, std::vector<Integer> classes);

    static ChernData trivial(int ambient_dim, long rank);
    /// Reads c_1..c_N off a series with constant term 1 and integral coefficients.
    static ChernData from_series(long rank, const TruncatedSeries& series);

    int ambient_dim() const { return ambient_dim_; }
    long rank() const { return rank_; }
    const std::vector<Integer>& classes() const { return classes_; }
    /// c_i for 0 <= i <= N, with c_0 = 1.
    Integer c(int i) const;

    TruncatedSeries chern_polynomial() const;

    std::string str() const;

    friend bool operator==(const ChernData&, const ChernData&) = default;

private:
    int ambient_dim_;
    long rank_;
    std::vector<Integer> classes_;
};

/// Chern classes of F(t) as polynomials in the twist t.
struct TwistedChern {
    ChernData base;
    /// symbolic_classes[i-1] is c_i(F(t)), i = 1..N.
    std::vector<Polynomial> symbolic_classes;

    const Polynomial& c(int i) const { return symbolic_classes.at(static_cast<std::size_t>(i - 1)); }
    ChernData at(long t) const;
};

/// Chern data of an extension 0 -> sub -> F -> quot -> 0.
ChernData whitney(const ChernData& sub, const ChernData& quot);
/// The quotient factor: whitney(sub, whitney_quotient(total, sub)) == total.
ChernData whitney_quotient(const ChernData& total, const ChernData& sub);

/// Classes of O(b_1) + ... + O(b_n) on P^N.
ChernData split_chern(const SplittingType& b, int ambient_dim);

/// c_i(F(l)) = sum_k binomial(n-i+k, k) l^k c_{i-k}.
ChernData twist_numeric(const ChernData& c, long l);
TwistedChern twist_symbolic(const ChernData& c);

ChernData dual(const ChernData& c);
/// Restriction to a general hyperplane: drops c_N. Needs N >= 2.
ChernData restrict_hyperplane(const ChernData& c);

/// 2 n c_2 - (n-1) c_1^2. Needs N >= 2.
Integer discriminant(const ChernData& c);

/// c_s(F(t)) for rank < s <= N; its degree is at most s - n - 1.
Polynomial high_chern_tail(const ChernData& c, int s);

}  // namespace chern
