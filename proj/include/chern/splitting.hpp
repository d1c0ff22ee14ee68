#pragma once

// Ordered integer sequences: splitting types, global-section types, the
// table of global-section types of general linear sections, and the
// extremal no-gap sequences that drive the discriminant bounds.

#include "chern/arith.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace chern {

/// Non-increasing, non-empty integer sequence b_1 >= ... >= b_n.
class SplittingType {
public:
    /// Throws std::invalid_argument for an empty or increasing sequence.
    explicit SplittingType(std::vector<long> entries);

    std::size_t size() const { return e_.size(); }
    long operator[](std::size_t i) const { return e_.at(i); }
    const std::vector<long>& entries() const { return e_; }
    long first() const { return e_.front(); }
    long last() const { return e_.back(); }
    long diameter() const { return e_.front() - e_.back(); }

    Integer sum() const;
    Integer sum_of_squares() const;
    /// k-th elementary symmetric polynomial of the entries.
    Integer elementary(std::size_t k) const;

    /// [b_1 + t, ..., b_n + t]
    SplittingType shifted(long t) const;
    /// [-b_n, ..., -b_1]
    SplittingType dual() const;

    /// "[2,0,-1]"
    std::string str() const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;

private:
    std::vector<long> e_;
};

/// Consecutive differences are all at most 1.
bool no_gap(const SplittingType& b);

/// Componentwise a_i <= b_i; lengths must agree.
bool leq(const SplittingType& a, const SplittingType& b);

/// The unique 0 <= c <= n/2 with c1 = c or c1 = -c modulo n.
long cbar(long c1, long n);

/// No-gap sequence of length n summing to c1 with the largest sum of squares.
SplittingType extremal_nogap_sequence(long n, long c1);

/// Largest sum of squares over all no-gap sequences of length n summing to
/// c1, by enumeration of the difference patterns. Throws std::length_error
/// for n > 10.
Integer brute_force_max_sumsq(long n, long c1);

/// Global-section types a_j of the restrictions to general j-dimensional
/// linear spaces, j = 1..N. Row 1 is the splitting type. Rows may be absent.
class GstMatrix {
public:
    /// rows[j-1] holds a_j. Throws std::invalid_argument when rows have
    /// different lengths or when a present row exceeds an earlier present
    /// row somewhere.
    GstMatrix(int ambient_dim, std::vector<std::optional<SplittingType>> rows);

    int ambient_dim() const { return n_dim_; }
    std::size_t rank() const { return rank_; }
    /// j in 1..N.
    const std::optional<SplittingType>& row(int j) const;
    bool complete() const;
    const std::vector<std::optional<SplittingType>>& rows() const { return rows_; }

    /// Row j, throwing std::invalid_argument when absent.
    const SplittingType& require_row(int j) const;

    friend bool operator==(const GstMatrix&, const GstMatrix&) = default;

private:
    int n_dim_;
    std::size_t rank_ = 0;
    std::vector<std::optional<SplittingType>> rows_;
};

/// One of the invariant sets {b, delta2}, {b, c2}, {c1, c2, d}, {c1, d, delta2}.
struct InvariantInput {
    long rank = 0;
    std::optional<SplittingType> b;
    std::optional<Integer> c1;
    std::optional<Integer> c2;
    std::optional<long> d;
    std::optional<Integer> delta2;
};

/// The full set {c1, c2, b, d, delta2}. When b is not known, c2 or delta2
/// stays undetermined and the entries of b are only known to lie in
/// [entry_lower, entry_upper].
struct InvariantSet {
    long rank = 0;
    Integer c1;
    long d = 0;
    std::optional<SplittingType> b;
    std::optional<Integer> c2;
    std::optional<Integer> delta2;
    Rational entry_lower;
    Rational entry_upper;
};

/// Throws std::invalid_argument for any other combination of fields.
InvariantSet invariant_convert(const InvariantInput& given);

/// Every splitting type of the given rank with sum c1 and diameter d.
/// Throws std::length_error when there are more than `limit` of them.
std::vector<SplittingType> splitting_types_with(long rank, const Integer& c1, long d,
                                                std::size_t limit = 100000);

}  // namespace chern
