#pragma once

// Numeric bounds on sections, Chern classes, discriminants and cohomology of
// torsion-free sheaves on P^N, evaluated from splitting data.

#include "chern/arith.hpp"
#include "chern/chern_data.hpp"
#include "chern/splitting.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chern {

enum class Verdict { satisfied, equality, violated, no_oracle };

std::string to_string(Verdict v);

using BoundValue = std::variant<Integer, Rational, Polynomial, std::vector<Integer>>;

/// An evaluated bound next to the value it constrains.
struct BoundReport {
    std::string name;
    BoundValue bound;
    std::optional<BoundValue> oracle;
    Verdict verdict = Verdict::no_oracle;
    std::string note;

    /// oracle <= bound.
    static BoundReport upper(std::string name, const Integer& bound,
                             std::optional<Integer> oracle, std::string note = {});
    /// oracle >= bound.
    static BoundReport lower(std::string name, const Integer& bound,
                             std::optional<Integer> oracle, std::string note = {});
    /// Pointwise versions over a list of values; equality means equal everywhere.
    static BoundReport upper(std::string name, const std::vector<Integer>& bound,
                             const std::vector<Integer>& oracle, std::string note = {});
    static BoundReport lower(std::string name, const std::vector<Integer>& bound,
                             const std::vector<Integer>& oracle, std::string note = {});
    /// A check whose outcome was decided by the caller.
    static BoundReport decided(std::string name, BoundValue bound, std::optional<BoundValue> oracle,
                               Verdict verdict, std::string note = {});
};

// Sections ------------------------------------------------------------------

/// sum_i h^0 O_{P^N}(b_i)
Integer h0_upper(const SplittingType& b, int ambient_dim);
/// sum_i h^0 O_{P^N}(-b_i - N - 1)
Integer hN_upper(const SplittingType& b, int ambient_dim);

/// Which space carries h^0 O(a_{j-1,i}) in the first sum of the section bound.
enum class GrossaReading {
    section_dim,  ///< P^{j-1}, what the induction actually produces
    literal,      ///< P^N as displayed
};

/// Lower bound for h^0 O(b) - h^0 F. Needs every gst row.
Integer grossa_rhs(const GstMatrix& m, GrossaReading reading = GrossaReading::section_dim);

/// Lower bound for h^0 O(b+t) - h^0 F(t), valid once every a_{j,i} + t >= 0.
/// Throws std::invalid_argument for smaller t or missing rows.
Integer rigrossa_rhs(const GstMatrix& m, long t);

/// Upper bounds for h^0 F from b and the plane-section type a, when a >= 0.
Integer menogrande2_rhs(const SplittingType& b, const SplittingType& a_plane, int ambient_dim);
Integer menogrande_rhs(const SplittingType& b, const SplittingType& a_plane, int ambient_dim);

// Chern classes ---------------------------------------------------------------

/// sum_{i<j} b_i b_j + sum_i (b_i - a_i)(b_i - a_i + 1)/2. Needs a <= b.
Integer c2_lower(const SplittingType& b, const SplittingType& a_plane);

/// c_2(F(t)) = c_2 + (n-1) c_1 t + binomial(n,2) t^2.
Polynomial c2_twisted(const ChernData& c);

struct TwistWindow {
    /// Every twist qualifies (rank 1 with c_2 <= 0).
    bool unbounded = false;
    std::vector<long> values;
};

/// {t : c_2(F(t)) <= 0}.
TwistWindow negative_c2_window(const ChernData& c);

// Discriminant ----------------------------------------------------------------

Integer delta_lower_nogap(long n, long c1);
Integer delta_lower_uniform(long n);
/// 2n when semistable, 3n^2/4 when stable.
Rational semistable_delta_floor(long n, bool stable);

/// c_s(F(t)) - c_s(O(b)(t)). Needs 3 <= s <= min(n, N) and c_1 = sum b.
Polynomial lambda_s(const ChernData& c, const SplittingType& b, int s);

// Splitting criteria ------------------------------------------------------------

struct SplitConditions {
    bool gst_equals_b = false;
    /// h^0 F(t) = h^0 O(b+t) at every supplied t.
    std::optional<bool> equal_everywhere;
    /// The same at some supplied t >= -a_n.
    std::optional<bool> equal_somewhere;
};

SplitConditions split_conditions(const SplittingType& b, const SplittingType& gst, int ambient_dim,
                                 const std::map<long, Integer>& h0_values);

/// equality when every condition holds, satisfied when none does, violated
/// when they disagree.
BoundReport split_predicates(const SplittingType& b, const SplittingType& gst, int ambient_dim,
                             const std::map<long, Integer>& h0_values = {});

/// c_1 >= sum a_i, equality only for the trivial case.
BoundReport louso_check(const SplittingType& gst, const Integer& c1);

// Cohomology ------------------------------------------------------------------

struct CohomologyBounds {
    int ambient_dim = 0;
    /// P^i for i = 0..N.
    std::vector<Integer> per_index_bounds;
    /// Q.
    Integer vanishing_threshold;
    /// C_s for s = 3..N, stored at index s - 3.
    std::vector<Integer> chern_bounds;

    const Integer& P(int i) const { return per_index_bounds.at(static_cast<std::size_t>(i)); }
    const Integer& C(int s) const { return chern_bounds.at(static_cast<std::size_t>(s - 3)); }
};

/// Needs N >= 2 and c_1 = sum b. Throws std::range_error when a summation
/// range gets out of hand.
CohomologyBounds cohomology_bounds(long n, int ambient_dim, const Integer& c1, const Integer& c2,
                                   const SplittingType& b);

/// Same, maximized over every splitting type compatible with the set.
CohomologyBounds cohomology_bounds(const InvariantSet& given, int ambient_dim);

struct RegularityBound {
    Integer regularity;
    Integer generation;
};

RegularityBound regularity_bound(const CohomologyBounds& bounds, int ambient_dim);

/// Drops the memo table used by cohomology_bounds.
void clear_cohomology_cache();

}  // namespace chern
