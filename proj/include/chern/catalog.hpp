#pragma once

// Sheaf descriptors with known invariants, the builtin catalog of sharp
// examples, and Chern data of ideal sheaves from Koszul resolutions.

#include "chern/arith.hpp"
#include "chern/chern_data.hpp"
#include "chern/splitting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chern {

/// h^0 F(t) = poly(t) for min_t <= t < (next piece's min_t).
struct H0Piece {
    long min_t;
    Polynomial poly;

    friend bool operator==(const H0Piece&, const H0Piece&) = default;
};

/// h^i F(k) for k in [kmin, kmax]; h[i][k - kmin].
struct CohomologyTable {
    long kmin = 0;
    long kmax = -1;
    std::vector<std::vector<Integer>> h;

    const Integer& at(int i, long k) const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

struct SheafFlags {
    bool reflexive = false;
    bool torsion_free = true;
    bool split = false;
    bool semistable = false;
    bool stable = false;

    friend bool operator==(const SheafFlags&, const SheafFlags&) = default;
};

struct SheafDescriptor {
    std::string name;
    ChernData chern;
    SplittingType splitting;
    std::optional<GstMatrix> gst;
    /// Pieces sorted by strictly increasing min_t; h^0 is 0 below the first.
    std::vector<H0Piece> h0_series;
    std::optional<CohomologyTable> cohomology;
    SheafFlags flags;
    std::string provenance;

    int ambient_dim() const { return chern.ambient_dim(); }
    long rank() const { return chern.rank(); }
    /// h^0 F(t) from h0_series, or nothing when the series is absent.
    std::optional<Integer> h0(long t) const;

    /// Throws std::invalid_argument when the parts do not fit together.
    void validate() const;

    friend bool operator==(const SheafDescriptor&, const SheafDescriptor&) = default;
};

struct Subvariety {
    enum class Kind { points, line, complete_intersection };
    Kind kind = Kind::points;
    long count = 1;
    long d1 = 1;
    long d2 = 1;

    static Subvariety points(long m) { return {Kind::points, m, 1, 1}; }
    static Subvariety line() { return {Kind::line, 1, 1, 1}; }
    static Subvariety complete_intersection(long d1, long d2) {
        return {Kind::complete_intersection, 1, d1, d2};
    }
};

/// Chern data of the ideal sheaf of y in P^N. Throws std::invalid_argument
/// for unsupported shapes (codimension below 2, non-positive degrees).
ChernData chern_from_koszul(const Subvariety& y, int ambient_dim);

/// Builds the catalog from its constructions.
std::vector<SheafDescriptor> generate_builtin_catalog();

/// The catalog shipped inside the library.
const std::vector<SheafDescriptor>& builtin_catalog();

/// Throws std::out_of_range for an unknown name.
const SheafDescriptor& find_descriptor(const std::vector<SheafDescriptor>& catalog,
                                       const std::string& name);

/// The JSON text embedded at build time.
std::string_view builtin_catalog_json();

}  // namespace chern
