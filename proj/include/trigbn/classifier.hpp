#ifndef TRIGBN_CLASSIFIER_HPP
#define TRIGBN_CLASSIFIER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "trigbn/components.hpp"
#include "trigbn/curve.hpp"
#include "trigbn/result.hpp"

namespace trigbn {

/// Shape of W^r_d as the union of the candidate components U^r_d and V^r_d.
struct LocusDescriptor {
    int d = 0;
    int r = 0;
    long long s = 0;            // 2(d-1) - g - 3(r-1)
    bool u_nonempty = false;    // d - 3r >= 0
    bool v_nonempty = false;    // s >= 0
    bool v_is_separate = false; // g-d+r-1 <= m
};

/// pre: params valid, r >= 1, d < g. r = 0 is routed to count_w0.
Result<LocusDescriptor> describe(const CurveParams& params, int d, int r);

/// Best supported statement about n(W^r_d): empty locus, an exact count,
/// or lower/upper bounds, with the rules used recorded as provenance tags.
struct LocusClassification {
    enum class Kind { Empty, Exact, Bounds };

    Kind kind = Kind::Empty;
    count_t value = 0; // meaningful for Exact
    count_t lower = 0; // Exact mirrors value into both bounds
    count_t upper = 0;
    std::vector<std::string> provenance;

    bool is_exact() const { return kind == Kind::Exact; }
    bool is_bounds() const { return kind == Kind::Bounds; }
    bool is_empty() const { return kind == Kind::Empty; }
    std::string kind_name() const;
};

/// pre: params valid, r >= 0, and d < g when r >= 1.
/// Errors: inconsistent-parameters when deltaT = 3 meets the single-base-
/// point regime; out-of-scope for r >= 1 with d >= g.
Result<LocusClassification> classify(const CurveParams& params, int d, int r);

enum class RegimeTag { Theorem2, Theorem1Strict, Boundary };
std::string_view to_string(RegimeTag tag);

struct RegionPoint {
    int d = 0;
    int r = 0;
    long long base_points = 0; // 2g-3d+3r+1, constant along the segment
    RegimeTag tag = RegimeTag::Boundary;
};

/// Lattice points (d, r) with r >= 1, d < g, g-d+r-1 = m and m <= d-2r-1:
/// the segment d = g-m+r-1 for 1 <= r <= min(m, g-2m-2). pre: params valid.
std::vector<RegionPoint> admissible_region(const CurveParams& params);

} // namespace trigbn

#endif
