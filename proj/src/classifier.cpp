#include "trigbn/classifier.hpp"

#include <algorithm>
#include <cassert>

namespace trigbn {

namespace {

LocusClassification make_empty(std::vector<std::string> tags) {
    LocusClassification c;
    c.kind = LocusClassification::Kind::Empty;
    c.provenance = std::move(tags);
    return c;
}

LocusClassification make_exact(count_t value, std::vector<std::string> tags) {
    LocusClassification c;
    c.kind = LocusClassification::Kind::Exact;
    c.value = c.lower = c.upper = value;
    c.provenance = std::move(tags);
    return c;
}

LocusClassification make_bounds(count_t lower, count_t upper, std::vector<std::string> tags) {
    assert(lower <= upper);
    if (lower == upper) {
        tags.push_back("bounds coincide");
        return make_exact(lower, std::move(tags));
    }
    LocusClassification c;
    c.kind = LocusClassification::Kind::Bounds;
    c.lower = lower;
    c.upper = upper;
    c.provenance = std::move(tags);
    return c;
}

} // namespace

std::string LocusClassification::kind_name() const {
    switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Exact: return "exact";
    case Kind::Bounds: return "bounds";
    }
    return "";
}

Result<LocusDescriptor> describe(const CurveParams& params, int d, int r) {
    assert(is_valid(params));
    if (r == 0) return out_of_scope("r = 0 has a known exact count; use count_w0");
    if (r < 0) return out_of_scope("r must be non-negative");
    if (d >= params.g) return out_of_scope("d >= g is outside the supported range");
    if (d < 0) return out_of_scope("d must be non-negative");

    LocusDescriptor out;
    out.d = d;
    out.r = r;
    out.s = 2LL * (d - 1) - params.g - 3LL * (r - 1);
    assert(out.s == 2LL * d - params.g - 3LL * r + 1);
    out.u_nonempty = d - 3 * r >= 0;
    out.v_nonempty = out.s >= 0;
    out.v_is_separate = params.g - d + r - 1 <= params.m;
    return out;
}

Result<LocusClassification> classify(const CurveParams& params, int d, int r) {
    assert(is_valid(params));
    if (r < 0 || d < 0) return out_of_scope("d and r must be non-negative");

    const int n = params.n;

    // r = 0: the symmetric-product count applies for every d >= 1.
    if (r == 0) {
        if (d < 1) return out_of_scope("r = 0 requires d >= 1");
        return make_exact(s_n_k(n, d), {"Prop 2.5"});
    }

    if (d >= params.g) return out_of_scope("d >= g is outside the supported range");

    const long long s = 2LL * d - params.g - 3LL * r + 1;
    const long long u_deg = static_cast<long long>(d) - 3 * r;
    const bool u_nonempty = u_deg >= 0;
    const bool v_nonempty = s >= 0;
    const int gdr = params.g - d + r - 1; // >= 1 whenever d < g, r >= 1
    const bool separate = gdr <= params.m;
    const count_t n_u = s_n_k(n, u_deg);

    if (!u_nonempty && !v_nonempty) return make_empty({"Thm 2.10"});

    if (!v_nonempty) // W = U, a single translate of W^0
        return make_exact(n_u, {"Thm 2.10", "Prop 2.5"});

    if (!separate) // V is contained in the single component U
        return make_exact(n_u, {"Thm 2.10(3)", "Prop 2.5"});

    if (params.m > d - 2 * r - 1) // U(R) and V(R) are disjoint, components add
        return make_exact(n_u + s_n_k(n, s), {"Lemma 3.1 contrapositive", "derived"});

    if (s == 0) // V is a single point
        return make_bounds(n_u, n_u + 1, {"Thm 3.8 s=0 edge"});

    if (gdr == params.m && params.m < d - 2 * r - 1) {
        const long long base_points = 2LL * params.g - 3LL * d + 3LL * r + 1;
        // A single base point forces deltaT = 1; reject the contradiction.
        if (base_points == 1 && params.deltaT == 3)
            return inconsistent_params("inconsistent parameters: Lemma 3.4 forces δ(T)=1");

        if (params.deltaT == 3) return make_exact(n_u, {"Thm 3.8 Case 3"});
        if (base_points == 1)
            return make_exact(n_u + binomial(n - 1, s),
                              {"Thm 3.9 (reconstructed)", "Thm 3.8 Case 2"});
        if (n == 1) return make_exact(1, {"Thm 3.8 Case 1"});
        return make_bounds(n_u, n_u + binomial(n - 1, s), {"Thm 3.8"});
    }

    // g-d+r-1 < m <= d-2r-1 with s > 0, or equality on both sides (s = 1).
    return make_bounds(n_u, n_u + s_n_k(n, s), {"Eq. (3.1)", "Cor 3.7"});
}

std::string_view to_string(RegimeTag tag) {
    switch (tag) {
    case RegimeTag::Theorem2: return "theorem2";
    case RegimeTag::Theorem1Strict: return "theorem1-strict";
    case RegimeTag::Boundary: return "boundary";
    }
    return "";
}

std::vector<RegionPoint> admissible_region(const CurveParams& params) {
    assert(is_valid(params));
    std::vector<RegionPoint> out;
    const int r_max = std::min(params.m, params.g - 2 * params.m - 2);
    const long long base_points = 3LL * params.m - params.g + 4;
    for (int r = 1; r <= r_max; ++r) {
        RegionPoint pt;
        pt.d = params.g - params.m + r - 1;
        pt.r = r;
        pt.base_points = base_points;
        if (base_points == 1)
            pt.tag = RegimeTag::Theorem2;
        else if (params.m < pt.d - 2 * r - 1)
            pt.tag = RegimeTag::Theorem1Strict;
        else
            pt.tag = RegimeTag::Boundary;
        out.push_back(pt);
    }
    return out;
}

} // namespace trigbn
