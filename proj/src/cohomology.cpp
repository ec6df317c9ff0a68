#include "trigbn/cohomology.hpp"

#include <algorithm>
#include <cassert>

namespace trigbn {

TwistProfile h0_twist(const CurveParams& params, int k) {
    assert(is_valid(params));
    const int a = params.g - 2 - params.m;
    TwistProfile out;
    out.k = k;
    const std::array<long long, 3> twists{static_cast<long long>(a) + k,
                                          static_cast<long long>(params.m) + k,
                                          static_cast<long long>(k) - 2};
    for (std::size_t i = 0; i < 3; ++i)
        out.summands[i] = std::max<long long>(0, twists[i] + 1); // h0 of O(e) on P^1
    out.h0 = out.summands[0] + out.summands[1] + out.summands[2];
    out.degree = 2LL * params.g - 2 + 3LL * k;
    return out;
}

bool uv_intersection_possible(const CurveParams& params, int d, int r) {
    assert(is_valid(params));
    return params.m <= d - 2 * r - 1;
}

long long uv_witness_class_degree(const CurveParams& params, int d, int r) {
    return 3LL * d - params.g - 6LL * r + 1;
}

Result<long long> base_point_count(const CurveParams& params, int d, int r) {
    assert(is_valid(params));
    if (params.g - d + r - 1 != params.m)
        return precondition_failed("base_point_count requires g-d+r-1 = m");
    if (params.m > d - 2 * r - 1)
        return precondition_failed("base_point_count requires m <= d-2r-1");
    long long count = 2LL * params.g - 3LL * d + 3LL * r + 1;
    assert(count >= 0); // guaranteed by the Maroni lower bound 3m >= g-4
    return count;
}

Result<bool> lemma_gdm_membership(const CurveParams& params, int d, int r) {
    assert(is_valid(params));
    const int gdr = params.g - d + r - 1;
    if (!(0 < gdr && gdr <= params.m && params.m <= d - 2 * r - 1))
        return precondition_failed("lemma_gdm_membership requires 0 < g-d+r-1 <= m <= d-2r-1");
    return gdr == params.m;
}

} // namespace trigbn
