#ifndef TRIGBN_COHOMOLOGY_HPP
#define TRIGBN_COHOMOLOGY_HPP

#include <array>

#include "trigbn/curve.hpp"
#include "trigbn/result.hpp"

namespace trigbn {

/// Global sections of K_X + k*T, computed summand by summand from the
/// splitting of the pushforward of K_X to the projective line.
struct TwistProfile {
    int k = 0;
    long long h0 = 0;
    std::array<long long, 3> summands{}; // h0 of O(a+k), O(m+k), O(k-2)
    long long degree = 0;                // deg(K_X + k*T) = 2g - 2 + 3k
};

/// pre: params valid. k may be negative (twists by -T).
TwistProfile h0_twist(const CurveParams& params, int k);

/// Whether U^r_d(R) and V^r_d(R) can meet at all: m <= d - 2r - 1,
/// equivalently h0(K - (g-d+2r-1)T) > 0.
bool uv_intersection_possible(const CurveParams& params, int d, int r);

/// deg(K - (g-d+2r-1)T) = 3d - g - 6r + 1, the degree of the class any
/// intersection witness must decompose.
long long uv_witness_class_degree(const CurveParams& params, int d, int r);

/// Number of base points of K - (g-d+2r-1)T, namely 2g - 3d + 3r + 1.
/// pre: g-d+r-1 = m and m <= d-2r-1; rejected otherwise.
Result<long long> base_point_count(const CurveParams& params, int d, int r);

/// Whether kappa - (g-d+2r-1)tau lies in U of the witness-class locus,
/// i.e. g-d+r-1 = m. pre: 0 < g-d+r-1 <= m <= d-2r-1.
Result<bool> lemma_gdm_membership(const CurveParams& params, int d, int r);

} // namespace trigbn

#endif
