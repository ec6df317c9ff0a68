#ifndef TRIGBN_CURVE_HPP
#define TRIGBN_CURVE_HPP

#include <string>
#include <utility>
#include <vector>

#include "trigbn/result.hpp"

namespace trigbn {

/// Discrete invariants of a real trigonal curve: genus g, number of real
/// circles n, delta-invariant of the trigonal pencil, Maroni invariant m.
struct CurveParams {
    int g = 0;
    int n = 0;
    int deltaT = 0;
    int m = 0;

    bool operator==(const CurveParams&) const = default;
};

struct DerivedInvariants {
    int a = 0;          // co-Maroni degree, a = g - 2 - m
    int moduli_dim = 0; // dimension of the family of such curves
};

struct ValidationReport {
    std::vector<std::string> violations; // empty means valid
    bool ok() const { return violations.empty(); }
    std::string message() const;
};

/// Checks every constraint on the invariants. Violations are reported by
/// name: genus-floor, Harnack, Maroni-range, deltaT-domain,
/// deltaT3-constraint. Nothing is clamped.
ValidationReport validate(const CurveParams& p);

bool is_valid(const CurveParams& p);

/// validate() as a Result, for callers that want the params back.
Result<CurveParams> validated(const CurveParams& p);

/// pre: p valid.
DerivedInvariants derive(const CurveParams& p);

/// Inclusive interval [lo, hi] of admissible Maroni invariants for genus g.
/// Uses exact integer inequalities 3m >= g-4, 2m <= g-2, m >= 1.
std::pair<int, int> maroni_range(int g);

} // namespace trigbn

#endif
