#include "trigbn/curve.hpp"

#include <algorithm>

namespace trigbn {

std::string ValidationReport::message() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += ", ";
        out += v;
    }
    return out;
}

ValidationReport validate(const CurveParams& p) {
    ValidationReport report;

    // g >= 5 keeps the trigonal pencil unique, so delta(T) is well defined.
    if (p.g < 5) report.violations.push_back("genus-floor");

    // 1 <= n <= g+1; the lower end also encodes X(R) != empty.
    if (p.n < 1 || p.n > p.g + 1) report.violations.push_back("Harnack");

    // m > 0 and (g-4)/3 <= m <= (g-2)/2, kept in integer arithmetic.
    if (p.m < 1 || 3 * p.m < p.g - 4 || 2 * p.m > p.g - 2)
        report.violations.push_back("Maroni-range");

    if (p.deltaT != 1 && p.deltaT != 3) {
        report.violations.push_back("deltaT-domain");
    } else if (p.deltaT == 3 && (p.n != 3 || p.g % 2 != 0)) {
        report.violations.push_back("deltaT3-constraint");
    }

    return report;
}

bool is_valid(const CurveParams& p) { return validate(p).ok(); }

Result<CurveParams> validated(const CurveParams& p) {
    ValidationReport report = validate(p);
    if (!report.ok()) return domain_rejection(report.message());
    return p;
}

DerivedInvariants derive(const CurveParams& p) {
    DerivedInvariants out;
    out.a = p.g - 2 - p.m;
    // The family is (g+2m+4)-dimensional except on the 2m = g-2 boundary.
    out.moduli_dim = (2 * p.m == p.g - 2) ? 2 * p.g + 1 : p.g + 2 * p.m + 4;
    return out;
}

std::pair<int, int> maroni_range(int g) {
    int lo = std::max(1, (g - 2) / 3); // ceil((g-4)/3) for g >= 5
    int hi = (g - 2) / 2;
    return {lo, hi};
}

} // namespace trigbn
