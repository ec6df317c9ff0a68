#ifndef TRIGBN_SVG_HPP
#define TRIGBN_SVG_HPP

#include <string>
#include <vector>

#include "trigbn/classifier.hpp"
#include "trigbn/curve.hpp"

namespace trigbn {

/// Deterministic SVG plot of the admissible (d, r) lattice points: one
/// marker per point, the segment line d = g-m+r-1, regime color-coded.
std::string region_svg(const CurveParams& params, const std::vector<RegionPoint>& points);

} // namespace trigbn

#endif
