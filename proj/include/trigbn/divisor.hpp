#ifndef TRIGBN_DIVISOR_HPP
#define TRIGBN_DIVISOR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trigbn/result.hpp"

namespace trigbn {

/// A point of the combinatorial curve model: either a real point lying on
/// one of the circles C_1..C_n, or a conjugate pair of non-real points.
/// Points are opaque identifiers; only circle membership matters.
struct PointLabel {
    enum class Kind : std::uint8_t { Real = 0, Pair = 1 };

    Kind kind = Kind::Real;
    int circle = 0; // 1-based for Real, 0 for Pair
    std::string id;

    static PointLabel real(int circle, std::string id) {
        return {Kind::Real, circle, std::move(id)};
    }
    static PointLabel pair(std::string id) { return {Kind::Pair, 0, std::move(id)}; }

    auto operator<=>(const PointLabel&) const = default;

    std::string to_string() const; // "R(1,a)" or "P(x)"
};

/// Per-circle degree parities of a divisor, an element of (Z/2)^n.
class ParityVector {
public:
    ParityVector() = default;
    explicit ParityVector(int circles) : bits_(static_cast<std::size_t>(circles), 0) {}

    int size() const { return static_cast<int>(bits_.size()); }
    bool test(int circle) const { return bits_[static_cast<std::size_t>(circle - 1)] != 0; }
    void flip(int circle) { bits_[static_cast<std::size_t>(circle - 1)] ^= 1; }

    ParityVector operator^(const ParityVector& o) const;
    bool operator==(const ParityVector&) const = default;

    bool is_zero() const;
    int popcount() const;
    std::string to_string() const; // "(0,1,0)"

private:
    std::vector<std::uint8_t> bits_;
};

/// Formal integer combination of labeled points over a fixed number of
/// circles. Multiplicities may be negative; effectiveness is a predicate.
/// Immutable in use: build with add(), then treat as a value.
class RealDivisor {
public:
    explicit RealDivisor(int circles) : circles_(circles) {}

    static RealDivisor zero(int circles) { return RealDivisor(circles); }

    int circles() const { return circles_; }
    const std::map<PointLabel, long long>& terms() const { return coeff_; }
    long long multiplicity(const PointLabel& p) const;

    /// Adds mult copies of p; throws std::out_of_range if a real point's
    /// circle is outside 1..circles().
    RealDivisor& add(const PointLabel& p, long long mult);

    /// Total degree; a conjugate pair counts twice.
    long long degree() const;

    /// Per-circle parities; conjugate pairs contribute nothing.
    ParityVector parity() const;

    /// Number of circles with odd degree.
    int delta() const;

    bool effective() const;
    bool is_zero() const { return coeff_.empty(); }

    RealDivisor& operator+=(const RealDivisor& o);
    RealDivisor& operator-=(const RealDivisor& o);
    friend RealDivisor operator+(RealDivisor a, const RealDivisor& b) { return a += b; }
    friend RealDivisor operator-(RealDivisor a, const RealDivisor& b) { return a -= b; }
    RealDivisor operator*(long long k) const;

    bool operator==(const RealDivisor&) const = default;

    /// Canonical text form, e.g. "3*R(1,a) - 2*R(2,b) + 1*P(x)"; real
    /// points sorted by (circle, id), then pairs by id. Zero prints "0".
    std::string to_string() const;

    /// Parses the text notation; accepts terms in any order and coalesces
    /// repeats. Round-trips with to_string().
    static Result<RealDivisor> parse(std::string_view text, int circles);

private:
    int circles_;
    std::map<PointLabel, long long> coeff_;
};

struct DeltaBoundsReport {
    bool effective = false; // precondition
    bool bound_ok = false;  // delta <= min(n, deg)
    bool parity_ok = false; // delta == deg (mod 2)
    long long degree = 0;
    int delta = 0;

    bool pass() const { return effective && bound_ok && parity_ok; }
    std::vector<std::string> failures() const;
};

/// Checks delta(D) <= min(n, deg D) and delta(D) == deg D (mod 2) for an
/// effective divisor; reports the failing clause by name.
DeltaBoundsReport check_delta_bounds(const RealDivisor& d);

} // namespace trigbn

#endif
