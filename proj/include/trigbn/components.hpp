#ifndef TRIGBN_COMPONENTS_HPP
#define TRIGBN_COMPONENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trigbn/curve.hpp"
#include "trigbn/divisor.hpp"
#include "trigbn/result.hpp"

namespace trigbn {

using count_t = std::uint64_t;

/// Exact binomial coefficient; 0 when k < 0 or k > n. Safe for n <= 64.
count_t binomial(long long n, long long k);

/// s_n(k) = sum over s of C(n, k-2s), the number of connected components
/// of the degree-k real symmetric product of a curve with n real circles.
/// Returns 0 for k < 0.
count_t s_n_k(int n, long long k);

/// Name of a connected component of X_d(R): the strictly increasing tuple
/// of circles on which divisors of the component have odd degree, plus the
/// degree d itself.
struct ComponentLabel {
    std::vector<int> indices;
    long long degree = 0;

    int k() const { return static_cast<int>(indices.size()); }
    bool operator==(const ComponentLabel&) const = default;
    std::string to_string() const; // "V(1,3)@5", "V(0)@4"
};

/// indices strictly increasing in 1..n, k <= min(n, d), d - k even.
bool label_valid(const ComponentLabel& label, int n);

/// Every component label of X_d(R), each once, index tuples in
/// lexicographic order (the empty tuple first). Length is s_n_k(n, d).
std::vector<ComponentLabel> enumerate_labels(int n, long long d);

/// Component of X_d(R) containing an effective divisor D: the set of
/// circles where D has odd degree. Rejects non-effective D.
Result<ComponentLabel> label_of(const RealDivisor& d);

/// n(W^0_d) = n(X_d) = s_n(d). pre: params valid, d >= 1.
count_t count_w0(const CurveParams& params, long long d);

} // namespace trigbn

#endif
