#include "trigbn/components.hpp"

#include <algorithm>
#include <cassert>

namespace trigbn {

count_t binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    }
    assert(acc <= static_cast<unsigned __int128>(~count_t{0}));
    return static_cast<count_t>(acc);
}

count_t s_n_k(int n, long long k) {
    assert(n >= 1 && n <= 64);
    if (k < 0) return 0;
    count_t total = 0;
    for (long long t = k % 2; t <= k; t += 2) total += binomial(n, t);
    return total;
}

std::string ComponentLabel::to_string() const {
    std::string out = "V(";
    if (indices.empty()) {
        out += "0";
    } else {
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(indices[i]);
        }
    }
    out += ")@" + std::to_string(degree);
    return out;
}

bool label_valid(const ComponentLabel& label, int n) {
    const int k = label.k();
    if (k > n || k > label.degree) return false;
    if ((label.degree - k) % 2 != 0) return false;
    int prev = 0;
    for (int i : label.indices) {
        if (i <= prev || i > n) return false;
        prev = i;
    }
    return true;
}

std::vector<ComponentLabel> enumerate_labels(int n, long long d) {
    assert(n >= 1 && d >= 0);
    std::vector<ComponentLabel> out;
    // All strictly increasing k-subsets of 1..n with d-k even, k <= d.
    for (int k = static_cast<int>(d % 2); k <= n && k <= d; k += 2) {
        std::vector<int> tuple(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            out.push_back(ComponentLabel{tuple, d});
            if (k == 0) break;
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
            if (i < 0) break;
            ++tuple[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const ComponentLabel& a, const ComponentLabel& b) {
        return std::lexicographical_compare(a.indices.begin(), a.indices.end(),
                                            b.indices.begin(), b.indices.end());
    });
    return out;
}

Result<ComponentLabel> label_of(const RealDivisor& d) {
    if (!d.effective())
        return precondition_failed("label_of requires an effective divisor");
    ComponentLabel out;
    out.degree = d.degree();
    ParityVector par = d.parity();
    for (int c = 1; c <= d.circles(); ++c)
        if (par.test(c)) out.indices.push_back(c);
    return out;
}

count_t count_w0(const CurveParams& params, long long d) {
    assert(d >= 1);
    return s_n_k(params.n, d);
}

} // namespace trigbn
