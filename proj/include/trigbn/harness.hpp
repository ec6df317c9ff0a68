#ifndef TRIGBN_HARNESS_HPP
#define TRIGBN_HARNESS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trigbn/components.hpp"
#include "trigbn/curve.hpp"
#include "trigbn/divisor.hpp"
#include "trigbn/result.hpp"

namespace trigbn {

/// Formal divisor class kappa_coeff*K + tau_coeff*T + remainder. Linear
/// equivalence is tracked through its two computable invariants, degree
/// and parity vector; equality of signatures is necessary for equivalence,
/// not sufficient.
struct ClassExpr {
    long long kappa_coeff = 0;
    long long tau_coeff = 0;
    RealDivisor remainder;

    explicit ClassExpr(int circles) : remainder(circles) {}
    ClassExpr(long long kappa, long long tau, RealDivisor rem)
        : kappa_coeff(kappa), tau_coeff(tau), remainder(std::move(rem)) {}

    std::string to_string() const; // "1*K - 2*T + 3*R(1,a)"
    static Result<ClassExpr> parse(std::string_view text, int circles);
};

struct Signature {
    long long degree = 0;
    ParityVector parity;
    int delta() const { return parity.popcount(); }
};

/// Parity vector of the trigonal class T: e_1 when delta(T) = 1, all ones
/// when delta(T) = 3. C_1 is the pseudo-line of T by convention.
ParityVector pencil_parity(const CurveParams& params);

/// (degree, parity) of a class expression. K contributes 2g-2 and the zero
/// parity; T contributes 3 and pencil_parity(). pre: params valid,
/// remainder ambient matches params.n.
Signature class_signature(const CurveParams& params, const ClassExpr& e);

// Shapes of real members of the trigonal pencil.
struct AllRealOn {
    int circle = 1;
}; // p on C_1 plus two points on C_i (delta(T) = 1)
struct WithPair {};   // p on C_1 plus a conjugate pair (delta(T) = 1)
struct TripleForm {}; // one point on each of the three circles (delta(T) = 3)
using PencilForm = std::variant<AllRealOn, WithPair, TripleForm>;

/// A degree-3 effective divisor of the given shape whose signature matches
/// T. Rejects forms incompatible with delta(T). Deterministic output.
Result<RealDivisor> pencil_member(const CurveParams& params, const PencilForm& form);

// Constructive cases re-executed as certificates.
struct Case1 {};
struct Case2 {
    ComponentLabel label;
};
struct Case3 {
    std::optional<std::array<int, 2>> pair; // nullopt targets V(0)
};
struct Theorem2Obstruction {
    ComponentLabel label;
};
using HarnessCase = std::variant<Case1, Case2, Case3, Theorem2Obstruction>;

struct CertCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ProofCertificate {
    std::string case_name;
    CurveParams params;
    int d = 0;
    int r = 0;
    ComponentLabel target;
    RealDivisor d1, d2, d3; // witnesses; zero divisors for refutations
    std::vector<CertCheck> checks;
    std::string note; // placement / search-bound details

    ProofCertificate() : d1(0), d2(0), d3(0) {}

    bool pass() const;
    std::string to_string() const;
};

/// Builds and verifies the witness divisors of the constructive proofs
/// (and the exhaustive refutation of the exceptional components) in the
/// regime g-d+r-1 = m < d-2r-1. Rejections are errors; failed checks come
/// back as a failing certificate.
Result<ProofCertificate> run_case(const CurveParams& params, int d, int r,
                                  const HarnessCase& c);

struct Lemma34Result {
    long long base_points = 0;
    // index 0: hypothesis delta(T) = 1, index 1: hypothesis delta(T) = 3
    std::array<int, 2> reflected_delta{};  // delta(K - (g-d+2r-1)T)
    std::array<int, 2> translate_delta{};  // delta((2d-g-3r)T)
    std::array<bool, 2> consistent{};      // |difference| = 1 fits one added point
    std::string verdict;
};

/// Parity argument ruling out delta(T) = 3 when the reflected class has a
/// single base point. pre: g-d+r-1 = m <= d-2r-1 and 2g-3d+3r+1 = 1.
Result<Lemma34Result> lemma34_check(const CurveParams& params, int d, int r);

struct DisjointnessReport {
    long long class_degree = 0; // 3d - g - 6r + 1
    std::vector<CertCheck> checks;
    bool pass() const;
};

/// Certifies U(R) and V(R) disjoint when m > d-2r-1: the class every
/// intersection witness would decompose has no global sections.
/// pre: g-d+r-1 <= m, m > d-2r-1, s >= 0.
Result<DisjointnessReport> lemma31_disjoint(const CurveParams& params, int d, int r);

} // namespace trigbn

#endif
