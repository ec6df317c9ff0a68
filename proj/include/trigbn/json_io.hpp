#ifndef TRIGBN_JSON_IO_HPP
#define TRIGBN_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "trigbn/classifier.hpp"
#include "trigbn/cohomology.hpp"
#include "trigbn/curve.hpp"
#include "trigbn/harness.hpp"

// JSON shapes for the CLI and fixtures. Field order is fixed; identical
// inputs serialize to identical bytes.
namespace trigbn {

using ordered_json = nlohmann::ordered_json;

inline ordered_json params_json(const CurveParams& p) {
    ordered_json j;
    j["g"] = p.g;
    j["n"] = p.n;
    j["deltaT"] = p.deltaT;
    j["m"] = p.m;
    return j;
}

inline ordered_json validation_json(const CurveParams& p) {
    const ValidationReport report = validate(p);
    ordered_json j = params_json(p);
    j["valid"] = report.ok();
    j["violations"] = report.violations;
    if (report.ok()) {
        const DerivedInvariants inv = derive(p);
        j["a"] = inv.a;
        j["moduli_dim"] = inv.moduli_dim;
    }
    return j;
}

inline ordered_json classification_json(int d, int r, const LocusClassification& c,
                                        const std::optional<std::string>& note = std::nullopt) {
    ordered_json j;
    j["d"] = d;
    j["r"] = r;
    j["kind"] = c.kind_name();
    if (c.is_exact()) {
        j["value"] = c.value;
    } else if (c.is_bounds()) {
        j["lower"] = c.lower;
        j["upper"] = c.upper;
    }
    j["provenance"] = c.provenance;
    if (note) j["note"] = *note;
    return j;
}

inline ordered_json descriptor_json(const LocusDescriptor& desc) {
    ordered_json j;
    j["d"] = desc.d;
    j["r"] = desc.r;
    j["s"] = desc.s;
    j["u_nonempty"] = desc.u_nonempty;
    j["v_nonempty"] = desc.v_nonempty;
    j["v_is_separate"] = desc.v_is_separate;
    return j;
}

inline ordered_json region_point_json(const RegionPoint& pt) {
    ordered_json j;
    j["d"] = pt.d;
    j["r"] = pt.r;
    j["base_points"] = pt.base_points;
    j["regime"] = std::string(to_string(pt.tag));
    return j;
}

inline ordered_json twist_json(const TwistProfile& t) {
    ordered_json j;
    j["k"] = t.k;
    j["h0"] = t.h0;
    j["summands"] = t.summands;
    j["degree"] = t.degree;
    return j;
}

inline ordered_json signature_json(const Signature& sig) {
    ordered_json j;
    j["degree"] = sig.degree;
    std::vector<int> bits;
    for (int c = 1; c <= sig.parity.size(); ++c) bits.push_back(sig.parity.test(c) ? 1 : 0);
    j["parity"] = bits;
    j["delta"] = sig.delta();
    return j;
}

inline ordered_json certificate_json(const ProofCertificate& cert) {
    ordered_json j;
    j["case"] = cert.case_name;
    j["params"] = params_json(cert.params);
    j["d"] = cert.d;
    j["r"] = cert.r;
    j["target"] = cert.target.to_string();
    ordered_json witnesses;
    witnesses["D1"] = cert.d1.to_string();
    witnesses["D2"] = cert.d2.to_string();
    witnesses["D3"] = cert.d3.to_string();
    j["witnesses"] = witnesses;
    ordered_json checks = ordered_json::array();
    for (const auto& c : cert.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["note"] = cert.note;
    j["pass"] = cert.pass();
    return j;
}

inline ordered_json lemma34_json(const Lemma34Result& res) {
    ordered_json j;
    j["base_points"] = res.base_points;
    j["reflected_delta"] = res.reflected_delta;
    j["translate_delta"] = res.translate_delta;
    j["consistent"] = res.consistent;
    j["verdict"] = res.verdict;
    return j;
}

/// Fixed CSV row: g,n,deltaT,m,d,r,kind,lower,upper,provenance.
inline std::string classification_csv_row(const CurveParams& p, int d, int r,
                                          const LocusClassification& c) {
    std::string provenance;
    for (const auto& tag : c.provenance) {
        if (!provenance.empty()) provenance += "; ";
        provenance += tag;
    }
    return std::to_string(p.g) + "," + std::to_string(p.n) + "," + std::to_string(p.deltaT) +
           "," + std::to_string(p.m) + "," + std::to_string(d) + "," + std::to_string(r) + "," +
           c.kind_name() + "," + std::to_string(c.lower) + "," + std::to_string(c.upper) + "," +
           provenance;
}

inline constexpr const char* kClassificationCsvHeader =
    "g,n,deltaT,m,d,r,kind,lower,upper,provenance";

} // namespace trigbn

#endif
