// Command-line front end: every operation of the library behind one
// deterministic, machine-readable interface.
//
// Exit codes: 0 success, 1 domain rejection, 2 usage error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigbn/classifier.hpp"
#include "trigbn/cohomology.hpp"
#include "trigbn/components.hpp"
#include "trigbn/curve.hpp"
#include "trigbn/harness.hpp"
#include "trigbn/json_io.hpp"
#include "trigbn/svg.hpp"

namespace {

using namespace trigbn;

constexpr const char* kUsage =
    "usage: trigbn COMMAND ...\n"
    "  validate g n deltaT m            check curve invariants\n"
    "  snk n k                          component count s_n(k)\n"
    "  w0 g n deltaT m d                n(W^0_d)\n"
    "  classify g n deltaT m d r        classify n(W^r_d)\n"
    "  region g m [--svg PATH]          admissible (d,r) lattice points\n"
    "  h0 g m k                         h0(K + kT) from the pushforward splitting\n"
    "  signature g n deltaT m EXPR      degree and parity of a class expression\n"
    "  harness CASE g n deltaT m d r [ARG]\n"
    "    CASE: case1 | case2 LABEL | case3 PAIR|0 | obstruction LABEL | lemma34\n"
    "    LABEL/PAIR: comma-separated circle indices, 0 for the empty label\n"
    "  sweep --g-max N                  classify every valid tuple up to genus N\n"
    "flags: --json (all), --csv (classify), --svg PATH (region), --g-max N (sweep)\n";

enum class Format { Table, Json, Csv };

struct Args {
    std::vector<std::string> positional;
    Format format = Format::Table;
    std::optional<std::string> svg_path;
    std::optional<int> g_max;
    bool bad = false;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n" << kUsage;
    return 2;
}

int domain_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

int report_error(const Error& err) {
    return err.kind == ErrorKind::ParseError ? usage_error(err.message)
                                             : domain_error(err.message);
}

bool parse_int(const std::string& text, long long& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

bool parse_int(const std::string& text, int& out) {
    long long v = 0;
    if (!parse_int(text, v) || v < -1'000'000'000LL || v > 1'000'000'000LL) return false;
    out = static_cast<int>(v);
    return true;
}

Args collect_args(int argc, char** argv, int first) {
    Args args;
    for (int i = first; i < argc; ++i) {
        std::string_view a = argv[i];
        if (a == "--json") {
            args.format = Format::Json;
        } else if (a == "--csv") {
            args.format = Format::Csv;
        } else if (a == "--svg") {
            if (i + 1 >= argc) {
                args.bad = true;
                return args;
            }
            args.svg_path = argv[++i];
        } else if (a == "--g-max") {
            if (i + 1 >= argc) {
                args.bad = true;
                return args;
            }
            int v = 0;
            if (!parse_int(argv[++i], v)) {
                args.bad = true;
                return args;
            }
            args.g_max = v;
        } else if (a.rfind("--", 0) == 0) {
            args.bad = true;
            return args;
        } else {
            args.positional.emplace_back(a);
        }
    }
    return args;
}

bool take_params(const Args& args, std::size_t offset, CurveParams& out) {
    return args.positional.size() >= offset + 4 &&
           parse_int(args.positional[offset + 0], out.g) &&
           parse_int(args.positional[offset + 1], out.n) &&
           parse_int(args.positional[offset + 2], out.deltaT) &&
           parse_int(args.positional[offset + 3], out.m);
}

/// "2,3" -> {2,3}; "0" -> {} (the empty label).
bool parse_indices(const std::string& text, std::vector<int>& out) {
    out.clear();
    if (text == "0") return true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        int v = 0;
        if (!parse_int(text.substr(pos, comma - pos), v)) return false;
        out.push_back(v);
        pos = comma + 1;
    }
    return !out.empty();
}

std::optional<std::string> genus5_note(const CurveParams& p, int d, int r,
                                       const LocusClassification& c) {
    if (p.g == 5 && p.m == 1 && d == 4 && r == 1 && c.is_bounds()) {
        return std::string(
            "the singular point of the degree-5 plane model decides this family: a real "
            "node or cusp gives 2n(X)-1 components, a non-real node gives 2n(X)");
    }
    return std::nullopt;
}

int cmd_validate(const Args& args) {
    CurveParams params;
    if (args.positional.size() != 4 || !take_params(args, 0, params))
        return usage_error("validate expects: g n deltaT m");
    const ValidationReport report = validate(params);
    if (args.format == Format::Json) {
        std::cout << validation_json(params).dump() << "\n";
    } else if (report.ok()) {
        const DerivedInvariants inv = derive(params);
        std::cout << "valid a=" << inv.a << " moduli_dim=" << inv.moduli_dim << "\n";
    } else {
        std::cout << "invalid: " << report.message() << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_snk(const Args& args) {
    int n = 0;
    long long k = 0;
    if (args.positional.size() != 2 || !parse_int(args.positional[0], n) ||
        !parse_int(args.positional[1], k))
        return usage_error("snk expects: n k");
    if (n < 1 || n > 64) return domain_error("n must lie in 1..64");
    if (args.format == Format::Json) {
        ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["count"] = s_n_k(n, k);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << s_n_k(n, k) << "\n";
    }
    return 0;
}

int cmd_w0(const Args& args) {
    CurveParams params;
    long long d = 0;
    if (args.positional.size() != 5 || !take_params(args, 0, params) ||
        !parse_int(args.positional[4], d))
        return usage_error("w0 expects: g n deltaT m d");
    auto valid = validated(params);
    if (!valid.ok()) return report_error(valid.error());
    if (d < 1) return domain_error("w0 requires d >= 1");
    if (args.format == Format::Json) {
        ordered_json j = params_json(params);
        j["d"] = d;
        j["count"] = count_w0(params, d);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << count_w0(params, d) << "\n";
    }
    return 0;
}

void print_classification_table(int d, int r, const LocusClassification& c,
                                const std::optional<std::string>& note) {
    std::cout << "d=" << d << " r=" << r << " kind=" << c.kind_name();
    if (c.is_exact())
        std::cout << " value=" << c.value;
    else if (c.is_bounds())
        std::cout << " lower=" << c.lower << " upper=" << c.upper;
    std::cout << " provenance=";
    for (std::size_t i = 0; i < c.provenance.size(); ++i) {
        if (i) std::cout << "; ";
        std::cout << c.provenance[i];
    }
    std::cout << "\n";
    if (note) std::cout << "note: " << *note << "\n";
}

int cmd_classify(const Args& args) {
    CurveParams params;
    int d = 0, r = 0;
    if (args.positional.size() != 6 || !take_params(args, 0, params) ||
        !parse_int(args.positional[4], d) || !parse_int(args.positional[5], r))
        return usage_error("classify expects: g n deltaT m d r");
    auto valid = validated(params);
    if (!valid.ok()) return report_error(valid.error());
    auto result = classify(params, d, r);
    if (!result.ok()) return report_error(result.error());
    const auto note = genus5_note(params, d, r, result.value());
    switch (args.format) {
    case Format::Json:
        std::cout << classification_json(d, r, result.value(), note).dump() << "\n";
        break;
    case Format::Csv:
        std::cout << kClassificationCsvHeader << "\n"
                  << classification_csv_row(params, d, r, result.value()) << "\n";
        break;
    case Format::Table:
        print_classification_table(d, r, result.value(), note);
        break;
    }
    return 0;
}

int cmd_region(const Args& args) {
    int g = 0, m = 0;
    if (args.positional.size() != 2 || !parse_int(args.positional[0], g) ||
        !parse_int(args.positional[1], m))
        return usage_error("region expects: g m");
    CurveParams params{g, 1, 1, m}; // n and deltaT do not enter the region
    auto valid = validated(params);
    if (!valid.ok()) return report_error(valid.error());
    const auto points = admissible_region(params);
    if (args.format == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const auto& pt : points) j.push_back(region_point_json(pt));
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& pt : points)
            std::cout << "d=" << pt.d << " r=" << pt.r << " base_points=" << pt.base_points
                      << " regime=" << to_string(pt.tag) << "\n";
    }
    if (args.svg_path) {
        std::ofstream out(*args.svg_path, std::ios::binary);
        if (!out) return domain_error("cannot write " + *args.svg_path);
        out << region_svg(params, points);
    }
    return 0;
}

int cmd_h0(const Args& args) {
    int g = 0, m = 0, k = 0;
    if (args.positional.size() != 3 || !parse_int(args.positional[0], g) ||
        !parse_int(args.positional[1], m) || !parse_int(args.positional[2], k))
        return usage_error("h0 expects: g m k");
    CurveParams params{g, 1, 1, m};
    auto valid = validated(params);
    if (!valid.ok()) return report_error(valid.error());
    const TwistProfile profile = h0_twist(params, k);
    if (args.format == Format::Json) {
        std::cout << twist_json(profile).dump() << "\n";
    } else {
        std::cout << "k=" << profile.k << " h0=" << profile.h0 << " summands="
                  << profile.summands[0] << "," << profile.summands[1] << ","
                  << profile.summands[2] << " degree=" << profile.degree << "\n";
    }
    return 0;
}

int cmd_signature(const Args& args) {
    CurveParams params;
    if (args.positional.size() != 5 || !take_params(args, 0, params))
        return usage_error("signature expects: g n deltaT m EXPR");
    auto valid = validated(params);
    if (!valid.ok()) return report_error(valid.error());
    auto expr = ClassExpr::parse(args.positional[4], params.n);
    if (!expr.ok()) return report_error(expr.error());
    const Signature sig = class_signature(params, expr.value());
    if (args.format == Format::Json) {
        std::cout << signature_json(sig).dump() << "\n";
    } else {
        std::cout << "degree=" << sig.degree << " parity=" << sig.parity.to_string()
                  << " delta=" << sig.delta() << "\n";
    }
    return 0;
}

int cmd_harness(const Args& args) {
    if (args.positional.empty()) return usage_error("harness expects a case name");
    const std::string& case_name = args.positional[0];

    CurveParams params;
    int d = 0, r = 0;
    if (args.positional.size() < 7 || !take_params(args, 1, params) ||
        !parse_int(args.positional[5], d) || !parse_int(args.positional[6], r))
        return usage_error("harness expects: CASE g n deltaT m d r [ARG]");

    if (case_name == "lemma34") {
        if (args.positional.size() != 7) return usage_error("lemma34 takes no extra argument");
        auto res = lemma34_check(params, d, r);
        if (!res.ok()) return report_error(res.error());
        if (args.format == Format::Json) {
            std::cout << lemma34_json(res.value()).dump() << "\n";
        } else {
            const auto& v = res.value();
            std::cout << "base_points=" << v.base_points << "\n"
                      << "deltaT=1 hypothesis: delta(K-(g-d+2r-1)T)=" << v.reflected_delta[0]
                      << " delta((2d-g-3r)T)=" << v.translate_delta[0]
                      << (v.consistent[0] ? " consistent" : " inconsistent") << "\n"
                      << "deltaT=3 hypothesis: delta(K-(g-d+2r-1)T)=" << v.reflected_delta[1]
                      << " delta((2d-g-3r)T)=" << v.translate_delta[1]
                      << (v.consistent[1] ? " consistent" : " inconsistent") << "\n"
                      << v.verdict << "\n";
        }
        return 0;
    }

    HarnessCase harness_case = Case1{};
    const long long s = 2LL * d - params.g - 3LL * r + 1;
    if (case_name == "case1") {
        if (args.positional.size() != 7) return usage_error("case1 takes no extra argument");
    } else if (case_name == "case2" || case_name == "obstruction") {
        if (args.positional.size() != 8)
            return usage_error(case_name + " expects a component label, e.g. 2,3");
        std::vector<int> indices;
        if (!parse_indices(args.positional[7], indices))
            return usage_error("bad label: " + args.positional[7]);
        ComponentLabel label{indices, s};
        if (case_name == "case2")
            harness_case = Case2{label};
        else
            harness_case = Theorem2Obstruction{label};
    } else if (case_name == "case3") {
        if (args.positional.size() != 8)
            return usage_error("case3 expects a pair i,j or 0 for V(0)");
        std::vector<int> indices;
        if (!parse_indices(args.positional[7], indices))
            return usage_error("bad pair: " + args.positional[7]);
        if (indices.empty()) {
            harness_case = Case3{std::nullopt};
        } else if (indices.size() == 2) {
            harness_case = Case3{std::array<int, 2>{indices[0], indices[1]}};
        } else {
            return usage_error("case3 expects exactly two indices or 0");
        }
    } else {
        return usage_error("unknown harness case: " + case_name);
    }

    auto cert = run_case(params, d, r, harness_case);
    if (!cert.ok()) return report_error(cert.error());
    if (args.format == Format::Json)
        std::cout << certificate_json(cert.value()).dump() << "\n";
    else
        std::cout << cert.value().to_string();
    return cert.value().pass() ? 0 : 1;
}

int cmd_sweep(const Args& args) {
    if (!args.g_max || !args.positional.empty())
        return usage_error("sweep expects: --g-max N");
    const int g_max = *args.g_max;
    if (g_max < 5) return domain_error("--g-max must be at least 5");

    if (args.format != Format::Json) std::cout << kClassificationCsvHeader << "\n";
    for (int g = 5; g <= g_max; ++g) {
        for (int n = 1; n <= g + 1; ++n) {
            for (int deltaT : {1, 3}) {
                const auto [m_lo, m_hi] = maroni_range(g);
                for (int m = m_lo; m <= m_hi; ++m) {
                    CurveParams params{g, n, deltaT, m};
                    if (!is_valid(params)) continue;
                    for (int d = 1; d < g; ++d) {
                        for (int r = 1; r <= d; ++r) {
                            auto result = classify(params, d, r);
                            if (args.format == Format::Json) {
                                ordered_json j = params_json(params);
                                j["d"] = d;
                                j["r"] = r;
                                if (result.ok()) {
                                    const ordered_json cls =
                                        classification_json(d, r, result.value());
                                    for (const auto& [key, value] : cls.items())
                                        if (key != "d" && key != "r") j[key] = value;
                                } else {
                                    j["kind"] = "inconsistent";
                                    j["provenance"] = {"Lemma 3.4"};
                                }
                                std::cout << j.dump() << "\n";
                            } else if (result.ok()) {
                                std::cout << classification_csv_row(params, d, r,
                                                                    result.value())
                                          << "\n";
                            } else {
                                std::cout << g << "," << n << "," << deltaT << "," << m << ","
                                          << d << "," << r << ",inconsistent,0,0,Lemma 3.4\n";
                            }
                        }
                    }
                }
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage_error("missing command");
    const std::string_view command = argv[1];
    const Args args = collect_args(argc, argv, 2);
    if (args.bad) return usage_error("bad flag syntax");
    if (args.svg_path && command != "region")
        return usage_error("--svg is only accepted by the region command");

    if (command == "validate") return cmd_validate(args);
    if (command == "snk") return cmd_snk(args);
    if (command == "w0") return cmd_w0(args);
    if (command == "classify") return cmd_classify(args);
    if (command == "region") return cmd_region(args);
    if (command == "h0") return cmd_h0(args);
    if (command == "signature") return cmd_signature(args);
    if (command == "harness") return cmd_harness(args);
    if (command == "sweep") return cmd_sweep(args);
    return usage_error("unknown command: " + std::string(command));
}
