#include "trigbn/divisor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace trigbn {

std::string PointLabel::to_string() const {
    if (kind == Kind::Real) return "R(" + std::to_string(circle) + "," + id + ")";
    return "P(" + id + ")";
}

ParityVector ParityVector::operator^(const ParityVector& o) const {
    ParityVector out(*this);
    for (std::size_t i = 0; i < bits_.size() && i < o.bits_.size(); ++i)
        out.bits_[i] ^= o.bits_[i];
    return out;
}

bool ParityVector::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

int ParityVector::popcount() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string ParityVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (i) out += ",";
        out += bits_[i] ? '1' : '0';
    }
    out += ")";
    return out;
}

long long RealDivisor::multiplicity(const PointLabel& p) const {
    auto it = coeff_.find(p);
    return it == coeff_.end() ? 0 : it->second;
}

RealDivisor& RealDivisor::add(const PointLabel& p, long long mult) {
    if (p.kind == PointLabel::Kind::Real && (p.circle < 1 || p.circle > circles_))
        throw std::out_of_range("circle index " + std::to_string(p.circle) +
                                " outside 1.." + std::to_string(circles_));
    if (mult == 0) return *this;
    auto [it, inserted] = coeff_.try_emplace(p, 0);
    it->second += mult;
    if (it->second == 0) coeff_.erase(it);
    return *this;
}

long long RealDivisor::degree() const {
    long long deg = 0;
    for (const auto& [p, mult] : coeff_)
        deg += (p.kind == PointLabel::Kind::Pair) ? 2 * mult : mult;
    return deg;
}

ParityVector RealDivisor::parity() const {
    ParityVector out(circles_);
    std::vector<long long> per_circle(static_cast<std::size_t>(circles_), 0);
    for (const auto& [p, mult] : coeff_)
        if (p.kind == PointLabel::Kind::Real)
            per_circle[static_cast<std::size_t>(p.circle - 1)] += mult;
    for (int c = 1; c <= circles_; ++c)
        if (per_circle[static_cast<std::size_t>(c - 1)] % 2 != 0) out.flip(c);
    return out;
}

int RealDivisor::delta() const { return parity().popcount(); }

bool RealDivisor::effective() const {
    return std::all_of(coeff_.begin(), coeff_.end(),
                       [](const auto& kv) { return kv.second >= 0; });
}

RealDivisor& RealDivisor::operator+=(const RealDivisor& o) {
    if (o.circles_ != circles_)
        throw std::invalid_argument("divisor circle counts differ");
    for (const auto& [p, mult] : o.coeff_) add(p, mult);
    return *this;
}

RealDivisor& RealDivisor::operator-=(const RealDivisor& o) {
    if (o.circles_ != circles_)
        throw std::invalid_argument("divisor circle counts differ");
    for (const auto& [p, mult] : o.coeff_) add(p, -mult);
    return *this;
}

RealDivisor RealDivisor::operator*(long long k) const {
    RealDivisor out(circles_);
    if (k == 0) return out;
    for (const auto& [p, mult] : coeff_) out.add(p, k * mult);
    return out;
}

std::string RealDivisor::to_string() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (const auto& [p, mult] : coeff_) { // map order is the canonical order
        if (out.empty()) {
            if (mult < 0) out += "-";
        } else {
            out += (mult < 0) ? " - " : " + ";
        }
        long long a = mult < 0 ? -mult : mult;
        out += std::to_string(a) + "*" + p.to_string();
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool parse_number(Cursor& c, long long& out) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) return false;
    auto res = std::from_chars(c.s.data() + start, c.s.data() + c.pos, out);
    return res.ec == std::errc();
}

bool parse_ident(Cursor& c, std::string& out) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
        ++c.pos;
    if (c.pos == start) return false;
    out.assign(c.s.substr(start, c.pos - start));
    return true;
}

} // namespace

Result<RealDivisor> RealDivisor::parse(std::string_view text, int circles) {
    RealDivisor out(circles);
    Cursor c{text};

    if (c.eof()) return parse_error("empty divisor text");

    // "0" denotes the zero divisor
    {
        Cursor probe = c;
        long long v = 0;
        if (parse_number(probe, v) && v == 0 && probe.eof()) return out;
    }

    bool first = true;
    while (!c.eof()) {
        long long sign = 1;
        if (c.consume('-')) {
            sign = -1;
        } else if (c.consume('+')) {
            if (first) return parse_error("unexpected leading '+'");
        } else if (!first) {
            return parse_error("expected '+' or '-' between terms");
        }
        first = false;

        long long mult = 1;
        {
            Cursor probe = c;
            long long v = 0;
            if (parse_number(probe, v)) {
                if (!probe.consume('*')) return parse_error("expected '*' after multiplicity");
                mult = v;
                c = probe;
            }
        }

        c.skip_ws();
        if (c.pos >= c.s.size()) return parse_error("missing point after multiplicity");
        char tag = c.s[c.pos];
        if (tag == 'R') {
            ++c.pos;
            if (!c.consume('(')) return parse_error("expected '(' after R");
            long long circle = 0;
            if (!parse_number(c, circle)) return parse_error("expected circle index");
            if (!c.consume(',')) return parse_error("expected ',' in R(...)");
            std::string id;
            if (!parse_ident(c, id)) return parse_error("expected point id");
            if (!c.consume(')')) return parse_error("expected ')'");
            if (circle < 1 || circle > circles)
                return parse_error("circle index " + std::to_string(circle) + " outside 1.." +
                                   std::to_string(circles));
            out.add(PointLabel::real(static_cast<int>(circle), id), sign * mult);
        } else if (tag == 'P') {
            ++c.pos;
            if (!c.consume('(')) return parse_error("expected '(' after P");
            std::string id;
            if (!parse_ident(c, id)) return parse_error("expected pair id");
            if (!c.consume(')')) return parse_error("expected ')'");
            out.add(PointLabel::pair(id), sign * mult);
        } else {
            return parse_error(std::string("unexpected character '") + tag + "' in divisor");
        }
    }
    return out;
}

std::vector<std::string> DeltaBoundsReport::failures() const {
    if (!effective) return {"not-effective"}; // clauses were not judged
    std::vector<std::string> out;
    if (!bound_ok) out.push_back("delta-bound");
    if (!parity_ok) out.push_back("delta-parity");
    return out;
}

DeltaBoundsReport check_delta_bounds(const RealDivisor& d) {
    DeltaBoundsReport report;
    report.effective = d.effective();
    report.degree = d.degree();
    report.delta = d.delta();
    if (!report.effective) return report; // precondition violation, clauses not judged
    report.bound_ok = report.delta <= std::min<long long>(d.circles(), report.degree);
    report.parity_ok = (report.delta % 2) == (((report.degree % 2) + 2) % 2);
    return report;
}

} // namespace trigbn
