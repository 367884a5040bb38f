#include "fpd/textio.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"

namespace fpd {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

Int parse_weight(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty weight token");
    for (char ch : tok) {
        if (ch < '0' || ch > '9')
            throw ParseError("weight must be a positive decimal integer, got '" + tok + "'");
    }
    Int w(tok);
    if (w < 1) throw ParseError("weight must be >= 1, got '" + tok + "'");
    return w;
}

json point_array(const std::vector<FixedPoint>& pts) {
    json a = json::array();
    for (const FixedPoint& p : pts) a.push_back(print_point(p));
    return a;
}

json int_array(const std::vector<Int>& vals) {
    json a = json::array();
    for (const Int& v : vals) a.push_back(v.str());
    return a;
}

const json& require(const json& j, const char* field) {
    if (!j.contains(field)) throw ParseError(std::string("certificate is missing '") + field + "'");
    return j.at(field);
}

std::vector<FixedPoint> points_from(const json& a, const char* field) {
    if (!a.is_array()) throw ParseError(std::string("'") + field + "' must be an array");
    std::vector<FixedPoint> out;
    for (const json& e : a) {
        if (!e.is_string()) throw ParseError(std::string("'") + field + "' entries must be strings");
        out.push_back(parse_point(e.get<std::string>()));
    }
    return out;
}

std::vector<Int> ints_from(const json& a, const char* field) {
    if (!a.is_array()) throw ParseError(std::string("'") + field + "' must be an array");
    std::vector<Int> out;
    for (const json& e : a) {
        if (!e.is_string()) throw ParseError(std::string("'") + field + "' entries must be strings");
        out.push_back(parse_int(e.get<std::string>()));
    }
    return out;
}

}  // namespace

FixedPoint parse_point(const std::string& text) {
    const auto tokens = tokenize(text);
    if (tokens.size() != 4)
        throw ParseError("expected 'SIGN W1 W2 W3', got '" + text + "'");
    Sign s;
    if (tokens[0] == "+")
        s = Sign::plus;
    else if (tokens[0] == "-")
        s = Sign::minus;
    else
        throw ParseError("sign must be '+' or '-', got '" + tokens[0] + "'");
    return FixedPoint(s, parse_weight(tokens[1]), parse_weight(tokens[2]),
                      parse_weight(tokens[3]));
}

std::string print_point(const FixedPoint& p) {
    std::ostringstream os;
    os << sign_char(p.sign()) << ' ' << p.weights()[0] << ' ' << p.weights()[1] << ' '
       << p.weights()[2];
    return os.str();
}

FixedPointData parse_data(const std::string& text) {
    FixedPointData data;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            data.insert(parse_point(line));
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return data;
}

std::string print_data(const FixedPointData& data) {
    std::string out;
    for (const FixedPoint& p : data) {
        out += print_point(p);
        out += '\n';
    }
    return out;
}

Int parse_int(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && body[0] == '-') {
        negative = true;
        body.erase(body.begin());
    }
    if (body.empty()) throw ParseError("empty integer token");
    for (char ch : body) {
        if (ch < '0' || ch > '9') throw ParseError("invalid integer '" + text + "'");
    }
    Int v(body);
    return negative ? -v : v;
}

std::string certificate_to_json(const CobordismCertificate& cert, bool pretty) {
    json j;
    j["version"] = 1;
    j["initial"] = point_array(cert.initial.points());
    j["divisor"] = cert.divisor.str();
    json steps = json::array();
    for (const ReductionStep& s : cert.steps) {
        json js;
        js["kind"] = kind_name(s.kind);
        js["params"] = int_array(s.params);
        js["removed"] = point_array(s.removed);
        js["added"] = point_array(s.added);
        js["generator"] = {{"family", family_name(s.generator.family)},
                           {"params", int_array(s.generator.params)},
                           {"reversed", s.generator.reversed}};
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    return pretty ? j.dump(2) + "\n" : j.dump();
}

CobordismCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("certificate must be a JSON object");
    const json& version = require(j, "version");
    if (!version.is_number_integer() || version.get<int>() != 1)
        throw ParseError("unsupported certificate version");

    CobordismCertificate cert;
    cert.initial = FixedPointData(points_from(require(j, "initial"), "initial"));
    const json& divisor = require(j, "divisor");
    if (!divisor.is_string()) throw ParseError("'divisor' must be a string");
    cert.divisor = parse_int(divisor.get<std::string>());

    const json& steps = require(j, "steps");
    if (!steps.is_array()) throw ParseError("'steps' must be an array");
    for (const json& js : steps) {
        if (!js.is_object()) throw ParseError("each step must be an object");
        ReductionStep s;
        const json& kind = require(js, "kind");
        if (!kind.is_string()) throw ParseError("'kind' must be a string");
        s.kind = kind_from_name(kind.get<std::string>());
        s.params = ints_from(require(js, "params"), "params");
        s.removed = points_from(require(js, "removed"), "removed");
        s.added = points_from(require(js, "added"), "added");
        const json& g = require(js, "generator");
        if (!g.is_object()) throw ParseError("'generator' must be an object");
        const json& fam = require(g, "family");
        if (!fam.is_string()) throw ParseError("'family' must be a string");
        s.generator.family = family_from_name(fam.get<std::string>());
        s.generator.params = ints_from(require(g, "params"), "generator params");
        const json& rev = require(g, "reversed");
        if (!rev.is_boolean()) throw ParseError("'reversed' must be a boolean");
        s.generator.reversed = rev.get<bool>();
        cert.steps.push_back(std::move(s));
    }
    return cert;
}

std::string report_to_json(const ValidationReport& report, bool pretty) {
    json j;
    j["overall"] = report.overall;
    j["divisor"] = report.divisor.str();
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    return pretty ? j.dump(2) + "\n" : j.dump();
}

std::string report_to_text(const ValidationReport& report) {
    std::ostringstream os;
    os << "effectiveness divisor: " << report.divisor << '\n';
    for (const CheckResult& c : report.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    os << (report.overall ? "overall: PASS" : "overall: FAIL") << '\n';
    return os.str();
}

}  // namespace fpd
