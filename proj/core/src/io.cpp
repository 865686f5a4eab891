#include "windlass/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "windlass/error.hpp"

namespace windlass {

namespace {

using nlohmann::ordered_json;

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

ordered_json coeff_json(const Rational& c) {
    auto num = boost::multiprecision::numerator(c);
    auto den = boost::multiprecision::denominator(c);
    auto fits = [](const auto& v) {
        return v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min();
    };
    if (!fits(num) || !fits(den)) throw std::overflow_error("hopf JSON: coefficient exceeds 64 bits");
    return ordered_json{{"num", static_cast<std::int64_t>(num)}, {"den", static_cast<std::int64_t>(den)}};
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t i = 0; i < p.texts.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(p.texts[i]) << "\"];\n";
    for (std::size_t a = 0; a < p.covers.size(); ++a)
        for (int b : p.covers[a]) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const Poset& p, bool with_coordinates) {
    ordered_json j;
    j["elements"] = p.texts;
    ordered_json covers = ordered_json::array();
    for (std::size_t a = 0; a < p.covers.size(); ++a)
        for (int b : p.covers[a]) covers.push_back({static_cast<int>(a), b});
    j["covers"] = covers;
    if (with_coordinates) {
        ordered_json coords = ordered_json::array();
        for (const auto& cw : geometric_coordinates(p)) {
            ordered_json row = ordered_json::array();
            for (const auto& d : cw) row.push_back({{"num", d.mantissa()}, {"den_exp", d.exponent()}});
            coords.push_back(row);
        }
        j["coordinates"] = coords;
    }
    return j.dump(2) + "\n";
}

std::string to_text(const Poset& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.texts.size(); ++i) os << i << " " << p.texts[i] << "\n";
    for (std::size_t a = 0; a < p.covers.size(); ++a)
        for (int b : p.covers[a]) os << a << " -> " << b << "\n";
    return os.str();
}

std::string to_json(const HopfElement& a) {
    ordered_json j;
    j["basis"] = std::string(1, basis_name(a.basis()));
    ordered_json terms = ordered_json::array();
    for (const auto& [key, e] : a.terms()) terms.push_back({{"forest", key}, {"coeff", coeff_json(e.coeff)}});
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

HopfElement hopf_from_json(std::string_view text, const Signature& sig) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(ParseError::Kind::Syntax, e.byte, std::string("hopf JSON: ") + e.what());
    }
    try {
        HopfElement out(parse_basis(j.at("basis").get<std::string>()));
        for (const auto& t : j.at("terms")) {
            Term f = parse_forest(t.at("forest").get<std::string>(), sig);
            const auto& c = t.at("coeff");
            std::int64_t num = c.at("num").get<std::int64_t>();
            std::int64_t den = c.contains("den") ? c.at("den").get<std::int64_t>() : 1;
            if (den == 0) throw std::invalid_argument("hopf JSON: zero denominator");
            out.add(f, Rational(num) / Rational(den));
        }
        return out;
    } catch (const ordered_json::exception& e) {
        throw ParseError(ParseError::Kind::Syntax, 0, std::string("hopf JSON: ") + e.what());
    }
}

std::string to_json(const Tensor& t) {
    ordered_json j;
    j["basis"] = std::string(1, basis_name(t.basis()));
    ordered_json terms = ordered_json::array();
    for (const auto& [key, e] : t.terms())
        terms.push_back({{"left", key.first}, {"right", key.second}, {"coeff", coeff_json(e.coeff)}});
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

}  // namespace windlass
