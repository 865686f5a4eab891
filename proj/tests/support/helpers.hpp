#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "windlass/term.hpp"

namespace testing_support {

// a0 .. a9 plus natural-number decorations anywhere.
inline const windlass::Signature& sig() {
    static const windlass::Signature s = [] {
        auto s = windlass::Signature::a_family(9);
        s.set_naturals(true);
        return s;
    }();
    return s;
}

inline windlass::Term T(const std::string& text) { return windlass::parse_term(text, sig()); }

inline std::vector<std::string> texts(const std::vector<windlass::Term>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(windlass::render(t));
    return out;
}

// Word of a_k generators, e.g. "a2 a1 a0".
inline windlass::DecorationWord word(const std::string& text) {
    windlass::DecorationWord w;
    std::istringstream is(text);
    std::string name;
    while (is >> name) {
        int k = std::stoi(name.substr(1));
        w.push_back(windlass::Token{windlass::a_symbol(k), k});
    }
    return w;
}

inline std::vector<std::pair<std::string, int>> a_gens(int max_index) {
    std::vector<std::pair<std::string, int>> g;
    for (int k = 0; k <= max_index; ++k) g.emplace_back("a" + std::to_string(k), k);
    return g;
}

inline std::vector<windlass::Token> a_tokens(int max_index) {
    std::vector<windlass::Token> g;
    for (int k = 0; k <= max_index; ++k) g.push_back(windlass::Token{windlass::a_symbol(k), k});
    return g;
}

}  // namespace testing_support
