#include "windlass/tilt.hpp"

#include <sstream>
#include <stdexcept>

namespace windlass {

TiltSet::TiltSet(std::initializer_list<int> nodes) : TiltSet(std::set<int>(nodes)) {}

TiltSet::TiltSet(std::set<int> nodes) : nodes_(std::move(nodes)) {
    for (int i : nodes_)
        if (i < 1) throw std::invalid_argument("tilt set indices must be positive");
}

TiltSet TiltSet::all() {
    TiltSet x;
    x.all_ = true;
    return x;
}

std::string TiltSet::to_string() const {
    if (all_) return "all";
    std::string s;
    for (int i : nodes_) {
        if (!s.empty()) s += ',';
        s += std::to_string(i);
    }
    return s;
}

TiltSet TiltSet::parse(const std::string& text) {
    if (text == "all" || text == "ALL") return all();
    std::set<int> nodes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        nodes.insert(v);
    }
    return TiltSet(std::move(nodes));
}

namespace {

void arrange(const TiltSet& x, const std::vector<Token>& in, std::size_t& pos, int& counter,
             bool leaves_last, std::vector<Token>& out) {
    const Token& tok = in[pos];
    if (tok.is_leaf()) {
        out.push_back(tok);
        ++pos;
        return;
    }
    int me = ++counter;
    out.push_back(tok);
    ++pos;
    if (!x.contains(me)) {
        for (int j = 0; j < tok.arity; ++j) arrange(x, in, pos, counter, leaves_last, out);
        return;
    }
    // Internal children keep their relative order, so preorder ranks are unchanged.
    int leaves = 0;
    std::vector<Token> body;
    for (int j = 0; j < tok.arity; ++j) {
        if (in[pos].is_leaf()) {
            ++leaves;
            ++pos;
        } else {
            arrange(x, in, pos, counter, leaves_last, body);
        }
    }
    if (!leaves_last) out.insert(out.end(), static_cast<std::size_t>(leaves), Token{});
    out.insert(out.end(), body.begin(), body.end());
    if (leaves_last) out.insert(out.end(), static_cast<std::size_t>(leaves), Token{});
}

Term rearrange(const TiltSet& x, const Term& t, bool leaves_last) {
    if (x.empty()) return t;
    std::vector<Token> out;
    out.reserve(t.tokens().size());
    std::size_t pos = 0;
    int counter = 0;
    arrange(x, t.tokens(), pos, counter, leaves_last, out);
    return Term(std::move(out));
}

}  // namespace

Term tilt(const TiltSet& x, const Term& t) { return rearrange(x, t, true); }

Term rtilt(const TiltSet& x, const Term& t) { return rearrange(x, t, false); }

bool is_tilted(const TiltSet& x, const Term& t) { return tilt(x, t) == t; }

std::pair<Term, Term> kernel_interval(const TiltSet& x, const Term& t) {
    return {rtilt(x, t), tilt(x, t)};
}

bool leq_fully_tilted(const Term& t1, const Term& t2) {
    if (!is_tilted(TiltSet::all(), t1) || !is_tilted(TiltSet::all(), t2))
        throw std::invalid_argument("leq_fully_tilted: operand is not fully tilted");
    if (t1.decoration_word() != t2.decoration_word()) return false;
    auto s1 = scope_sequence(t1);
    auto s2 = scope_sequence(t2);
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (s1[i] > s2[i]) return false;
    return true;
}

}  // namespace windlass
