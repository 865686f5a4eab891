#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "windlass/forest.hpp"

namespace windlass {

int RootedTree::size() const {
    int n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

namespace {

void render_at(const RootedTree& r, std::string& out) {
    out += '(';
    for (const auto& c : r.children) render_at(c, out);
    out += ')';
}

void preorder_scopes(const RootedTree& r, std::vector<int>& out) {
    std::size_t slot = out.size();
    out.push_back(0);
    for (const auto& c : r.children) preorder_scopes(c, out);
    out[slot] = static_cast<int>(out.size() - slot - 1);
}

void ft_at(const RootedTree& r, int& label, std::vector<Token>& toks) {
    const int k = label--;
    toks.push_back(Token{nat_symbol(k), k});
    for (const auto& c : r.children) ft_at(c, label, toks);
    for (std::size_t j = r.children.size(); j < static_cast<std::size_t>(k); ++j) toks.push_back(Token{});
}

}  // namespace

std::string render(const RootedTree& r) {
    std::string out;
    render_at(r, out);
    return out;
}

RootedTree parse_rooted_tree(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse = [&](auto&& self) -> RootedTree {
        skip();
        if (i >= text.size() || text[i] != '(')
            throw std::invalid_argument("rooted tree: expected '(' at position " + std::to_string(i));
        ++i;
        RootedTree r;
        skip();
        while (i < text.size() && text[i] == '(') {
            r.children.push_back(self(self));
            skip();
        }
        if (i >= text.size() || text[i] != ')')
            throw std::invalid_argument("rooted tree: expected ')' at position " + std::to_string(i));
        ++i;
        return r;
    };
    RootedTree r = parse(parse);
    skip();
    if (i != text.size()) throw std::invalid_argument("rooted tree: trailing input");
    return r;
}

std::vector<RootedTree> all_rooted_trees(int size) {
    if (size < 1) return {};
    // forests[k] = ordered sequences of trees with k nodes in total.
    std::vector<std::vector<std::vector<RootedTree>>> forests(static_cast<std::size_t>(size));
    forests[0] = {{}};
    for (int k = 1; k < size; ++k) {
        for (int first = 1; first <= k; ++first) {
            for (const auto& head : forests[static_cast<std::size_t>(first - 1)]) {
                RootedTree t{head};
                for (const auto& rest : forests[static_cast<std::size_t>(k - first)]) {
                    std::vector<RootedTree> f{t};
                    f.insert(f.end(), rest.begin(), rest.end());
                    forests[static_cast<std::size_t>(k)].push_back(std::move(f));
                }
            }
        }
    }
    std::vector<RootedTree> out;
    for (const auto& f : forests[static_cast<std::size_t>(size - 1)]) out.push_back(RootedTree{f});
    std::sort(out.begin(), out.end(),
              [](const RootedTree& a, const RootedTree& b) { return render(a) < render(b); });
    return out;
}

std::vector<int> scope_sequence(const RootedTree& r) {
    std::vector<int> out;
    preorder_scopes(r, out);
    return out;
}

RootedTree rt(const Term& t) {
    if (t.is_leaf()) throw std::invalid_argument("rt: a leaf has no rooted tree");
    RootedTree r;
    for (const auto& c : t.children())
        if (!c.is_leaf()) r.children.push_back(rt(c));
    return r;
}

Term ft(const RootedTree& r) {
    int label = r.size() - 1;
    std::vector<Token> toks;
    ft_at(r, label, toks);
    return Term(std::move(toks));
}

DecorationWord dw(int n) {
    DecorationWord w;
    for (int i = 1; i <= n; ++i) w.push_back(Token{nat_symbol(n - i), n - i});
    return w;
}

Term dt(int n) { return f_up(dw(n)); }

Poset rooted_tree_poset(int n, std::size_t ceiling) {
    if (n < 0) throw std::invalid_argument("rooted_tree_poset: negative order");
    return tilted_upper_set(TiltSet::all(), dt(n), ceiling);
}

bool tamari_leq(const RootedTree& r1, const RootedTree& r2) {
    auto s1 = scope_sequence(r1);
    auto s2 = scope_sequence(r2);
    if (s1.size() != s2.size()) throw std::invalid_argument("tamari_leq: sizes differ");
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (s1[i] > s2[i]) return false;
    return true;
}

}  // namespace windlass
