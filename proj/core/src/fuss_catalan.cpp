#include <cctype>
#include <map>
#include <stdexcept>

#include "windlass/forest.hpp"

namespace windlass {

Poset fuss_catalan_poset(int m, int n, std::size_t ceiling) {
    if (m < 0 || n < 0) throw std::invalid_argument("fuss_catalan_poset: negative parameter");
    DecorationWord w(static_cast<std::size_t>(n), Token{nat_symbol(m), m});
    return upper_set(f_up(w), ceiling);
}

unsigned long long fuss_catalan_number(int m, int n) {
    // C(mn+n, n) / (mn+1), accumulated exactly.
    unsigned long long top = static_cast<unsigned long long>(m) * static_cast<unsigned long long>(n) + n;
    unsigned long long c = 1;
    for (unsigned long long k = 1; k <= static_cast<unsigned long long>(n); ++k)
        c = c * (top - static_cast<unsigned long long>(n) + k) / k;
    return c / (static_cast<unsigned long long>(m) * static_cast<unsigned long long>(n) + 1);
}

std::vector<Term> m_trees(int m, int degree) {
    return all_terms({Token{nat_symbol(m + 1), m + 1}}, degree);
}

// ------------------------------------------------------------- binary trees

int MBinaryTree::degree() const {
    if (is_leaf()) return 0;
    return 1 + children[0].degree() + children[1].degree();
}

namespace {

MBinaryTree bleaf() { return MBinaryTree{}; }

MBinaryTree bnode(Term dec, MBinaryTree left, MBinaryTree right) {
    MBinaryTree r;
    r.decoration = std::move(dec);
    r.children.push_back(std::move(left));
    r.children.push_back(std::move(right));
    return r;
}

bool is_m_minus_one_tree(const Term& s, int m) {
    for (const auto& t : s.tokens()) {
        if (t.is_leaf()) continue;
        auto v = nat_value(t.sym);
        if (!v || *v != m || t.arity != m) return false;
    }
    return true;
}

// Keeps the root, recursively dropping the first subterm of each kept node.
Term strip(const Term& t, int m, std::vector<Term>& forgotten) {
    auto kids = t.children();
    forgotten.push_back(kids[0]);
    std::vector<Term> kept;
    for (std::size_t j = 1; j < kids.size(); ++j)
        kept.push_back(kids[j].is_leaf() ? Term::leaf() : strip(kids[j], m, forgotten));
    return Term::node(nat_symbol(m), std::move(kept));
}

// Right comb of s whose first k leaves receive the given subtrees.
MBinaryTree comb(const Term& s, std::vector<MBinaryTree> lefts) {
    const std::size_t k = lefts.size();
    MBinaryTree tail = bleaf();
    for (std::size_t i = k; i-- > 1;) tail = bnode(Term::leaf(), std::move(lefts[i]), std::move(tail));
    return bnode(s, std::move(lefts[0]), std::move(tail));
}

// Splits a B(m) node into its decoration and the left subtrees along its comb.
bool uncomb(const MBinaryTree& r, Term& s, std::vector<const MBinaryTree*>& lefts) {
    if (r.is_leaf() || r.decoration->is_leaf()) return false;
    s = *r.decoration;
    const int k = s.degree();
    const MBinaryTree* cur = &r;
    lefts.push_back(&cur->children[0]);
    for (int i = 1; i < k; ++i) {
        cur = &cur->children[1];
        if (cur->is_leaf() || !cur->decoration->is_leaf()) return false;
        lefts.push_back(&cur->children[0]);
    }
    return cur->children[1].is_leaf();
}

void inorder(const MBinaryTree& r, std::vector<Term>& out) {
    if (r.is_leaf()) return;
    inorder(r.children[0], out);
    out.push_back(*r.decoration);
    inorder(r.children[1], out);
}

void render_at(const MBinaryTree& r, std::string& out) {
    if (r.is_leaf()) {
        out += '*';
        return;
    }
    out += '[';
    out += render(*r.decoration);
    out += "](";
    render_at(r.children[0], out);
    out += ',';
    render_at(r.children[1], out);
    out += ')';
}

}  // namespace

std::string render(const MBinaryTree& r) {
    std::string out;
    render_at(r, out);
    return out;
}

bool in_b(const MBinaryTree& r, int m) {
    // Every non-star node heads a comb of exactly deg - 1 star nodes ending in
    // a leaf; every star node is reached this way.
    auto check = [&](auto&& self, const MBinaryTree& t) -> bool {
        if (t.is_leaf()) return true;
        Term s;
        std::vector<const MBinaryTree*> lefts;
        if (!uncomb(t, s, lefts)) return false;
        if (!is_m_minus_one_tree(s, m)) return false;
        for (const auto* l : lefts)
            if (!self(self, *l)) return false;
        return true;
    };
    return check(check, r);
}

MBinaryTree parse_mbinary(std::string_view text, int m) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument("m-binary tree: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(i));
        ++i;
    };
    Signature sig = Signature::natural_numbers();
    auto parse = [&](auto&& self) -> MBinaryTree {
        skip();
        if (i < text.size() && text[i] == '*') {
            ++i;
            return bleaf();
        }
        expect('[');
        int depth = 0;
        std::size_t start = i;
        while (i < text.size() && !(text[i] == ']' && depth == 0)) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            ++i;
        }
        Term dec = parse_term(text.substr(start, i - start), sig);
        expect(']');
        expect('(');
        MBinaryTree l = self(self);
        expect(',');
        MBinaryTree r = self(self);
        expect(')');
        return bnode(std::move(dec), std::move(l), std::move(r));
    };
    MBinaryTree r = parse(parse);
    skip();
    if (i != text.size()) throw std::invalid_argument("m-binary tree: trailing input");
    if (!in_b(r, m)) throw std::invalid_argument("m-binary tree is not in B(" + std::to_string(m) + ")");
    return r;
}

MBinaryTree bt(const Term& t, int m) {
    if (t.is_leaf()) return bleaf();
    for (const auto& k : t.tokens()) {
        if (k.is_leaf()) continue;
        auto v = nat_value(k.sym);
        if (!v || *v != m + 1 || k.arity != m + 1)
            throw std::invalid_argument("bt: " + render(t) + " is not an " + std::to_string(m) + "-tree");
    }
    if (m == 0) throw std::invalid_argument("bt: m must be positive");
    std::vector<Term> forgotten;
    Term s = strip(t, m, forgotten);
    std::vector<MBinaryTree> lefts;
    for (const auto& f : forgotten) lefts.push_back(bt(f, m));
    return comb(s, std::move(lefts));
}

Term bt_inverse(const MBinaryTree& r, int m) {
    if (!in_b(r, m)) throw std::invalid_argument("bt_inverse: tree is not in B(" + std::to_string(m) + ")");
    auto phi = [&](auto&& self, const MBinaryTree& t) -> Term {
        if (t.is_leaf()) return Term::leaf();
        Term s;
        std::vector<const MBinaryTree*> lefts;
        uncomb(t, s, lefts);
        // Give every node of s a new first child holding phi of its left subtree.
        std::vector<Token> toks;
        std::size_t k = 0;
        for (const auto& tok : s.tokens()) {
            if (tok.is_leaf()) {
                toks.push_back(tok);
                continue;
            }
            toks.push_back(Token{nat_symbol(m + 1), m + 1});
            Term sub = self(self, *lefts[k++]);
            toks.insert(toks.end(), sub.tokens().begin(), sub.tokens().end());
        }
        return Term(std::move(toks));
    };
    return phi(phi, r);
}

Term if_map(const MBinaryTree& r) {
    std::vector<Term> decs;
    inorder(r, decs);
    const int n = static_cast<int>(decs.size());
    return Term::node(nat_symbol(n), std::move(decs));
}

MBinaryTree if_inverse(const Term& f, int m) {
    const int n = forest_size(f);
    std::vector<Term> seq = f.children();
    for (const auto& s : seq)
        if (!is_m_minus_one_tree(s, m))
            throw std::invalid_argument("if_inverse: child " + render(s) + " is not an (m-1)-tree");
    // memo[(l, r)] holds every B(m) tree with inorder seq[l, r); at most one
    // exists, so the lists stay short.
    std::map<std::pair<int, int>, std::vector<MBinaryTree>> memo;
    auto parse = [&](auto&& self, int l, int r) -> const std::vector<MBinaryTree>& {
        auto key = std::make_pair(l, r);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<MBinaryTree> out;
        if (l == r) {
            out.push_back(bleaf());
        } else {
            for (int p = l; p < r; ++p) {
                const Term& s = seq[static_cast<std::size_t>(p)];
                if (s.is_leaf()) continue;
                const int k = s.degree();
                const auto lefts0 = self(self, l, p);
                if (lefts0.empty()) continue;
                // Remaining input: L1 * L2 * ... L_{k-1} *
                std::vector<std::vector<MBinaryTree>> parts;
                auto split = [&](auto&& rec, int pos, int seg) -> void {
                    if (seg == k) {
                        if (pos != r) return;
                        for (const auto& l0 : lefts0) {
                            // Cartesian product over segment alternatives.
                            std::vector<std::vector<MBinaryTree>> acc{{l0}};
                            for (const auto& alts : parts) {
                                std::vector<std::vector<MBinaryTree>> next;
                                for (const auto& a : acc)
                                    for (const auto& alt : alts) {
                                        auto b = a;
                                        b.push_back(alt);
                                        next.push_back(std::move(b));
                                    }
                                acc = std::move(next);
                            }
                            for (auto& a : acc) out.push_back(comb(s, std::move(a)));
                        }
                        return;
                    }
                    for (int q = pos; q < r; ++q) {
                        if (!seq[static_cast<std::size_t>(q)].is_leaf()) continue;
                        const auto alts = self(self, pos, q);
                        if (alts.empty()) continue;
                        parts.push_back(alts);
                        rec(rec, q + 1, seg + 1);
                        parts.pop_back();
                    }
                };
                split(split, p + 1, 1);
            }
        }
        return memo[key] = std::move(out);
    };
    const auto& res = parse(parse, 0, n);
    if (res.size() != 1)
        throw std::invalid_argument("if_inverse: " + render(f) + " has " + std::to_string(res.size()) +
                                    " preimages in B(" + std::to_string(m) + ")");
    return res.front();
}

}  // namespace windlass
