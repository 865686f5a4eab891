#include "windlass/leaning.hpp"

#include <algorithm>
#include <stdexcept>

#include "windlass/tilt.hpp"

namespace windlass {

namespace {

void require_leaning(const Term& f, const char* op) {
    if (!is_leaning(f)) throw std::invalid_argument(std::string(op) + ": " + render(f) + " is not leaning");
}

}  // namespace

bool is_leaning(const Term& f) { return is_balanced(f) && is_tilted(TiltSet{1}, f); }

int leaning_length(const Term& f) {
    require_leaning(f, "leaning_length");
    int k = 0;
    for (const auto& c : f.children()) k += c.is_leaf() ? 0 : 1;
    return k;
}

Term leaning_from_word(const std::vector<Term>& word) {
    int n = 0;
    std::vector<Term> kids;
    for (const auto& t : word) {
        if (t.is_leaf()) throw std::invalid_argument("leaning_from_word: letters must not be leaves");
        n += t.degree();
        kids.push_back(t);
    }
    while (static_cast<int>(kids.size()) < n) kids.push_back(Term::leaf());
    if (static_cast<int>(kids.size()) > n)
        throw std::invalid_argument("leaning_from_word: more letters than the total degree");
    return Term::node(nat_symbol(n), std::move(kids));
}

Term restriction(const Term& f, const IndexSet& i_set) {
    require_leaning(f, "restriction");
    const int n = forest_size(f);
    for (int i : i_set)
        if (i < 1 || i > n) throw std::invalid_argument("restriction: index " + std::to_string(i) + " out of range");
    const auto& toks = f.tokens();
    // Internal node ranks in token order; node 1 is the root.
    std::vector<int> rank(toks.size(), 0);
    int r = 0;
    for (std::size_t p = 0; p < toks.size(); ++p)
        if (!toks[p].is_leaf()) rank[p] = ++r;
    auto kept = [&](std::size_t p) { return !toks[p].is_leaf() && i_set.count(rank[p] - 1) > 0; };

    // Rebuilds the kept subterm at p, turning dropped children into leaves.
    auto copy = [&](auto&& self, std::size_t p, std::vector<Token>& out) -> void {
        out.push_back(toks[p]);
        std::size_t c = p + 1;
        for (int j = 0; j < toks[p].arity; ++j) {
            if (kept(c))
                self(self, c, out);
            else
                out.push_back(Token{});
            c = f.subterm_end(c);
        }
    };
    // Kept nodes whose parent is dropped or is the root become root children.
    std::vector<std::size_t> parent(toks.size(), 0);
    std::vector<std::pair<std::size_t, int>> open;  // (position, child slots left)
    for (std::size_t p = 0; p < toks.size(); ++p) {
        if (!open.empty()) {
            parent[p] = open.back().first;
            --open.back().second;
        }
        if (toks[p].arity > 0) open.emplace_back(p, toks[p].arity);
        while (!open.empty() && open.back().second == 0) open.pop_back();
    }
    std::vector<Token> out{Token{nat_symbol(static_cast<int>(i_set.size())), static_cast<int>(i_set.size())}};
    int roots = 0;
    for (std::size_t p = 1; p < toks.size(); ++p) {
        if (!kept(p)) continue;
        std::size_t q = parent[p];
        if (q != 0 && kept(q)) continue;
        copy(copy, p, out);
        ++roots;
    }
    for (int j = roots; j < static_cast<int>(i_set.size()); ++j) out.push_back(Token{});
    return Term(std::move(out));
}

Term top_restriction(int k, const Term& f) {
    int n = forest_size(f);
    if (k < 0 || k > n) throw std::invalid_argument("top_restriction: k out of range");
    IndexSet s;
    for (int i = 1; i <= k; ++i) s.insert(i);
    return restriction(f, s);
}

Term bottom_restriction(int k, const Term& f) {
    int n = forest_size(f);
    if (k < 0 || k > n) throw std::invalid_argument("bottom_restriction: k out of range");
    IndexSet s;
    for (int i = k + 1; i <= n; ++i) s.insert(i);
    return restriction(f, s);
}

Term over(const Term& f1, const Term& f2) {
    require_leaning(f1, "over");
    require_leaning(f2, "over");
    return tilt(TiltSet{1}, concat(f1, f2));
}

Term under(const Term& f1, const Term& f2) {
    require_leaning(f1, "under");
    require_leaning(f2, "under");
    const int n2 = forest_size(f2);
    const int r = static_cast<int>(structure(f1).extreme_leaves.size());
    Term base = concat(f1, forest_corolla(n2));
    std::vector<Term> grafts = concat(f2, forest_corolla(r)).children();
    // Extreme leaves of base are the leaves after its last internal node.
    const auto& toks = base.tokens();
    std::size_t last = 0;
    for (std::size_t p = 0; p < toks.size(); ++p)
        if (!toks[p].is_leaf()) last = p;
    std::vector<Token> out;
    std::size_t j = 0;
    for (std::size_t p = 0; p < toks.size(); ++p) {
        if (p > last && toks[p].is_leaf()) {
            const auto& g = grafts.at(j++).tokens();
            out.insert(out.end(), g.begin(), g.end());
        } else {
            out.push_back(toks[p]);
        }
    }
    if (j != grafts.size()) throw std::logic_error("under: extreme leaf count mismatch");
    return Term(std::move(out));
}

Poset leaning_poset(const DecorationWord& w, std::size_t ceiling) {
    return tilted_upper_set(TiltSet{1}, f_up(w), ceiling);
}

std::vector<Term> shuffle(const Term& f1, const Term& f2) {
    require_leaning(f1, "shuffle");
    require_leaning(f2, "shuffle");
    const int n1 = forest_size(f1);
    auto w = forest_word(f1);
    auto w2 = forest_word(f2);
    w.insert(w.end(), w2.begin(), w2.end());
    Poset p = leaning_poset(w);
    std::vector<Term> out;
    for (const auto& f : p.elements)
        if (top_restriction(n1, f) == f1 && bottom_restriction(n1, f) == f2) out.push_back(f);
    return out;
}

std::vector<Term> shuffle_interval(const Term& f1, const Term& f2) {
    Term lo = over(f1, f2), hi = under(f1, f2);
    Poset p = tilted_upper_set(TiltSet{1}, lo);
    Poset iv = interval(p, p.at(lo), p.at(hi));
    return iv.elements;
}

std::vector<std::pair<IndexSet, IndexSet>> admissible_pairs(const Term& f) {
    require_leaning(f, "admissible_pairs");
    const int n = forest_size(f);
    auto edges = parent_edges(f);
    // Node i of [n] is internal node i + 1; I1 must be closed under taking
    // parents, which makes its complement closed under taking children.
    std::vector<std::pair<IndexSet, IndexSet>> out;
    IndexSet i1;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            IndexSet i2;
            for (int j = 1; j <= n; ++j)
                if (!i1.count(j)) i2.insert(j);
            out.emplace_back(i1, std::move(i2));
            return;
        }
        self(self, i + 1);
        int parent = edges[static_cast<std::size_t>(i)].parent - 1;
        if (parent == 0 || i1.count(parent)) {
            i1.insert(i);
            self(self, i + 1);
            i1.erase(i);
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> all_leaning(const std::vector<Token>& gens, int size) {
    std::vector<Term> out;
    // Words of non-leaf terms with total degree = size.
    std::vector<std::vector<Term>> by_degree(static_cast<std::size_t>(size) + 1);
    for (int d = 1; d <= size; ++d) by_degree[static_cast<std::size_t>(d)] = all_terms(gens, d);
    std::vector<Term> word;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(leaning_from_word(word));
            return;
        }
        for (int d = 1; d <= remaining; ++d)
            for (const auto& t : by_degree[static_cast<std::size_t>(d)]) {
                word.push_back(t);
                self(self, remaining - d);
                word.pop_back();
            }
    };
    rec(rec, size);
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return render(a) < render(b); });
    return out;
}

}  // namespace windlass
