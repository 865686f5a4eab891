#include "windlass/forest.hpp"

#include <stdexcept>

namespace windlass {

bool is_forest(const Term& f) {
    if (f.is_leaf()) return false;
    auto v = nat_value(f.root().sym);
    return v && *v == f.root().arity;
}

int forest_size(const Term& f) {
    if (!is_forest(f)) throw std::invalid_argument(render(f) + " is not a forest");
    return f.root().arity;
}

bool is_balanced(const Term& f) { return is_forest(f) && f.degree() == forest_size(f) + 1; }

Term forest_corolla(int n) { return Term::corolla(nat_symbol(n), n); }

DecorationWord forest_word(const Term& f) {
    forest_size(f);
    auto w = f.decoration_word();
    w.erase(w.begin());
    return w;
}

Term concat(const Term& f1, const Term& f2) {
    int n1 = forest_size(f1), n2 = forest_size(f2);
    std::vector<Token> toks{Token{nat_symbol(n1 + n2), n1 + n2}};
    toks.insert(toks.end(), f1.tokens().begin() + 1, f1.tokens().end());
    toks.insert(toks.end(), f2.tokens().begin() + 1, f2.tokens().end());
    return Term(std::move(toks));
}

Term graft(const Term& t, const Term& s) {
    std::vector<Token> toks;
    bool done = false;
    for (const auto& k : t.tokens()) {
        if (!done && k.is_leaf()) {
            toks.insert(toks.end(), s.tokens().begin(), s.tokens().end());
            done = true;
        } else {
            toks.push_back(k);
        }
    }
    if (!done) throw std::invalid_argument("graft: " + render(t) + " has no leaf");
    return Term(std::move(toks));
}

Term f_up(const DecorationWord& w) {
    const int n = static_cast<int>(w.size());
    std::vector<Term> kids;
    for (const auto& a : w) kids.push_back(Term::corolla(a.sym, a.arity));
    return Term::node(nat_symbol(n), std::move(kids));
}

Term f_down(const DecorationWord& w) {
    Term f = forest_corolla(static_cast<int>(w.size()));
    for (const auto& a : w) f = graft(f, Term::corolla(a.sym, a.arity));
    return f;
}

}  // namespace windlass
