#include "windlass/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace windlass {

namespace {

Dyadic cnc_value(int parent, int position, int parent_arity) {
    int e = parent_arity - position;
    if (e < 0) throw std::invalid_argument("child position exceeds parent arity");
    if (e > 60) throw std::overflow_error("arity too large for connection words");
    std::int64_t scale = std::int64_t{1} << e;
    return Dyadic((static_cast<std::int64_t>(parent) + 1) * scale - 1, e);
}

}  // namespace

ConnectionWord connection_word(const Term& t) {
    auto edges = parent_edges(t);
    auto dc = t.decoration_word();
    ConnectionWord c;
    c.reserve(edges.size());
    for (const auto& e : edges)
        c.push_back(cnc_value(e.parent, e.position, dc[static_cast<std::size_t>(e.parent - 1)].arity));
    return c;
}

Term term_from_connection(const DecorationWord& dc, const ConnectionWord& c) {
    if (dc.size() != c.size())
        throw std::invalid_argument("connection word length differs from decoration word");
    if (dc.empty()) return Term::leaf();
    const std::size_t n = dc.size();
    // slots[p][j] = internal child of node p at position j (1-based), or 0.
    std::vector<std::vector<int>> slots(n);
    for (std::size_t p = 0; p < n; ++p) slots[p].assign(static_cast<std::size_t>(dc[p].arity), 0);
    for (std::size_t i = 0; i < n; ++i) {
        int parent = static_cast<int>(c[i].floor());
        if (i == 0) {
            if (c[0] != cnc_value(1, 0, dc[0].arity))
                throw std::invalid_argument("connection word has an invalid root entry");
            continue;
        }
        if (parent < 1 || parent > static_cast<int>(i))
            throw std::invalid_argument("connection entry " + std::to_string(i + 1) +
                                        " points to no earlier node");
        int ar = dc[static_cast<std::size_t>(parent - 1)].arity;
        int found = -1;
        for (int j = 1; j <= ar; ++j)
            if (cnc_value(parent, j, ar) == c[i]) found = j;
        if (found < 0)
            throw std::invalid_argument("connection entry " + std::to_string(i + 1) +
                                        " is not realizable");
        int& slot = slots[static_cast<std::size_t>(parent - 1)][static_cast<std::size_t>(found - 1)];
        if (slot != 0)
            throw std::invalid_argument("connection entry " + std::to_string(i + 1) +
                                        " targets an occupied child slot");
        slot = static_cast<int>(i) + 1;
    }
    std::vector<Token> toks;
    int visited = 0;
    bool ok = true;
    auto emit = [&](auto&& self, int node) -> void {
        ++visited;
        if (visited != node) ok = false;
        toks.push_back(dc[static_cast<std::size_t>(node - 1)]);
        for (int child : slots[static_cast<std::size_t>(node - 1)]) {
            if (child == 0)
                toks.push_back(Token{});
            else
                self(self, child);
        }
    };
    emit(emit, 1);
    if (!ok || visited != static_cast<int>(n))
        throw std::invalid_argument("connection word does not describe a preorder-numbered tree");
    return Term(std::move(toks));
}

bool dominates(const Edge& e1, const Edge& e2) {
    if (e1.child != e2.child) throw std::invalid_argument("edges have different children");
    if (e1.parent != e2.parent) return e1.parent < e2.parent;
    return -e1.position <= -e2.position;
}

bool leq(const ConnectionWord& c1, const ConnectionWord& c2) {
    if (c1.size() != c2.size()) return false;
    for (std::size_t i = 0; i < c1.size(); ++i)
        if (c2[i] < c1[i]) return false;
    return true;
}

bool leq(const Term& t1, const Term& t2) {
    if (t1.decoration_word() != t2.decoration_word()) return false;
    return leq(connection_word(t1), connection_word(t2));
}

bool leq_by_edges(const Term& t1, const Term& t2) {
    if (t1.decoration_word() != t2.decoration_word()) return false;
    auto e1 = parent_edges(t1);
    auto e2 = parent_edges(t2);
    for (std::size_t i = 0; i < e1.size(); ++i)
        if (!dominates(e1[i], e2[i])) return false;
    return true;
}

std::optional<Term> rewrite(const Term& t, int i) {
    if (i < 1) throw std::invalid_argument("node index must be positive");
    auto nodes = t.node_positions();
    if (i > static_cast<int>(nodes.size())) throw std::invalid_argument("node index out of range");
    std::size_t p = nodes[static_cast<std::size_t>(i - 1)];
    if (p == 0 || !t.tokens()[p - 1].is_leaf()) return std::nullopt;
    std::vector<Token> toks = t.tokens();
    std::size_t end = t.subterm_end(p);
    // [.., *, S, ..] -> [.., S, *, ..]
    std::rotate(toks.begin() + static_cast<std::ptrdiff_t>(p - 1),
                toks.begin() + static_cast<std::ptrdiff_t>(p),
                toks.begin() + static_cast<std::ptrdiff_t>(end));
    return Term(std::move(toks));
}

std::vector<std::pair<int, Term>> rewrites(const Term& t) {
    std::vector<std::pair<int, Term>> out;
    auto nodes = t.node_positions();
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        std::size_t p = nodes[k];
        if (!t.tokens()[p - 1].is_leaf()) continue;
        std::vector<Token> toks = t.tokens();
        std::rotate(toks.begin() + static_cast<std::ptrdiff_t>(p - 1),
                    toks.begin() + static_cast<std::ptrdiff_t>(p),
                    toks.begin() + static_cast<std::ptrdiff_t>(t.subterm_end(p)));
        out.emplace_back(static_cast<int>(k) + 1, Term(std::move(toks)));
    }
    return out;
}

Term join(const Term& t1, const Term& t2) {
    auto dc = t1.decoration_word();
    if (dc != t2.decoration_word()) throw std::invalid_argument("join: decoration words differ");
    auto c1 = connection_word(t1);
    auto c2 = connection_word(t2);
    for (std::size_t i = 0; i < c1.size(); ++i) c1[i] = max(c1[i], c2[i]);
    try {
        return term_from_connection(dc, c1);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("join: operands share no lower bound (") +
                                    e.what() + ")");
    }
}

}  // namespace windlass
