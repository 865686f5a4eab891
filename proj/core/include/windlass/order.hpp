#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "windlass/dyadic.hpp"
#include "windlass/term.hpp"

namespace windlass {

using ConnectionWord = std::vector<Dyadic>;

// cnc(i) = pa(i) + 1 - 2^(lp(i) - ari(pa(i))), the root using the loop (1,0,1).
ConnectionWord connection_word(const Term& t);
Term term_from_connection(const DecorationWord& dc, const ConnectionWord& c);

// True when e1 is dominated by e2: (parent1, -pos1) <=lex (parent2, -pos2).
bool dominates(const Edge& e1, const Edge& e2);

bool leq(const Term& t1, const Term& t2);
bool leq(const ConnectionWord& c1, const ConnectionWord& c2);
// Same order through parent-edge domination; kept as a cross-check.
bool leq_by_edges(const Term& t1, const Term& t2);

// Moves the subterm rooted at internal node i (1-based) onto the leaf
// immediately preceding it in preorder, when there is one.
std::optional<Term> rewrite(const Term& t, int i);
// All (i, t') with t rewriting to t' at i, ordered by i.
std::vector<std::pair<int, Term>> rewrites(const Term& t);

// Componentwise maximum of connection words; the lattice join.
Term join(const Term& t1, const Term& t2);

}  // namespace windlass
