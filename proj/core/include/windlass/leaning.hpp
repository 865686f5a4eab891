#pragma once

#include <set>
#include <utility>
#include <vector>

#include "windlass/forest.hpp"

namespace windlass {

using IndexSet = std::set<int>;

// Balanced and {1}-tilted.
bool is_leaning(const Term& f);
// Number of non-leaf children of the root.
int leaning_length(const Term& f);
// n:(T1, ..., Tk, *, ..., *) for non-leaf terms T1..Tk of total degree n.
Term leaning_from_word(const std::vector<Term>& word);

// Keeps the root and the nodes {i + 1 : i in I}; nodes whose parent is
// dropped become root children in preorder, dropped child slots become
// leaves, and the root becomes |I| padded with leaves.
Term restriction(const Term& f, const IndexSet& i_set);
Term top_restriction(int k, const Term& f);
Term bottom_restriction(int k, const Term& f);

// tilt({1}, f1 . f2)
Term over(const Term& f1, const Term& f2);
// Grafts the children of f2 . C(r) onto the extreme leaves of f1 . C(n2),
// r being the number of extreme leaves of f1.
Term under(const Term& f1, const Term& f2);

// Leaning poset of w: the {1}-tilted upper set of f_up(w).
Poset leaning_poset(const DecorationWord& w, std::size_t ceiling = element_ceiling());

// {f : top_restriction(n1, f) = f1 and bottom_restriction(n1, f) = f2}.
std::vector<Term> shuffle(const Term& f1, const Term& f2);
// The order interval [over(f1, f2), under(f1, f2)] of the leaning poset.
std::vector<Term> shuffle_interval(const Term& f1, const Term& f2);

std::vector<std::pair<IndexSet, IndexSet>> admissible_pairs(const Term& f);

// Every leaning forest of the given size over the generators.
std::vector<Term> all_leaning(const std::vector<Token>& gens, int size);

}  // namespace windlass
