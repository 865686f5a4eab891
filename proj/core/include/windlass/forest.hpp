#pragma once

#include <optional>
#include <string>
#include <vector>

#include "windlass/poset.hpp"
#include "windlass/term.hpp"

namespace windlass {

// ------------------------------------------------------------------ forests

bool is_forest(const Term& f);
// Root decoration n of a forest.
int forest_size(const Term& f);
bool is_balanced(const Term& f);
// n:(*, ..., *)
Term forest_corolla(int n);
// Decoration word of a forest without its root.
DecorationWord forest_word(const Term& f);
// n1 T1..Tn1 . n2 S1..Sn2 = (n1+n2) T1..Tn1 S1..Sn2
Term concat(const Term& f1, const Term& f2);
// Grafts s onto the leftmost leaf of t.
Term graft(const Term& t, const Term& s);

Term f_up(const DecorationWord& w);
Term f_down(const DecorationWord& w);

// --------------------------------------------------------- Fuss-Catalan

// Balanced-forest N-easterly wind poset of m^n.
Poset fuss_catalan_poset(int m, int n, std::size_t ceiling = element_ceiling());
// (1/(mn+1)) C(mn+n, n)
unsigned long long fuss_catalan_number(int m, int n);

// Terms over the single decoration m+1.
std::vector<Term> m_trees(int m, int degree);

// Binary tree whose internal nodes carry (m-1)-trees; a node carrying the
// leaf term is a star node of a right comb.
struct MBinaryTree {
    std::optional<Term> decoration;    // empty for a leaf of the binary tree
    std::vector<MBinaryTree> children;  // two children for internal nodes

    bool is_leaf() const { return !decoration.has_value(); }
    int degree() const;
    friend bool operator==(const MBinaryTree&, const MBinaryTree&) = default;
};

std::string render(const MBinaryTree& r);
// Grammar: "*" | "[" term "]" "(" tree "," tree ")"; checked against B(m).
MBinaryTree parse_mbinary(std::string_view text, int m);
bool in_b(const MBinaryTree& r, int m);

MBinaryTree bt(const Term& t, int m);
Term bt_inverse(const MBinaryTree& r, int m);
Term if_map(const MBinaryTree& r);
MBinaryTree if_inverse(const Term& f, int m);

// ------------------------------------------------------------ rooted trees

struct RootedTree {
    std::vector<RootedTree> children;
    int size() const;
    friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

std::string render(const RootedTree& r);
RootedTree parse_rooted_tree(std::string_view text);
std::vector<RootedTree> all_rooted_trees(int size);
std::vector<int> scope_sequence(const RootedTree& r);

RootedTree rt(const Term& t);
Term ft(const RootedTree& r);
// (n-1, n-2, ..., 0)
DecorationWord dw(int n);
// f_up(dw(n))
Term dt(int n);
Poset rooted_tree_poset(int n, std::size_t ceiling = element_ceiling());
bool tamari_leq(const RootedTree& r1, const RootedTree& r2);

}  // namespace windlass
