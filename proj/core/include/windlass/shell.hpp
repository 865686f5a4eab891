#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "windlass/poset.hpp"

namespace windlass {

// (i, i1, -j1) where (i1, j1, i) is the edge of the lower term that a
// covering move replaces. Compared lexicographically.
struct Label {
    int i = 0;
    int i1 = 0;
    int negj = 0;
    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
    std::string to_string() const;
};

Label el_label(const Term& t1, const Term& t2);

using Chain = std::vector<int>;  // element indices, bottom to top

// Every saturated chain from x to y in p (DFS over covers inside [x, y]).
std::vector<Chain> saturated_chains(const Poset& p, int x, int y);
std::vector<std::vector<Term>> saturated_chains(const Term& t1, const Term& t2);

// mu(x, .) over the upper set of x; entries outside it are 0.
std::vector<std::int64_t> mobius_row(const Poset& p, const Comparability& c, int x);
// mu(., y) over the down set of y; entries outside it are 0.
std::vector<std::int64_t> mobius_column(const Poset& p, const Comparability& c, int y);
std::int64_t mobius(const Poset& p, int x, int y);
std::int64_t mobius(const Poset& p, const Term& x, const Term& y);
// Crapo's closure formula: sum of untilted mu(t1, s) over s with tilt(x, s) = t2.
std::int64_t mobius_tilted_crapo(const TiltSet& x, const Term& t1, const Term& t2);

struct ElReport {
    std::size_t pairs = 0;
    std::size_t failures = 0;
    std::size_t max_decreasing = 0;  // most weakly decreasing chains over one interval
    std::vector<std::string> messages;
    bool ok() const { return failures == 0; }
};

// For every comparable pair of an untilted poset: exactly one chain with
// increasing labels, and it is the lexicographically least maximal chain;
// at most one weakly decreasing chain.
ElReport el_check(const Poset& p);

}  // namespace windlass
