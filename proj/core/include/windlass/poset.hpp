#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "windlass/order.hpp"
#include "windlass/term.hpp"
#include "windlass/tilt.hpp"

namespace windlass {

// Finite poset of terms sharing one decoration word. Elements are sorted by
// canonical text; covers[a] lists the b with a covered by b.
struct Poset {
    std::vector<Term> elements;
    std::vector<std::string> texts;
    std::vector<std::vector<int>> covers;
    std::optional<int> minimum;
    std::optional<int> maximum;

    int size() const { return static_cast<int>(elements.size()); }
    std::size_t cover_count() const;
    // Index of t, or -1.
    int find(const Term& t) const;
    int at(const Term& t) const;

    std::unordered_map<Term, int, TermHash> index;
};

// Reflexive up- and down-sets of every element, derived from the covers.
class Comparability {
public:
    explicit Comparability(const Poset& p);

    bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    const boost::dynamic_bitset<>& up(int a) const { return up_[static_cast<std::size_t>(a)]; }
    const boost::dynamic_bitset<>& down(int b) const { return down_[static_cast<std::size_t>(b)]; }
    // Elements ordered so that every element precedes its upper covers.
    const std::vector<int>& linear_extension() const { return order_; }

private:
    std::vector<boost::dynamic_bitset<>> up_;
    std::vector<boost::dynamic_bitset<>> down_;
    std::vector<int> order_;
};

// Element ceiling: WINDLASS_CEILING when set, else 10^6.
std::size_t element_ceiling();

// Sorts elements canonically and remaps the cover pairs.
Poset make_poset(std::vector<Term> elements, const std::vector<std::pair<int, int>>& covers);
// Covers obtained from leq by transitive reduction.
Poset poset_from_elements(std::vector<Term> elements);

// {t' : t <= t'}, by breadth-first closure under the rewrite rule.
Poset upper_set(const Term& t, std::size_t ceiling = element_ceiling());
// Elements of upper_set(t) fixed by tilt(x, .); t must be x-tilted.
Poset tilted_upper_set(const TiltSet& x, const Term& t, std::size_t ceiling = element_ceiling());
// The convex subposet [lo, hi] of p.
Poset interval(const Poset& p, int lo, int hi);

std::optional<int> join_index(const Comparability& c, int a, int b);
std::optional<int> meet_index(const Comparability& c, int a, int b);
Term meet_in(const Poset& p, const Term& t1, const Term& t2);

std::vector<ConnectionWord> geometric_coordinates(const Poset& p);

}  // namespace windlass
