#pragma once

#include <set>
#include <string>
#include <utility>

#include "windlass/term.hpp"

namespace windlass {

// A finite set of internal-node indices, or every index (ALL).
class TiltSet {
public:
    TiltSet() = default;
    TiltSet(std::initializer_list<int> nodes);
    explicit TiltSet(std::set<int> nodes);
    static TiltSet all();

    bool is_all() const { return all_; }
    bool empty() const { return !all_ && nodes_.empty(); }
    bool contains(int i) const { return all_ || nodes_.count(i) > 0; }
    const std::set<int>& nodes() const { return nodes_; }
    std::string to_string() const;
    // "all", "", or a comma-separated index list.
    static TiltSet parse(const std::string& text);

    friend bool operator==(const TiltSet&, const TiltSet&) = default;

private:
    bool all_ = false;
    std::set<int> nodes_;
};

// At every node in x, non-leaf children move ahead of the leaves.
Term tilt(const TiltSet& x, const Term& t);
// At every node in x, leaves move ahead of the non-leaf children.
Term rtilt(const TiltSet& x, const Term& t);
bool is_tilted(const TiltSet& x, const Term& t);
// The class of t under equal tilting is the interval [first, second].
std::pair<Term, Term> kernel_interval(const TiltSet& x, const Term& t);
// Order on fully tilted terms by componentwise scope sequences.
bool leq_fully_tilted(const Term& t1, const Term& t2);

}  // namespace windlass
