#include "windlass/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "windlass/error.hpp"

namespace windlass {

std::size_t Poset::cover_count() const {
    std::size_t n = 0;
    for (const auto& c : covers) n += c.size();
    return n;
}

int Poset::find(const Term& t) const {
    auto it = index.find(t);
    return it == index.end() ? -1 : it->second;
}

int Poset::at(const Term& t) const {
    int i = find(t);
    if (i < 0) throw std::invalid_argument("term " + render(t) + " is not an element of the poset");
    return i;
}

Comparability::Comparability(const Poset& p) {
    const std::size_t n = p.elements.size();
    std::vector<int> indeg(n, 0);
    for (const auto& cs : p.covers)
        for (int b : cs) ++indeg[static_cast<std::size_t>(b)];
    std::deque<int> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
    while (!ready.empty()) {
        int a = ready.front();
        ready.pop_front();
        order_.push_back(a);
        for (int b : p.covers[static_cast<std::size_t>(a)])
            if (--indeg[static_cast<std::size_t>(b)] == 0) ready.push_back(b);
    }
    if (order_.size() != n) throw InvariantError("cover relation has a cycle");
    up_.assign(n, boost::dynamic_bitset<>(n));
    down_.assign(n, boost::dynamic_bitset<>(n));
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        auto a = static_cast<std::size_t>(*it);
        up_[a].set(a);
        for (int b : p.covers[a]) up_[a] |= up_[static_cast<std::size_t>(b)];
    }
    for (std::size_t a = 0; a < n; ++a)
        for (auto b = up_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = up_[a].find_next(b))
            down_[b].set(a);
}

std::size_t element_ceiling() {
    if (const char* env = std::getenv("WINDLASS_CEILING")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw std::invalid_argument("WINDLASS_CEILING must be a positive integer");
    }
    return 1000000;
}

Poset make_poset(std::vector<Term> elements, const std::vector<std::pair<int, int>>& covers) {
    const std::size_t n = elements.size();
    std::vector<std::string> texts(n);
    for (std::size_t i = 0; i < n; ++i) texts[i] = render(elements[i]);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return texts[static_cast<std::size_t>(a)] < texts[static_cast<std::size_t>(b)];
    });
    std::vector<int> where(n);
    for (std::size_t k = 0; k < n; ++k) where[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);

    Poset p;
    p.elements.reserve(n);
    p.texts.reserve(n);
    for (int old : perm) {
        p.elements.push_back(std::move(elements[static_cast<std::size_t>(old)]));
        p.texts.push_back(std::move(texts[static_cast<std::size_t>(old)]));
    }
    p.covers.assign(n, {});
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : covers) {
        int na = where[static_cast<std::size_t>(a)], nb = where[static_cast<std::size_t>(b)];
        p.covers[static_cast<std::size_t>(na)].push_back(nb);
        ++indeg[static_cast<std::size_t>(nb)];
    }
    for (auto& cs : p.covers) {
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    }
    std::vector<int> mins, maxs;
    for (std::size_t i = 0; i < n; ++i) {
        if (indeg[i] == 0) mins.push_back(static_cast<int>(i));
        if (p.covers[i].empty()) maxs.push_back(static_cast<int>(i));
    }
    if (mins.size() == 1) p.minimum = mins[0];
    if (maxs.size() == 1) p.maximum = maxs[0];
    p.index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.index.emplace(p.elements[i], static_cast<int>(i));
    return p;
}

Poset poset_from_elements(std::vector<Term> elements) {
    const std::size_t n = elements.size();
    std::vector<ConnectionWord> cw(n);
    std::vector<DecorationWord> dw(n);
    for (std::size_t i = 0; i < n; ++i) {
        cw[i] = connection_word(elements[i]);
        dw[i] = elements[i].decoration_word();
    }
    std::vector<boost::dynamic_bitset<>> above(n, boost::dynamic_bitset<>(n));
    std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && dw[a] == dw[b] && leq(cw[a], cw[b])) {
                above[a].set(b);
                below[b].set(a);
            }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t a = 0; a < n; ++a)
        for (auto b = above[a].find_first(); b != boost::dynamic_bitset<>::npos; b = above[a].find_next(b))
            if (!above[a].intersects(below[b])) covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return make_poset(std::move(elements), covers);
}

Poset upper_set(const Term& t, std::size_t ceiling) {
    std::vector<Term> elements{t};
    std::unordered_map<Term, int, TermHash> seen{{t, 0}};
    std::vector<std::pair<int, int>> covers;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (auto& [i, s] : rewrites(elements[k])) {
            auto [it, fresh] = seen.emplace(s, static_cast<int>(elements.size()));
            if (fresh) {
                if (elements.size() >= ceiling)
                    throw CeilingExceeded("upper set exceeds the element ceiling of " +
                                          std::to_string(ceiling));
                elements.push_back(std::move(s));
            }
            covers.emplace_back(static_cast<int>(k), it->second);
        }
    }
    return make_poset(std::move(elements), covers);
}

Poset tilted_upper_set(const TiltSet& x, const Term& t, std::size_t ceiling) {
    if (!is_tilted(x, t))
        throw std::invalid_argument("tilted_upper_set: " + render(t) + " is not " + x.to_string() +
                                    "-tilted");
    std::vector<Term> elements{t};
    std::vector<ConnectionWord> cws{connection_word(t)};
    std::unordered_map<Term, int, TermHash> seen{{t, 0}};
    std::vector<std::pair<int, int>> covers;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        // Every cover of k is tilt(x, s) for some rewrite s of k; covers are
        // the minimal such candidates.
        std::vector<int> cand;
        for (auto& [i, s] : rewrites(elements[k])) {
            Term u = tilt(x, s);
            auto [it, fresh] = seen.emplace(u, static_cast<int>(elements.size()));
            if (fresh) {
                if (elements.size() >= ceiling)
                    throw CeilingExceeded("tilted upper set exceeds the element ceiling of " +
                                          std::to_string(ceiling));
                cws.push_back(connection_word(u));
                elements.push_back(std::move(u));
            }
            cand.push_back(it->second);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (int c : cand) {
            bool minimal = true;
            for (int d : cand)
                if (d != c && leq(cws[static_cast<std::size_t>(d)], cws[static_cast<std::size_t>(c)])) {
                    minimal = false;
                    break;
                }
            if (minimal) covers.emplace_back(static_cast<int>(k), c);
        }
    }
    return make_poset(std::move(elements), covers);
}

Poset interval(const Poset& p, int lo, int hi) {
    Comparability c(p);
    if (!c.leq(lo, hi)) throw std::invalid_argument("interval: bounds are not comparable");
    auto members = c.up(lo) & c.down(hi);
    std::vector<int> keep;
    std::vector<int> local(static_cast<std::size_t>(p.size()), -1);
    for (auto i = members.find_first(); i != boost::dynamic_bitset<>::npos; i = members.find_next(i)) {
        local[i] = static_cast<int>(keep.size());
        keep.push_back(static_cast<int>(i));
    }
    std::vector<Term> elems;
    std::vector<std::pair<int, int>> covers;
    for (int a : keep) {
        elems.push_back(p.elements[static_cast<std::size_t>(a)]);
        for (int b : p.covers[static_cast<std::size_t>(a)])
            if (local[static_cast<std::size_t>(b)] >= 0)
                covers.emplace_back(local[static_cast<std::size_t>(a)], local[static_cast<std::size_t>(b)]);
    }
    return make_poset(std::move(elems), covers);
}

std::optional<int> join_index(const Comparability& c, int a, int b) {
    auto common = c.up(a) & c.up(b);
    for (auto u = common.find_first(); u != boost::dynamic_bitset<>::npos; u = common.find_next(u))
        if (common.is_subset_of(c.up(static_cast<int>(u)))) return static_cast<int>(u);
    return std::nullopt;
}

std::optional<int> meet_index(const Comparability& c, int a, int b) {
    auto common = c.down(a) & c.down(b);
    for (auto u = common.find_first(); u != boost::dynamic_bitset<>::npos; u = common.find_next(u))
        if (common.is_subset_of(c.down(static_cast<int>(u)))) return static_cast<int>(u);
    return std::nullopt;
}

Term meet_in(const Poset& p, const Term& t1, const Term& t2) {
    int a = p.at(t1), b = p.at(t2);
    Comparability c(p);
    auto m = meet_index(c, a, b);
    if (!m) throw std::invalid_argument("meet_in: no greatest common lower bound");
    return p.elements[static_cast<std::size_t>(*m)];
}

std::vector<ConnectionWord> geometric_coordinates(const Poset& p) {
    std::vector<ConnectionWord> out;
    out.reserve(p.elements.size());
    for (const auto& e : p.elements) out.push_back(connection_word(e));
    return out;
}

}  // namespace windlass
