#include "windlass/shell.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "windlass/error.hpp"

namespace windlass {

std::string Label::to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(i1) + "," + std::to_string(negj) + ")";
}

Label el_label(const Term& t1, const Term& t2) {
    if (t1.decoration_word() != t2.decoration_word())
        throw std::invalid_argument("el_label: not a covering pair");
    auto e1 = parent_edges(t1);
    auto e2 = parent_edges(t2);
    int changed = 0;
    for (std::size_t k = 0; k < e1.size(); ++k) {
        if (e1[k] == e2[k]) continue;
        if (changed) throw std::invalid_argument("el_label: not a covering pair");
        changed = static_cast<int>(k) + 1;
    }
    if (!changed) throw std::invalid_argument("el_label: not a covering pair");
    auto moved = rewrite(t1, changed);
    if (!moved || *moved != t2) throw std::invalid_argument("el_label: not a covering pair");
    const Edge& e = e1[static_cast<std::size_t>(changed - 1)];
    return Label{changed, e.parent, -e.position};
}

std::vector<Chain> saturated_chains(const Poset& p, int x, int y) {
    Comparability c(p);
    if (!c.leq(x, y)) throw std::invalid_argument("saturated_chains: incomparable elements");
    std::vector<Chain> out;
    Chain cur{x};
    auto dfs = [&](auto&& self, int z) -> void {
        if (z == y) {
            out.push_back(cur);
            return;
        }
        for (int w : p.covers[static_cast<std::size_t>(z)]) {
            if (!c.leq(w, y)) continue;
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
        }
    };
    dfs(dfs, x);
    return out;
}

std::vector<std::vector<Term>> saturated_chains(const Term& t1, const Term& t2) {
    if (!leq(t1, t2)) throw std::invalid_argument("saturated_chains: incomparable terms");
    Poset p = upper_set(t1);
    std::vector<std::vector<Term>> out;
    for (const auto& ch : saturated_chains(p, p.at(t1), p.at(t2))) {
        std::vector<Term> terms;
        for (int i : ch) terms.push_back(p.elements[static_cast<std::size_t>(i)]);
        out.push_back(std::move(terms));
    }
    return out;
}

std::vector<std::int64_t> mobius_row(const Poset& p, const Comparability& c, int x) {
    const std::size_t n = p.elements.size();
    std::vector<std::int64_t> mu(n, 0);
    const auto& above = c.up(x);
    for (int y : c.linear_extension()) {
        auto uy = static_cast<std::size_t>(y);
        if (!above.test(uy)) continue;
        if (y == x) {
            mu[uy] = 1;
            continue;
        }
        std::int64_t s = 0;
        auto between = above & c.down(y);
        between.reset(uy);
        for (auto z = between.find_first(); z != boost::dynamic_bitset<>::npos; z = between.find_next(z))
            s += mu[z];
        mu[uy] = -s;
    }
    return mu;
}

std::vector<std::int64_t> mobius_column(const Poset& p, const Comparability& c, int y) {
    const std::size_t n = p.elements.size();
    std::vector<std::int64_t> mu(n, 0);
    const auto& below = c.down(y);
    const auto& order = c.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        auto ux = static_cast<std::size_t>(x);
        if (!below.test(ux)) continue;
        if (x == y) {
            mu[ux] = 1;
            continue;
        }
        std::int64_t s = 0;
        auto between = below & c.up(x);
        between.reset(ux);
        for (auto z = between.find_first(); z != boost::dynamic_bitset<>::npos; z = between.find_next(z))
            s += mu[z];
        mu[ux] = -s;
    }
    return mu;
}

std::int64_t mobius(const Poset& p, int x, int y) {
    Comparability c(p);
    if (!c.leq(x, y)) throw std::invalid_argument("mobius: elements are not comparable");
    return mobius_row(p, c, x)[static_cast<std::size_t>(y)];
}

std::int64_t mobius(const Poset& p, const Term& x, const Term& y) { return mobius(p, p.at(x), p.at(y)); }

std::int64_t mobius_tilted_crapo(const TiltSet& x, const Term& t1, const Term& t2) {
    if (!is_tilted(x, t1) || !is_tilted(x, t2))
        throw std::invalid_argument("mobius_tilted_crapo: operands must be tilted");
    if (!leq(t1, t2)) throw std::invalid_argument("mobius_tilted_crapo: operands are not comparable");
    Poset p = upper_set(t1);
    Comparability c(p);
    auto mu = mobius_row(p, c, p.at(t1));
    std::int64_t s = 0;
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        if (mu[i] != 0 && tilt(x, p.elements[i]) == t2) s += mu[i];
    return s;
}

ElReport el_check(const Poset& p) {
    ElReport r;
    Comparability c(p);
    const std::size_t n = p.elements.size();
    // Labels of all covers, indexed like p.covers.
    std::vector<std::vector<Label>> lab(n);
    for (std::size_t a = 0; a < n; ++a)
        for (int b : p.covers[a]) lab[a].push_back(el_label(p.elements[a], p.elements[static_cast<std::size_t>(b)]));
    // Incoming edges per element: (source, label).
    std::vector<std::vector<std::pair<int, Label>>> in(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < p.covers[a].size(); ++k)
            in[static_cast<std::size_t>(p.covers[a][k])].emplace_back(static_cast<int>(a), lab[a][k]);

    auto fail = [&](const std::string& m) {
        ++r.failures;
        if (r.messages.size() < 20) r.messages.push_back(m);
    };

    for (std::size_t x = 0; x < n; ++x) {
        // inc[y][k] / dec[y][k]: chains from x ending with the k-th incoming edge of y.
        std::vector<std::vector<std::uint64_t>> inc(n), dec(n);
        for (int y : c.linear_extension()) {
            auto uy = static_cast<std::size_t>(y);
            if (!c.leq(static_cast<int>(x), y) || uy == x) continue;
            inc[uy].assign(in[uy].size(), 0);
            dec[uy].assign(in[uy].size(), 0);
            for (std::size_t k = 0; k < in[uy].size(); ++k) {
                auto [z, l] = in[uy][k];
                auto uz = static_cast<std::size_t>(z);
                if (!c.leq(static_cast<int>(x), z)) continue;
                if (uz == x) {
                    inc[uy][k] = dec[uy][k] = 1;
                    continue;
                }
                for (std::size_t q = 0; q < in[uz].size(); ++q) {
                    if (in[uz][q].second < l) inc[uy][k] += inc[uz][q];
                    if (!(in[uz][q].second < l)) dec[uy][k] += dec[uz][q];
                }
            }
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x || !c.leq(static_cast<int>(x), static_cast<int>(y))) continue;
            ++r.pairs;
            std::uint64_t ninc = 0, ndec = 0;
            for (auto v : inc[y]) ninc += v;
            for (auto v : dec[y]) ndec += v;
            r.max_decreasing = std::max<std::size_t>(r.max_decreasing, ndec);
            if (ninc != 1)
                fail(p.texts[x] + " -> " + p.texts[y] + ": " + std::to_string(ninc) +
                     " increasing chains");
            if (ndec > 1)
                fail(p.texts[x] + " -> " + p.texts[y] + ": " + std::to_string(ndec) +
                     " weakly decreasing chains");
            // Greedy descent along the least label gives the lexicographically
            // least maximal chain, since every element of [x, y] reaches y.
            std::size_t z = x;
            bool increasing = true;
            std::optional<Label> last;
            while (z != y) {
                std::optional<std::size_t> best;
                for (std::size_t k = 0; k < p.covers[z].size(); ++k) {
                    int w = p.covers[z][k];
                    if (!c.leq(w, static_cast<int>(y))) continue;
                    if (!best || lab[z][k] < lab[z][*best]) best = k;
                }
                if (!best) throw InvariantError("interval element cannot reach its top");
                const Label& l = lab[z][*best];
                if (last && !(*last < l)) increasing = false;
                last = l;
                z = static_cast<std::size_t>(p.covers[z][*best]);
            }
            if (!increasing)
                fail(p.texts[x] + " -> " + p.texts[y] + ": lexicographically least chain is not increasing");
        }
    }
    return r;
}

}  // namespace windlass
