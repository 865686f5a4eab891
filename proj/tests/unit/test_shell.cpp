#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "windlass/figures.hpp"
#include "windlass/order.hpp"
#include "windlass/poset.hpp"
#include "windlass/shell.hpp"
#include "windlass/tilt.hpp"

using namespace windlass;
using testing_support::T;

namespace {

std::vector<std::vector<bool>> reach_of(const Poset& p) {
    Comparability c(p);
    std::vector<std::vector<bool>> r(static_cast<std::size_t>(p.size()), std::vector<bool>(static_cast<std::size_t>(p.size())));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c.leq(a, b);
    return r;
}

std::string coords(const ConnectionWord& c) {
    std::string s;
    for (const auto& d : c) s += (s.empty() ? "" : ",") + d.to_string();
    return s;
}

}  // namespace

TEST_SUITE("shell") {
    TEST_CASE("saturated chains") {
        Poset p = upper_set(T("a3(*,a1(*),a2(*,*))"));
        REQUIRE(p.minimum);
        REQUIRE(p.maximum);
        auto chains = saturated_chains(p, *p.minimum, *p.maximum);
        CHECK_FALSE(chains.empty());
        for (const auto& ch : chains) {
            CHECK(ch.front() == *p.minimum);
            CHECK(ch.back() == *p.maximum);
            for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
                const auto& cov = p.covers[static_cast<std::size_t>(ch[k])];
                CHECK(std::find(cov.begin(), cov.end(), ch[k + 1]) != cov.end());
            }
        }
        auto term_chains = saturated_chains(p.elements[static_cast<std::size_t>(*p.minimum)],
                                            p.elements[static_cast<std::size_t>(*p.maximum)]);
        CHECK(term_chains.size() == chains.size());
    }

    TEST_CASE("labels are injective on covers out of an element") {
        for (const auto& text : oracle::all_terms(testing_support::a_gens(3), 4)) {
            Poset p = upper_set(T(text));
            for (int a = 0; a < p.size(); ++a) {
                std::set<Label> seen;
                for (int b : p.covers[static_cast<std::size_t>(a)])
                    CHECK(seen.insert(el_label(p.elements[static_cast<std::size_t>(a)], p.elements[static_cast<std::size_t>(b)])).second);
            }
        }
    }

    TEST_CASE("EL check on small upper sets") {
        for (int d = 1; d <= 4; ++d)
            for (const auto& text : oracle::all_terms(testing_support::a_gens(3), d)) {
                auto report = el_check(upper_set(T(text)));
                CHECK_MESSAGE(report.ok(), text);
                CHECK(report.max_decreasing <= 1);
            }
    }

    TEST_CASE("Moebius function agrees with the oracle") {
        for (const auto& root : {"a4(a1(*),a1(*),a1(*),a1(*))", "a3(a1(*),a2(*,*),a1(*))", "a2(a2(*,a1(*)),a2(*,*))"}) {
            Poset p = upper_set(T(root));
            auto expected = oracle::mobius_matrix(reach_of(p));
            Comparability c(p);
            for (int x = 0; x < p.size(); ++x) {
                auto row = mobius_row(p, c, x);
                auto col = mobius_column(p, c, x);
                for (int y = 0; y < p.size(); ++y) {
                    CHECK(row[static_cast<std::size_t>(y)] == expected[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
                    CHECK(col[static_cast<std::size_t>(y)] == expected[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]);
                    CHECK(row[static_cast<std::size_t>(y)] >= -1);
                    CHECK(row[static_cast<std::size_t>(y)] <= 1);
                }
            }
            CHECK(mobius(p, p.elements[static_cast<std::size_t>(*p.minimum)], p.elements[static_cast<std::size_t>(*p.minimum)]) == 1);
        }
    }

    TEST_CASE("Crapo formula on tilted posets") {
        for (const auto& [x, root] : std::vector<std::pair<TiltSet, std::string>>{
                 {TiltSet{1}, "a3(a1(*),a2(*,*),*)"},
                 {TiltSet{1, 2}, "a3(a3(*,*,*),a1(*),a2(*,*))"},
                 {TiltSet::all(), "a2(a2(a1(*),*),*)"}}) {
            Term t = T(root);
            REQUIRE(is_tilted(x, t));
            Poset p = tilted_upper_set(x, t);
            for (int y = 0; y < p.size(); ++y)
                CHECK(mobius(p, p.at(t), y) == mobius_tilted_crapo(x, t, p.elements[static_cast<std::size_t>(y)]));
        }
    }

    TEST_CASE("figure sizes") {
        std::vector<std::pair<int, std::vector<std::pair<int, std::size_t>>>> expected{
            {1, {{14, 19}}}, {2, {{5, 5}}}, {3, {{21, 36}, {9, 0}}}, {4, {{14, 21}, {12, 16}}}, {5, {{14, 21}}}, {6, {{22, 39}}}};
        for (const auto& [k, sizes] : expected) {
            auto panels = figure(k);
            REQUIRE(panels.size() == sizes.size());
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                CHECK(panels[i].poset.size() == sizes[i].first);
                if (sizes[i].second) CHECK(panels[i].poset.cover_count() == sizes[i].second);
            }
        }
        CHECK_THROWS(figure(7));
    }

    TEST_CASE("figure 3 coordinates of the extremes") {
        auto panels = figure(3);
        REQUIRE(panels.size() == 2);
        auto left = geometric_coordinates(panels[0].poset);
        CHECK(coords(left[static_cast<std::size_t>(*panels[0].poset.minimum)]) == "15/8,3/2,2,1");
        CHECK(coords(left[static_cast<std::size_t>(*panels[0].poset.maximum)]) == "15/8,7/4,11/4,3");
        auto right = geometric_coordinates(panels[1].poset);
        CHECK(coords(right[static_cast<std::size_t>(*panels[1].poset.minimum)]) == "15/8,7/4,2,3/2");
        CHECK(coords(right[static_cast<std::size_t>(*panels[1].poset.maximum)]) == "15/8,7/4,11/4,3");
    }
}
