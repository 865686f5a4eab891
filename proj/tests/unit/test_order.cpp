#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "windlass/error.hpp"
#include "windlass/order.hpp"
#include "windlass/poset.hpp"
#include "windlass/shell.hpp"

using namespace windlass;
using testing_support::T;

namespace {

std::string word_text(const ConnectionWord& c) {
    std::string s;
    for (const auto& d : c) s += (s.empty() ? "" : ",") + d.to_string();
    return s;
}

const char* kRunning = "a3(a2(*,a2(a1(*),*)),a2(*,a0),a1(*))";

}  // namespace

TEST_SUITE("order") {
    TEST_CASE("dyadic arithmetic") {
        CHECK(Dyadic(6, 2) == Dyadic(3, 1));
        CHECK(Dyadic(15, 3).to_string() == "15/8");
        CHECK(Dyadic(15, 3).floor() == 1);
        CHECK(Dyadic(-3, 1).floor() == -2);
        CHECK(Dyadic(7, 2) < Dyadic(2, 0));
        CHECK(max(Dyadic(3, 1), Dyadic(7, 2)) == Dyadic(7, 2));
    }

    TEST_CASE("connection word before and after a rewrite") {
        Term t1 = T(kRunning);
        CHECK(word_text(connection_word(t1)) == "15/8,7/4,2,7/2,3/2,5,1");
        auto t2 = rewrite(t1, 5);
        REQUIRE(t2);
        CHECK(render(*t2) == "a3(a2(*,a2(a1(*),a2(*,a0))),*,a1(*))");
        CHECK(word_text(connection_word(*t2)) == "15/8,7/4,2,7/2,3,5,1");
        CHECK(leq(t1, *t2));
        CHECK_FALSE(leq(*t2, t1));
    }

    TEST_CASE("connection words determine terms") {
        for (const auto& text : oracle::all_terms(testing_support::a_gens(3), 4)) {
            Term t = T(text);
            CHECK(term_from_connection(t.decoration_word(), connection_word(t)) == t);
        }
    }

    TEST_CASE("rewrites and their labels") {
        Term t1 = T(kRunning);
        auto r3 = rewrite(t1, 3);
        REQUIRE(r3);
        CHECK(render(*r3) == "a3(a2(a2(a1(*),*),*),a2(*,a0),a1(*))");
        CHECK(el_label(t1, *r3) == Label{3, 2, -2});
        auto r5 = rewrite(t1, 5);
        REQUIRE(r5);
        CHECK(el_label(t1, *r5) == Label{5, 1, -2});
        CHECK(el_label(t1, *r5).to_string() == "(5,1,-2)");
        // Node 2 follows the root directly, not a leaf.
        CHECK_FALSE(rewrite(t1, 2).has_value());
        CHECK_FALSE(rewrite(t1, 1).has_value());
    }

    TEST_CASE("rewrites agree with the oracle") {
        for (int d = 0; d <= 5; ++d)
            for (const auto& text : oracle::all_terms(testing_support::a_gens(3), d)) {
                std::vector<std::string> ours;
                for (const auto& [i, s] : rewrites(T(text))) ours.push_back(render(s));
                auto theirs = oracle::rewrites(text);
                std::sort(ours.begin(), ours.end());
                std::sort(theirs.begin(), theirs.end());
                CHECK(ours == theirs);
            }
    }

    TEST_CASE("edge domination") {
        CHECK(dominates(Edge{2, 5, 4}, Edge{3, 7, 4}));
        CHECK(dominates(Edge{2, 5, 4}, Edge{2, 3, 4}));
        CHECK_FALSE(dominates(Edge{2, 5, 4}, Edge{1, 1, 4}));
        CHECK_FALSE(dominates(Edge{2, 5, 4}, Edge{2, 6, 4}));
    }

    TEST_CASE("upper sets and comparisons agree with the rewrite closure") {
        for (int d = 1; d <= 4; ++d)
            for (const auto& text : oracle::all_terms(testing_support::a_gens(3), d)) {
                auto cl = oracle::closure(text);
                Poset p = upper_set(T(text));
                REQUIRE(p.texts == cl.elements);
                std::set<std::pair<int, int>> covers;
                for (int a = 0; a < p.size(); ++a)
                    for (int b : p.covers[static_cast<std::size_t>(a)]) covers.insert({a, b});
                CHECK(covers == oracle::transitive_reduction(cl.reach));
                for (int a = 0; a < p.size(); ++a)
                    for (int b = 0; b < p.size(); ++b) {
                        const Term& x = p.elements[static_cast<std::size_t>(a)];
                        const Term& y = p.elements[static_cast<std::size_t>(b)];
                        bool expected = cl.reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        CHECK(leq(x, y) == expected);
                        CHECK(leq_by_edges(x, y) == expected);
                    }
            }
    }

    TEST_CASE("join is the least upper bound") {
        CHECK(render(join(T("a3(*,a3(*,a0,*),a3(*,*,*))"), T("a3(a3(*,*,a0),a3(*,*,*),*)"))) ==
              "a3(a3(*,a0,*),a3(*,*,*),*)");
        for (const auto& root : {"a2(*,a2(*,a1(a0)))", "a3(*,a1(*),a2(*,*))", "a2(a0,a2(*,a2(*,*)))"}) {
            auto cl = oracle::closure(root);
            auto n = cl.elements.size();
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    std::vector<std::size_t> ub;
                    for (std::size_t c = 0; c < n; ++c)
                        if (cl.reach[a][c] && cl.reach[b][c]) ub.push_back(c);
                    std::size_t least = n;
                    for (auto c : ub)
                        if (std::all_of(ub.begin(), ub.end(), [&](auto e) { return cl.reach[c][e]; })) least = c;
                    REQUIRE(least < n);
                    CHECK(render(join(T(cl.elements[a]), T(cl.elements[b]))) == cl.elements[least]);
                }
        }
    }

    TEST_CASE("the lattice is not semidistributive") {
        Term s = T("a4(a1(*),a1(a1(a1(*))),*,*)");
        Term s1 = T("a4(a1(a1(a1(*))),*,a1(*),*)");
        Term s2 = T("a4(a1(a1(*)),a1(a1(*)),*,*)");
        Term top = T("a4(a1(a1(a1(a1(*)))),*,*,*)");
        CHECK(join(s1, s) == top);
        CHECK(join(s, s2) == top);
        Poset p = upper_set(T("a4(a1(*),a1(*),a1(*),a1(*))"));
        // S1 and S2 share the lower bound below, so the triple (S, S1, S2)
        // satisfies the semidistributive law.
        Term m = meet_in(p, s1, s2);
        CHECK(render(m) == "a4(a1(a1(*)),a1(*),a1(*),*)");
        CHECK(join(s, m) == top);

        Term x = T("a4(a1(a1(a1(*))),*,*,a1(*))");
        Term x1 = T("a4(a1(*),a1(a1(*)),a1(*),*)");
        Term x2 = T("a4(a1(a1(*)),a1(*),a1(*),*)");
        CHECK(join(x1, x) == join(x, x2));
        CHECK(render(meet_in(p, x1, x2)) == "a4(a1(*),a1(*),a1(*),a1(*))");
        CHECK(join(x, meet_in(p, x1, x2)) != join(x1, x));
    }

    TEST_CASE("enumeration ceiling") {
        Term t = T("a3(*,a3(*,*,a3(*,*,*)),*)");
        CHECK_THROWS_AS(upper_set(t, 5), CeilingExceeded);
        CHECK(upper_set(t, 1000).size() > 5);
    }

    TEST_CASE("geometric coordinates of a small poset") {
        Poset p = upper_set(T("a2(*,a1(*))"));
        auto coords = geometric_coordinates(p);
        REQUIRE(coords.size() == 2);
        for (int a = 0; a < p.size(); ++a)
            CHECK(coords[static_cast<std::size_t>(a)] == connection_word(p.elements[static_cast<std::size_t>(a)]));
    }
}
