#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "windlass/order.hpp"
#include "windlass/poset.hpp"
#include "windlass/tilt.hpp"

using namespace windlass;
using testing_support::T;

namespace {

std::vector<TiltSet> small_tilt_sets(int degree) {
    std::vector<TiltSet> out{TiltSet{}, TiltSet::all()};
    for (int mask = 1; mask < (1 << degree); ++mask) {
        std::set<int> s;
        for (int i = 0; i < degree; ++i)
            if (mask & (1 << i)) s.insert(i + 1);
        out.emplace_back(s);
    }
    return out;
}

}  // namespace

TEST_SUITE("tilt") {
    TEST_CASE("tilt sets") {
        CHECK(TiltSet::parse("all").is_all());
        CHECK(TiltSet::parse("").empty());
        CHECK(TiltSet::parse("1,4") == TiltSet{1, 4});
        CHECK(TiltSet{1, 4}.contains(4));
        CHECK_FALSE(TiltSet{1, 4}.contains(2));
        CHECK(TiltSet::parse(TiltSet{2, 3}.to_string()) == TiltSet{2, 3});
        CHECK_THROWS(TiltSet::parse("1,x"));
        CHECK_THROWS(TiltSet::parse("0"));
    }

    TEST_CASE("tilt and reverse tilt") {
        Term t = T("a3(a2(*,a2(*,a1(*))),*,a0)");
        CHECK(render(tilt({1, 2}, t)) == "a3(a2(a2(*,a1(*)),*),a0,*)");
        CHECK(render(rtilt({1, 2}, t)) == "a3(*,a2(*,a2(*,a1(*))),a0)");
        CHECK(tilt(TiltSet{}, t) == t);
        // rtilt is not the identity on untilted terms.
        CHECK(render(rtilt({1}, T("a2(a1(*),*)"))) == "a2(*,a1(*))");
        CHECK(is_tilted({1}, T("a2(a1(*),*)")));
        CHECK_FALSE(is_tilted({1}, T("a2(*,a1(*))")));
    }

    TEST_CASE("tilt agrees with the oracle") {
        for (int d = 1; d <= 4; ++d)
            for (const auto& text : oracle::all_terms(testing_support::a_gens(3), d))
                for (const auto& x : small_tilt_sets(d)) {
                    CHECK(render(tilt(x, T(text))) == oracle::tilt(x.nodes(), x.is_all(), text));
                }
    }

    TEST_CASE("tilt is a closure operator") {
        for (const auto& root : {"a3(a1(*),a1(*),a2(*,*))", "a2(a2(*,a0),a2(*,*))", "a4(a1(*),a1(*),a0,a1(*))"}) {
            Poset p = upper_set(T(root));
            for (const auto& x : {TiltSet{1}, TiltSet{1, 2}, TiltSet::all()})
                for (const auto& s : p.elements) {
                    Term ts = tilt(x, s);
                    CHECK(leq(s, ts));
                    CHECK(tilt(x, ts) == ts);
                    for (const auto& u : p.elements)
                        if (leq(s, u)) CHECK(leq(ts, tilt(x, u)));
                }
        }
    }

    TEST_CASE("kernel classes are intervals") {
        Term a = T("a4(a2(*,a1(*)),*,*,a2(*,a2(*,*)))");
        Term b = T("a4(*,a2(*,a1(*)),*,a2(a2(*,*),*))");
        TiltSet x{1, 4};
        CHECK(tilt(x, a) == tilt(x, b));
        for (const auto& root : {"a3(*,a1(*),a2(*,*))", "a2(*,a2(*,a2(*,*)))"}) {
            Poset p = upper_set(T(root));
            for (const auto& x2 : {TiltSet{1}, TiltSet{2}, TiltSet::all()})
                for (const auto& s : p.elements) {
                    auto [lo, hi] = kernel_interval(x2, s);
                    for (const auto& u : p.elements) {
                        bool same_class = tilt(x2, u) == tilt(x2, s);
                        CHECK(same_class == (leq(lo, u) && leq(u, hi)));
                    }
                }
        }
    }

    TEST_CASE("tilted upper sets agree with the oracle") {
        for (int d = 1; d <= 4; ++d)
            for (const auto& text : oracle::all_terms(testing_support::a_gens(3), d))
                for (const auto& x : {TiltSet{1}, TiltSet::all()}) {
                    Term t = T(text);
                    if (!is_tilted(x, t)) continue;
                    auto cl = oracle::closure(text);
                    std::vector<int> keep;
                    for (int i = 0; i < static_cast<int>(cl.elements.size()); ++i)
                        if (oracle::tilt(x.nodes(), x.is_all(), cl.elements[static_cast<std::size_t>(i)]) ==
                            cl.elements[static_cast<std::size_t>(i)])
                            keep.push_back(i);
                    std::vector<std::vector<bool>> reach(keep.size(), std::vector<bool>(keep.size()));
                    std::vector<std::string> expected;
                    for (std::size_t a = 0; a < keep.size(); ++a) {
                        expected.push_back(cl.elements[static_cast<std::size_t>(keep[a])]);
                        for (std::size_t b = 0; b < keep.size(); ++b)
                            reach[a][b] = cl.reach[static_cast<std::size_t>(keep[a])][static_cast<std::size_t>(keep[b])];
                    }
                    Poset p = tilted_upper_set(x, t);
                    REQUIRE(p.texts == expected);
                    std::set<std::pair<int, int>> covers;
                    for (int a = 0; a < p.size(); ++a)
                        for (int b : p.covers[static_cast<std::size_t>(a)]) covers.insert({a, b});
                    CHECK(covers == oracle::transitive_reduction(reach));
                }
    }

    TEST_CASE("tilted upper set rejects an untilted root") {
        CHECK_THROWS(tilted_upper_set({1}, T("a2(*,a1(*))")));
    }

    TEST_CASE("tilted posets are not sublattices") {
        Term root = T("a2(a2(a3(a2(*,*),a2(*,*),*),a2(*,*)),*)");
        Term a = T("a2(a2(a3(a2(*,*),a2(*,*),a2(*,*)),*),*)");
        Term b = T("a2(a2(a3(a2(*,a2(*,*)),*,*),a2(*,*)),*)");
        Term j = join(a, b);
        CHECK(render(j) == "a2(a2(a3(a2(*,a2(*,*)),*,a2(*,*)),*),*)");
        CHECK(leq(root, a));
        CHECK(leq(root, b));
        CHECK(is_tilted({1, 3}, a));
        CHECK(is_tilted({1, 3}, b));
        CHECK_FALSE(is_tilted({1, 3}, j));
        // The tilted join is the closure of the untilted one.
        Poset p = tilted_upper_set({1, 3}, root);
        Comparability c(p);
        auto tj = join_index(c, p.at(a), p.at(b));
        REQUIRE(tj);
        CHECK(p.elements[static_cast<std::size_t>(*tj)] == tilt({1, 3}, j));
    }

    TEST_CASE("fully tilted order by scope sequences") {
        for (const auto& root : {"a3(a1(*),a1(*),a2(*,*))", "a2(a2(a0,*),a2(*,*))", "a3(a2(*,*),a1(*),a1(*))"}) {
            Poset p = tilted_upper_set(TiltSet::all(), T(root));
            for (const auto& s : p.elements)
                for (const auto& u : p.elements) CHECK(leq_fully_tilted(s, u) == leq(s, u));
        }
    }
}
