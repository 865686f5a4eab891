#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "windlass/hopf.hpp"
#include "windlass/leaning.hpp"

using namespace windlass;
using testing_support::T;

namespace {

const char* kG = "3:(a3(*,a1(*),*),a2(*,*),*)";

HopfElement E(const std::string& text) { return HopfElement::basis_element(Basis::E, T(text)); }
HopfElement F(const std::string& text) { return HopfElement::basis_element(Basis::F, T(text)); }
HopfElement H(const std::string& text) { return HopfElement::basis_element(Basis::H, T(text)); }

std::vector<Term> small_leaning(int max_size) {
    std::vector<Term> out;
    for (int n = 0; n <= max_size; ++n)
        for (const auto& f : all_leaning(testing_support::a_tokens(2), n)) out.push_back(f);
    return out;
}

Tensor map_tensor(const Tensor& t, Basis b) {
    Tensor out(b);
    for (const auto& [key, e] : t.terms()) {
        auto l = change_basis(HopfElement::basis_element(t.basis(), e.left), b);
        auto r = change_basis(HopfElement::basis_element(t.basis(), e.right), b);
        for (const auto& [lk, le] : l.terms())
            for (const auto& [rk, re] : r.terms()) out.add(le.forest, re.forest, e.coeff * le.coeff * re.coeff);
    }
    return out;
}

}  // namespace

TEST_SUITE("hopf") {
    TEST_CASE("linear combinations") {
        HopfElement a = E("1:(a1(*))") + E("1:(a0)");
        CHECK(a.size() == 2);
        a -= E("1:(a0)");
        CHECK(a == E("1:(a1(*))"));
        a *= Rational(0);
        CHECK(a.is_zero());
        HopfElement b = Rational(3, 2) * E("1:(a0)") - E("0:()");
        CHECK(b.to_string() == "-E[0:()] + 3/2 E[1:(a0)]");
        CHECK(parse_basis("H") == Basis::H);
        CHECK(basis_name(Basis::F) == 'F');
        CHECK_THROWS(parse_basis("G"));
        CHECK_THROWS(HopfElement::basis_element(Basis::E, T("3:(*,a2(*,a1(*)),a0)")));
        CHECK_THROWS(product(E("1:(a0)"), F("1:(a0)")));
    }

    TEST_CASE("E product is over") {
        auto p = product(E("4:(a1(a2(*,*)),a3(a1(*),*,*),*,*)"), E("2:(a2(a1(*),*),*)"));
        CHECK(p == E("6:(a1(a2(*,*)),a3(a1(*),*,*),a2(a1(*),*),*,*,*)"));
        CHECK(product(HopfElement::unit(Basis::E), E(kG)) == E(kG));
    }

    TEST_CASE("F product is a sum over the shuffle interval") {
        auto p = product(F("3:(a3(*,*,*),a2(*,a2(*,*)),*)"), F("4:(a3(*,a2(*,*),*),a1(*),a2(*,*),*)"));
        HopfElement expected = F("7:(a3(*,*,*),a2(*,a2(*,*)),a3(*,a2(*,*),*),a1(*),a2(*,*),*,*)") +
                               F("7:(a3(*,*,*),a2(*,a2(*,a3(*,a2(*,*),*))),a1(*),a2(*,*),*,*,*)") +
                               F("7:(a3(*,*,*),a2(*,a2(a3(*,a2(*,*),*),*)),a1(*),a2(*,*),*,*,*)") +
                               F("7:(a3(*,*,*),a2(*,a2(a3(*,a2(*,*),*),a1(*))),a2(*,*),*,*,*,*)");
        CHECK(p == expected);
    }

    TEST_CASE("products agree across bases") {
        auto forests = small_leaning(2);
        for (const auto& a : forests)
            for (const auto& b : forests)
                for (Basis basis : {Basis::F, Basis::H}) {
                    auto x = HopfElement::basis_element(basis, a);
                    auto y = HopfElement::basis_element(basis, b);
                    auto via_e = change_basis(product(change_basis(x, Basis::E), change_basis(y, Basis::E)), basis);
                    CHECK(product(x, y) == via_e);
                }
        CHECK(product(H("1:(a1(*))"), H("1:(a0)")) == H("2:(a1(a0),*)"));
    }

    TEST_CASE("basis changes") {
        // [g, f4] is a Boolean interval of rank 2, so mu(g, f4) = 1.
        HopfElement expected = E(kG) - E("3:(a3(*,a1(*),a2(*,*)),*,*)") - E("3:(a3(a1(*),*,*),a2(*,*),*)") +
                               E("3:(a3(a1(*),*,a2(*,*)),*,*)");
        CHECK(change_basis(F(kG), Basis::E) == expected);
        HopfElement h = F("3:(a3(*,*,*),a1(*),a2(*,*))") + F("3:(a3(*,*,a1(*)),a2(*,*),*)") + F(kG);
        CHECK(change_basis(H(kG), Basis::F) == h);
        for (const auto& f : small_leaning(3))
            for (Basis from : {Basis::E, Basis::F, Basis::H})
                for (Basis to : {Basis::E, Basis::F, Basis::H}) {
                    auto x = HopfElement::basis_element(from, f);
                    CHECK(change_basis(change_basis(x, to), from) == x);
                }
    }

    TEST_CASE("coproduct of an E basis element") {
        Tensor expected(Basis::E);
        expected.add(T("0:()"), T(kG), 1);
        expected.add(T("1:(a3(*,*,*))"), T("2:(a1(*),a2(*,*))"), 1);
        expected.add(T("1:(a2(*,*))"), T("2:(a3(*,a1(*),*),*)"), 1);
        expected.add(T("2:(a3(*,a1(*),*),*)"), T("1:(a2(*,*))"), 1);
        expected.add(T("2:(a3(*,*,*),a2(*,*))"), T("1:(a1(*))"), 1);
        expected.add(T(kG), T("0:()"), 1);
        CHECK(coproduct_E(T(kG)) == expected);
        CHECK(coproduct(E(kG)) == expected);
        CHECK_THROWS(coproduct(F(kG)));
    }

    TEST_CASE("bialgebra identities on small forests") {
        auto forests = small_leaning(2);
        for (const auto& a : forests) {
            auto x = HopfElement::basis_element(Basis::E, a);
            CHECK(counit(x) == (a == T("0:()") ? 1 : 0));
            // Counit identities.
            HopfElement left(Basis::E), right(Basis::E);
            Tensor dx = coproduct(x);
            for (const auto& [k, e] : dx.terms()) {
                left += (e.coeff * counit(HopfElement::basis_element(Basis::E, e.left))) *
                        HopfElement::basis_element(Basis::E, e.right);
                right += (e.coeff * counit(HopfElement::basis_element(Basis::E, e.right))) *
                         HopfElement::basis_element(Basis::E, e.left);
            }
            CHECK(left == x);
            CHECK(right == x);
            for (const auto& b : forests) {
                auto y = HopfElement::basis_element(Basis::E, b);
                CHECK(coproduct(product(x, y)) == product(coproduct(x), coproduct(y)));
            }
        }
    }

    TEST_CASE("coproduct through E in other bases") {
        for (const auto& f : small_leaning(2))
            for (Basis basis : {Basis::F, Basis::H}) {
                auto x = HopfElement::basis_element(basis, f);
                auto direct = coproduct(change_basis(x, Basis::E));
                CHECK(map_tensor(coproduct_via_E(x), Basis::E) == direct);
            }
    }

    TEST_CASE("noncommutative symmetric functions") {
        CHECK(render(composition_forest({2, 1})) == "3:(a1(a1(*)),a1(*),*)");
        CHECK(forest_composition(T("3:(a1(a1(*)),a1(*),*)")) == std::vector<int>{2, 1});
        CHECK(forest_composition(T("0:()")).empty());
        CHECK(compositions(4).size() == 8);
        CHECK(compositions(0).size() == 1);
        for (int n = 1; n <= 5; ++n)
            for (const auto& c : compositions(n)) CHECK(forest_composition(composition_forest(c)) == c);
        auto report = ncsf_check(5);
        CHECK(report.checks > 0);
        CHECK_MESSAGE(report.ok(), (report.messages.empty() ? std::string() : report.messages.front()));
    }
}
