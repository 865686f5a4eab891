#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "windlass/leaning.hpp"

namespace windlass {

using Rational = boost::multiprecision::cpp_rational;

enum class Basis { E, F, H };

char basis_name(Basis b);
Basis parse_basis(const std::string& text);

// Finite linear combination of leaning forests in one basis, keyed by
// canonical forest text; zero coefficients are never stored.
class HopfElement {
public:
    struct Entry {
        Term forest;
        Rational coeff;
    };

    explicit HopfElement(Basis b = Basis::E) : basis_(b) {}
    static HopfElement basis_element(Basis b, const Term& f);
    // Basis element indexed by the empty forest 0:().
    static HopfElement unit(Basis b);

    Basis basis() const { return basis_; }
    const std::map<std::string, Entry>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Term& f) const;

    void add(const Term& f, const Rational& c);
    HopfElement& operator+=(const HopfElement& o);
    HopfElement& operator-=(const HopfElement& o);
    HopfElement& operator*=(const Rational& c);

    friend bool operator==(const HopfElement& a, const HopfElement& b);
    std::string to_string() const;

private:
    Basis basis_;
    std::map<std::string, Entry> terms_;
};

HopfElement operator+(HopfElement a, const HopfElement& b);
HopfElement operator-(HopfElement a, const HopfElement& b);
HopfElement operator*(const Rational& c, HopfElement a);

// E: E_{f1 over f2}; F: sum of F_f over [f1 over f2, f1 under f2];
// H: H_{f1 under f2}. Throws on a basis mismatch.
HopfElement product(const HopfElement& a, const HopfElement& b);

// Element of a tensor square, keyed by (left text, right text).
class Tensor {
public:
    struct Entry {
        Term left;
        Term right;
        Rational coeff;
    };

    explicit Tensor(Basis b = Basis::E) : basis_(b) {}
    Basis basis() const { return basis_; }
    const std::map<std::pair<std::string, std::string>, Entry>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    void add(const Term& left, const Term& right, const Rational& c);
    Tensor& operator+=(const Tensor& o);
    friend bool operator==(const Tensor& a, const Tensor& b);
    std::string to_string() const;

private:
    Basis basis_;
    std::map<std::pair<std::string, std::string>, Entry> terms_;
};

// Componentwise product (a1 x a2)(b1 x b2) = a1 b1 x a2 b2.
Tensor product(const Tensor& a, const Tensor& b);

// Sum over admissible pairs (I1, I2) of E_{f|I1} x E_{f|I2}.
Tensor coproduct_E(const Term& f);
// Linear extension of coproduct_E; a must be in the E basis.
Tensor coproduct(const HopfElement& a);
// Workaround for F and H: converts to E, applies coproduct_E and converts
// both tensor factors back. No closed formula is claimed.
Tensor coproduct_via_E(const HopfElement& a);
// 1 on E_{0:()}, 0 on every other E basis element.
Rational counit(const HopfElement& a);

HopfElement change_basis(const HopfElement& a, Basis target);

// Composition (r1, ..., rk) <-> n:(a1^r1(*), ..., a1^rk(*), *, ..., *).
Term composition_forest(const std::vector<int>& parts);
std::vector<int> forest_composition(const Term& f);
std::vector<std::vector<int>> compositions(int weight);

struct NcsfReport {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;
    bool ok() const { return failures == 0; }
};

// Checks the E, F and H product rules on every pair of compositions with
// total weight <= max_n and the coproduct split of every E_(r), r <= max_n.
NcsfReport ncsf_check(int max_n);

}  // namespace windlass
