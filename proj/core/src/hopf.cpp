#include "windlass/hopf.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "windlass/shell.hpp"
#include "windlass/tilt.hpp"

namespace windlass {

namespace {

std::string rational_text(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

// Leaning posets keyed by decoration word, built once per operation.
class PosetCache {
public:
    struct Entry {
        explicit Entry(Poset q) : p(std::move(q)), c(p) {}
        Poset p;
        Comparability c;
    };

    const Entry& of(const Term& f) {
        auto w = forest_word(f);
        auto key = render_word(w);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, std::make_unique<Entry>(leaning_poset(w))).first;
        return *it->second;
    }

private:
    std::map<std::string, std::unique_ptr<Entry>> cache_;
};

HopfElement to_f(const HopfElement& a, PosetCache& cache) {
    if (a.basis() == Basis::F) return a;
    HopfElement out(Basis::F);
    for (const auto& [key, e] : a.terms()) {
        const auto& pc = cache.of(e.forest);
        int x = pc.p.at(e.forest);
        // E_f sums F over the upper set of f, H_f over its lower set.
        const auto& reach = a.basis() == Basis::E ? pc.c.up(x) : pc.c.down(x);
        for (auto y = reach.find_first(); y != boost::dynamic_bitset<>::npos; y = reach.find_next(y))
            out.add(pc.p.elements[y], e.coeff);
    }
    return out;
}

HopfElement from_f(const HopfElement& a, Basis target, PosetCache& cache) {
    if (target == Basis::F) return a;
    HopfElement out(target);
    for (const auto& [key, e] : a.terms()) {
        const auto& pc = cache.of(e.forest);
        int x = pc.p.at(e.forest);
        auto mu = target == Basis::E ? mobius_row(pc.p, pc.c, x) : mobius_column(pc.p, pc.c, x);
        for (std::size_t y = 0; y < mu.size(); ++y)
            if (mu[y] != 0) out.add(pc.p.elements[y], e.coeff * Rational(mu[y]));
    }
    return out;
}

void require_basis_forest(const Term& f) {
    if (!is_leaning(f)) throw std::invalid_argument("hopf: " + render(f) + " is not a leaning forest");
}

HopfElement product_of_basis(Basis b, const Term& f1, const Term& f2) {
    HopfElement out(b);
    switch (b) {
        case Basis::E:
            out.add(over(f1, f2), 1);
            break;
        case Basis::H:
            out.add(under(f1, f2), 1);
            break;
        case Basis::F:
            for (const auto& f : shuffle_interval(f1, f2)) out.add(f, 1);
            break;
    }
    return out;
}

}  // namespace

char basis_name(Basis b) {
    switch (b) {
        case Basis::E: return 'E';
        case Basis::F: return 'F';
        case Basis::H: return 'H';
    }
    return '?';
}

Basis parse_basis(const std::string& text) {
    if (text == "E") return Basis::E;
    if (text == "F") return Basis::F;
    if (text == "H") return Basis::H;
    throw std::invalid_argument("unknown basis '" + text + "' (expected E, F or H)");
}

HopfElement HopfElement::basis_element(Basis b, const Term& f) {
    HopfElement out(b);
    out.add(f, 1);
    return out;
}

HopfElement HopfElement::unit(Basis b) { return basis_element(b, forest_corolla(0)); }

Rational HopfElement::coefficient(const Term& f) const {
    auto it = terms_.find(render(f));
    return it == terms_.end() ? Rational(0) : it->second.coeff;
}

void HopfElement::add(const Term& f, const Rational& c) {
    if (c == 0) return;
    require_basis_forest(f);
    auto key = render(f);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Entry{f, c});
        return;
    }
    it->second.coeff += c;
    if (it->second.coeff == 0) terms_.erase(it);
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
    if (o.basis_ != basis_) throw std::invalid_argument("hopf: basis mismatch in sum");
    for (const auto& [key, e] : o.terms_) add(e.forest, e.coeff);
    return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
    if (o.basis_ != basis_) throw std::invalid_argument("hopf: basis mismatch in difference");
    for (const auto& [key, e] : o.terms_) add(e.forest, -e.coeff);
    return *this;
}

HopfElement& HopfElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, e] : terms_) e.coeff *= c;
    return *this;
}

bool operator==(const HopfElement& a, const HopfElement& b) {
    if (a.basis_ != b.basis_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second.coeff != j->second.coeff) return false;
    return true;
}

std::string HopfElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, e] : terms_) {
        Rational c = e.coeff;
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (c < 0) c = -c;
        if (c != 1) out += rational_text(c) + " ";
        out += std::string(1, basis_name(basis_)) + "[" + key + "]";
        first = false;
    }
    return out;
}

HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
HopfElement operator*(const Rational& c, HopfElement a) { return a *= c; }

HopfElement product(const HopfElement& a, const HopfElement& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("hopf: product of elements in different bases");
    HopfElement out(a.basis());
    for (const auto& [k1, e1] : a.terms())
        for (const auto& [k2, e2] : b.terms()) {
            HopfElement t = product_of_basis(a.basis(), e1.forest, e2.forest);
            out += (e1.coeff * e2.coeff) * t;
        }
    return out;
}

void Tensor::add(const Term& left, const Term& right, const Rational& c) {
    if (c == 0) return;
    require_basis_forest(left);
    require_basis_forest(right);
    auto key = std::make_pair(render(left), render(right));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Entry{left, right, c});
        return;
    }
    it->second.coeff += c;
    if (it->second.coeff == 0) terms_.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (o.basis_ != basis_) throw std::invalid_argument("hopf: basis mismatch in tensor sum");
    for (const auto& [key, e] : o.terms_) add(e.left, e.right, e.coeff);
    return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.basis_ != b.basis_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second.coeff != j->second.coeff) return false;
    return true;
}

std::string Tensor::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const std::string b(1, basis_name(basis_));
    bool first = true;
    for (const auto& [key, e] : terms_) {
        Rational c = e.coeff;
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (c < 0) c = -c;
        if (c != 1) out += rational_text(c) + " ";
        out += b + "[" + key.first + "] x " + b + "[" + key.second + "]";
        first = false;
    }
    return out;
}

Tensor product(const Tensor& a, const Tensor& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("hopf: tensor product of different bases");
    Tensor out(a.basis());
    for (const auto& [k1, e1] : a.terms())
        for (const auto& [k2, e2] : b.terms()) {
            HopfElement l = product_of_basis(a.basis(), e1.left, e2.left);
            HopfElement r = product_of_basis(a.basis(), e1.right, e2.right);
            for (const auto& [kl, el] : l.terms())
                for (const auto& [kr, er] : r.terms())
                    out.add(el.forest, er.forest, e1.coeff * e2.coeff * el.coeff * er.coeff);
        }
    return out;
}

Tensor coproduct_E(const Term& f) {
    Tensor out(Basis::E);
    for (const auto& [i1, i2] : admissible_pairs(f)) out.add(restriction(f, i1), restriction(f, i2), 1);
    return out;
}

Tensor coproduct(const HopfElement& a) {
    if (a.basis() != Basis::E) throw std::invalid_argument("hopf: coproduct is defined on the E basis");
    Tensor out(Basis::E);
    for (const auto& [key, e] : a.terms()) {
        Tensor d = coproduct_E(e.forest);
        for (const auto& [k, t] : d.terms()) out.add(t.left, t.right, e.coeff * t.coeff);
    }
    return out;
}

Tensor coproduct_via_E(const HopfElement& a) {
    Tensor out(a.basis());
    PosetCache cache;
    Tensor d = coproduct(change_basis(a, Basis::E));
    for (const auto& [k, t] : d.terms()) {
        auto l = from_f(to_f(HopfElement::basis_element(Basis::E, t.left), cache), a.basis(), cache);
        auto r = from_f(to_f(HopfElement::basis_element(Basis::E, t.right), cache), a.basis(), cache);
        for (const auto& [kl, el] : l.terms())
            for (const auto& [kr, er] : r.terms()) out.add(el.forest, er.forest, t.coeff * el.coeff * er.coeff);
    }
    return out;
}

Rational counit(const HopfElement& a) {
    return change_basis(a, Basis::E).coefficient(forest_corolla(0));
}

HopfElement change_basis(const HopfElement& a, Basis target) {
    if (a.basis() == target) return a;
    PosetCache cache;
    return from_f(to_f(a, cache), target, cache);
}

Term composition_forest(const std::vector<int>& parts) {
    std::vector<Term> word;
    for (int r : parts) {
        if (r < 1) throw std::invalid_argument("composition_forest: parts must be positive");
        Term t = Term::leaf();
        for (int j = 0; j < r; ++j) t = Term::node(a_symbol(1), {t});
        word.push_back(std::move(t));
    }
    return leaning_from_word(word);
}

std::vector<int> forest_composition(const Term& f) {
    if (!is_leaning(f)) throw std::invalid_argument("forest_composition: " + render(f) + " is not leaning");
    const Token a1{a_symbol(1), 1};
    std::vector<int> parts;
    for (const auto& c : f.children()) {
        if (c.is_leaf()) continue;
        const auto& toks = c.tokens();
        for (std::size_t p = 0; p + 1 < toks.size(); ++p)
            if (toks[p] != a1)
                throw std::invalid_argument("forest_composition: " + render(f) + " is not a forest of a1 chains");
        parts.push_back(static_cast<int>(toks.size()) - 1);
    }
    return parts;
}

std::vector<std::vector<int>> compositions(int weight) {
    if (weight < 0) throw std::invalid_argument("compositions: negative weight");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int r = 1; r <= left; ++r) {
            cur.push_back(r);
            self(self, left - r);
            cur.pop_back();
        }
    };
    rec(rec, weight);
    return out;
}

NcsfReport ncsf_check(int max_n) {
    NcsfReport rep;
    auto text = [](const std::vector<int>& r) {
        std::string s = "(";
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
        return s + ")";
    };
    auto expect = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) {
            ++rep.failures;
            rep.messages.push_back(what);
        }
    };
    auto elem = [](Basis b, const std::vector<int>& r) {
        return HopfElement::basis_element(b, composition_forest(r));
    };
    for (int w = 0; w <= max_n; ++w)
        for (int a = 0; a <= w; ++a)
            for (const auto& r : compositions(a))
                for (const auto& s : compositions(w - a)) {
                    std::vector<int> cat = r;
                    cat.insert(cat.end(), s.begin(), s.end());
                    std::vector<int> fused = cat;
                    if (!r.empty() && !s.empty()) {
                        fused = r;
                        fused.back() += s.front();
                        fused.insert(fused.end(), s.begin() + 1, s.end());
                    }
                    const std::string pair = text(r) + " * " + text(s);
                    expect(product(elem(Basis::E, r), elem(Basis::E, s)) == elem(Basis::E, cat), "E " + pair);
                    HopfElement f_expected = elem(Basis::F, cat);
                    if (fused != cat) f_expected += elem(Basis::F, fused);
                    expect(product(elem(Basis::F, r), elem(Basis::F, s)) == f_expected, "F " + pair);
                    expect(product(elem(Basis::H, r), elem(Basis::H, s)) == elem(Basis::H, fused), "H " + pair);
                }
    for (int r = 0; r <= max_n; ++r) {
        Tensor expected(Basis::E);
        for (int i = 0; i <= r; ++i) {
            std::vector<int> left, right;
            if (i > 0) left.push_back(i);
            if (r - i > 0) right.push_back(r - i);
            expected.add(composition_forest(left), composition_forest(right), 1);
        }
        std::vector<int> single;
        if (r > 0) single.push_back(r);
        expect(coproduct_E(composition_forest(single)) == expected, "coproduct E" + text(single));
    }
    return rep;
}

}  // namespace windlass
