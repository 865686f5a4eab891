#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "windlass/error.hpp"
#include "windlass/figures.hpp"
#include "windlass/forest.hpp"
#include "windlass/hopf.hpp"
#include "windlass/io.hpp"
#include "windlass/leaning.hpp"
#include "windlass/order.hpp"
#include "windlass/poset.hpp"
#include "windlass/shell.hpp"
#include "windlass/tilt.hpp"

using namespace windlass;

namespace {

struct Options {
    std::string signature_file;
    int a_max = 9;
    bool naturals = false;
    std::string format = "text";
    bool count_only = false;
    bool verify = false;
};

class VerifyFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Signature make_signature(const Options& o) {
    Signature sig;
    if (!o.signature_file.empty()) {
        std::ifstream in(o.signature_file);
        if (!in) throw std::invalid_argument("cannot read signature file " + o.signature_file);
        std::stringstream ss;
        ss << in.rdbuf();
        sig = Signature::from_json(ss.str());
    } else {
        sig = Signature::a_family(o.a_max);
    }
    if (o.naturals) sig.set_naturals(true);
    return sig;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw VerifyFailed("verify failed: " + what);
}

// The covers of p agree with the transitive reduction of leq on its elements.
void verify_covers(const Poset& p) {
    Poset q = poset_from_elements(p.elements);
    check(q.texts == p.texts && q.covers == p.covers, "covers differ from the transitive reduction of leq");
}

void emit_poset(const Options& o, const Poset& p, const std::string& name = "poset") {
    if (o.verify) verify_covers(p);
    if (o.count_only) {
        std::cout << p.size() << "\n";
        return;
    }
    if (o.format == "dot")
        std::cout << to_dot(p, name);
    else if (o.format == "json")
        std::cout << to_json(p);
    else
        std::cout << to_text(p);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A JSON file path or an inline forest taken as a basis element of b.
HopfElement hopf_operand(const std::string& arg, Basis b, const Signature& sig) {
    if (std::filesystem::is_regular_file(arg)) return hopf_from_json(read_file(arg), sig);
    return HopfElement::basis_element(b, parse_forest(arg, sig));
}

void emit_hopf(const Options& o, const HopfElement& a) {
    if (o.format == "json")
        std::cout << to_json(a);
    else
        std::cout << a.to_string() << "\n";
}

void emit_tensor(const Options& o, const Tensor& t) {
    if (o.format == "json")
        std::cout << to_json(t);
    else
        std::cout << t.to_string() << "\n";
}

DecorationWord parse_word(std::string text, const Signature& sig) {
    for (auto& ch : text)
        if (ch == ',') ch = ' ';
    DecorationWord w;
    std::istringstream is(text);
    std::string name;
    while (is >> name) {
        auto ar = sig.arity_of(name);
        if (!ar) throw ParseError(ParseError::Kind::UnknownGenerator, 0, "unknown generator '" + name + "'");
        w.push_back(Token{intern(name), *ar});
    }
    return w;
}

// (counit x id) and (id x counit) of the coproduct both give back x.
void verify_counit(const HopfElement& x, const Tensor& t) {
    HopfElement l(t.basis()), r(t.basis());
    const Term empty = forest_corolla(0);
    for (const auto& [key, e] : t.terms()) {
        l.add(e.right, e.coeff * counit(HopfElement::basis_element(t.basis(), e.left)));
        r.add(e.left, e.coeff * counit(HopfElement::basis_element(t.basis(), e.right)));
    }
    check(l == x && r == x, "counit identities fail");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Easterly wind posets on operadic terms and the natural Hopf algebra of leaning forests"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--signature", o.signature_file, "JSON signature file (default: a0 .. a<a-max>)");
    app.add_option("--a-max", o.a_max, "Largest index of the built-in a_k generators")->capture_default_str();
    app.add_flag("--naturals", o.naturals, "Allow natural-number decorations at every node");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"dot", "json", "text"}))
        ->capture_default_str();
    app.add_flag("--count-only", o.count_only, "Print only the number of elements");
    app.add_flag("--verify", o.verify, "Run the matching brute-force oracle and fail on mismatch");

    std::string term, lo, hi, tilt_text = "all", word, basis = "E", target = "F", left, right, elem;
    int m = 1, n = 3, fig = 0, max_n = 8;
    bool as_forest = false, via_e = false;

    auto* parse_cmd = app.add_subcommand("parse", "Parse a term and print its invariants");
    parse_cmd->add_option("--term,term", term, "Term text")->required();
    parse_cmd->add_flag("--forest", as_forest, "Parse as a forest (natural root)");

    auto* poset_cmd = app.add_subcommand("poset", "Easterly wind poset (upper set) of a term");
    poset_cmd->add_option("--term,term", term, "Term text")->required();

    auto* tilted_cmd = app.add_subcommand("tilted-poset", "Tilted easterly wind poset of a term");
    tilted_cmd->add_option("--term,term", term, "Term text")->required();
    tilted_cmd->add_option("--tilt", tilt_text, "Tilt set: all or a comma-separated index list")->capture_default_str();

    auto* interval_cmd = app.add_subcommand("interval", "Order interval [lo, hi]");
    interval_cmd->add_option("--lo", lo, "Lower term")->required();
    interval_cmd->add_option("--hi", hi, "Upper term")->required();

    auto* join_cmd = app.add_subcommand("join", "Join of two terms");
    join_cmd->add_option("--left", left, "First term")->required();
    join_cmd->add_option("--right", right, "Second term")->required();

    auto* mobius_cmd = app.add_subcommand("mobius", "Moebius function value mu(lo, hi)");
    mobius_cmd->add_option("--lo", lo, "Lower term")->required();
    mobius_cmd->add_option("--hi", hi, "Upper term")->required();
    mobius_cmd->add_option("--tilt", tilt_text, "Tilt set for the tilted poset (empty: untilted)");

    auto* el_cmd = app.add_subcommand("el-check", "Check the EL-labeling on the poset of a term");
    el_cmd->add_option("--term,term", term, "Term text")->required();

    auto* fc_cmd = app.add_subcommand("fuss-catalan", "m-Fuss-Catalan poset of order n");
    fc_cmd->add_option("-m", m, "Fuss parameter")->required();
    fc_cmd->add_option("-n", n, "Order")->required();

    auto* tamari_cmd = app.add_subcommand("tamari-check", "Rooted-tree poset against the Tamari order");
    tamari_cmd->add_option("-n", n, "Order")->required();

    auto* leaning_cmd = app.add_subcommand("leaning-poset", "Leaning forest poset of a word");
    leaning_cmd->add_option("--word,word", word, "Generators separated by spaces or commas")->required();

    auto* hopf_cmd = app.add_subcommand("hopf", "Natural Hopf algebra of leaning forests");
    hopf_cmd->require_subcommand(1);
    hopf_cmd->fallthrough();
    auto* prod_cmd = hopf_cmd->add_subcommand("product", "Product of two elements");
    prod_cmd->add_option("-b,--basis", basis, "Basis of inline operands")->check(CLI::IsMember({"E", "F", "H"}));
    prod_cmd->add_option("--left", left, "Forest text or JSON file")->required();
    prod_cmd->add_option("--right", right, "Forest text or JSON file")->required();
    auto* coprod_cmd = hopf_cmd->add_subcommand("coproduct", "Coproduct of an element");
    coprod_cmd->add_option("-b,--basis", basis, "Basis of an inline operand")->check(CLI::IsMember({"E", "F", "H"}));
    coprod_cmd->add_option("--elem,elem", elem, "Forest text or JSON file")->required();
    coprod_cmd->add_flag("--via-e", via_e, "Allow F and H operands by converting through the E basis");
    auto* cb_cmd = hopf_cmd->add_subcommand("change-basis", "Express an element in another basis");
    cb_cmd->add_option("-b,--basis", basis, "Basis of an inline operand")->check(CLI::IsMember({"E", "F", "H"}));
    cb_cmd->add_option("--to", target, "Target basis")->check(CLI::IsMember({"E", "F", "H"}))->required();
    cb_cmd->add_option("--elem,elem", elem, "Forest text or JSON file")->required();
    auto* ncsf_cmd = hopf_cmd->add_subcommand("ncsf-check", "Check the specialization to compositions");
    ncsf_cmd->add_option("--max-n", max_n, "Largest total weight")->capture_default_str();

    auto* fig_cmd = app.add_subcommand("figure", "Regenerate a reference figure");
    fig_cmd->add_option("--figure,figure", fig, "Figure number, 1 to 6")->required()->check(CLI::Range(1, 6));

    CLI11_PARSE(app, argc, argv);

    try {
        const Signature sig = make_signature(o);
        // A leading digit marks a forest operand.
        auto term_arg = [&](const std::string& text) {
            auto start = text.find_first_not_of(" \t");
            bool forest = start != std::string::npos && std::isdigit(static_cast<unsigned char>(text[start]));
            return forest ? parse_forest(text, sig) : parse_term(text, sig);
        };

        if (*parse_cmd) {
            Term t = as_forest ? parse_forest(term, sig) : term_arg(term);
            std::cout << "term: " << render(t) << "\n"
                      << "degree: " << t.degree() << "\n"
                      << "arity: " << t.arity() << "\n"
                      << "word: " << render_word(t.decoration_word()) << "\n";
            std::cout << "connection:";
            for (const auto& d : connection_word(t)) std::cout << " " << d.to_string();
            std::cout << "\n";
            if (o.verify) {
                check(term_from_connection(t.decoration_word(), connection_word(t)) == t,
                      "connection word does not decode to the term");
                check(term_arg(render(t)) == t || as_forest, "rendered text does not parse back");
            }
        } else if (*poset_cmd) {
            emit_poset(o, upper_set(term_arg(term)));
        } else if (*tilted_cmd) {
            TiltSet x = TiltSet::parse(tilt_text);
            Term t = term_arg(term);
            Poset p = tilted_upper_set(x, t);
            if (o.verify)
                for (const auto& e : p.elements) check(is_tilted(x, e), render(e) + " is not tilted");
            emit_poset(o, p);
        } else if (*interval_cmd) {
            Term a = term_arg(lo), b = term_arg(hi);
            if (!leq(a, b)) throw std::invalid_argument("interval: lo is not below hi");
            Poset p = upper_set(a);
            emit_poset(o, interval(p, p.at(a), p.at(b)));
        } else if (*join_cmd) {
            Term a = term_arg(left), b = term_arg(right);
            Term j = join(a, b);
            if (o.verify) {
                // Least element of the common upper set, found by enumeration.
                Poset p = upper_set(a);
                Comparability c(p);
                int least = -1;
                for (int i : c.linear_extension())
                    if (leq(b, p.elements[static_cast<std::size_t>(i)])) {
                        least = i;
                        break;
                    }
                check(least >= 0 && p.elements[static_cast<std::size_t>(least)] == j, "join is not the least upper bound");
                for (int i = 0; i < p.size(); ++i)
                    if (leq(b, p.elements[static_cast<std::size_t>(i)]))
                        check(c.leq(least, i), "upper bounds have no least element");
            }
            std::cout << render(j) << "\n";
        } else if (*mobius_cmd) {
            Term a = term_arg(lo), b = term_arg(hi);
            std::int64_t mu;
            if (tilt_text.empty() || mobius_cmd->count("--tilt") == 0) {
                mu = mobius(upper_set(a), a, b);
            } else {
                TiltSet x = TiltSet::parse(tilt_text);
                mu = mobius(tilted_upper_set(x, a), a, b);
                if (o.verify) check(mobius_tilted_crapo(x, a, b) == mu, "closure formula disagrees");
            }
            std::cout << mu << "\n";
        } else if (*el_cmd) {
            Poset p = upper_set(term_arg(term));
            ElReport r = el_check(p);
            std::cout << "pairs: " << r.pairs << "\nfailures: " << r.failures
                      << "\nmax weakly decreasing chains: " << r.max_decreasing << "\n";
            for (const auto& msg : r.messages) std::cout << msg << "\n";
            if (!r.ok()) return 1;
        } else if (*fc_cmd) {
            Poset p = fuss_catalan_poset(m, n);
            if (o.verify) {
                check(static_cast<unsigned long long>(p.size()) == fuss_catalan_number(m, n),
                      "element count differs from the Fuss-Catalan number");
                if (m >= 1)
                    for (const auto& f : p.elements) {
                        auto r = if_inverse(f, m);
                        check(if_map(r) == f, "if does not invert on " + render(f));
                    }
            }
            emit_poset(o, p, "fuss_catalan");
        } else if (*tamari_cmd) {
            Poset p = rooted_tree_poset(n);
            Comparability c(p);
            std::size_t pairs = 0, bad = 0;
            for (int a = 0; a < p.size(); ++a)
                for (int b = 0; b < p.size(); ++b) {
                    ++pairs;
                    bool ours = c.leq(a, b);
                    bool tam = tamari_leq(rt(p.elements[static_cast<std::size_t>(a)]),
                                          rt(p.elements[static_cast<std::size_t>(b)]));
                    if (ours != tam) ++bad;
                }
            std::cout << "elements: " << p.size() << "\ncovers: " << p.cover_count() << "\npairs: " << pairs
                      << "\nmismatches: " << bad << "\n";
            if (bad) return 1;
        } else if (*leaning_cmd) {
            emit_poset(o, leaning_poset(parse_word(word, sig)), "leaning");
        } else if (*hopf_cmd) {
            Basis b = parse_basis(basis);
            if (*prod_cmd) {
                HopfElement x = hopf_operand(left, b, sig), y = hopf_operand(right, b, sig);
                HopfElement r = product(x, y);
                if (o.verify) {
                    HopfElement viaE = change_basis(
                        product(change_basis(x, Basis::E), change_basis(y, Basis::E)), x.basis());
                    check(viaE == r, "product disagrees with the E-basis product after basis change");
                }
                emit_hopf(o, r);
            } else if (*coprod_cmd) {
                HopfElement x = hopf_operand(elem, b, sig);
                if (x.basis() != Basis::E && !via_e)
                    throw std::invalid_argument("coproduct: only the E basis has a formula; pass --via-e");
                Tensor t = x.basis() == Basis::E ? coproduct(x) : coproduct_via_E(x);
                if (o.verify) verify_counit(x, t);
                emit_tensor(o, t);
            } else if (*cb_cmd) {
                HopfElement x = hopf_operand(elem, b, sig);
                HopfElement r = change_basis(x, parse_basis(target));
                if (o.verify) check(change_basis(r, x.basis()) == x, "basis change does not round trip");
                emit_hopf(o, r);
            } else if (*ncsf_cmd) {
                NcsfReport r = ncsf_check(max_n);
                std::cout << "checks: " << r.checks << "\nfailures: " << r.failures << "\n";
                for (const auto& msg : r.messages) std::cout << msg << "\n";
                if (!r.ok()) return 1;
            }
        } else if (*fig_cmd) {
            for (const auto& panel : figure(fig)) emit_poset(o, panel.poset, panel.name);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const CeilingExceeded& e) {
        std::cerr << "ceiling exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 70;
    } catch (const VerifyFailed& e) {
        std::cerr << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
