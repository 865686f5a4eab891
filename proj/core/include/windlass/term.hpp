#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windlass/symbol.hpp"

namespace windlass {

// One preorder position of a term: a leaf (sym == kLeafSymbol) or an
// internal node with its decoration and arity.
struct Token {
    SymbolId sym = kLeafSymbol;
    std::int32_t arity = 0;

    bool is_leaf() const { return sym == kLeafSymbol; }
    friend bool operator==(const Token&, const Token&) = default;
    friend auto operator<=>(const Token&, const Token&) = default;
};

using DecorationWord = std::vector<Token>;

class Signature {
public:
    Signature() = default;

    // Generators named a0, a1, ... with arity(a_i) = i, for i <= max_index.
    static Signature a_family(int max_index);
    // Natural-number decorations at every node (the signature N).
    static Signature natural_numbers();
    // JSON array of {"name","arity"} objects and optional {"builtin_a_family_max"}.
    static Signature from_json(std::string_view text);

    void add(const std::string& name, int arity);
    void set_a_family_max(int max_index) { a_max_ = max_index; }
    void set_naturals(bool on) { naturals_ = on; }

    int a_family_max() const { return a_max_; }
    bool naturals() const { return naturals_; }
    std::optional<int> arity_of(std::string_view name) const;
    bool admits(const Token& t) const;
    std::vector<Token> generators() const;

private:
    std::vector<std::pair<std::string, int>> gens_;
    int a_max_ = -1;
    bool naturals_ = false;
};

struct Edge {
    int parent = 0;
    int position = 0;
    int child = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Decorated ordered rooted tree stored as its preorder token sequence.
class Term {
public:
    Term() : toks_{Token{}} {}
    explicit Term(std::vector<Token> toks);

    static Term leaf() { return Term(); }
    static Term node(SymbolId sym, std::vector<Term> children);
    static Term corolla(SymbolId sym, int arity);

    const std::vector<Token>& tokens() const { return toks_; }
    bool is_leaf() const { return toks_.size() == 1 && toks_[0].is_leaf(); }
    const Token& root() const { return toks_[0]; }
    int degree() const;
    int arity() const;

    // End (one past) of the subterm starting at token position pos.
    std::size_t subterm_end(std::size_t pos) const;
    Term subterm(std::size_t pos) const;
    std::vector<Term> children() const;
    // Token positions of the internal nodes, in preorder.
    std::vector<std::size_t> node_positions() const;
    DecorationWord decoration_word() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term& a, const Term& b) { return a.toks_ <=> b.toks_; }

private:
    std::vector<Token> toks_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept;
};

struct Structure {
    int degree = 0;
    int arity = 0;
    DecorationWord decoration_word;
    std::vector<Edge> edges;          // edges[i - 1] is the parent edge of node i
    std::vector<int> extreme_leaves;  // 1-based leaf ranks
};

Structure structure(const Term& t);
std::vector<Edge> parent_edges(const Term& t);

Term parse_term(std::string_view text, const Signature& sig);
// Same grammar; the root must carry a natural-number decoration.
Term parse_forest(std::string_view text, const Signature& sig);
std::string render(const Term& t);
std::string render_word(const DecorationWord& w);
void validate(const Term& t, const Signature& sig);

Term contraction(const Term& t);
std::vector<int> scope_sequence(const Term& t);
Term full_composition(const Term& t, const std::vector<Term>& args);
// Every term of the given degree whose decorations are drawn from gens.
std::vector<Term> all_terms(const std::vector<Token>& gens, int degree);

}  // namespace windlass
