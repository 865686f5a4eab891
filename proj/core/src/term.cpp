#include "windlass/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "windlass/error.hpp"

namespace windlass {

namespace {

std::optional<int> a_index(std::string_view name) {
    if (name.size() < 2 || name[0] != 'a') return std::nullopt;
    if (name.size() > 2 && name[1] == '0') return std::nullopt;
    int v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        if (v > 1000000) return std::nullopt;
        v = v * 10 + (name[i] - '0');
    }
    return v;
}

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!std::isalpha(head) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

// ---------------------------------------------------------------- Signature

Signature Signature::a_family(int max_index) {
    Signature s;
    s.a_max_ = max_index;
    return s;
}

Signature Signature::natural_numbers() {
    Signature s;
    s.naturals_ = true;
    return s;
}

Signature Signature::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseError::Kind::Syntax, 0, std::string("signature: ") + e.what());
    }
    if (!j.is_array())
        throw ParseError(ParseError::Kind::Syntax, 0, "signature: expected a JSON array");
    Signature s;
    for (const auto& item : j) {
        if (!item.is_object())
            throw ParseError(ParseError::Kind::Syntax, 0, "signature: expected objects");
        if (item.contains("builtin_a_family_max")) {
            s.a_max_ = item.at("builtin_a_family_max").get<int>();
            continue;
        }
        if (!item.contains("name") || !item.contains("arity"))
            throw ParseError(ParseError::Kind::Syntax, 0, "signature: entry needs name and arity");
        s.add(item.at("name").get<std::string>(), item.at("arity").get<int>());
    }
    return s;
}

void Signature::add(const std::string& name, int arity) {
    if (!valid_name(name)) throw std::invalid_argument("invalid generator name '" + name + "'");
    if (arity < 0) throw std::invalid_argument("negative arity for '" + name + "'");
    if (is_reserved_name(name))
        throw std::invalid_argument("generator name '" + name + "' is reserved");
    for (const auto& [n, a] : gens_)
        if (n == name) throw std::invalid_argument("duplicate generator '" + name + "'");
    if (auto k = a_index(name); k && *k <= a_max_ && *k != arity)
        throw std::invalid_argument("generator '" + name + "' clashes with the a-family");
    gens_.emplace_back(name, arity);
}

std::optional<int> Signature::arity_of(std::string_view name) const {
    for (const auto& [n, a] : gens_)
        if (n == name) return a;
    if (auto k = a_index(name); k && *k <= a_max_) return *k;
    return std::nullopt;
}

bool Signature::admits(const Token& t) const {
    if (t.is_leaf()) return true;
    if (auto v = nat_value(t.sym)) return naturals_ && *v == t.arity;
    auto a = arity_of(symbol_name(t.sym));
    return a && *a == t.arity;
}

std::vector<Token> Signature::generators() const {
    std::map<std::string, Token> out;
    for (const auto& [n, a] : gens_) out[n] = Token{intern(n), a};
    for (int k = 0; k <= a_max_; ++k) out["a" + std::to_string(k)] = Token{a_symbol(k), k};
    std::vector<Token> v;
    for (auto& [n, t] : out) v.push_back(t);
    return v;
}

// --------------------------------------------------------------------- Term

Term::Term(std::vector<Token> toks) : toks_(std::move(toks)) {
    std::size_t need = 1;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
        if (need == 0) throw std::invalid_argument("token sequence has trailing tokens");
        if (toks_[i].arity < 0) throw std::invalid_argument("negative arity");
        if (toks_[i].is_leaf() && toks_[i].arity != 0)
            throw std::invalid_argument("leaf with nonzero arity");
        need = need - 1 + static_cast<std::size_t>(toks_[i].arity);
    }
    if (need != 0) throw std::invalid_argument("token sequence is incomplete");
}

Term Term::node(SymbolId sym, std::vector<Term> children) {
    std::vector<Token> toks;
    toks.push_back(Token{sym, static_cast<std::int32_t>(children.size())});
    for (const auto& c : children) toks.insert(toks.end(), c.toks_.begin(), c.toks_.end());
    Term t;
    t.toks_ = std::move(toks);
    return t;
}

Term Term::corolla(SymbolId sym, int arity) {
    return node(sym, std::vector<Term>(static_cast<std::size_t>(arity)));
}

int Term::degree() const {
    return static_cast<int>(std::count_if(toks_.begin(), toks_.end(),
                                          [](const Token& t) { return !t.is_leaf(); }));
}

int Term::arity() const { return static_cast<int>(toks_.size()) - degree(); }

std::size_t Term::subterm_end(std::size_t pos) const {
    std::size_t need = 1;
    while (need > 0) {
        need = need - 1 + static_cast<std::size_t>(toks_[pos].arity);
        ++pos;
    }
    return pos;
}

Term Term::subterm(std::size_t pos) const {
    Term t;
    t.toks_.assign(toks_.begin() + static_cast<std::ptrdiff_t>(pos),
                   toks_.begin() + static_cast<std::ptrdiff_t>(subterm_end(pos)));
    return t;
}

std::vector<Term> Term::children() const {
    std::vector<Term> out;
    std::size_t p = 1;
    for (int j = 0; j < toks_[0].arity; ++j) {
        out.push_back(subterm(p));
        p = subterm_end(p);
    }
    return out;
}

std::vector<std::size_t> Term::node_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < toks_.size(); ++i)
        if (!toks_[i].is_leaf()) out.push_back(i);
    return out;
}

DecorationWord Term::decoration_word() const {
    DecorationWord w;
    for (const auto& t : toks_)
        if (!t.is_leaf()) w.push_back(t);
    return w;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& k : t.tokens()) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(k.sym)) * 31u +
             static_cast<std::size_t>(k.arity);
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------- Structure

std::vector<Edge> parent_edges(const Term& t) {
    std::vector<Edge> edges;
    struct Frame {
        int node;
        int next;
        int arity;
    };
    std::vector<Frame> stack;
    int count = 0;
    for (const auto& tok : t.tokens()) {
        int parent = 0, pos = 0;
        if (!stack.empty()) {
            Frame& f = stack.back();
            parent = f.node;
            pos = ++f.next;
        }
        if (!tok.is_leaf()) {
            ++count;
            if (stack.empty())
                edges.push_back(Edge{1, 0, 1});
            else
                edges.push_back(Edge{parent, pos, count});
            stack.push_back(Frame{count, 0, tok.arity});
        }
        while (!stack.empty() && stack.back().next == stack.back().arity) stack.pop_back();
    }
    return edges;
}

Structure structure(const Term& t) {
    Structure s;
    s.degree = t.degree();
    s.arity = t.arity();
    s.decoration_word = t.decoration_word();
    s.edges = parent_edges(t);
    std::size_t last = 0;
    bool any = false;
    for (std::size_t i = 0; i < t.tokens().size(); ++i)
        if (!t.tokens()[i].is_leaf()) last = i, any = true;
    int leaf = 0;
    for (std::size_t i = 0; i < t.tokens().size(); ++i) {
        if (!t.tokens()[i].is_leaf()) continue;
        ++leaf;
        if (!any || i > last) s.extreme_leaves.push_back(leaf);
    }
    return s;
}

// ------------------------------------------------------------------ Parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, const Signature& sig, bool forest)
        : s_(text), sig_(sig), forest_(forest) {}

    Term run() {
        skip();
        parse(true);
        skip();
        if (i_ != s_.size()) fail_syntax("unexpected trailing input");
        return Term(std::move(toks_));
    }

private:
    [[noreturn]] void fail_syntax(const std::string& msg) const {
        throw ParseError(ParseError::Kind::Syntax, i_,
                         "syntax error at position " + std::to_string(i_) + ": " + msg);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    int children() {
        // Called after '(' was consumed; returns the child count.
        if (eat(')')) return 0;
        int n = 0;
        do {
            parse(false);
            ++n;
        } while (eat(','));
        if (!eat(')')) fail_syntax("expected ',' or ')'");
        return n;
    }

    void parse(bool top) {
        skip();
        if (i_ >= s_.size()) fail_syntax("unexpected end of input");
        std::size_t start = i_;
        char c = s_[i_];
        if (c == '*') {
            ++i_;
            if (top && forest_) fail_forest_root(start);
            toks_.push_back(Token{});
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                v = v * 10 + (s_[i_] - '0');
                if (v > 1000000) fail_syntax("natural decoration too large");
                ++i_;
            }
            if (!((top && forest_) || sig_.naturals()))
                throw ParseError(ParseError::Kind::UnknownGenerator, start,
                                 "natural decoration " + std::to_string(v) +
                                     " not allowed at position " + std::to_string(start));
            std::size_t slot = toks_.size();
            toks_.push_back(Token{nat_symbol(static_cast<int>(v)), 0});
            int n = 0;
            if (eat(':')) {
                if (!eat('(')) fail_syntax("expected '(' after ':'");
                n = children();
            }
            if (n != v)
                throw ParseError(ParseError::Kind::ArityMismatch, start,
                                 "arity mismatch at position " + std::to_string(start) +
                                     ": decoration " + std::to_string(v) + " has " +
                                     std::to_string(n) + " children");
            toks_[slot].arity = n;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            std::string name(s_.substr(start, i_ - start));
            if (top && forest_) fail_forest_root(start);
            auto ar = sig_.arity_of(name);
            if (!ar)
                throw ParseError(ParseError::Kind::UnknownGenerator, start,
                                 "unknown generator '" + name + "' at position " +
                                     std::to_string(start));
            std::size_t slot = toks_.size();
            toks_.push_back(Token{intern(name), 0});
            int n = 0;
            if (eat('(')) n = children();
            if (n != *ar)
                throw ParseError(ParseError::Kind::ArityMismatch, start,
                                 "arity mismatch at position " + std::to_string(start) + ": '" +
                                     name + "' has arity " + std::to_string(*ar) + " but " +
                                     std::to_string(n) + " children");
            toks_[slot].arity = n;
            return;
        }
        fail_syntax(std::string("unexpected character '") + c + "'");
    }

    [[noreturn]] void fail_forest_root(std::size_t start) const {
        throw ParseError(ParseError::Kind::Syntax, start,
                         "a forest root must be a natural-number decoration");
    }

    std::string_view s_;
    const Signature& sig_;
    bool forest_;
    std::size_t i_ = 0;
    std::vector<Token> toks_;
};

void render_at(const std::vector<Token>& toks, std::size_t& pos, bool top, std::string& out) {
    const Token& t = toks[pos++];
    if (t.is_leaf()) {
        out += '*';
        return;
    }
    auto nat = nat_value(t.sym);
    if (nat) {
        out += std::to_string(*nat);
        if (t.arity == 0) {
            if (top) out += ":()";
            return;
        }
        out += ":(";
    } else {
        out += symbol_name(t.sym);
        if (t.arity == 0) return;
        out += '(';
    }
    for (int j = 0; j < t.arity; ++j) {
        if (j) out += ',';
        render_at(toks, pos, false, out);
    }
    out += ')';
}

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
    return Parser(text, sig, false).run();
}

Term parse_forest(std::string_view text, const Signature& sig) {
    return Parser(text, sig, true).run();
}

std::string render(const Term& t) {
    std::string out;
    std::size_t pos = 0;
    render_at(t.tokens(), pos, true, out);
    return out;
}

std::string render_word(const DecorationWord& w) {
    std::string out;
    for (const auto& t : w) {
        if (!out.empty()) out += ' ';
        if (auto v = nat_value(t.sym))
            out += std::to_string(*v);
        else
            out += symbol_name(t.sym);
    }
    return out;
}

void validate(const Term& t, const Signature& sig) {
    const auto& toks = t.tokens();
    for (std::size_t i = 0; i < toks.size(); ++i)
        if (!sig.admits(toks[i]))
            throw std::invalid_argument("decoration at token " + std::to_string(i) +
                                        " is not in the signature");
}

// --------------------------------------------------------------- Operations

Term contraction(const Term& t) {
    auto nodes = t.node_positions();
    if (nodes.empty()) throw std::invalid_argument("contraction of a leaf");
    std::size_t p = nodes.back();
    std::vector<Token> toks(t.tokens().begin(), t.tokens().begin() + static_cast<std::ptrdiff_t>(p));
    toks.push_back(Token{});
    toks.insert(toks.end(), t.tokens().begin() + static_cast<std::ptrdiff_t>(t.subterm_end(p)),
                t.tokens().end());
    return Term(std::move(toks));
}

std::vector<int> scope_sequence(const Term& t) {
    std::vector<int> sc;
    const auto& toks = t.tokens();
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].is_leaf()) continue;
        std::size_t end = t.subterm_end(i);
        int n = 0;
        for (std::size_t j = i + 1; j < end; ++j) n += toks[j].is_leaf() ? 0 : 1;
        sc.push_back(n);
    }
    return sc;
}

Term full_composition(const Term& t, const std::vector<Term>& args) {
    if (static_cast<int>(args.size()) != t.arity())
        throw std::invalid_argument("full composition expects " + std::to_string(t.arity()) +
                                    " arguments, got " + std::to_string(args.size()));
    std::vector<Token> toks;
    std::size_t k = 0;
    for (const auto& tok : t.tokens()) {
        if (tok.is_leaf()) {
            const auto& a = args[k++].tokens();
            toks.insert(toks.end(), a.begin(), a.end());
        } else {
            toks.push_back(tok);
        }
    }
    return Term(std::move(toks));
}

namespace {

void extend_all(const std::vector<Token>& gens, int degree,
                std::vector<std::vector<std::vector<Token>>>& memo);

const std::vector<std::vector<Token>>& terms_of(const std::vector<Token>& gens, int degree,
                                                std::vector<std::vector<std::vector<Token>>>& memo) {
    extend_all(gens, degree, memo);
    return memo[static_cast<std::size_t>(degree)];
}

void fill_children(const std::vector<Token>& gens, int remaining, int slots,
                   std::vector<Token>& prefix, std::vector<std::vector<Token>>& out,
                   std::vector<std::vector<std::vector<Token>>>& memo) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    for (int d = 0; d <= remaining; ++d) {
        const auto& sub = terms_of(gens, d, memo);
        for (const auto& s : sub) {
            std::size_t n = prefix.size();
            prefix.insert(prefix.end(), s.begin(), s.end());
            fill_children(gens, remaining - d, slots - 1, prefix, out, memo);
            prefix.resize(n);
        }
    }
}

void extend_all(const std::vector<Token>& gens, int degree,
                std::vector<std::vector<std::vector<Token>>>& memo) {
    while (static_cast<int>(memo.size()) <= degree) {
        int d = static_cast<int>(memo.size());
        std::vector<std::vector<Token>> level;
        if (d == 0) {
            level.push_back({Token{}});
        } else {
            memo.emplace_back();  // placeholder keeps indices stable while recursing
            for (const auto& g : gens) {
                std::vector<Token> prefix{g};
                if (g.arity == 0) {
                    if (d == 1) level.push_back(prefix);
                    continue;
                }
                fill_children(gens, d - 1, g.arity, prefix, level, memo);
            }
            memo[static_cast<std::size_t>(d)] = std::move(level);
            continue;
        }
        memo.push_back(std::move(level));
    }
}

}  // namespace

std::vector<Term> all_terms(const std::vector<Token>& gens, int degree) {
    if (degree < 0) return {};
    std::vector<std::vector<std::vector<Token>>> memo;
    extend_all(gens, degree, memo);
    std::vector<std::pair<std::string, Term>> keyed;
    for (auto& toks : memo[static_cast<std::size_t>(degree)]) {
        Term t(toks);
        keyed.emplace_back(render(t), std::move(t));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(keyed.size());
    for (auto& [s, t] : keyed) out.push_back(std::move(t));
    return out;
}

}  // namespace windlass
