#include "windlass/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace windlass {

namespace {

struct Registry {
    std::shared_mutex mutex;
    std::deque<std::string> names;
    std::deque<int> nat;
    std::unordered_map<std::string, SymbolId> ids;
};

Registry& registry() {
    static Registry r;
    return r;
}

std::optional<int> parse_reserved(std::string_view name) {
    if (name.size() < 2 || name[0] != 'n') return std::nullopt;
    int v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        char c = name[i];
        if (c < '0' || c > '9') return std::nullopt;
        if (v > 100000000) return std::nullopt;
        v = v * 10 + (c - '0');
    }
    if (name.size() > 2 && name[1] == '0') return std::nullopt;
    return v;
}

}  // namespace

SymbolId intern(std::string_view name) {
    Registry& r = registry();
    {
        std::shared_lock lock(r.mutex);
        auto it = r.ids.find(std::string(name));
        if (it != r.ids.end()) return it->second;
    }
    std::unique_lock lock(r.mutex);
    auto [it, inserted] = r.ids.emplace(std::string(name), static_cast<SymbolId>(r.names.size()));
    if (inserted) {
        r.names.emplace_back(name);
        r.nat.push_back(parse_reserved(name).value_or(-1));
    }
    return it->second;
}

SymbolId nat_symbol(int k) {
    if (k < 0) throw std::invalid_argument("negative natural decoration");
    return intern("n" + std::to_string(k));
}

SymbolId a_symbol(int k) {
    if (k < 0) throw std::invalid_argument("negative generator index");
    return intern("a" + std::to_string(k));
}

const std::string& symbol_name(SymbolId id) {
    Registry& r = registry();
    std::shared_lock lock(r.mutex);
    if (id < 0 || static_cast<std::size_t>(id) >= r.names.size())
        throw std::out_of_range("unknown symbol id");
    return r.names[static_cast<std::size_t>(id)];
}

std::optional<int> nat_value(SymbolId id) {
    if (id < 0) return std::nullopt;
    Registry& r = registry();
    std::shared_lock lock(r.mutex);
    if (static_cast<std::size_t>(id) >= r.nat.size()) return std::nullopt;
    int v = r.nat[static_cast<std::size_t>(id)];
    if (v < 0) return std::nullopt;
    return v;
}

bool is_reserved_name(std::string_view name) { return parse_reserved(name).has_value(); }

}  // namespace windlass
