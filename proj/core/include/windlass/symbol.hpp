#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace windlass {

using SymbolId = std::int32_t;

inline constexpr SymbolId kLeafSymbol = -1;

// Process-wide interning of generator names. Natural-number decorations use
// the reserved names n0, n1, ... and render as "k:(...)".
SymbolId intern(std::string_view name);
SymbolId nat_symbol(int k);
SymbolId a_symbol(int k);

const std::string& symbol_name(SymbolId id);
std::optional<int> nat_value(SymbolId id);
bool is_reserved_name(std::string_view name);

}  // namespace windlass
