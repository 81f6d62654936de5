#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphlcp {

// How labels are written in graph files and patterns.
enum class AlphabetKind : std::uint8_t {
  Character,  // one UTF-8 code point per label
  Integer,    // non-negative decimal integers
};

// A node label. Value 0 is reserved for the sentinel `$`, which compares below
// every other symbol; code point c (or integer c) is stored as c + 1.
struct Symbol {
  std::uint32_t value = 0;

  static constexpr Symbol sentinel() noexcept { return Symbol{0}; }
  static Symbol from_code_point(std::uint32_t cp);
  static Symbol from_integer(std::uint64_t k);

  constexpr bool is_sentinel() const noexcept { return value == 0; }

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

inline constexpr std::string_view kSentinelToken = "$";

std::string format_symbol(Symbol s, AlphabetKind kind);
std::string format_symbols(const std::vector<Symbol>& text, AlphabetKind kind);

// Parses a single label token. `$` yields the sentinel; callers that must
// reject it check is_sentinel(). Throws InputError on malformed tokens.
Symbol parse_symbol(std::string_view token, AlphabetKind kind);

// Character mode: every code point of the line is one symbol.
// Integer mode: whitespace-separated integers (or `$`).
std::vector<Symbol> parse_pattern(std::string_view line, AlphabetKind kind);

std::vector<std::uint32_t> decode_utf8(std::string_view text);
void append_utf8(std::string& out, std::uint32_t cp);

std::string_view to_string(AlphabetKind kind);
AlphabetKind alphabet_from_string(std::string_view name);

}  // namespace graphlcp
