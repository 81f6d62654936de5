#include "graphlcp/symbol.hpp"

#include <charconv>
#include <limits>

#include "graphlcp/error.hpp"

namespace graphlcp {

Symbol Symbol::from_code_point(std::uint32_t cp) {
  if (cp > 0x10FFFF) throw InputError("code point out of range");
  return Symbol{cp + 1};
}

Symbol Symbol::from_integer(std::uint64_t k) {
  if (k >= std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("integer label too large: " + std::to_string(k));
  }
  return Symbol{static_cast<std::uint32_t>(k) + 1};
}

std::vector<std::uint32_t> decode_utf8(std::string_view text) {
  std::vector<std::uint32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw InputError("invalid UTF-8 lead byte");
    }
    if (i + len > text.size()) throw InputError("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) throw InputError("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string format_symbol(Symbol s, AlphabetKind kind) {
  if (s.is_sentinel()) return std::string(kSentinelToken);
  if (kind == AlphabetKind::Integer) return std::to_string(s.value - 1);
  std::string out;
  append_utf8(out, s.value - 1);
  return out;
}

std::string format_symbols(const std::vector<Symbol>& text, AlphabetKind kind) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (kind == AlphabetKind::Integer && i > 0) out.push_back(' ');
    out += format_symbol(text[i], kind);
  }
  return out;
}

Symbol parse_symbol(std::string_view token, AlphabetKind kind) {
  if (token == kSentinelToken) return Symbol::sentinel();
  if (token.empty()) throw InputError("empty label");
  if (kind == AlphabetKind::Integer) {
    std::uint64_t k = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), k);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("invalid integer label '" + std::string(token) + "'");
    }
    return Symbol::from_integer(k);
  }
  const auto cps = decode_utf8(token);
  if (cps.size() != 1) {
    throw InputError("label '" + std::string(token) + "' is not a single character");
  }
  return Symbol::from_code_point(cps.front());
}

std::vector<Symbol> parse_pattern(std::string_view line, AlphabetKind kind) {
  std::vector<Symbol> out;
  if (kind == AlphabetKind::Character) {
    for (const auto cp : decode_utf8(line)) {
      out.push_back(cp == '$' ? Symbol::sentinel() : Symbol::from_code_point(cp));
    }
    return out;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(parse_symbol(line.substr(i, j - i), kind));
    i = j;
  }
  return out;
}

std::string_view to_string(AlphabetKind kind) {
  return kind == AlphabetKind::Integer ? "integer" : "character";
}

AlphabetKind alphabet_from_string(std::string_view name) {
  if (name == "character") return AlphabetKind::Character;
  if (name == "integer") return AlphabetKind::Integer;
  throw InputError("unknown alphabet '" + std::string(name) + "'");
}

}  // namespace graphlcp
