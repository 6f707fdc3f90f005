#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "treelink/types.hpp"

namespace treelink::detail {

struct ParsedLine {
  std::int64_t u = 0, v = 0;
  Sign sign = Sign::positive;
};

[[noreturn]] inline void malformed(int line_no, const std::string& why) {
  throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " +
                           why);
}

inline bool parse_int64(std::string_view tok, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline bool parse_sign(std::string_view tok, Sign& out) {
  if (tok == "+1" || tok == "1") {
    out = Sign::positive;
    return true;
  }
  if (tok == "-1") {
    out = Sign::negative;
    return true;
  }
  return false;
}

/// Splits one "u v s" line; returns false for blank and comment lines,
/// throws (with the line number) on anything malformed.
inline bool parse_edge_line(const std::string& raw, int line_no,
                            ParsedLine& out) {
  std::string_view line(raw);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
    line.remove_suffix(1);
  std::size_t pos = line.find_first_not_of(" \t");
  if (pos == std::string_view::npos) return false;
  if (line[pos] == '#') return false;

  std::string_view toks[4];
  int n = 0;
  while (pos != std::string_view::npos && n < 4) {
    std::size_t end = line.find_first_of(" \t", pos);
    toks[n++] =
        line.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = line.find_first_not_of(" \t", end);
  }
  if (n != 3 || pos != std::string_view::npos)
    malformed(line_no, "expected 'u v sign'");
  if (!parse_int64(toks[0], out.u) || out.u < 0)
    malformed(line_no, "bad node id '" + std::string(toks[0]) + "'");
  if (!parse_int64(toks[1], out.v) || out.v < 0)
    malformed(line_no, "bad node id '" + std::string(toks[1]) + "'");
  if (!parse_sign(toks[2], out.sign))
    malformed(line_no, "bad sign '" + std::string(toks[2]) + "'");
  return true;
}

}  // namespace treelink::detail
