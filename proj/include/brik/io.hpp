#pragma once

// Text serializations: OEIS b-files and the JSON output record.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "brik/error.hpp"
#include "brik/word.hpp"

namespace brik {

// How b-file indices map onto b.
//   full: line "n b_n" for n = 1..N
//   oeis: the OEIS entry omits the leading 1, so line "n b_{n+1}" for n = 1..N-1
enum class Offset { full, oeis };

inline std::string_view to_string(Offset o) { return o == Offset::full ? "full" : "oeis"; }

inline Offset parse_offset(std::string_view s) {
  if (s == "full") return Offset::full;
  if (s == "oeis") return Offset::oeis;
  throw ParseError("unknown offset convention '" + std::string(s) + "' (expected full or oeis)");
}

inline std::string to_bfile(const Word& w, Offset offset) {
  std::string out;
  const Word::size_type skip = offset == Offset::oeis ? 1 : 0;
  for (Word::size_type p = 1 + skip; p <= w.size(); ++p) {
    out += std::to_string(p - skip);
    out += ' ';
    out += static_cast<char>('0' + w[p]);
    out += '\n';
  }
  return out;
}

// Inverse of to_bfile. Blank lines and '#' comments are skipped; indices
// must be consecutive from 1. For oeis offset the dropped leading 1 is
// restored.
inline Word parse_bfile(std::string_view text, Offset offset) {
  Word w;
  if (offset == Offset::oeis) w.push_back(1);
  std::istringstream in{std::string(text)};
  std::string line;
  std::uint64_t expected = 1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::uint64_t index = 0;
    int value = -1;
    if (!(fields >> index >> value) || (value != 0 && value != 1))
      throw ParseError("malformed b-file line: '" + line + "'");
    if (index != expected)
      throw ParseError("b-file index " + std::to_string(index) + " where " + std::to_string(expected) +
                       " was expected");
    w.push_back(value);
    ++expected;
  }
  return w;
}

// {command, parameters, result}. nlohmann::json keeps object keys sorted, so
// dump() is deterministic.
inline nlohmann::json output_record(std::string_view command, nlohmann::json parameters, nlohmann::json result) {
  nlohmann::json rec;
  rec["command"] = std::string(command);
  rec["parameters"] = std::move(parameters);
  rec["result"] = std::move(result);
  return rec;
}

}  // namespace brik
