#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmap/rooted_map.hpp"

namespace pmap {

/// One RMAP/1 record: a rooted map plus optional decoration lines.
/// Darts are 1-based in the text and 0-based in memory.
struct Record {
  RootedMap map;
  std::optional<std::string> orient;              // one of '+'/'-' per edge
  std::optional<std::pair<Dart, Dart>> poles;     // a dart at s, a dart at t
  std::optional<std::string> color;               // one of 'r'/'b'/'x' per edge
};

std::string encode(const RootedMap& m);
std::string encode(const Record& r);

/// Parses one record. Throws ParseError or a build_map error.
Record decode_record(const std::string& text);
RootedMap decode(const std::string& text);

/// Splits a stream of records separated by blank lines.
std::vector<Record> read_records(std::istream& in);
void write_records(std::ostream& out, const std::vector<Record>& records);

}  // namespace pmap
