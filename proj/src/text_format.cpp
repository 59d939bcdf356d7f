#include "pmap/text_format.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pmap {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

long parse_int(const std::string& token) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    parse_error("expected integer, got '" + token + "'");
  }
  if (used != token.size()) parse_error("expected integer, got '" + token + "'");
  return v;
}

}  // namespace

std::string encode(const RootedMap& m) {
  Record r;
  r.map = m;
  return encode(r);
}

std::string encode(const Record& r) {
  std::ostringstream out;
  const RootedMap& m = r.map;
  out << "rmap 1\nm " << m.edge_count() << '\n';
  if (!m.is_vertex_map()) {
    out << "sigma";
    for (Dart d = 0; d < m.dart_count(); ++d) out << ' ' << m.sigma(d) + 1;
    out << "\nroot " << m.root() + 1 << '\n';
  }
  if (r.orient) out << "orient " << *r.orient << '\n';
  if (r.poles) out << "poles " << r.poles->first + 1 << ' ' << r.poles->second + 1 << '\n';
  if (r.color) out << "color " << *r.color << '\n';
  return out.str();
}

Record decode_record(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "rmap 1") parse_error("missing 'rmap 1' header");
  std::size_t i = 1;
  auto tokens = [&](const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> t;
    std::string s;
    while (in >> s) t.push_back(s);
    return t;
  };
  if (i >= lines.size()) parse_error("missing 'm' line");
  auto t = tokens(lines[i++]);
  if (t.size() != 2 || t[0] != "m") parse_error("malformed 'm' line");
  const long m = parse_int(t[1]);
  if (m < 0) parse_error("negative edge count");

  std::vector<Dart> sigma;
  std::optional<Dart> root;
  if (m > 0) {
    if (i >= lines.size()) parse_error("missing 'sigma' line");
    t = tokens(lines[i++]);
    if (t.empty() || t[0] != "sigma" || static_cast<long>(t.size()) != 2 * m + 1)
      parse_error("'sigma' line must list 2m darts");
    for (std::size_t k = 1; k < t.size(); ++k) sigma.push_back(static_cast<Dart>(parse_int(t[k]) - 1));
    if (i >= lines.size()) parse_error("missing 'root' line");
    t = tokens(lines[i++]);
    if (t.size() != 2 || t[0] != "root") parse_error("malformed 'root' line");
    root = static_cast<Dart>(parse_int(t[1]) - 1);
  }

  Record r;
  for (; i < lines.size(); ++i) {
    t = tokens(lines[i]);
    if (t[0] == "orient" || t[0] == "color") {
      std::string value = t.size() == 2 ? t[1] : std::string();
      if (t.size() > 2 || static_cast<long>(value.size()) != m)
        parse_error("'" + t[0] + "' line must have one character per edge");
      const std::string allowed = t[0] == "orient" ? "+-" : "rbx";
      if (value.find_first_not_of(allowed) != std::string::npos)
        parse_error("bad character in '" + t[0] + "' line");
      (t[0] == "orient" ? r.orient : r.color) = value;
    } else if (t[0] == "poles") {
      if (t.size() != 3) parse_error("malformed 'poles' line");
      Dart a = static_cast<Dart>(parse_int(t[1]) - 1), b = static_cast<Dart>(parse_int(t[2]) - 1);
      if (a < 0 || b < 0 || a >= 2 * m || b >= 2 * m) parse_error("pole dart out of range");
      r.poles = std::make_pair(a, b);
    } else {
      parse_error("unknown line '" + lines[i] + "'");
    }
  }
  if (root && (*root < 0 || *root >= 2 * m)) throw Error(ErrorCode::BadRoot, "root out of range");
  r.map = build_map(std::move(sigma), root);
  return r;
}

RootedMap decode(const std::string& text) { return decode_record(text).map; }

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> out;
  std::string line, block;
  auto flush = [&] {
    if (block.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(decode_record(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  return out;
}

void write_records(std::ostream& out, const std::vector<Record>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out << '\n';
    out << encode(records[i]);
  }
}

}  // namespace pmap
