#include "qss/qgt.hpp"

#include <istream>
#include <sstream>

namespace qss {

namespace {

bool is_comment(const std::string& line) { return !line.empty() && line[0] == '#'; }

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_separator(const std::string& line) {
  std::string t = line;
  while (!t.empty() && (t.back() == '\r' || t.back() == ' ' || t.back() == '\t')) t.pop_back();
  return t == kRecordSeparator;
}

/// Next data line, skipping comments, blanks and record separators before the
/// record starts.
bool next_data_line(std::istream& in, std::string& line, bool skip_separators) {
  while (std::getline(in, line)) {
    if (is_comment(line) || is_blank(line)) continue;
    if (skip_separators && is_separator(line)) continue;
    return true;
  }
  return false;
}

std::vector<int> parse_int_line(const std::string& line, const char* what) {
  std::istringstream ss(line);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw input_error(std::string(what) + ": not an integer: '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> parse_qgt_cells(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line, /*skip_separators=*/true)) {
    throw input_error("QGT: no record found");
  }
  std::vector<int> header = parse_int_line(line, "QGT order line");
  if (header.size() != 1) throw input_error("QGT: order line must hold a single integer");
  int n = header[0];
  if (n < 1) throw input_error("QGT: order must be >= 1");

  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (!next_data_line(in, line, /*skip_separators=*/false)) {
      throw input_error("QGT: expected " + std::to_string(n) + " rows, got " + std::to_string(r));
    }
    if (is_separator(line)) {
      throw input_error("QGT: record separator inside a table");
    }
    std::vector<int> row = parse_int_line(line, "QGT row");
    if (row.size() != static_cast<std::size_t>(n)) {
      throw input_error("QGT: row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(n));
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw input_error("QGT: entry " + std::to_string(v) + " out of range 0.." +
                          std::to_string(n - 1));
      }
    }
    cells.push_back(std::move(row));
  }
  return cells;
}

Quasigroup parse_qgt(std::istream& in) {
  auto cells = parse_qgt_cells(in);
  if (!validate_latin(cells)) throw input_error("QGT: table is not a Latin square");
  return Quasigroup::from_mul_table(cells);
}

Quasigroup parse_qgt(const std::string& text) {
  std::istringstream in(text);
  return parse_qgt(in);
}

bool qgt_stream_has_record(std::istream& in) {
  std::string line;
  while (true) {
    std::streampos pos = in.tellg();
    if (!std::getline(in, line)) return false;
    if (is_comment(line) || is_blank(line) || is_separator(line)) continue;
    in.seekg(pos);
    return true;
  }
}

std::string serialize_qgt_cells(const std::vector<std::vector<int>>& cells) {
  std::ostringstream out;
  out << cells.size() << '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string serialize_qgt(const Quasigroup& q) {
  const int n = q.order();
  std::ostringstream out;
  out << n << '\n';
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << q.mul(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string canonical_tag(const Quasigroup& q) { return serialize_qgt(q); }

std::string serialize_tagged(const TaggedQuasigroup& t) {
  std::ostringstream out;
  out << serialize_qgt(t.object);
  out << "#tag\n";
  std::istringstream tag(t.tag);
  std::string line;
  while (std::getline(tag, line)) out << "# " << line << '\n';
  return out.str();
}

TaggedQuasigroup parse_tagged(std::istream& in) {
  // The object record first; its parser skips the '#tag' block of any record
  // that came before, so scan for the marker afterwards.
  auto cells = parse_qgt_cells(in);
  if (!validate_latin(cells)) throw input_error("tagged QGT: object table is not Latin");
  Quasigroup object = Quasigroup::from_mul_table(cells);

  std::string line;
  bool found = false;
  std::ostringstream tag_text;
  while (std::getline(in, line)) {
    if (!found) {
      if (line.rfind("#tag", 0) == 0) found = true;
      continue;
    }
    if (line.empty() || line[0] != '#') break;
    std::string payload = line.substr(1);
    if (!payload.empty() && payload[0] == ' ') payload.erase(0, 1);
    tag_text << payload << '\n';
  }
  if (!found) throw input_error("tagged QGT: missing '#tag' block");

  Quasigroup source = parse_qgt(tag_text.str());
  return TaggedQuasigroup{std::move(object), canonical_tag(source)};
}

TaggedQuasigroup parse_tagged(const std::string& text) {
  std::istringstream in(text);
  return parse_tagged(in);
}

std::vector<int> parse_map_line(const std::string& line, int dom_order, int cod_order) {
  std::vector<int> map = parse_int_line(line, "map line");
  if (map.size() != static_cast<std::size_t>(dom_order)) {
    throw input_error("map line: expected " + std::to_string(dom_order) + " images, got " +
                      std::to_string(map.size()));
  }
  for (int v : map) {
    if (v < 0 || v >= cod_order) {
      throw input_error("map line: image " + std::to_string(v) + " out of range 0.." +
                        std::to_string(cod_order - 1));
    }
  }
  return map;
}

std::string serialize_map(const std::vector<int>& map) {
  std::ostringstream out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out << ' ';
    out << map[i];
  }
  out << '\n';
  return out.str();
}

std::string serialize_homotopy_maps(const Homotopy& h) {
  return serialize_map(h.f[0]) + serialize_map(h.f[1]) + serialize_map(h.f[2]);
}

}  // namespace qss
