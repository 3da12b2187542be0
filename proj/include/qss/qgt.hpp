#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qss/qcore.hpp"
#include "qss/semisym.hpp"

namespace qss {

// QGT text format: optional '#' comment lines, one line with the order n,
// then n lines of n whitespace-separated integers (the multiplication table,
// 0-based). Divisions are never serialized. Streams separate records with a
// line containing only "---".

/// Reads one record's raw cells; throws input_error on malformed input and on
/// end of stream without data.
std::vector<std::vector<int>> parse_qgt_cells(std::istream& in);

/// Reads one record as a quasigroup (cells must be Latin).
Quasigroup parse_qgt(std::istream& in);
Quasigroup parse_qgt(const std::string& text);

/// True when the stream still holds another record (skips comments, blank
/// lines and record separators).
bool qgt_stream_has_record(std::istream& in);

std::string serialize_qgt(const Quasigroup& q);
std::string serialize_qgt_cells(const std::vector<std::vector<int>>& cells);

/// Canonical serialization used as the object tag; identical to
/// serialize_qgt.
std::string canonical_tag(const Quasigroup& q);

/// Object table followed by a '#tag' comment block holding the source QGT,
/// one '# '-prefixed line each.
std::string serialize_tagged(const TaggedQuasigroup& t);
TaggedQuasigroup parse_tagged(std::istream& in);
TaggedQuasigroup parse_tagged(const std::string& text);

/// Maps are one line of n integers: the images of 0..n-1. Homotopies are
/// three such lines.
std::vector<int> parse_map_line(const std::string& line, int dom_order, int cod_order);
std::string serialize_map(const std::vector<int>& map);
std::string serialize_homotopy_maps(const Homotopy& h);

inline constexpr const char* kRecordSeparator = "---";

}  // namespace qss
