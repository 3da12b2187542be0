#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qss/qcore.hpp"

namespace qss {

struct EnumerationConfig {
  int order = 1;
  bool reduced = false;  // fix first row and first column to 0,1,...,n-1
  std::optional<std::uint64_t> limit;
  int max_order = 5;  // raising this is the caller's own risk
};

/// Visits every Latin square of the given order in lexicographic order of the
/// flattened table (row-major backtracking with column-availability pruning).
/// Return false from the callback to stop early. Orders beyond the cap are a
/// budget_error.
void enumerate_latin_squares(const EnumerationConfig& cfg,
                             const std::function<bool(const Quasigroup&)>& visit);

/// Length of the enumeration stream, without materializing quasigroups.
std::uint64_t count_latin_squares(const EnumerationConfig& cfg);

std::vector<Quasigroup> all_quasigroups_of_order(int n);

/// All quasigroups of each order 1..max_order, concatenated in enumeration
/// order. Indexes into this vector are the ones check reports mention.
std::vector<Quasigroup> quasigroup_catalog(int max_order);

}  // namespace qss
