#include "qss/enumerate.hpp"

#include <cstdint>

#include "qss/errors.hpp"

namespace qss {

namespace {

struct Search {
  int n;
  bool reduced;
  std::uint64_t emitted = 0;
  std::optional<std::uint64_t> limit;
  std::vector<int> cells;
  std::vector<std::uint32_t> row_used;
  std::vector<std::uint32_t> col_used;
  const std::function<bool(const Quasigroup&)>* visit = nullptr;
  std::uint64_t count = 0;

  bool emit() {
    ++count;
    if (visit) {
      Quasigroup q = Quasigroup::from_op_table(OpTable::from_flat(n, cells));
      if (!(*visit)(q)) return false;
    }
    ++emitted;
    return !(limit && emitted >= *limit);
  }

  // Returns false to abort the whole enumeration.
  bool fill(int idx) {
    if (idx == n * n) return emit();
    const int r = idx / n;
    const int c = idx % n;
    std::uint32_t taken = row_used[r] | col_used[c];
    for (int v = 0; v < n; ++v) {
      if (taken & (1u << v)) continue;
      if (reduced && r == 0 && v != c) continue;
      if (reduced && c == 0 && v != r) continue;
      cells[idx] = v;
      row_used[r] |= 1u << v;
      col_used[c] |= 1u << v;
      bool keep_going = fill(idx + 1);
      row_used[r] &= ~(1u << v);
      col_used[c] &= ~(1u << v);
      if (!keep_going) return false;
    }
    return true;
  }
};

Search make_search(const EnumerationConfig& cfg) {
  if (cfg.order < 1) throw input_error("enumeration order must be >= 1");
  if (cfg.limit && *cfg.limit < 1) throw input_error("enumeration limit must be >= 1");
  if (cfg.order > cfg.max_order) {
    throw budget_error("enumeration of order " + std::to_string(cfg.order) +
                       " exceeds the order cap of " + std::to_string(cfg.max_order));
  }
  if (cfg.order > 31) throw budget_error("enumeration order too large for the bitmask search");
  Search s;
  s.n = cfg.order;
  s.reduced = cfg.reduced;
  s.limit = cfg.limit;
  s.cells.assign(static_cast<std::size_t>(cfg.order) * cfg.order, 0);
  s.row_used.assign(static_cast<std::size_t>(cfg.order), 0);
  s.col_used.assign(static_cast<std::size_t>(cfg.order), 0);
  return s;
}

}  // namespace

void enumerate_latin_squares(const EnumerationConfig& cfg,
                             const std::function<bool(const Quasigroup&)>& visit) {
  Search s = make_search(cfg);
  s.visit = &visit;
  s.fill(0);
}

std::uint64_t count_latin_squares(const EnumerationConfig& cfg) {
  Search s = make_search(cfg);
  s.fill(0);
  return s.count;
}

std::vector<Quasigroup> all_quasigroups_of_order(int n) {
  std::vector<Quasigroup> out;
  EnumerationConfig cfg;
  cfg.order = n;
  enumerate_latin_squares(cfg, [&out](const Quasigroup& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

std::vector<Quasigroup> quasigroup_catalog(int max_order) {
  std::vector<Quasigroup> out;
  for (int n = 1; n <= max_order; ++n) {
    for (auto& q : all_quasigroups_of_order(n)) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace qss
