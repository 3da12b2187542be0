#include "qss/qcore.hpp"

#include <algorithm>

namespace qss {

namespace {

void check_well_formed(const std::vector<std::vector<int>>& cells) {
  const std::size_t n = cells.size();
  if (n == 0) throw input_error("table is empty");
  for (const auto& row : cells) {
    if (row.size() != n) {
      throw input_error("table is not square: row of length " + std::to_string(row.size()) +
                        " in a table of " + std::to_string(n) + " rows");
    }
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw input_error("entry " + std::to_string(v) + " out of range 0.." +
                          std::to_string(n - 1));
      }
    }
  }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& cells) {
  std::vector<int> flat;
  flat.reserve(cells.size() * cells.size());
  for (const auto& row : cells) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

}  // namespace

bool validate_latin_flat(int order, const std::vector<int>& cells) {
  if (order <= 0 || cells.size() != static_cast<std::size_t>(order) * order) {
    throw input_error("flat table size does not match order");
  }
  std::vector<bool> seen(static_cast<std::size_t>(order));
  for (int r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (int c = 0; c < order; ++c) {
      int v = cells[static_cast<std::size_t>(r) * order + c];
      if (v < 0 || v >= order) throw input_error("entry out of range");
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  for (int c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (int r = 0; r < order; ++r) {
      int v = cells[static_cast<std::size_t>(r) * order + c];
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

bool validate_latin(const std::vector<std::vector<int>>& cells) {
  check_well_formed(cells);
  return validate_latin_flat(static_cast<int>(cells.size()), flatten(cells));
}

OpTable OpTable::from_flat(int order, std::vector<int> cells) {
  if (!validate_latin_flat(order, cells)) {
    throw input_error("table is not a Latin square");
  }
  OpTable t;
  t.order_ = order;
  t.cells_ = std::move(cells);
  return t;
}

OpTable OpTable::from_cells(const std::vector<std::vector<int>>& cells) {
  check_well_formed(cells);
  return from_flat(static_cast<int>(cells.size()), flatten(cells));
}

Quasigroup Quasigroup::from_op_table(OpTable mul) {
  const int n = mul.order();
  std::vector<int> rdiv(static_cast<std::size_t>(n) * n);
  std::vector<int> ldiv(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) {
      int b = mul.at(x, a);
      rdiv[static_cast<std::size_t>(b) * n + a] = x;  // b/a = x since x*a = b
      ldiv[static_cast<std::size_t>(x) * n + b] = a;  // x\b = a since x*a = b
    }
  }
  Quasigroup q;
  q.mul_ = std::move(mul);
  q.rdiv_ = OpTable::from_flat(n, std::move(rdiv));
  q.ldiv_ = OpTable::from_flat(n, std::move(ldiv));
  return q;
}

Quasigroup Quasigroup::from_mul_table(const std::vector<std::vector<int>>& cells) {
  return from_op_table(OpTable::from_cells(cells));
}

std::string to_string(ParastropheKind kind) {
  switch (kind) {
    case ParastropheKind::Mul: return "mul";
    case ParastropheKind::RDiv: return "rdiv";
    case ParastropheKind::LDiv: return "ldiv";
    case ParastropheKind::DualMul: return "dual-mul";
    case ParastropheKind::DualRDiv: return "dual-rdiv";
    case ParastropheKind::DualLDiv: return "dual-ldiv";
  }
  return "?";
}

std::optional<ParastropheKind> parastrophe_from_string(std::string_view name) {
  for (ParastropheKind k : kAllParastrophes) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

int apply(const Quasigroup& q, ParastropheKind kind, int a, int b) {
  const int n = q.order();
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw input_error("element out of range 0.." + std::to_string(n - 1));
  }
  switch (kind) {
    case ParastropheKind::Mul: return q.mul(a, b);
    case ParastropheKind::RDiv: return q.rd(a, b);
    case ParastropheKind::LDiv: return q.ld(a, b);
    case ParastropheKind::DualMul: return q.opp(a, b);
    case ParastropheKind::DualRDiv: return q.drd(a, b);
    case ParastropheKind::DualLDiv: return q.dld(a, b);
  }
  throw input_error("unknown parastrophe kind");
}

Quasigroup parastrophe(const Quasigroup& q, ParastropheKind kind) {
  const int n = q.order();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cells[static_cast<std::size_t>(a) * n + b] = apply(q, kind, a, b);
    }
  }
  return Quasigroup::from_op_table(OpTable::from_flat(n, std::move(cells)));
}

SemisymmetryReport semisymmetry_report(const Quasigroup& q) {
  const int n = q.order();
  SemisymmetryReport rep{true, true, true, true, true};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (q.mul(x, q.mul(y, x)) != y) rep.mul_left = false;
      if (q.mul(q.mul(x, y), x) != y) rep.mul_right = false;
      if (q.rd(x, y) != q.mul(y, x)) rep.rdiv_is_opposite = false;
      if (q.ld(x, y) != q.mul(y, x)) rep.ldiv_is_opposite = false;
      if (q.ld(x, y) != q.rd(x, y)) rep.divisions_coincide = false;
    }
  }
  return rep;
}

bool is_semisymmetric(const Quasigroup& q) { return semisymmetry_report(q).all(); }

TwistedQuasigroup twisted_from(const Quasigroup& q) {
  const int n = q.order();
  std::vector<int> op1(static_cast<std::size_t>(n) * n);
  std::vector<int> op2(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      op1[static_cast<std::size_t>(a) * n + b] = q.drd(a, b);
      op2[static_cast<std::size_t>(a) * n + b] = q.dld(a, b);
    }
  }
  return TwistedQuasigroup{OpTable::from_flat(n, std::move(op1)),
                           OpTable::from_flat(n, std::move(op2)), q.mul_table()};
}

namespace {

bool twisted_axioms_tables(const OpTable& a, const OpTable& b, const OpTable& c) {
  const int n = c.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = c.at(x, y);
      if (a.at(y, xy) != x) return false;
      if (b.at(xy, x) != y) return false;
      if (c.at(a.at(y, x), y) != x) return false;
      if (c.at(x, b.at(y, x)) != y) return false;
    }
  }
  return true;
}

}  // namespace

bool is_twisted_quasigroup(const TwistedQuasigroup& t) {
  if (t.op1.order() != t.op3.order() || t.op2.order() != t.op3.order()) {
    throw input_error("twisted triple has mismatched table orders");
  }
  return twisted_axioms_tables(t.op1, t.op2, t.op3);
}

bool twisted_axioms_hold(const std::vector<std::vector<int>>& op1,
                         const std::vector<std::vector<int>>& op2,
                         const std::vector<std::vector<int>>& op3) {
  check_well_formed(op1);
  check_well_formed(op2);
  check_well_formed(op3);
  const std::size_t n = op3.size();
  if (op1.size() != n || op2.size() != n) {
    throw input_error("twisted triple has mismatched table orders");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      int xy = op3[x][y];
      if (op1[y][xy] != static_cast<int>(x)) return false;
      if (op2[xy][x] != static_cast<int>(y)) return false;
      if (op3[op1[y][x]][y] != static_cast<int>(x)) return false;
      if (op3[x][op2[y][x]] != static_cast<int>(y)) return false;
    }
  }
  return true;
}

bool is_semisymmetric_twisted(const TwistedQuasigroup& t) {
  if (!is_twisted_quasigroup(t)) return false;
  if (!(t.op1 == t.op3) || !(t.op2 == t.op3)) return false;
  const int n = t.op3.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (t.op3.at(x, t.op3.at(y, x)) != y) return false;
      if (t.op3.at(t.op3.at(x, y), x) != y) return false;
    }
  }
  return true;
}

TwistedQuasigroup cyclic_rotate(const TwistedQuasigroup& t) {
  return TwistedQuasigroup{t.op2, t.op3, t.op1};
}

Biquasigroup biquasigroup_from(const Quasigroup& q) {
  TwistedQuasigroup t = twisted_from(q);
  return Biquasigroup{std::move(t.op1), std::move(t.op2)};
}

Quasigroup reconstruct_biquasigroup_mul(const Biquasigroup& b) {
  const int n = b.opR.order();
  if (b.opL.order() != n) throw input_error("biquasigroup tables have mismatched orders");
  // x*y = z iff opR(y, z) = x, so row y of mul is the inverse permutation of
  // row y of opR.
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      int x = b.opR.at(y, z);
      mul[static_cast<std::size_t>(x) * n + y] = z;
    }
  }
  return Quasigroup::from_op_table(OpTable::from_flat(n, std::move(mul)));
}

bool is_biquasigroup(const Biquasigroup& b) {
  Quasigroup q = reconstruct_biquasigroup_mul(b);
  TwistedQuasigroup t = twisted_from(q);
  return t.op1 == b.opR && t.op2 == b.opL;
}

}  // namespace qss
