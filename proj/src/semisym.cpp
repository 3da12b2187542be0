#include "qss/semisym.hpp"

#include <utility>

#include "qss/enumerate.hpp"
#include "qss/qgt.hpp"

namespace qss {

namespace {

void check_materializable(int object_order) {
  if (object_order > kMaxMaterializedOrder) {
    throw budget_error("materialized object of order " + std::to_string(object_order) +
                       " exceeds the cap of " + std::to_string(kMaxMaterializedOrder));
  }
}

}  // namespace

Quasigroup otimes_cube(const Quasigroup& q) {
  const int n = q.order();
  const TripleCodec codec{n};
  check_materializable(codec.size());
  const int m = codec.size();
  std::vector<int> cells(static_cast<std::size_t>(m) * m);
  for (int xv = 0; xv < m; ++xv) {
    const auto x = codec.decode(xv);
    for (int yv = 0; yv < m; ++yv) {
      const auto y = codec.decode(yv);
      cells[static_cast<std::size_t>(xv) * m + yv] =
          codec.encode({q.drd(x[0], y[0]), q.dld(x[1], y[1]), q.mul(x[2], y[2])});
    }
  }
  return Quasigroup::from_op_table(OpTable::from_flat(m, std::move(cells)));
}

std::array<int, 3> delta_cell(const Quasigroup& q, const std::array<int, 3>& x,
                              const std::array<int, 3>& y) {
  return {q.drd(x[1], y[2]), q.dld(x[2], y[0]), q.mul(x[0], y[1])};
}

Quasigroup delta_object(const Quasigroup& q) {
  const int n = q.order();
  const TripleCodec codec{n};
  check_materializable(codec.size());
  const int m = codec.size();
  std::vector<int> cells(static_cast<std::size_t>(m) * m);
  for (int xv = 0; xv < m; ++xv) {
    const auto x = codec.decode(xv);
    for (int yv = 0; yv < m; ++yv) {
      cells[static_cast<std::size_t>(xv) * m + yv] = codec.encode(delta_cell(q, x, codec.decode(yv)));
    }
  }
  return Quasigroup::from_op_table(OpTable::from_flat(m, std::move(cells)));
}

TwistedQuasigroup twisted_semisymmetrization(const Quasigroup& q) {
  // x nabla3 y = z  iff  y nabla1 z = x  iff  z nabla2 x = y, so nabla1 and
  // nabla2 are the dual divisions of nabla3.
  return twisted_from(delta_object(q));
}

Homomorphism delta_arrow(const Homotopy& h) {
  if (!is_homotopy(h)) {
    throw input_error("delta_arrow: the given triple is not a homotopy");
  }
  const TripleCodec dom_codec{h.dom.order()};
  const TripleCodec cod_codec{h.cod.order()};
  std::vector<int> map(static_cast<std::size_t>(dom_codec.size()));
  for (int v = 0; v < dom_codec.size(); ++v) {
    const auto x = dom_codec.decode(v);
    map[v] = cod_codec.encode({h.f[0][x[0]], h.f[1][x[1]], h.f[2][x[2]]});
  }
  return Homomorphism{delta_object(h.dom), delta_object(h.cod), std::move(map)};
}

std::string to_string(GammaVariant v) {
  switch (v) {
    case GammaVariant::V12: return "v12";
    case GammaVariant::V23: return "v23";
    case GammaVariant::V31Verbatim: return "v31-verbatim";
    case GammaVariant::V31Symmetric: return "v31-symmetric";
  }
  return "?";
}

std::array<int, 2> gamma_cell(const Quasigroup& q, GammaVariant v, const std::array<int, 2>& x,
                              const std::array<int, 2>& y) {
  // Operation indexing: o1 = drd, o2 = dld, o3 = mul.
  switch (v) {
    case GammaVariant::V12: {
      int z = q.mul(x[0], y[1]);
      return {q.drd(x[1], z), q.dld(z, y[0])};
    }
    case GammaVariant::V23: {
      int z = q.drd(x[0], y[1]);
      return {q.dld(x[1], z), q.mul(z, y[0])};
    }
    case GammaVariant::V31Verbatim: {
      int z = q.dld(x[0], y[1]);
      return {q.mul(x[1], z), q.drd(z, y[1])};
    }
    case GammaVariant::V31Symmetric: {
      int z = q.dld(x[0], y[1]);
      return {q.mul(x[1], z), q.drd(z, y[0])};
    }
  }
  throw input_error("unknown gamma variant");
}

std::vector<std::vector<int>> gamma_cells(const Quasigroup& q, GammaVariant v) {
  const PairCodec codec{q.order()};
  check_materializable(codec.size());
  const int m = codec.size();
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  for (int xv = 0; xv < m; ++xv) {
    const auto x = codec.decode(xv);
    for (int yv = 0; yv < m; ++yv) {
      cells[xv][yv] = codec.encode(gamma_cell(q, v, x, codec.decode(yv)));
    }
  }
  return cells;
}

Quasigroup gamma_object(const Quasigroup& q, GammaVariant v) {
  auto cells = gamma_cells(q, v);
  if (!validate_latin(cells)) {
    throw input_error("gamma variant " + to_string(v) + " did not produce a Latin square");
  }
  return Quasigroup::from_mul_table(cells);
}

GammaVariant v31_default_variant() {
  static const GammaVariant cached = [] {
    for (int n = 1; n <= 3; ++n) {
      for (const Quasigroup& q : all_quasigroups_of_order(n)) {
        auto cells = gamma_cells(q, GammaVariant::V31Verbatim);
        if (!validate_latin(cells)) return GammaVariant::V31Symmetric;
        if (!is_semisymmetric(Quasigroup::from_mul_table(cells))) {
          return GammaVariant::V31Symmetric;
        }
      }
    }
    return GammaVariant::V31Verbatim;
  }();
  return cached;
}

Homomorphism gamma_arrow(const Homotopy& h) {
  if (!is_homotopy(h)) {
    throw input_error("gamma_arrow: the given triple is not a homotopy");
  }
  const PairCodec dom_codec{h.dom.order()};
  const PairCodec cod_codec{h.cod.order()};
  std::vector<int> map(static_cast<std::size_t>(dom_codec.size()));
  for (int v = 0; v < dom_codec.size(); ++v) {
    const auto x = dom_codec.decode(v);
    map[v] = cod_codec.encode({h.f[0][x[0]], h.f[1][x[1]]});
  }
  return Homomorphism{gamma_object(h.dom), gamma_object(h.cod), std::move(map)};
}

TaggedQuasigroup gamma_tagged(const Quasigroup& q) {
  return TaggedQuasigroup{gamma_object(q, GammaVariant::V12), canonical_tag(q)};
}

std::array<int, 2> pair_swap(const std::array<int, 2>& x) { return {x[1], x[0]}; }

std::array<int, 2> pair_left(const Quasigroup& q, const std::array<int, 2>& x,
                             const std::array<int, 2>& y) {
  return {q.mul(x[0], y[0]), y[1]};
}

std::array<int, 2> pair_right(const Quasigroup& q, const std::array<int, 2>& y,
                              const std::array<int, 2>& x) {
  return {x[0], q.mul(x[1], y[1])};
}

std::array<int, 2> pair_otimes(const Quasigroup& q, const std::array<int, 2>& a,
                               const std::array<int, 2>& b) {
  return {q.drd(a[0], b[0]), q.dld(a[1], b[1])};
}

std::array<int, 2> gamma_cell_abstract(const Quasigroup& q, const std::array<int, 2>& x,
                                       const std::array<int, 2>& y) {
  return pair_otimes(q, pair_right(q, y, pair_swap(x)), pair_left(q, x, pair_swap(y)));
}

}  // namespace qss
