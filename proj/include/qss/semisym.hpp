#pragma once

#include <array>
#include <string>
#include <vector>

#include "qss/morphisms.hpp"
#include "qss/qcore.hpp"

namespace qss {

/// Row-major packing of (x1,x2,x3) over {0..n-1}; x1 is most significant.
struct TripleCodec {
  int n;

  int size() const { return n * n * n; }
  int encode(const std::array<int, 3>& x) const { return (x[0] * n + x[1]) * n + x[2]; }
  std::array<int, 3> decode(int v) const { return {v / (n * n), (v / n) % n, v % n}; }
};

/// Row-major packing of (x1,x2); x1 most significant.
struct PairCodec {
  int n;

  int size() const { return n * n; }
  int encode(const std::array<int, 2>& x) const { return x[0] * n + x[1]; }
  std::array<int, 2> decode(int v) const { return {v / n, v % n}; }
};

/// Largest order a materializing construction will build; beyond this the
/// table alone outgrows desk scale, so the constructors refuse with a
/// budget_error.
inline constexpr int kMaxMaterializedOrder = 3000;

/// Direct cube product: (x1,x2,x3) o (y1,y2,y3) = (x1 drd y1, x2 dld y2, x3*y3).
Quasigroup otimes_cube(const Quasigroup& q);

/// One cell of the cube semisymmetrization without materializing the table:
/// (x1,x2,x3) o (y1,y2,y3) = (x2 drd y3, x3 dld y1, x1*y2).
std::array<int, 3> delta_cell(const Quasigroup& q, const std::array<int, 3>& x,
                              const std::array<int, 3>& y);

/// The order-n^3 semisymmetric quasigroup with the delta_cell table.
Quasigroup delta_object(const Quasigroup& q);

/// The triple (nabla1, nabla2, nabla3) where nabla3 is the delta table and
/// nabla1/nabla2 its dual divisions; the three tables come out identical.
TwistedQuasigroup twisted_semisymmetrization(const Quasigroup& q);

/// Arrow map of the cube functor: (f1,f2,f3) -> f1 x f2 x f3 between delta
/// objects. Non-homotopy input is an input_error.
Homomorphism delta_arrow(const Homotopy& h);

/// The square semisymmetrization formula family. V12 is the default; the two
/// V31 readings differ in the last argument of the outer operation (y2 as
/// printed verbatim in the source formula vs y1 following the index pattern),
/// and only one of them survives the Latin/semisymmetry sweep.
enum class GammaVariant { V12, V23, V31Verbatim, V31Symmetric };

std::string to_string(GammaVariant v);

std::array<int, 2> gamma_cell(const Quasigroup& q, GammaVariant v, const std::array<int, 2>& x,
                              const std::array<int, 2>& y);

/// Raw order-n^2 table of the chosen variant; not guaranteed Latin for the
/// verbatim V31 reading.
std::vector<std::vector<int>> gamma_cells(const Quasigroup& q, GammaVariant v);

/// The order-n^2 quasigroup of the chosen variant; throws input_error when
/// the variant's table is not Latin.
Quasigroup gamma_object(const Quasigroup& q, GammaVariant v = GammaVariant::V12);

/// Picks the V31 reading empirically: V31Verbatim if it yields Latin,
/// semisymmetric tables on every quasigroup of order <= 3, else V31Symmetric.
/// Computed once and cached.
GammaVariant v31_default_variant();

/// Arrow map of the square functor (V12): (f1,f2,f3) -> f1 x f2.
Homomorphism gamma_arrow(const Homotopy& h);

/// Square semisymmetrization paired with a canonical serialization of its
/// source, making the object map collision-free: two tagged objects are equal
/// iff both tables and tags are equal.
struct TaggedQuasigroup {
  Quasigroup object;
  std::string tag;

  bool operator==(const TaggedQuasigroup&) const = default;
};

TaggedQuasigroup gamma_tagged(const Quasigroup& q);

// Abstract pair machinery behind the V12 formula; kept as a second route and
// cross-checked against gamma_cell.
std::array<int, 2> pair_swap(const std::array<int, 2>& x);
/// L_x(y) = (x1*y1, y2)
std::array<int, 2> pair_left(const Quasigroup& q, const std::array<int, 2>& x,
                             const std::array<int, 2>& y);
/// R_y(x) = (x1, x2*y2)
std::array<int, 2> pair_right(const Quasigroup& q, const std::array<int, 2>& y,
                              const std::array<int, 2>& x);
/// (a1 drd b1, a2 dld b2)
std::array<int, 2> pair_otimes(const Quasigroup& q, const std::array<int, 2>& a,
                               const std::array<int, 2>& b);
/// x nabla y = R_y(x') otimes L_x(y')
std::array<int, 2> gamma_cell_abstract(const Quasigroup& q, const std::array<int, 2>& x,
                                       const std::array<int, 2>& y);

}  // namespace qss
