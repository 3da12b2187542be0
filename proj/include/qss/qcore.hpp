#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qss/errors.hpp"

namespace qss {

/// Square operation table over the canonical carrier {0,...,n-1}, row-major.
/// Construction enforces the Latin property (every row and every column a
/// permutation), so an OpTable always describes a quasigroup operation. Use
/// validate_latin on raw cells when that is not yet known.
class OpTable {
 public:
  OpTable() = default;

  /// Throws input_error on malformed or non-Latin cells.
  static OpTable from_cells(const std::vector<std::vector<int>>& cells);
  static OpTable from_flat(int order, std::vector<int> cells);

  int order() const { return order_; }
  int at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(col)];
  }
  const std::vector<int>& cells() const { return cells_; }

  bool operator==(const OpTable&) const = default;

 private:
  int order_ = 0;
  std::vector<int> cells_;  // order_ * order_ entries
};

/// True iff every row and column of `cells` is a permutation of {0,...,n-1}.
/// Malformed input (empty, non-square, out-of-range entry) is an input_error,
/// which is distinct from returning false.
bool validate_latin(const std::vector<std::vector<int>>& cells);
bool validate_latin_flat(int order, const std::vector<int>& cells);

/// The six operations derived from a quasigroup multiplication by permuting
/// the argument/result roles: mul, the two divisions, and their duals.
enum class ParastropheKind { Mul, RDiv, LDiv, DualMul, DualRDiv, DualLDiv };

inline constexpr std::array<ParastropheKind, 6> kAllParastrophes = {
    ParastropheKind::Mul,     ParastropheKind::RDiv,     ParastropheKind::LDiv,
    ParastropheKind::DualMul, ParastropheKind::DualRDiv, ParastropheKind::DualLDiv};

std::string to_string(ParastropheKind kind);
std::optional<ParastropheKind> parastrophe_from_string(std::string_view name);

/// Finite quasigroup on {0,...,n-1}: a Latin multiplication table plus the
/// two division tables, materialized at construction.
///
/// Conventions, written infix left-to-right:
///   mul(a,b) = a*b
///   rd(a,b)  = a/b   the unique z with z*b = a
///   ld(a,b)  = a\b   the unique z with a*z = b
///   opp(a,b) = b*a
///   drd(a,b) = b/a   (dual right division)
///   dld(a,b) = b\a   (dual left division)
class Quasigroup {
 public:
  Quasigroup() = default;

  /// Throws input_error when cells are malformed or not Latin.
  static Quasigroup from_mul_table(const std::vector<std::vector<int>>& cells);
  static Quasigroup from_op_table(OpTable mul);

  int order() const { return mul_.order(); }
  int mul(int a, int b) const { return mul_.at(a, b); }
  int rd(int a, int b) const { return rdiv_.at(a, b); }
  int ld(int a, int b) const { return ldiv_.at(a, b); }
  int opp(int a, int b) const { return mul_.at(b, a); }
  int drd(int a, int b) const { return rdiv_.at(b, a); }
  int dld(int a, int b) const { return ldiv_.at(b, a); }

  const OpTable& mul_table() const { return mul_; }
  const OpTable& rdiv_table() const { return rdiv_; }
  const OpTable& ldiv_table() const { return ldiv_; }

  // Divisions are determined by mul, so mul equality is object equality.
  bool operator==(const Quasigroup& other) const { return mul_ == other.mul_; }

 private:
  OpTable mul_;
  OpTable rdiv_;  // rdiv.at(b, a) = b/a, the z with z*a = b
  OpTable ldiv_;  // ldiv.at(a, b) = a\b, the z with a*z = b
};

/// apply(q, kind, a, b) evaluates `a kind b` infix; out-of-range elements are
/// an input_error.
int apply(const Quasigroup& q, ParastropheKind kind, int a, int b);

/// The quasigroup whose multiplication is the given derived operation.
Quasigroup parastrophe(const Quasigroup& q, ParastropheKind kind);

/// One flag per equivalent semisymmetry axiom; the flags always agree, which
/// the test suite checks as an invariant.
struct SemisymmetryReport {
  bool mul_left;             // x*(y*x) = y
  bool mul_right;            // (x*y)*x = y
  bool rdiv_is_opposite;     // x/y = y*x
  bool ldiv_is_opposite;     // x\y = y*x
  bool divisions_coincide;   // x\y = x/y

  std::array<bool, 5> flags() const {
    return {mul_left, mul_right, rdiv_is_opposite, ldiv_is_opposite, divisions_coincide};
  }
  bool all() const {
    return mul_left && mul_right && rdiv_is_opposite && ldiv_is_opposite && divisions_coincide;
  }
  bool all_equal() const {
    return mul_left == mul_right && mul_right == rdiv_is_opposite &&
           rdiv_is_opposite == ldiv_is_opposite && ldiv_is_opposite == divisions_coincide;
  }
};

SemisymmetryReport semisymmetry_report(const Quasigroup& q);
bool is_semisymmetric(const Quasigroup& q);

/// Three-operation presentation (Q; drd-role, dld-role, mul-role) with the
/// cyclically symmetric axiom set
///   y o1 (x o3 y) = x     (x o3 y) o2 x = y
///   (y o1 x) o3 y = x     x o3 (y o2 x) = y
/// Factories produce axiom-satisfying triples; hand-assembled ones can be
/// verified with is_twisted_quasigroup.
struct TwistedQuasigroup {
  OpTable op1;
  OpTable op2;
  OpTable op3;

  bool operator==(const TwistedQuasigroup&) const = default;
};

/// (drd, dld, mul) of a quasigroup.
TwistedQuasigroup twisted_from(const Quasigroup& q);

/// Cellwise check of the four twisted axioms; order mismatch is an
/// input_error. A raw-cells overload serves unvalidated tables.
bool is_twisted_quasigroup(const TwistedQuasigroup& t);
bool twisted_axioms_hold(const std::vector<std::vector<int>>& op1,
                         const std::vector<std::vector<int>>& op2,
                         const std::vector<std::vector<int>>& op3);

/// Twisted plus op1 = op2 = op3 and the semisymmetry identities on op3.
bool is_semisymmetric_twisted(const TwistedQuasigroup& t);

/// (op1, op2, op3) -> (op2, op3, op1); three rotations are the identity, and
/// rotation preserves (semisymmetric) twistedness.
TwistedQuasigroup cyclic_rotate(const TwistedQuasigroup& t);

/// Two-operation reduct (Q; drd-role, dld-role).
struct Biquasigroup {
  OpTable opR;
  OpTable opL;

  bool operator==(const Biquasigroup&) const = default;
};

Biquasigroup biquasigroup_from(const Quasigroup& q);

/// The unique quasigroup multiplication with x*y = z iff opR(y, z) = x.
Quasigroup reconstruct_biquasigroup_mul(const Biquasigroup& b);

/// True iff some quasigroup has opR, opL as its dual divisions: reconstruct
/// mul from opR and test that its dual left division regenerates opL.
bool is_biquasigroup(const Biquasigroup& b);

}  // namespace qss
