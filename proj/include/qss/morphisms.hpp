#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qss/budget.hpp"
#include "qss/qcore.hpp"

namespace qss {

/// Single structure-preserving map f with f(x)*f(y) = f(x*y).
struct Homomorphism {
  Quasigroup dom;
  Quasigroup cod;
  std::vector<int> map;
};

/// Triple of maps (f1,f2,f3) with f1(x)*f2(y) = f3(x*y); an isotopy when all
/// three are bijections.
struct Homotopy {
  Quasigroup dom;
  Quasigroup cod;
  std::array<std::vector<int>, 3> f;
};

bool is_homomorphism(const Quasigroup& q, const Quasigroup& r, const std::vector<int>& map);
bool is_homomorphism(const Homomorphism& h);

bool is_homotopy(const Quasigroup& q, const Quasigroup& r, const std::vector<int>& f1,
                 const std::vector<int>& f2, const std::vector<int>& f3);
bool is_homotopy(const Homotopy& h);

/// One flag per member of the equivalent identity family
///   f1(x)*f2(y) = f3(x*y)
///   f3(x)/f2(y) = f1(x/y)        f2(x) drd f3(y) = f1(x drd y)
///   f1(x)\f3(y) = f2(x\y)        f3(x) dld f1(y) = f2(x dld y)
/// The five flags agree for every triple of maps; the tests sweep that.
struct HomotopyIdentityReport {
  bool mul_id;
  bool rdiv_id;
  bool ldiv_id;
  bool drd_id;
  bool dld_id;

  std::array<bool, 5> flags() const { return {mul_id, rdiv_id, ldiv_id, drd_id, dld_id}; }
  bool all_true() const { return mul_id && rdiv_id && ldiv_id && drd_id && dld_id; }
  bool all_equal() const {
    return mul_id == rdiv_id && rdiv_id == ldiv_id && ldiv_id == drd_id && drd_id == dld_id;
  }
};

HomotopyIdentityReport homotopy_identity_report(const Quasigroup& q, const Quasigroup& r,
                                                const std::vector<int>& f1,
                                                const std::vector<int>& f2,
                                                const std::vector<int>& f3);

/// The third component of a homotopy is determined by the first two: the
/// candidate f3(x) = f1(0)*f2(0\x) is verified globally, and is returned only
/// when the verification passes. An empty result is not an error.
std::optional<Homotopy> complete_homotopy(const Quasigroup& q, const Quasigroup& r,
                                          const std::vector<int>& f1, const std::vector<int>& f2);

Homotopy identity_homotopy(const Quasigroup& q);

/// g after f; throws input_error when cod(f) != dom(g).
Homotopy compose_homotopies(const Homotopy& g, const Homotopy& f);

/// All homomorphisms q -> r in lexicographic order of the map vector.
/// The |r|^|q| candidate space is charged against the budget up front.
std::vector<Homomorphism> enumerate_homomorphisms(const Quasigroup& q, const Quasigroup& r,
                                                  Budget& budget);
std::vector<Homomorphism> enumerate_homomorphisms(const Quasigroup& q, const Quasigroup& r);

/// All homotopies q -> r, iterating only the (f1,f2) pairs and completing f3.
/// Emission is lexicographic on the flattened (f1,f2) vector, which matches
/// lexicographic order on (f1,f2,f3).
std::vector<Homotopy> enumerate_homotopies(const Quasigroup& q, const Quasigroup& r,
                                           Budget& budget);
std::vector<Homotopy> enumerate_homotopies(const Quasigroup& q, const Quasigroup& r);

/// Backtracking search for a bijective homomorphism, extending the partial
/// map in element order with images tried in increasing order, pruning on
/// mul-consistency of the assigned prefix. Returns the lexicographically
/// least isomorphism, or empty.
std::optional<std::vector<int>> find_isomorphism(const Quasigroup& q, const Quasigroup& r,
                                                 Budget& budget);
std::optional<std::vector<int>> find_isomorphism(const Quasigroup& q, const Quasigroup& r);

/// Iterates bijections (f1,f2) in lexicographic order and derives f3 from
/// f3(x*y) = f1(x)*f2(y); accepts iff f3 is well defined and bijective.
std::optional<Homotopy> find_isotopy(const Quasigroup& q, const Quasigroup& r, Budget& budget);
std::optional<Homotopy> find_isotopy(const Quasigroup& q, const Quasigroup& r);

}  // namespace qss
