#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qss/budget.hpp"
#include "qss/morphisms.hpp"
#include "qss/semisym.hpp"

namespace qss {

/// The diagonal map x -> (x,x,x) into delta_object(p), which is a
/// homomorphism precisely when p is semisymmetric; a non-semisymmetric
/// source is a precondition_error.
Homomorphism unit_arrow(const Quasigroup& p);

/// Unit and counit at one object; both components pass their respective
/// arrow predicates.
struct AdjunctionWitness {
  Homomorphism unit;
  Homotopy counit;
};

/// Requires a semisymmetric argument (the unit side needs it).
AdjunctionWitness make_adjunction_witness(const Quasigroup& p);

/// Pointwise probe of the same property without the precondition and without
/// materializing the image object.
bool diagonal_is_homomorphism(const Quasigroup& q);

/// The projection triple delta_object(q) -> q; always a homotopy with
/// surjective components.
Homotopy counit_arrow(const Quasigroup& q);

bool counit_components_surjective(const Quasigroup& q);

/// First flag: the composite of the diagonal into the double cube followed by
/// the projection product is the identity on delta_object(q). Second flag:
/// each projection after the diagonal is the identity on p (p must be
/// semisymmetric). Both evaluated pointwise.
std::pair<bool, bool> check_triangular(const Quasigroup& q, const Quasigroup& p);

/// Naturality of the diagonal family on a homomorphism between semisymmetric
/// quasigroups; an invalid arrow is an input_error.
bool check_unit_naturality(const Homomorphism& f);

/// Naturality of the projection family on a homotopy.
bool check_counit_naturality(const Homotopy& h);

enum class FunctorKind { Delta, Gamma };

/// Injectivity of the functor's arrow map on the full homotopy set q -> r.
bool check_faithful(const Quasigroup& q, const Quasigroup& r, FunctorKind functor, Budget& budget);

enum class InjectivityFunctor { Delta, GammaTagged, GammaUntagged };

struct DiagonalWitness {
  std::size_t i;
  std::size_t j;
  int x;
  int y;  // x*y differs between quasigroups i and j of the same order
};

struct ObjectInjectivityReport {
  bool injective = true;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  // For same-order source pairs: the cell where the multiplications differ.
  // The image tables of Delta then differ at the corresponding diagonal pair.
  std::vector<DiagonalWitness> witnesses;
};

ObjectInjectivityReport check_object_injectivity(const std::vector<Quasigroup>& qs,
                                                 InjectivityFunctor functor);

/// Monad-algebra instance attached to a quasigroup: the carrier is the cube
/// semisymmetrization and the structure map sends a triple of carrier
/// elements to their componentwise projections.
struct GfAlgebraInstance {
  Quasigroup carrier;  // order n^3
  int source_order;

  int structure(int u1, int u2, int u3) const {
    const TripleCodec codec{source_order};
    return codec.encode({codec.decode(u1)[0], codec.decode(u2)[1], codec.decode(u3)[2]});
  }
};

GfAlgebraInstance make_gf_algebra(const Quasigroup& q);

/// The structure map as a materialized homomorphism from the double cube;
/// source order <= 2 only (the double cube table grows as n^18).
Homomorphism structure_homomorphism(const GfAlgebraInstance& a);

struct GfCheckMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Sampled;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;

  static GfCheckMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
  static GfCheckMode sampled(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::Sampled, samples, seed};
  }
};

struct GfCheckResult {
  bool unit_law = false;  // structure after the diagonal is the identity
  bool main_law = false;  // the two composites into the carrier agree
  std::uint64_t points_checked = 0;

  bool ok() const { return unit_law && main_law; }
};

/// The unit law is always checked exhaustively (n^3 points). The main law is
/// exhaustive only when its n^27-point domain fits the default budget (order
/// 1); otherwise use sampled mode, which draws fixed-seed points from a
/// minstd linear-congruential generator.
GfCheckResult check_gf_algebra(const Quasigroup& q, GfCheckMode mode);

struct AlgebraMorphismFormResult {
  bool ok = false;        // every qualifying map decomposes into a homotopy triple
  int maps_checked = 0;   // homomorphisms that also satisfied the algebra square
};

/// Enumerates homomorphisms delta_object(q) -> delta_object(r) that commute
/// with the structure maps, and checks that each is the componentwise product
/// of a homotopy recovered from its diagonal values. Source orders above 2
/// are a budget_error.
AlgebraMorphismFormResult check_algebra_morphism_form(const Quasigroup& q, const Quasigroup& r,
                                                      Budget& budget);
AlgebraMorphismFormResult check_algebra_morphism_form(const Quasigroup& q, const Quasigroup& r);

/// Empirical probe of the relationship between isotopy of sources and
/// isomorphism of their images. Reports three independent facts and claims no
/// implication between them. On budget exhaustion the remaining fields stay
/// unset and the report is returned partial.
struct ProbeReport {
  std::optional<bool> isotopic;
  std::optional<bool> delta_images_isomorphic;
  std::optional<bool> gamma_tables_equal;

  bool complete() const {
    return isotopic.has_value() && delta_images_isomorphic.has_value() &&
           gamma_tables_equal.has_value();
  }
};

ProbeReport probe_isotopy_vs_ss_iso(const Quasigroup& q, const Quasigroup& r, Budget& budget);

/// One line of a check report: "CHECK <name> <args> PASS|FAIL [witness]".
struct CheckLine {
  std::string name;
  std::string args;
  bool pass = false;
  std::string witness;
};

std::string format_check_line(const CheckLine& line);
bool all_pass(const std::vector<CheckLine>& lines);

// Sweep drivers behind the `check` CLI verbs. Indexes in the emitted args
// refer to enumeration order within each order.
std::vector<CheckLine> adjunction_sweep(int max_order, Budget& budget);
std::vector<CheckLine> faithful_sweep(int max_order, Budget& budget);
std::vector<CheckLine> gf_sweep(int max_order, std::uint64_t samples, std::uint64_t seed,
                                Budget& budget);
std::vector<CheckLine> object_injectivity_sweep(int max_order, InjectivityFunctor functor);

}  // namespace qss
