#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qss/enumerate.hpp"
#include "qss/qcore.hpp"
#include "test_oracles.hpp"

using namespace qss;

TEST_CASE("validate_latin accepts and rejects by the row/column rule") {
  CHECK(validate_latin({{0, 1}, {1, 0}}));
  CHECK_FALSE(validate_latin({{0, 0}, {1, 1}}));  // repeated column entry
  CHECK(validate_latin({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
  CHECK(validate_latin({{0}}));
}

TEST_CASE("validate_latin distinguishes malformed input from false") {
  CHECK_THROWS_AS(validate_latin({{0, 1}, {1}}), input_error);        // non-square
  CHECK_THROWS_AS(validate_latin({{0, 2}, {2, 0}}), input_error);     // out of range
  CHECK_THROWS_AS(validate_latin({{-1, 0}, {0, -1}}), input_error);   // negative
  CHECK_THROWS_AS(validate_latin({}), input_error);                   // empty
}

TEST_CASE("from_mul_table materializes the division tables") {
  SUBCASE("order 1") {
    Quasigroup q = oracles::order1();
    CHECK(q.mul(0, 0) == 0);
    CHECK(q.rd(0, 0) == 0);
    CHECK(q.ld(0, 0) == 0);
  }
  SUBCASE("mod-2 addition: both divisions equal the multiplication") {
    Quasigroup q = oracles::z2_plus();
    CHECK(q.rdiv_table() == q.mul_table());
    CHECK(q.ldiv_table() == q.mul_table());
  }
  SUBCASE("mod-3 addition: divisions are subtraction, derived by hand") {
    Quasigroup q = oracles::z3_plus();
    // rd(b,a) = b-a mod 3; ld(a,b) = b-a mod 3
    const std::vector<std::vector<int>> rdiv = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    const std::vector<std::vector<int>> ldiv = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        CHECK(q.rd(a, b) == rdiv[a][b]);
        CHECK(q.ld(a, b) == ldiv[a][b]);
      }
    }
  }
  SUBCASE("non-Latin input is an input error") {
    CHECK_THROWS_AS(Quasigroup::from_mul_table({{0, 0}, {1, 1}}), input_error);
  }
}

TEST_CASE("the four defining axioms hold cellwise, exhaustively to order 5") {
  for (int n = 1; n <= 5; ++n) {
    EnumerationConfig cfg;
    cfg.order = n;
    std::uint64_t violations = 0;
    std::uint64_t squares = 0;
    enumerate_latin_squares(cfg, [n, &violations, &squares](const Quasigroup& q) {
      ++squares;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          int xy = q.mul(x, y);
          if (q.rd(xy, y) != x) ++violations;
          if (q.ld(x, xy) != y) ++violations;
          if (q.mul(q.rd(x, y), y) != x) ++violations;
          if (q.mul(x, q.ld(x, y)) != y) ++violations;
        }
      }
      return true;
    });
    CHECK(violations == 0);
    CHECK(squares == count_latin_squares(cfg));
  }
}

TEST_CASE("apply evaluates all six parastrophes infix") {
  Quasigroup z2 = oracles::z2_plus();
  Quasigroup z3 = oracles::z3_plus();
  CHECK(apply(z2, ParastropheKind::DualRDiv, 0, 1) == 1);  // 0 drd 1 = 1/0 = 1
  CHECK(apply(z3, ParastropheKind::LDiv, 1, 0) == 2);      // 1+y=0 -> y=2
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(apply(z3, ParastropheKind::Mul, a, b) == apply(z3, ParastropheKind::DualMul, b, a));
      CHECK(apply(z3, ParastropheKind::RDiv, a, b) == apply(z3, ParastropheKind::DualRDiv, b, a));
      CHECK(apply(z3, ParastropheKind::LDiv, a, b) == apply(z3, ParastropheKind::DualLDiv, b, a));
    }
  }
  CHECK_THROWS_AS(apply(z2, ParastropheKind::Mul, 0, 2), input_error);
  CHECK_THROWS_AS(apply(z2, ParastropheKind::Mul, -1, 0), input_error);
}

TEST_CASE("parastrophe tables") {
  SUBCASE("commutative source: dual-mul is the identity transform") {
    Quasigroup z2 = oracles::z2_plus();
    CHECK(parastrophe(z2, ParastropheKind::DualMul) == z2);
    CHECK(parastrophe(z2, ParastropheKind::Mul) == z2);
  }
  SUBCASE("mod-3 rdiv cell = subtraction") {
    Quasigroup p = parastrophe(oracles::z3_plus(), ParastropheKind::RDiv);
    for (int b = 0; b < 3; ++b) {
      for (int a = 0; a < 3; ++a) CHECK(p.mul(b, a) == ((b - a) % 3 + 3) % 3);
    }
  }
  SUBCASE("symmetry action on all quasigroups of order <= 3") {
    for (const Quasigroup& q : quasigroup_catalog(3)) {
      CHECK(parastrophe(parastrophe(q, ParastropheKind::DualMul), ParastropheKind::DualMul) == q);
      CHECK(parastrophe(parastrophe(q, ParastropheKind::RDiv), ParastropheKind::RDiv) == q);
      CHECK(parastrophe(parastrophe(q, ParastropheKind::LDiv), ParastropheKind::LDiv) == q);
      // Every parastrophe is Latin by construction; spot the table contract.
      for (ParastropheKind k : kAllParastrophes) {
        CHECK(parastrophe(q, k).order() == q.order());
      }
    }
  }
}

TEST_CASE("semisymmetry report") {
  CHECK(semisymmetry_report(oracles::z2_plus()).all());
  CHECK(semisymmetry_report(oracles::z3_neg()).all());
  SUBCASE("mod-3 addition fails every flag") {
    SemisymmetryReport rep = semisymmetry_report(oracles::z3_plus());
    for (bool f : rep.flags()) CHECK_FALSE(f);
  }
  SUBCASE("the five flags agree on every quasigroup of order <= 4") {
    for (const Quasigroup& q : quasigroup_catalog(4)) {
      CHECK(semisymmetry_report(q).all_equal());
    }
  }
}

TEST_CASE("twisted quasigroups") {
  SUBCASE("dual-division triple of a quasigroup satisfies the axioms") {
    TwistedQuasigroup t = twisted_from(oracles::z2_plus());
    CHECK(is_twisted_quasigroup(t));
    CHECK(t.op1 == oracles::z2_plus().mul_table());  // everything is + over Z2
  }
  SUBCASE("(mul,mul,mul) over mod-3 addition is not twisted") {
    OpTable m = oracles::z3_plus().mul_table();
    CHECK_FALSE(is_twisted_quasigroup(TwistedQuasigroup{m, m, m}));
  }
  SUBCASE("order-1 triple is twisted") {
    CHECK(is_twisted_quasigroup(twisted_from(oracles::order1())));
  }
  SUBCASE("order mismatch is an input error") {
    TwistedQuasigroup bad{oracles::z2_plus().mul_table(), oracles::z3_plus().mul_table(),
                          oracles::z2_plus().mul_table()};
    CHECK_THROWS_AS(is_twisted_quasigroup(bad), input_error);
  }
}

TEST_CASE("cyclic rotation of twisted triples") {
  SUBCASE("three rotations are the identity") {
    for (const Quasigroup& q : quasigroup_catalog(3)) {
      TwistedQuasigroup t = twisted_from(q);
      CHECK(cyclic_rotate(cyclic_rotate(cyclic_rotate(t))) == t);
    }
  }
  SUBCASE("rotation preserves twistedness, order <= 4") {
    for (const Quasigroup& q : quasigroup_catalog(4)) {
      TwistedQuasigroup t = twisted_from(q);
      CHECK(is_twisted_quasigroup(t));
      TwistedQuasigroup r1 = cyclic_rotate(t);
      CHECK(is_twisted_quasigroup(r1));
      CHECK(is_twisted_quasigroup(cyclic_rotate(r1)));
    }
  }
  SUBCASE("rotation preserves semisymmetric twistedness, order <= 3") {
    int seen = 0;
    for (const Quasigroup& q : quasigroup_catalog(3)) {
      TwistedQuasigroup t = twisted_from(q);
      if (!is_semisymmetric_twisted(t)) continue;
      ++seen;
      CHECK(is_semisymmetric_twisted(cyclic_rotate(t)));
      CHECK(is_semisymmetric_twisted(cyclic_rotate(cyclic_rotate(t))));
    }
    CHECK(seen > 0);  // the sweep is not vacuous
    // Semisymmetric source <-> semisymmetric dual triple.
    for (const Quasigroup& q : quasigroup_catalog(3)) {
      CHECK(is_semisymmetric_twisted(twisted_from(q)) == is_semisymmetric(q));
    }
  }
}

TEST_CASE("biquasigroup reconstruction") {
  SUBCASE("round trip over every quasigroup of order <= 4") {
    for (const Quasigroup& q : quasigroup_catalog(4)) {
      Biquasigroup b = biquasigroup_from(q);
      CHECK(is_biquasigroup(b));
      CHECK(reconstruct_biquasigroup_mul(b) == q);
    }
  }
  SUBCASE("mismatched dual pair is rejected") {
    Biquasigroup mixed{biquasigroup_from(oracles::z3_plus()).opR,
                       biquasigroup_from(oracles::z3_neg()).opL};
    CHECK_FALSE(is_biquasigroup(mixed));
  }
}
