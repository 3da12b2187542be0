#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qss/enumerate.hpp"
#include "qss/morphisms.hpp"
#include "test_oracles.hpp"

using namespace qss;

namespace {
const std::vector<int> id2{0, 1};
const std::vector<int> s2{1, 0};  // x -> x+1 mod 2
}  // namespace

TEST_CASE("is_homomorphism") {
  Quasigroup z2 = oracles::z2_plus();
  Quasigroup z3 = oracles::z3_plus();
  CHECK(is_homomorphism(z2, z2, id2));
  CHECK_FALSE(is_homomorphism(z2, z2, s2));  // s(0)+s(0)=0 != s(0+0)=1
  // Constant maps pass exactly at idempotents: 0+0=0 but 1+1=2.
  CHECK(is_homomorphism(z3, z3, {0, 0, 0}));
  CHECK_FALSE(is_homomorphism(z3, z3, {1, 1, 1}));
  CHECK_THROWS_AS(is_homomorphism(z2, z2, {0}), input_error);
  CHECK_THROWS_AS(is_homomorphism(z2, z2, {0, 2}), input_error);
}

TEST_CASE("is_homotopy") {
  Quasigroup z2 = oracles::z2_plus();
  CHECK(is_homotopy(identity_homotopy(z2)));
  CHECK(is_homotopy(z2, z2, s2, id2, s2));  // (x+1)+y = (x+y)+1
  CHECK_FALSE(is_homotopy(z2, z2, s2, s2, s2));
}

TEST_CASE("the five homotopy identities agree") {
  Quasigroup z2 = oracles::z2_plus();
  Quasigroup z3 = oracles::z3_plus();
  SUBCASE("positive examples are all-true") {
    auto rep = homotopy_identity_report(z3, z3, {0, 1, 2}, {0, 1, 2}, {0, 1, 2});
    CHECK(rep.all_true());
    rep = homotopy_identity_report(z2, z2, s2, id2, s2);
    CHECK(rep.all_true());
  }
  SUBCASE("negative example is all-false") {
    auto rep = homotopy_identity_report(z2, z2, s2, s2, s2);
    for (bool f : rep.flags()) CHECK_FALSE(f);
  }
  SUBCASE("flags agree for every triple of maps over order-<=2 pairs") {
    std::vector<Quasigroup> catalog = quasigroup_catalog(2);
    for (const Quasigroup& q : catalog) {
      for (const Quasigroup& r : catalog) {
        std::vector<int> all(3 * static_cast<std::size_t>(q.order()), 0);
        do {
          const std::size_t n = static_cast<std::size_t>(q.order());
          std::vector<int> f1(all.begin(), all.begin() + n);
          std::vector<int> f2(all.begin() + n, all.begin() + 2 * n);
          std::vector<int> f3(all.begin() + 2 * n, all.end());
          CHECK(homotopy_identity_report(q, r, f1, f2, f3).all_equal());
        } while (oracles::next_vector(all, r.order()));
      }
    }
  }
  SUBCASE("flags agree for all 3^9 triples on a mixed order-3 pair") {
    Quasigroup q = oracles::z3_plus();
    Quasigroup r = oracles::z3_neg();
    std::vector<int> all(9, 0);
    std::uint64_t disagreements = 0;
    do {
      std::vector<int> f1(all.begin(), all.begin() + 3);
      std::vector<int> f2(all.begin() + 3, all.begin() + 6);
      std::vector<int> f3(all.begin() + 6, all.end());
      if (!homotopy_identity_report(q, r, f1, f2, f3).all_equal()) ++disagreements;
    } while (oracles::next_vector(all, 3));
    CHECK(disagreements == 0);
  }
}

TEST_CASE("complete_homotopy") {
  Quasigroup z2 = oracles::z2_plus();
  SUBCASE("identity pair completes to the identity") {
    auto h = complete_homotopy(z2, z2, id2, id2);
    REQUIRE(h.has_value());
    CHECK(h->f[2] == id2);
  }
  SUBCASE("(s,id) completes to (s,id,s)") {
    auto h = complete_homotopy(z2, z2, s2, id2);
    REQUIRE(h.has_value());
    CHECK(h->f[2] == s2);
  }
  SUBCASE("(s,s) extends to (s,s,id)") {
    auto h = complete_homotopy(z2, z2, s2, s2);
    REQUIRE(h.has_value());
    CHECK(h->f[2] == id2);
    CHECK(is_homotopy(*h));
  }
  SUBCASE("(id, const-0) does not extend") {
    CHECK_FALSE(complete_homotopy(z2, z2, id2, {0, 0}).has_value());
  }
  SUBCASE("accepted set equals the brute-force filter, order <= 2") {
    for (const Quasigroup& q : quasigroup_catalog(2)) {
      for (const Quasigroup& r : quasigroup_catalog(2)) {
        auto expected = oracles::homotopies_by_filter(q, r);
        auto got = enumerate_homotopies(q, r);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          // Both are emitted in lexicographic order of (f1,f2), and f3 is
          // determined, so the sequences match exactly.
          CHECK(got[i].f[0] == expected[i][0]);
          CHECK(got[i].f[1] == expected[i][1]);
          CHECK(got[i].f[2] == expected[i][2]);
        }
      }
    }
  }
  SUBCASE("order-3 spot check against the filter") {
    Quasigroup q = oracles::z3_plus();
    auto expected = oracles::homotopies_by_filter(q, q);
    auto got = enumerate_homotopies(q, q);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("composition and identities") {
  Quasigroup z2 = oracles::z2_plus();
  Homotopy s_id_s{z2, z2, {s2, id2, s2}};
  SUBCASE("composition of the shift homotopy with itself is the identity") {
    Homotopy c = compose_homotopies(s_id_s, s_id_s);
    CHECK(c.f[0] == id2);
    CHECK(c.f[1] == id2);
    CHECK(c.f[2] == id2);
  }
  SUBCASE("identity laws and closure on enumerated order-2 homotopies") {
    for (const Quasigroup& q : quasigroup_catalog(2)) {
      for (const Quasigroup& r : quasigroup_catalog(2)) {
        for (const Homotopy& h : enumerate_homotopies(q, r)) {
          Homotopy left = compose_homotopies(identity_homotopy(r), h);
          Homotopy right = compose_homotopies(h, identity_homotopy(q));
          CHECK(left.f == h.f);
          CHECK(right.f == h.f);
          CHECK(is_homotopy(h));
        }
      }
    }
  }
  SUBCASE("associativity over composable order-2 triples") {
    Quasigroup q = oracles::z2_plus();
    auto arrows = enumerate_homotopies(q, q);
    for (const Homotopy& f : arrows) {
      for (const Homotopy& g : arrows) {
        for (const Homotopy& h : arrows) {
          Homotopy lhs = compose_homotopies(h, compose_homotopies(g, f));
          Homotopy rhs = compose_homotopies(compose_homotopies(h, g), f);
          CHECK(lhs.f == rhs.f);
          CHECK(is_homotopy(lhs));
        }
      }
    }
  }
  SUBCASE("domain mismatch is an input error") {
    CHECK_THROWS_AS(compose_homotopies(identity_homotopy(oracles::z3_plus()), s_id_s),
                    input_error);
  }
}

TEST_CASE("enumerate_homomorphisms") {
  SUBCASE("mod-2 addition has exactly the constant-0 and identity maps") {
    auto homs = enumerate_homomorphisms(oracles::z2_plus(), oracles::z2_plus());
    REQUIRE(homs.size() == 2);
    CHECK(homs[0].map == std::vector<int>{0, 0});  // lexicographic order
    CHECK(homs[1].map == std::vector<int>{0, 1});
  }
  SUBCASE("order 1") {
    CHECK(enumerate_homomorphisms(oracles::order1(), oracles::order1()).size() == 1);
  }
  SUBCASE("count matches the 27-map filter for mod-3 addition") {
    auto expected = oracles::homomorphisms_by_filter(oracles::z3_plus(), oracles::z3_plus());
    auto got = enumerate_homomorphisms(oracles::z3_plus(), oracles::z3_plus());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].map == expected[i]);
  }
  SUBCASE("budget guard") {
    Budget tiny(10);
    CHECK_THROWS_AS(enumerate_homomorphisms(oracles::z3_plus(), oracles::z3_plus(), tiny),
                    budget_error);
  }
}

TEST_CASE("enumerated homotopies satisfy the whole identity family") {
  for (const Quasigroup& q : quasigroup_catalog(2)) {
    for (const Quasigroup& r : quasigroup_catalog(2)) {
      for (const Homotopy& h : enumerate_homotopies(q, r)) {
        CHECK(homotopy_identity_report(q, r, h.f[0], h.f[1], h.f[2]).all_true());
      }
    }
  }
  CHECK(enumerate_homotopies(oracles::order1(), oracles::order1()).size() == 1);
}

TEST_CASE("find_isomorphism") {
  SUBCASE("every object is isomorphic to itself") {
    for (const Quasigroup& q : quasigroup_catalog(3)) {
      auto iso = find_isomorphism(q, q);
      REQUIRE(iso.has_value());
      CHECK(is_homomorphism(q, q, *iso));
    }
  }
  SUBCASE("the shift is the isomorphism between the two order-2 squares") {
    auto iso = find_isomorphism(oracles::z2_plus(), oracles::z2_oplus());
    REQUIRE(iso.has_value());
    CHECK(*iso == s2);
  }
  SUBCASE("semisymmetry separates the two order-3 classes") {
    CHECK_FALSE(find_isomorphism(oracles::z3_plus(), oracles::z3_neg()).has_value());
  }
  SUBCASE("existence is symmetric") {
    std::vector<Quasigroup> catalog = quasigroup_catalog(3);
    for (const Quasigroup& q : catalog) {
      for (const Quasigroup& r : catalog) {
        CHECK(find_isomorphism(q, r).has_value() == find_isomorphism(r, q).has_value());
      }
    }
  }
  SUBCASE("order mismatch returns empty fast") {
    CHECK_FALSE(find_isomorphism(oracles::z2_plus(), oracles::z3_plus()).has_value());
  }
  SUBCASE("returns the lexicographically least isomorphism") {
    std::vector<Quasigroup> catalog = quasigroup_catalog(3);
    for (const Quasigroup& q : catalog) {
      for (const Quasigroup& r : catalog) {
        if (q.order() != r.order()) continue;
        // Oracle: filter all maps for bijective homomorphisms; the filter
        // iterates in lexicographic order, so the first hit is the least.
        std::optional<std::vector<int>> least;
        for (const auto& m : oracles::homomorphisms_by_filter(q, r)) {
          std::vector<int> sorted = m;
          std::sort(sorted.begin(), sorted.end());
          bool bijective = true;
          for (int i = 0; i < q.order(); ++i) {
            if (sorted[i] != i) bijective = false;
          }
          if (bijective) {
            least = m;
            break;
          }
        }
        CHECK(find_isomorphism(q, r) == least);
      }
    }
  }
}

TEST_CASE("find_isotopy") {
  SUBCASE("identity isotopy always exists") {
    for (const Quasigroup& q : quasigroup_catalog(3)) {
      auto iso = find_isotopy(q, q);
      REQUIRE(iso.has_value());
      CHECK(is_homotopy(*iso));
    }
  }
  SUBCASE("the two order-2 squares are isotopic via (id,id,s)") {
    auto iso = find_isotopy(oracles::z2_plus(), oracles::z2_oplus());
    REQUIRE(iso.has_value());
    CHECK(iso->f[0] == id2);
    CHECK(iso->f[1] == id2);
    CHECK(iso->f[2] == s2);
  }
  SUBCASE("any two order-2 quasigroups are isotopic") {
    auto squares = all_quasigroups_of_order(2);
    REQUIRE(squares.size() == 2);
    for (const Quasigroup& q : squares) {
      for (const Quasigroup& r : squares) {
        CHECK(find_isotopy(q, r).has_value());
      }
    }
  }
  SUBCASE("derived third component is checked for bijectivity") {
    for (const Quasigroup& q : quasigroup_catalog(3)) {
      for (const Quasigroup& r : quasigroup_catalog(3)) {
        if (q.order() != r.order()) continue;
        auto iso = find_isotopy(q, r);
        REQUIRE(iso.has_value());  // same-order small squares are isotopic
        std::vector<int> f3 = iso->f[2];
        std::sort(f3.begin(), f3.end());
        for (int i = 0; i < q.order(); ++i) CHECK(f3[i] == i);
      }
    }
  }
  SUBCASE("budget guard") {
    Budget tiny(1);
    CHECK_THROWS_AS(find_isotopy(oracles::z3_plus(), oracles::z3_plus(), tiny), budget_error);
  }
}
