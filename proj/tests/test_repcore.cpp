#include <doctest.h>

#include "jacobirep/character.hpp"
#include "jacobirep/lr.hpp"
#include "jacobirep/multiset.hpp"
#include "jacobirep/symgroup.hpp"

using namespace jacobirep;

namespace {
Bipartition bp(std::vector<int> p, std::vector<int> m) {
  return Bipartition{Partition(std::move(p)), Partition(std::move(m))};
}
}  // namespace

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{2, 1}, Partition{2}) == 0);
  // a classical multiplicity-2 value
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);

  // symmetry in the lower arguments for all |lambda| <= 5
  for (int m = 0; m <= 5; ++m)
    for (const Partition& lam : partitions_of(m))
      for (int k = 0; k <= m; ++k)
        for (const Partition& mu : partitions_of(k))
          for (const Partition& nu : partitions_of(m - k))
            CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
}

TEST_CASE("standard tableaux counts") {
  CHECK(standard_tableaux_count(Partition{1, 1, 1}) == 1);
  CHECK(standard_tableaux_count(Partition{2, 1}) == 2);
  CHECK(standard_tableaux_count(Partition{2, 2}) == 2);
  CHECK(standard_tableaux_count(Partition{3, 2}) == 5);
}

TEST_CASE("Young symmetrizers") {
  SymGroupAlgebraElement c1 = young_symmetrizer(Partition{1});
  CHECK(c1.terms.size() == 1);
  CHECK(c1.terms.at(perm_identity(1)) == 1);

  SymGroupAlgebraElement row2 = young_symmetrizer(Partition{2});
  CHECK(row2.terms.size() == 2);
  CHECK(row2.terms.at(Perm{1, 0}) == 1);

  SymGroupAlgebraElement col2 = young_symmetrizer(Partition{1, 1});
  CHECK(col2.terms.at(Perm{1, 0}) == -1);

  // quasi-idempotence c*c = m*c with m > 0 for all |lambda| <= 4
  for (int m = 1; m <= 4; ++m)
    for (const Partition& lam : partitions_of(m)) {
      SymGroupAlgebraElement c = young_symmetrizer(lam);
      SymGroupAlgebraElement cc = c * c;
      REQUIRE(!c.terms.empty());
      Rational scale = 0;
      for (const auto& [p, v] : c.terms) {
        auto it = cc.terms.find(p);
        REQUIRE(it != cc.terms.end());
        if (scale == 0) scale = it->second / v;
      }
      CHECK(scale > 0);
      CHECK(cc == c.scaled(scale));
    }
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dimension(bp({}, {2, 2}), 3) == 6);
  CHECK(weyl_dimension(bp({}, {1, 1, 1}), 3) == 1);
  CHECK(weyl_dimension(bp({}, {2}), 3) == 6);
  CHECK(weyl_dimension(bp({1}, {}), 5) == 5);
  CHECK(weyl_dimension(bp({1, 1}, {3, 2}), 3) == 0);
}

TEST_CASE("irreducible characters") {
  LaurentCharacter std2 = irreducible_character(bp({1}, {}), 2);
  CHECK(std2.terms.size() == 2);
  CHECK(std2.terms.at({1, 0}) == 1);
  CHECK(std2.terms.at({0, 1}) == 1);

  LaurentCharacter dual2 = irreducible_character(bp({}, {1}), 2);
  CHECK(dual2.terms.at({-1, 0}) == 1);
  CHECK(dual2.terms.at({0, -1}) == 1);

  LaurentCharacter adj = irreducible_character(bp({1}, {1}), 2);
  CHECK(adj.terms.at({1, -1}) == 1);
  CHECK(adj.terms.at({-1, 1}) == 1);
  CHECK(adj.terms.at({0, 0}) == 1);
  CHECK(adj.dimension() == 3);

  CHECK_THROWS(irreducible_character(bp({1, 1}, {3, 2}), 3));

  // character at the identity equals the Weyl dimension, exhaustively
  for (int total = 0; total <= 4; ++total)
    for (int ps = 0; ps <= total; ++ps)
      for (const Partition& plus : partitions_of(ps))
        for (const Partition& minus : partitions_of(total - ps)) {
          Bipartition b{plus, minus};
          for (int n = 1; n <= 6; ++n) {
            if (b.vanishes_at(n)) continue;
            CHECK(irreducible_character(b, n).dimension() == weyl_dimension(b, n));
          }
        }
}

TEST_CASE("character products and peeling") {
  LaurentCharacter unit = LaurentCharacter::unit(2);
  LaurentCharacter chiH = irreducible_character(bp({1}, {}), 2);
  CHECK(character_product(unit, chiH) == chiH);
  LaurentCharacter prod = character_product(chiH, irreducible_character(bp({}, {1}), 2));
  CHECK(prod.terms.at({0, 0}) == 2);

  DecompositionMultiset already = peel_decompose(irreducible_character(bp({1}, {}), 3), 3);
  CHECK(already == DecompositionMultiset(3, {{bp({1}, {}), 1}}));

  LaurentCharacter hh = character_product(irreducible_character(bp({1}, {}), 3),
                                          irreducible_character(bp({}, {1}), 3));
  DecompositionMultiset dec = peel_decompose(hh, 3);
  CHECK(dec == DecompositionMultiset(3, {{bp({1}, {1}), 1}, {bp({}, {}), 1}}));
  CHECK(dec.dimension() == 9);

  LaurentCharacter sq = character_product(irreducible_character(bp({1}, {}), 3),
                                          irreducible_character(bp({1}, {}), 3));
  CHECK(peel_decompose(sq, 3) ==
        DecompositionMultiset(3, {{bp({2}, {}), 1}, {bp({1, 1}, {}), 1}}));

  // V_{0,2^2} (x) (H* (x) wedge^2 H) at rank 3, peeled directly
  LaurentCharacter lhs = irreducible_character(bp({}, {2, 2}), 3);
  LaurentCharacter w = irreducible_character(bp({1, 1}, {1}), 3);
  w.add({1, 0, 0}, 1);
  w.add({0, 1, 0}, 1);
  w.add({0, 0, 1}, 1);
  DecompositionMultiset third = peel_decompose(character_product(lhs, w), 3);
  CHECK(third == DecompositionMultiset(3, {{bp({1}, {2, 2}), 1},
                                           {bp({1}, {3, 1}), 1},
                                           {bp({}, {1, 1, 1}), 1},
                                           {bp({}, {2, 1}), 2}}));
}

TEST_CASE("Koike multiplicities") {
  CHECK(koike_multiplicity(bp({1}, {}), bp({}, {1}), bp({}, {})) == 1);
  CHECK(koike_multiplicity(bp({1}, {}), bp({}, {1}), bp({1}, {1})) == 1);
  // one copy of V_{1,4} from each tensor factor of the degree-1 homology;
  // the multiplicity within the V_{1^2,1} factor alone is 1
  CHECK(koike_multiplicity(bp({}, {4}), bp({1, 1}, {1}), bp({1}, {4})) == 1);
  CHECK(koike_multiplicity(bp({}, {4}), bp({1}, {}), bp({1}, {4})) == 1);
}

TEST_CASE("decompose_tensor reproduces the displayed trivial-coefficient rows") {
  // V_{0,4} (x) (H* (x) wedge^2 H) at rank 4
  DecompositionMultiset a4(4, {{bp({}, {4}), 1}});
  DecompositionMultiset w4(4, {{bp({1, 1}, {1}), 1}, {bp({1}, {}), 1}});
  CHECK(decompose_tensor(a4, w4, 4) == DecompositionMultiset(4, {{bp({1, 1}, {4, 1}), 1},
                                                                 {bp({1, 1}, {5}), 1},
                                                                 {bp({1}, {4}), 2},
                                                                 {bp({1}, {3, 1}), 1},
                                                                 {bp({}, {3}), 1}}));
  // V_{0,2} row at rank 3
  DecompositionMultiset a3(3, {{bp({}, {2}), 1}});
  DecompositionMultiset w3(3, {{bp({1, 1}, {1}), 1}, {bp({1}, {}), 1}});
  CHECK(decompose_tensor(a3, w3, 3) == DecompositionMultiset(3, {{bp({1, 1}, {3}), 1},
                                                                 {bp({1}, {1, 1}), 1},
                                                                 {bp({1}, {2}), 2},
                                                                 {bp({}, {1}), 1}}));
  // unit
  DecompositionMultiset triv(3, {{bp({}, {}), 1}});
  CHECK(decompose_tensor(a3, triv, 3) == a3);
}

TEST_CASE("Koike agrees with peeling in the stable range (exhaustive small sizes)") {
  for (int s1 = 0; s1 <= 3; ++s1)
    for (int p1 = 0; p1 <= s1; ++p1)
      for (const Partition& ap : partitions_of(p1))
        for (const Partition& am : partitions_of(s1 - p1))
          for (int s2 = 0; s2 <= 3; ++s2)
            for (int p2 = 0; p2 <= s2; ++p2)
              for (const Partition& bpv : partitions_of(p2))
                for (const Partition& bm : partitions_of(s2 - p2)) {
                  Bipartition a{ap, am}, b{bpv, bm};
                  int n = a.plus.length() + a.minus.length() + b.plus.length() + b.minus.length();
                  n = std::max(n, 1);
                  decompose_tensor_pair(a, b, n, CrossCheck::Force);  // throws on disagreement
                }
}

TEST_CASE("dual multiset") {
  DecompositionMultiset m(3, {{bp({1}, {2, 2}), 1}});
  CHECK(dual_multiset(m) == DecompositionMultiset(3, {{bp({2, 2}, {1}), 1}}));
  DecompositionMultiset t(3, {{bp({}, {}), 4}});
  CHECK(dual_multiset(t) == t);
  DecompositionMultiset row(4, {{bp({1, 1}, {3, 2}), 1}, {bp({1}, {2, 1, 1}), 1}, {bp({}, {2, 1}), 2}});
  CHECK(dual_multiset(dual_multiset(row)) == row);
  // duality commutes with tensor decomposition
  DecompositionMultiset a(4, {{bp({}, {2}), 1}});
  DecompositionMultiset b(4, {{bp({1, 1}, {1}), 1}});
  CHECK(dual_multiset(decompose_tensor(a, b, 4)) ==
        decompose_tensor(dual_multiset(a), dual_multiset(b), 4));
}

TEST_CASE("serialization round trip") {
  DecompositionMultiset m(4, {{bp({1, 1}, {3, 2}), 1}, {bp({}, {2, 1}), 2}});
  CHECK(DecompositionMultiset::from_json(m.to_json()) == m);
  CHECK(m.to_markdown() == "V_{1^2,32} \xE2\x8A\x95 V_{0,21}^{\xE2\x8A\x95" "2}");
  CHECK(Partition::parse("[2,2,1]").compact() == "2^21");
  CHECK(Bipartition::parse("[1,1];[3,2]").display() == "1^2,32");
}

TEST_CASE("error paths") {
  CHECK_THROWS(Partition::parse("2,1"));
  CHECK_THROWS(Partition(std::vector<int>{1, 2}));
  CHECK_THROWS(character_product(LaurentCharacter::unit(2), LaurentCharacter::unit(3)));
  // a virtual character is rejected by peeling
  LaurentCharacter bad = irreducible_character(Bipartition{Partition{1}, Partition{}}, 2);
  LaurentCharacter twice = bad;
  for (const auto& [e, c] : bad.terms) twice.add(e, -2 * c);  // now negative of itself
  CHECK_THROWS_AS(peel_decompose(twice, 2), std::domain_error);
  // subtraction below zero aborts with the offending component
  DecompositionMultiset a(3, {{Bipartition{Partition{1}, Partition{}}, 1}});
  DecompositionMultiset b(3, {{Bipartition{Partition{1}, Partition{}}, 2}});
  CHECK_THROWS_AS(a.minus(b), std::domain_error);
}
