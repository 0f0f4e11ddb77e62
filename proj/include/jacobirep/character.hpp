#pragma once

#include <map>

#include "jacobirep/partition.hpp"
#include "jacobirep/rational.hpp"

namespace jacobirep {

// Formal character of a virtual rational GL(n) representation: a symmetric
// Laurent polynomial stored sparsely on exponent vectors.
struct LaurentCharacter {
  int rank = 0;
  std::map<std::vector<int>, Integer> terms;

  explicit LaurentCharacter(int n = 0) : rank(n) {}
  static LaurentCharacter unit(int n);

  void add(const std::vector<int>& expo, const Integer& c);
  bool is_zero() const { return terms.empty(); }
  Integer dimension() const;  // evaluation at (1,...,1)
  bool operator==(const LaurentCharacter&) const = default;
};

LaurentCharacter character_product(const LaurentCharacter& a, const LaurentCharacter& b);

// Weyl dimension of V_{bip}(n); 0 when the bipartition vanishes at rank n.
Integer weyl_dimension(const Bipartition& bip, int n);

// Character of the irreducible V_{bip}(n). Requires a non-vanishing
// bipartition. Computed as a determinant-free Schur polynomial: twist by a
// power of the determinant so the weight becomes polynomial, enumerate
// semistandard tableaux, untwist.
LaurentCharacter irreducible_character(const Bipartition& bip, int n);

}  // namespace jacobirep
