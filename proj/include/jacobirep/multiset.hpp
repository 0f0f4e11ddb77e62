#pragma once

#include <map>
#include <string>

#include "jacobirep/character.hpp"
#include "jacobirep/partition.hpp"

namespace jacobirep {

// Ordering used for serialization: total size, then plus, then minus.
struct BipartitionOrder {
  bool operator()(const Bipartition& a, const Bipartition& b) const {
    if (a.total_size() != b.total_size()) return a.total_size() < b.total_size();
    if (a.plus != b.plus) return a.plus < b.plus;
    return a.minus < b.minus;
  }
};

// Finite multiset of irreducible summands at a fixed rank: the common
// currency of every decomposition in this library.
struct DecompositionMultiset {
  int rank = 0;
  std::map<Bipartition, long, BipartitionOrder> entries;

  explicit DecompositionMultiset(int n = 0) : rank(n) {}
  DecompositionMultiset(int n, std::initializer_list<std::pair<Bipartition, long>> init);

  void add(const Bipartition& bip, long mult);
  long multiplicity(const Bipartition& bip) const;
  long component_total() const;  // sum of multiplicities
  Integer dimension() const;     // sum mult * weyl_dimension
  bool empty() const { return entries.empty(); }

  DecompositionMultiset operator+(const DecompositionMultiset& other) const;
  // Componentwise subtraction; throws if any multiplicity would go negative.
  DecompositionMultiset minus(const DecompositionMultiset& other) const;
  // Componentwise max(0, a-b).
  DecompositionMultiset clamped_minus(const DecompositionMultiset& other) const;
  bool contains(const DecompositionMultiset& other) const;

  bool operator==(const DecompositionMultiset&) const = default;

  std::string to_json() const;
  static DecompositionMultiset from_json(const std::string& text);
  // Display markdown: components sorted by descending total size then
  // lexicographic, rendered as V_{..} with oplus-exponents.
  std::string to_markdown() const;
  std::string to_csv() const;
};

DecompositionMultiset dual_multiset(const DecompositionMultiset& ms);

// Koike's stable-range multiplicity of V_{nu} in V_{lambda} (x) V_{mu}.
long koike_multiplicity(const Bipartition& lam, const Bipartition& mu, const Bipartition& nu);

// Greedy highest-weight peeling of a genuine character. Throws
// std::domain_error("virtual character") if a negative multiplicity shows up.
DecompositionMultiset peel_decompose(const LaurentCharacter& chi, int n);

enum class CrossCheck { Auto, Force, Off };

// Tensor-product decomposition, bilinear over summands. Per irreducible
// pair: Koike in the stable range, character peeling below it; the two are
// cross-checked where feasible, and sum-of-dimensions conservation is
// verified on every call.
DecompositionMultiset decompose_tensor(const DecompositionMultiset& left,
                                       const DecompositionMultiset& right, int n,
                                       CrossCheck check = CrossCheck::Auto);

DecompositionMultiset decompose_tensor_pair(const Bipartition& a, const Bipartition& b, int n,
                                            CrossCheck check = CrossCheck::Auto);

}  // namespace jacobirep
