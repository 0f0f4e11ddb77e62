#pragma once

#include <compare>
#include <string>
#include <vector>

namespace jacobirep {

// Integer partition: weakly decreasing positive parts; empty = zero partition.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  void validate() const;
  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  int part(int i) const { return i < length() ? parts[i] : 0; }
  bool empty() const { return parts.empty(); }

  bool contains(const Partition& mu) const;  // Young-diagram inclusion
  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;

  // Text syntax: bracketed list, e.g. [2,2,1]; [] is the zero partition.
  static Partition parse(const std::string& text);
  std::string brackets() const;
  // Display form with exponents, e.g. (2,2,1) -> "2^21", () -> "0".
  std::string compact() const;
};

// Pair of partitions indexing a rational GL(n) irreducible.
struct Bipartition {
  Partition plus;
  Partition minus;

  Bipartition() = default;
  Bipartition(Partition p, Partition m) : plus(std::move(p)), minus(std::move(m)) {}

  bool vanishes_at(int n) const { return plus.length() + minus.length() > n; }
  int total_size() const { return plus.size() + minus.size(); }
  Bipartition dual() const { return {minus, plus}; }

  auto operator<=>(const Bipartition&) const = default;

  // Two bracketed lists joined by a semicolon: [1,1];[3,2]
  static Bipartition parse(const std::string& text);
  std::string brackets() const;
  std::string display() const;  // V_{...} subscript body, e.g. "1,2^2"
};

// Integer weight vector of length n. The weight of V_{plus,minus} is plus
// padded with zeros followed by minus reversed and negated.
using Weight = std::vector<int>;

Weight dominant_weight(const Bipartition& bip, int n);
bool is_dominant(const Weight& w);
// Inverse of dominant_weight; requires a weakly decreasing input.
Bipartition bipartition_of_weight(const Weight& w);

// All partitions of m (lexicographically sorted).
const std::vector<Partition>& partitions_of(int m);

}  // namespace jacobirep
