#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacobirep/tensor.hpp"

namespace jacobirep {

// Tensor product of wedge/sym powers of H and H*, with exact coordinates on
// sorted-tuple bases. Used for the filtration-quotient charts and for the
// structured targets of the named contraction maps.
enum class FactorKind { DualWedge, DualSym, DualVec, Wedge, Vec };

struct Factor {
  FactorKind kind;
  int arity;
  bool operator==(const Factor&) const = default;
};

// Per factor one index tuple: strictly increasing for wedge, weakly
// increasing for sym, a single index for Vec/DualVec.
using ChartKey = std::vector<std::vector<int>>;

struct ChartTensor {
  int rank = 0;
  std::vector<Factor> factors;
  std::map<ChartKey, Rational> terms;

  ChartTensor() = default;
  ChartTensor(int n, std::vector<Factor> f) : rank(n), factors(std::move(f)) {}

  // Inserts a possibly unsorted key, normalizing wedge signs; repeated wedge
  // indices drop the term.
  void add_raw(const ChartKey& key, const Rational& c);
  void add(const ChartKey& key, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  ChartTensor operator+(const ChartTensor& other) const;
  ChartTensor operator-(const ChartTensor& other) const;
  ChartTensor scaled(const Rational& c) const;
  bool operator==(const ChartTensor&) const = default;

  std::string to_json() const;
  static ChartTensor from_json(const std::string& text);
  std::string pretty() const;
};

// Factorwise GL action (same generator semantics as on MixedTensor).
ChartTensor act_gl(const GLGenerator& g, const ChartTensor& t);

std::optional<Weight> weight_of(const ChartTensor& t);

// Canonical embeddings with the 1/2, 1/2, 1/6 normalizations:
// wedge^k H  -> H^{(x)k}   via (1/k!) alternating sum,
// sym^2 H*   -> (H*)^{(x)2} via (1/2) symmetric sum,
// and their duals; applied factorwise.
MixedTensor embed(const ChartTensor& t);

// Chart factor lists for the two filtration quotients tensored with the
// Johnson target H* (x) wedge^2 H; embed() of these is iota resp. iota'.
std::vector<Factor> level1_chart_factors();  // wedge^3 H*, H*, wedge^2 H
std::vector<Factor> level2_chart_factors();  // sym^2 H*, H*, wedge^2 H

// Named contraction maps. The first seven consume (q=4,p=2) tensors, the
// last six (q=3,p=2) tensors.
enum class ContractionName {
  c_12_14,   // -> wedge^4 H* (x) wedge^2 H
  c_12_212,  // -> wedge^3 H* (x) H* (x) wedge^2 H
  c_1_13,    // -> wedge^3 H* (x) H
  cp_1_13,   // -> wedge^3 H* (x) H
  c_1_21,    // -> wedge^2 H* (x) H* (x) H
  c_0_12,    // -> wedge^2 H*
  cp_0_12,   // -> wedge^2 H*
  c_12_21,   // -> H* (x) wedge^2 H* (x) wedge^2 H
  c_12_3,    // -> (H*)^{(x)3} (x) wedge^2 H
  c_1_12,    // -> wedge^2 H* (x) H
  c_1_2,     // -> (H*)^{(x)2} (x) H
  cp_1_2,    // -> (H*)^{(x)2} (x) H
  c_0_1      // -> H*
};

std::string contraction_name_string(ContractionName name);
ContractionName contraction_name_parse(const std::string& s);

ChartTensor named_contraction(ContractionName name, const MixedTensor& t);

// v^i_j basis of sym^2 H* (x) H* (x) wedge^2 H at n = 3, ordered by the
// lexicographic position j of (e_a ^ e_b) (x) (e_p . e_q), i the H* index.
ChartTensor vij_chart(int i, int j);
MixedTensor vij_basis(int i, int j);
int vij_index(std::pair<int, int> ab, std::pair<int, int> pq);  // 1..18

// Expand a chart tensor over the v^i_j coordinates (n=3 level-2 chart only).
std::map<std::pair<int, int>, Rational> vij_coordinates(const ChartTensor& t);
std::string vij_pretty(const std::map<std::pair<int, int>, Rational>& coords);

}  // namespace jacobirep
