#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacobirep/partition.hpp"
#include "jacobirep/rational.hpp"

namespace jacobirep {

// Basis word of (H*)^{(x)q} (x) H^{(x)p}: covariant slots first (matching the
// displayed (H*)^q (x) H^p convention), indices in 1..n.
struct TensorWord {
  std::vector<int> co;
  std::vector<int> contra;
  auto operator<=>(const TensorWord&) const = default;
};

struct GLGenerator {
  enum class Kind { Elementary, Permutation, NegateFirst };
  Kind kind = Kind::NegateFirst;
  int k = 0, l = 0;

  static GLGenerator elementary(int k, int l) { return {Kind::Elementary, k, l}; }
  static GLGenerator permutation(int k, int l) { return {Kind::Permutation, k, l}; }
  static GLGenerator negate_first() { return {Kind::NegateFirst, 0, 0}; }
};

// Exact-rational element of H^{(x)p} (x) (H*)^{(x)q} at a concrete rank.
struct MixedTensor {
  int q = 0, p = 0, rank = 0;
  std::map<TensorWord, Rational> terms;

  MixedTensor() = default;
  MixedTensor(int q_, int p_, int n) : q(q_), p(p_), rank(n) {}

  static MixedTensor basis_vector(int i, int n);       // e_i
  static MixedTensor basis_covector(int i, int n);     // e_i*

  void add(const TensorWord& w, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  MixedTensor operator+(const MixedTensor& other) const;
  MixedTensor operator-(const MixedTensor& other) const;
  MixedTensor scaled(const Rational& c) const;
  MixedTensor tensor(const MixedTensor& other) const;  // this (x) other, slotwise append
  bool operator==(const MixedTensor&) const = default;

  std::string to_json() const;
  static MixedTensor from_json(const std::string& text);
};

// E_{k,l}: e_l -> e_l + e_k on contravariant slots, e_k* -> e_k* - e_l* on
// covariant slots. Permutation swaps k,l everywhere; NegateFirst flips the
// sign of every index-1 slot.
MixedTensor act_gl(const GLGenerator& g, const MixedTensor& t);

// Pairs contravariant slot k against covariant slot l (both 1-based).
MixedTensor contraction(const MixedTensor& t, int k, int l);

bool is_traceless(const MixedTensor& t);

std::optional<Weight> weight_of(const MixedTensor& t);

bool is_highest_weight_vector(const MixedTensor& t, const Bipartition& bip);

// Basis of V_{bip}(n) realized inside the traceless part of
// H^{(x)p} (x) (H*)^{(x)q}, p = |plus|, q = |minus|, via Young symmetrizers
// acting by slot permutation. Basis size equals weyl_dimension(bip, n).
std::vector<MixedTensor> realize_irrep(const Bipartition& bip, int n);

}  // namespace jacobirep
