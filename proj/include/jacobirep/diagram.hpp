#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "jacobirep/charts.hpp"
#include "jacobirep/rational.hpp"

namespace jacobirep {

// Canonical basis elements of the degree-2 diagram space:
//  - Chords: two chords, each an unordered pair of arc indices, with the
//    canonical interleaving (lex-smaller chord's legs first on every arc);
//  - Tripod: one trivalent vertex, legs on arcs a<b<c, counterclockwise
//    cyclic order (a,b,c);
//  - Bubble: two trivalent vertices joined by a double edge, one leg each,
//    on arcs i<=j (leg order on a shared arc is immaterial).
// Everything else rewrites into these via the STU relation.
struct DiagramKey {
  enum class Shape { Chords, Tripod, Bubble };
  Shape shape = Shape::Chords;
  std::array<std::array<int, 2>, 2> chords{};  // each sorted; pair sorted
  std::array<int, 3> tri{};
  std::array<int, 2> bub{};

  static DiagramKey chord_pair(std::array<int, 2> a, std::array<int, 2> b);
  static DiagramKey tripod(int a, int b, int c);   // requires a<b<c
  static DiagramKey bubble(int i, int j);

  int trivalent_count() const;
  auto operator<=>(const DiagramKey&) const = default;
  std::string pretty() const;
};

struct DiagramVector {
  int rank = 0;
  std::map<DiagramKey, Rational> coeffs;

  explicit DiagramVector(int n = 0) : rank(n) {}
  void add(const DiagramKey& k, const Rational& c);
  bool is_zero() const { return coeffs.empty(); }
  DiagramVector operator+(const DiagramVector& o) const;
  DiagramVector operator-(const DiagramVector& o) const;
  DiagramVector scaled(const Rational& c) const;
  bool operator==(const DiagramVector&) const = default;
  std::string pretty() const;
};

// Endomorphism of the free group given by the images of the generators,
// used as the re-routing recipe for the diagram action. Letters are
// (arc, +1/-1) pairs; arcs are 1-based.
struct Substitution {
  int rank = 0;
  std::vector<std::vector<std::pair<int, int>>> images;  // images[a-1] = word for x_a

  static Substitution identity(int n);
  // v.(A B) = (v.A).B  corresponds to  compose(A,B)(x) = A-applied-to(B(x)).
  static Substitution compose(const Substitution& a, const Substitution& b);
  bool is_identity() const;
  std::vector<std::vector<int>> abelianized() const;  // matrix m[i][l] = exponent sum of x_i in image of x_l
};

struct AutGenerator {
  enum class Kind { NielsenU, NielsenP, NielsenSigma, NielsenQ, MagnusG, MagnusF, Inner };
  Kind kind;
  int a = 0, b = 0, c = 0;

  static AutGenerator U() { return {Kind::NielsenU}; }
  static AutGenerator P() { return {Kind::NielsenP}; }
  static AutGenerator Sigma() { return {Kind::NielsenSigma}; }
  static AutGenerator Q() { return {Kind::NielsenQ}; }
  static AutGenerator magnus_g(int a, int b) { return {Kind::MagnusG, a, b}; }
  static AutGenerator magnus_f(int a, int b, int c) { return {Kind::MagnusF, a, b, c}; }
  static AutGenerator inner(int i) { return {Kind::Inner, i}; }

  Substitution substitution(int n) const;
  std::string name() const;
};

// Leg re-routing along the image words followed by STU normalization.
DiagramVector act_subst(const Substitution& f, const DiagramVector& v);
DiagramVector act_aut(const AutGenerator& g, const DiagramVector& v);
DiagramVector act_word(const std::vector<AutGenerator>& gens, const DiagramVector& v);

// v.f - v; raises the filtration level on IA elements.
DiagramVector bracket(const DiagramVector& v, const Substitution& f);

int filtration_level(const DiagramVector& v);  // 0, 1 or 2; throws on zero vector

// The thirteen-element basis of the rank-3 module: v1,v2,v3, v12,v13,v23,
// u123, w1,w2,w3, w12,w13,w23.
const std::vector<DiagramVector>& basis_B();
const std::vector<std::string>& basis_B_names();

// Generators of the chord-level elements at any rank: leading double chord
// on arc d, the other chord over o1, o2, minus half of each re-pairing.
DiagramVector make_v(int d, int o1, int o2, int n);
DiagramVector make_vpair(int i, int j, int n);
DiagramVector make_u(int a, int b, int c, int n);
DiagramVector make_w(int i, int j, int n);

// Filtration-quotient identification: level 2 sends bubbles to sym^2 H*,
// level 1 sends tripods to wedge^3 H* (bubbles to zero).
ChartTensor quotient_class(const DiagramVector& v, int level);

bool inner_action_check(int i, const DiagramVector& v);

}  // namespace jacobirep
