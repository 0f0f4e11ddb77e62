#pragma once

#include <string>
#include <vector>

#include "jacobirep/charts.hpp"
#include "jacobirep/diagram.hpp"

namespace jacobirep {

std::vector<Factor> johnson_factors();  // H* (x) wedge^2 H

// A named IA element given by its substitution, together with its
// abelianization class in H* (x) wedge^2 H.
struct IAAtom {
  std::string name;
  Substitution subst;
  ChartTensor johnson;
};

// A formal product of atoms with exponents +-1. The substitution form makes
// equal group elements comparable.
struct IAWord {
  int rank = 0;
  std::vector<std::pair<IAAtom, int>> factors;

  static IAWord identity(int n) { return {n, {}}; }
  IAWord operator*(const IAWord& other) const;
  IAWord inverse() const;
  IAWord pow(int e) const;

  Substitution substitution() const;
  bool is_identity_element() const;
  bool is_ia() const;
  std::string name() const;
};

// Magnus generators as words: g(a,b) and f(a,b,c).
IAWord magnus_g_word(int a, int b, int n);
IAWord magnus_f_word(int a, int b, int c, int n);

// C_{x_a, x_b}: x_a -> x_b x_a x_b^{-1} (= g_{b,a}).
IAWord conj_gen(int a, int b, int n);

// M_{x_a^alpha, [x_b^beta, x_c^gamma]}: x_a^alpha -> [x_b^beta, x_c^gamma] x_a^alpha,
// fixing the other generators; johnson class alpha*beta*gamma e_a* (x) (e_b ^ e_c).
IAWord comm_gen(int a, int alpha, int b, int beta, int c, int gamma, int n);

// sigma_{x_i}: conjugation of everything by x_i (the product of the g(i,b)).
IAWord inner_word(int i, int n);

// Abelianization class in H* (x) wedge^2 H, additive over factors.
ChartTensor johnson_class(const IAWord& w);

bool same_element(const IAWord& a, const IAWord& b);

}  // namespace jacobirep
