#pragma once

#include <map>
#include <vector>

#include "jacobirep/partition.hpp"
#include "jacobirep/rational.hpp"

namespace jacobirep {

// Permutation of {0..m-1} by images: perm[i] = image of i.
using Perm = std::vector<int>;

Perm perm_identity(int m);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
int perm_sign(const Perm& p);

// Element of the rational group algebra of the symmetric group S_m.
struct SymGroupAlgebraElement {
  int degree = 0;
  std::map<Perm, Rational> terms;

  SymGroupAlgebraElement() = default;
  explicit SymGroupAlgebraElement(int m) : degree(m) {}

  void add(const Perm& p, const Rational& c);
  SymGroupAlgebraElement operator*(const SymGroupAlgebraElement& other) const;
  SymGroupAlgebraElement operator+(const SymGroupAlgebraElement& other) const;
  SymGroupAlgebraElement scaled(const Rational& c) const;
  bool operator==(const SymGroupAlgebraElement&) const = default;
};

// Young symmetrizer c_lambda = sum_{sigma in R, tau in C} sgn(tau) tau sigma
// for the canonical (row-major) tableau of shape lambda.
SymGroupAlgebraElement young_symmetrizer(const Partition& lambda);

// Enumerate the row group / column group of the canonical tableau.
std::vector<Perm> row_group(const Partition& lambda);
std::vector<Perm> column_group(const Partition& lambda);

}  // namespace jacobirep
