#include "jacobirep/duality.hpp"

#include <stdexcept>

namespace jacobirep {

namespace {

// Coordinate matrix of the basis B over the canonical diagram keys, built
// once; coordinates of arbitrary vectors come from solving against it.
struct BasisChart {
  std::vector<DiagramKey> keys;
  RatMatrix basis_coords;   // keys x 13
  RatMatrix solver;         // pseudo-inverse via rref of [basis | v]

  BasisChart() {
    const auto& B = basis_B();
    std::map<DiagramKey, int> index;
    for (const auto& b : B)
      for (const auto& [k, c] : b.coeffs)
        if (!index.count(k)) {
          index.emplace(k, static_cast<int>(keys.size()));
          keys.push_back(k);
        }
    basis_coords = RatMatrix::Zero(keys.size(), B.size());
    for (size_t j = 0; j < B.size(); ++j)
      for (const auto& [k, c] : B[j].coeffs) basis_coords(index.at(k), j) = c;
  }

  RatVector solve(const DiagramVector& v) const {
    std::map<DiagramKey, int> index;
    for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
    RatMatrix aug(keys.size(), basis_B().size() + 1);
    aug.leftCols(basis_B().size()) = basis_coords;
    for (size_t i = 0; i < keys.size(); ++i) aug(i, basis_B().size()) = 0;
    for (const auto& [k, c] : v.coeffs) {
      auto it = index.find(k);
      if (it == index.end()) throw std::domain_error("vector is not in the span of B");
      aug(it->second, basis_B().size()) = c;
    }
    std::vector<int> pivots = rref(aug);
    RatVector x = RatVector::Zero(basis_B().size());
    for (size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == static_cast<int>(basis_B().size()))
        throw std::domain_error("vector is not in the span of B");
      x(pivots[r]) = aug(static_cast<int>(r), basis_B().size());
    }
    return x;
  }
};

const BasisChart& chart() {
  static const BasisChart c;
  return c;
}

}  // namespace

RatVector coordinates_on_B(const DiagramVector& v) {
  if (v.rank != 3) throw std::invalid_argument("basis B lives at rank 3");
  return chart().solve(v);
}

RatMatrix nielsen_matrix_on_B(const AutGenerator& g) {
  RatMatrix m(13, 13);
  for (int j = 0; j < 13; ++j) m.col(j) = coordinates_on_B(act_aut(g, basis_B()[j]));
  return m;
}

RatMatrix nielsen_matrix_on_Bstar(const AutGenerator& g) {
  return invert(nielsen_matrix_on_B(g)).transpose();
}

DualVector dual_action(const AutGenerator& g, const DualVector& f) {
  DualVector out;
  out.coords = nielsen_matrix_on_Bstar(g) * f.coords;
  return out;
}

const RatMatrix& phi_matrix() {
  static const RatMatrix m = [] {
    RatMatrix p = RatMatrix::Zero(13, 13);
    auto set = [&](int from, int to, const Rational& c) { p(to, from) = c; };
    // images on the dual basis, column per basis element
    set(0, 12, -3);  set(0, 0, Rational(-3, 4));   // v1
    set(1, 11, -3);  set(1, 1, Rational(-3, 4));   // v2
    set(2, 10, -3);  set(2, 2, Rational(-3, 4));   // v3
    set(3, 9, 6);    set(3, 4, Rational(3, 2));  set(3, 5, Rational(3, 2));   // v12
    set(4, 8, 6);    set(4, 3, Rational(3, 2));  set(4, 5, Rational(3, 2));   // v13
    set(5, 7, 6);    set(5, 3, Rational(3, 2));  set(5, 4, Rational(3, 2));   // v23
    set(6, 6, 1);                                                             // u123
    set(7, 5, 6);    // w1
    set(8, 4, 6);    // w2
    set(9, 3, 6);    // w3
    set(10, 2, -3);  // w12
    set(11, 1, -3);  // w13
    set(12, 0, -3);  // w23
    return p;
  }();
  return m;
}

DualVector phi(const DiagramVector& v) {
  DualVector out;
  out.coords = phi_matrix() * coordinates_on_B(v);
  return out;
}

std::string DualVector::pretty() const {
  std::string out;
  bool first = true;
  for (int i = 0; i < 13; ++i) {
    if (coords(i) == 0) continue;
    if (!first) out += coords(i) > 0 ? " + " : " - ";
    if (first && coords(i) < 0) out += "-";
    first = false;
    Rational a = abs(coords(i));
    if (a != 1) out += to_string(a) + "*";
    out += basis_B_names()[i] + "*";
  }
  return out.empty() ? "0" : out;
}

EquivarianceReport verify_phi_equivariance() {
  EquivarianceReport report;
  const RatMatrix& P = phi_matrix();
  report.invertible = rank_of(P) == 13;
  for (const AutGenerator& g :
       {AutGenerator::U(), AutGenerator::P(), AutGenerator::Sigma(), AutGenerator::Q()}) {
    RatMatrix on_B = nielsen_matrix_on_B(g);
    RatMatrix on_Bstar = invert(on_B).transpose();
    for (int j = 0; j < 13; ++j) {
      ++report.checks;
      // phi(x X) vs phi(x) X on the j-th basis vector
      RatVector lhs = P * on_B.col(j);
      RatVector rhs = on_Bstar * P.col(j);
      if (lhs == rhs) {
        ++report.passed;
      } else {
        report.failures.push_back(basis_B_names()[j] + " . " + g.name());
      }
    }
  }
  return report;
}

}  // namespace jacobirep
