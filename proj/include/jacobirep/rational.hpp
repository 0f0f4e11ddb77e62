#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacobirep {

// All arithmetic in this library is exact. Rationals are GMP-backed; Eigen
// matrices over Rational are used for the dense kernels (nullspaces, spans,
// small inverses). No floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Reduced row echelon form, in place. Returns the list of pivot columns.
std::vector<int> rref(RatMatrix& m);

// Basis of the right kernel {x : m x = 0}, one column per basis vector.
RatMatrix kernel_basis(const RatMatrix& m);

// Row-space basis (echelonized, zero rows dropped).
RatMatrix row_space(const RatMatrix& m);

int rank_of(const RatMatrix& m);

// Exact inverse; throws on singular input.
RatMatrix invert(const RatMatrix& m);

}  // namespace jacobirep

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen
