#pragma once

#include <string>
#include <vector>

#include "jacobirep/diagram.hpp"
#include "jacobirep/rational.hpp"

namespace jacobirep {

// Coordinates on the dual basis B* of the 13-element basis B (rank 3).
struct DualVector {
  RatVector coords = RatVector::Zero(13);
  bool operator==(const DualVector& o) const { return coords == o.coords; }
  std::string pretty() const;
};

// Coordinates of v on the basis B; throws if v is not in the span.
RatVector coordinates_on_B(const DiagramVector& v);

// Matrix of a Nielsen generator acting on B: column j holds the coordinates
// of (basis_j . g).
RatMatrix nielsen_matrix_on_B(const AutGenerator& g);

// Right action on B*: f.g defined by (f.g)(x) = f(x.g^{-1}); its matrix is
// the inverse transpose of the matrix on B.
RatMatrix nielsen_matrix_on_Bstar(const AutGenerator& g);
DualVector dual_action(const AutGenerator& g, const DualVector& f);

// The duality map on basis coordinates and its inverse.
const RatMatrix& phi_matrix();
DualVector phi(const DiagramVector& v);

struct EquivarianceReport {
  int checks = 0;
  int passed = 0;
  bool invertible = false;
  std::vector<std::string> failures;
  bool ok() const { return passed == checks && invertible; }
};

// Checks phi(x.X) = phi(x).X for all 13 basis elements and all four Nielsen
// generators, plus invertibility.
EquivarianceReport verify_phi_equivariance();

}  // namespace jacobirep
