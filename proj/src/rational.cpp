#include "jacobirep/rational.hpp"

namespace jacobirep {

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(r));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<int> pivots = rref(a);
  int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_count = cols - static_cast<int>(pivots.size());
  RatMatrix basis = RatMatrix::Zero(cols, free_count);
  int k = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -a(static_cast<int>(r), c);
    ++k;
  }
  return basis;
}

RatMatrix row_space(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<int> pivots = rref(a);
  RatMatrix out(static_cast<int>(pivots.size()), m.cols());
  for (size_t r = 0; r < pivots.size(); ++r) out.row(static_cast<int>(r)) = a.row(static_cast<int>(r));
  return out;
}

int rank_of(const RatMatrix& m) {
  RatMatrix a = m;
  return static_cast<int>(rref(a).size());
}

RatMatrix invert(const RatMatrix& m) {
  int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("invert: not square");
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::invalid_argument("invert: singular matrix");
  return aug.rightCols(n);
}

}  // namespace jacobirep
