#include "jacobirep/symgroup.hpp"

#include <numeric>
#include <stdexcept>

namespace jacobirep {

Perm perm_identity(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

int perm_sign(const Perm& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void SymGroupAlgebraElement::add(const Perm& p, const Rational& c) {
  auto it = terms.find(p);
  if (it == terms.end()) {
    if (c != 0) terms.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

SymGroupAlgebraElement SymGroupAlgebraElement::operator*(const SymGroupAlgebraElement& other) const {
  if (degree != other.degree) throw std::invalid_argument("degree mismatch");
  SymGroupAlgebraElement out(degree);
  for (const auto& [p, c] : terms)
    for (const auto& [q, d] : other.terms) out.add(perm_compose(p, q), c * d);
  return out;
}

SymGroupAlgebraElement SymGroupAlgebraElement::operator+(const SymGroupAlgebraElement& other) const {
  SymGroupAlgebraElement out = *this;
  for (const auto& [p, c] : other.terms) out.add(p, c);
  return out;
}

SymGroupAlgebraElement SymGroupAlgebraElement::scaled(const Rational& c) const {
  SymGroupAlgebraElement out(degree);
  if (c == 0) return out;
  for (const auto& [p, k] : terms) out.terms.emplace(p, k * c);
  return out;
}

namespace {

// Cells of the canonical tableau grouped into blocks; returns all
// permutations of {0..m-1} permuting positions within each block.
std::vector<Perm> block_group(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<Perm> result{perm_identity(m)};
  for (const auto& block : blocks) {
    std::vector<Perm> next;
    std::vector<int> idx(block.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
      Perm local = perm_identity(m);
      for (size_t i = 0; i < block.size(); ++i) local[block[i]] = block[idx[i]];
      for (const auto& base : result) next.push_back(perm_compose(local, base));
    } while (std::next_permutation(idx.begin(), idx.end()));
    result = std::move(next);
  }
  return result;
}

}  // namespace

std::vector<Perm> row_group(const Partition& lambda) {
  int m = lambda.size();
  std::vector<std::vector<int>> rows;
  int k = 0;
  for (int r = 0; r < lambda.length(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < lambda.parts[r]; ++c) row.push_back(k++);
    rows.push_back(row);
  }
  return block_group(m, rows);
}

std::vector<Perm> column_group(const Partition& lambda) {
  int m = lambda.size();
  // canonical tableau numbers cells row-major
  std::vector<std::vector<int>> cols(lambda.part(0));
  int k = 0;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) cols[c].push_back(k++);
  return block_group(m, cols);
}

SymGroupAlgebraElement young_symmetrizer(const Partition& lambda) {
  if (lambda.size() < 1) throw std::invalid_argument("young_symmetrizer: empty shape");
  SymGroupAlgebraElement out(lambda.size());
  for (const Perm& tau : column_group(lambda)) {
    int s = perm_sign(tau);
    for (const Perm& sigma : row_group(lambda)) out.add(perm_compose(tau, sigma), s);
  }
  return out;
}

}  // namespace jacobirep
