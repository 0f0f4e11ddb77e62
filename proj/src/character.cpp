#include "jacobirep/character.hpp"

#include <stdexcept>

namespace jacobirep {

LaurentCharacter LaurentCharacter::unit(int n) {
  LaurentCharacter c(n);
  c.terms.emplace(std::vector<int>(n, 0), 1);
  return c;
}

void LaurentCharacter::add(const std::vector<int>& expo, const Integer& c) {
  auto it = terms.find(expo);
  if (it == terms.end()) {
    if (c != 0) terms.emplace(expo, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

Integer LaurentCharacter::dimension() const {
  Integer d = 0;
  for (const auto& [e, c] : terms) d += c;
  return d;
}

LaurentCharacter character_product(const LaurentCharacter& a, const LaurentCharacter& b) {
  if (a.rank != b.rank) throw std::invalid_argument("character rank mismatch");
  LaurentCharacter out(a.rank);
  std::vector<int> e(a.rank);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.rank; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

Integer weyl_dimension(const Bipartition& bip, int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (bip.vanishes_at(n)) return 0;
  Weight w = dominant_weight(bip, n);
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("weyl dimension not integral");
  return q;
}

namespace {

// Accumulate x^content over all semistandard tableaux of shape mu with
// entries in 1..n.
void ssyt_character(const Partition& mu, int n, LaurentCharacter& out) {
  int rows = mu.length();
  if (rows == 0) {
    out.add(std::vector<int>(n, 0), 1);
    return;
  }
  std::vector<std::vector<int>> grid(rows);
  for (int r = 0; r < rows; ++r) grid[r].assign(mu.parts[r], 0);
  std::vector<int> content(n, 0);
  // fill column-major within rows: row by row, left to right
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < mu.parts[r]; ++c) cells.push_back({r, c});
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == cells.size()) {
      out.add(content, 1);
      return;
    }
    auto [r, c] = cells[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);          // rows weakly increase
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);      // columns strictly increase
    for (int v = lo; v <= n; ++v) {
      grid[r][c] = v;
      ++content[v - 1];
      self(self, i + 1);
      --content[v - 1];
      grid[r][c] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

LaurentCharacter irreducible_character(const Bipartition& bip, int n) {
  if (bip.vanishes_at(n)) throw std::invalid_argument("zero representation");
  Weight w = dominant_weight(bip, n);
  int twist = bip.minus.part(0);
  std::vector<int> parts;
  for (int i = 0; i < n; ++i)
    if (w[i] + twist > 0) parts.push_back(w[i] + twist);
  Partition mu(parts);
  LaurentCharacter out(n);
  ssyt_character(mu, n, out);
  if (twist != 0) {
    LaurentCharacter untwisted(n);
    for (const auto& [e, c] : out.terms) {
      std::vector<int> e2(n);
      for (int i = 0; i < n; ++i) e2[i] = e[i] - twist;
      untwisted.terms.emplace(e2, c);
    }
    out = untwisted;
  }
  return out;
}

}  // namespace jacobirep
