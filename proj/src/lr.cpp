#include "jacobirep/lr.hpp"

#include <vector>

namespace jacobirep {

namespace {

// Cells of lambda/mu in reading order: rows top to bottom, each row right to
// left. Filling in this order lets the lattice-word condition be checked
// incrementally.
struct SkewCell {
  int row, col;
};

struct LrSearch {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<SkewCell> cells;
  std::vector<int> entry;       // value placed at cells[i]
  std::vector<int> used;        // count of each value so far
  std::vector<std::vector<int>> grid;  // 0 = empty or inside mu, else value
  long count = 0;

  LrSearch(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), mu(m), nu(n) {
    grid.assign(l.length(), {});
    for (int r = 0; r < l.length(); ++r) grid[r].assign(l.parts[r], 0);
    for (int r = 0; r < l.length(); ++r)
      for (int c = l.parts[r] - 1; c >= m.part(r); --c) cells.push_back({r, c});
    used.assign(n.length() + 1, 0);
  }

  void run(size_t i) {
    if (i == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[i];
    for (int v = 1; v <= nu.length(); ++v) {
      if (used[v] >= nu.parts[v - 1]) continue;
      // lattice word: after placing v, #v must not exceed #(v-1)
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      // rows weakly increase left to right
      if (c + 1 < lambda.parts[r] && grid[r][c + 1] != 0 && v > grid[r][c + 1]) continue;
      // columns strictly increase downwards
      if (r > 0 && c < lambda.parts[r - 1] && c >= mu.part(r - 1)) {
        if (grid[r - 1][c] == 0 || grid[r - 1][c] >= v) continue;
      }
      grid[r][c] = v;
      ++used[v];
      run(i + 1);
      --used[v];
      grid[r][c] = 0;
    }
  }
};

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!lambda.contains(mu)) return 0;
  if (nu.empty()) return lambda == mu ? 1 : 0;
  LrSearch s(lambda, mu, nu);
  s.run(0);
  return s.count;
}

long standard_tableaux_count(const Partition& lambda) {
  int m = lambda.size();
  if (m == 0) return 1;
  std::vector<std::vector<int>> grid(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) grid[r].assign(lambda.parts[r], 0);
  long count = 0;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > m) {
      ++count;
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      // next free cell in row r must be the leftmost empty one
      int c = 0;
      while (c < lambda.parts[r] && grid[r][c] != 0) ++c;
      if (c == lambda.parts[r]) continue;
      if (r > 0 && (c >= lambda.parts[r - 1] || grid[r - 1][c] == 0)) continue;
      grid[r][c] = k;
      self(self, k + 1);
      grid[r][c] = 0;
    }
  };
  rec(rec, 1);
  return count;
}

}  // namespace jacobirep
