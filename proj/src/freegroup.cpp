#include "jacobirep/freegroup.hpp"

#include <stdexcept>

namespace jacobirep {

std::vector<Factor> johnson_factors() {
  return {{FactorKind::DualVec, 1}, {FactorKind::Wedge, 2}};
}

IAWord IAWord::operator*(const IAWord& other) const {
  if (rank != other.rank) throw std::invalid_argument("rank mismatch");
  IAWord out = *this;
  out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
  return out;
}

IAWord IAWord::inverse() const {
  IAWord out{rank, {}};
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.factors.emplace_back(it->first, -it->second);
  return out;
}

IAWord IAWord::pow(int e) const {
  IAWord out = identity(rank);
  IAWord base = e >= 0 ? *this : inverse();
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

namespace {

Substitution invert_substitution_of_atom(const Substitution& s, const std::string& name) {
  // Atoms send each generator to w x_i v with w, v words avoiding nothing in
  // particular; the inverse sends x_i to w^{-1} x_i v^{-1} whenever the image
  // contains exactly one x_i^{+1}. All generators used here have that form.
  Substitution inv = Substitution::identity(s.rank);
  for (int i = 0; i < s.rank; ++i) {
    const auto& img = s.images[i];
    if (img.size() == 1 && img[0] == std::make_pair(i + 1, 1)) continue;
    int pos = -1;
    for (size_t k = 0; k < img.size(); ++k)
      if (img[k].first == i + 1) {
        if (pos >= 0) throw std::logic_error("atom image not in normal form: " + name);
        pos = static_cast<int>(k);
      }
    if (pos < 0 || img[pos].second != 1)
      throw std::logic_error("cannot invert atom " + name);
    std::vector<std::pair<int, int>> w(img.begin(), img.begin() + pos);
    std::vector<std::pair<int, int>> v(img.begin() + pos + 1, img.end());
    std::vector<std::pair<int, int>> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
    out.emplace_back(i + 1, 1);
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.emplace_back(it->first, -it->second);
    inv.images[i] = out;
  }
  return inv;
}

}  // namespace

Substitution IAWord::substitution() const {
  Substitution s = Substitution::identity(rank);
  for (const auto& [atom, e] : factors) {
    Substitution step = e > 0 ? atom.subst : invert_substitution_of_atom(atom.subst, atom.name);
    // right-action composition: v.(s step) = (v.s).step
    s = Substitution::compose(s, step);
  }
  return s;
}

bool IAWord::is_identity_element() const { return substitution().is_identity(); }

bool IAWord::is_ia() const {
  auto m = substitution().abelianized();
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IAWord::name() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [atom, e] : factors) {
    if (!out.empty()) out += " ";
    out += atom.name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

IAWord magnus_g_word(int a, int b, int n) {
  IAAtom atom;
  atom.name = "g(" + std::to_string(a) + "," + std::to_string(b) + ")";
  atom.subst = AutGenerator::magnus_g(a, b).substitution(n);
  atom.johnson = ChartTensor(n, johnson_factors());
  atom.johnson.add_raw({{b}, {a, b}}, 1);
  return IAWord{n, {{atom, 1}}};
}

IAWord magnus_f_word(int a, int b, int c, int n) {
  IAAtom atom;
  atom.name = "f(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  atom.subst = AutGenerator::magnus_f(a, b, c).substitution(n);
  atom.johnson = ChartTensor(n, johnson_factors());
  atom.johnson.add_raw({{c}, {a, b}}, 1);
  return IAWord{n, {{atom, 1}}};
}

IAWord conj_gen(int a, int b, int n) { return magnus_g_word(b, a, n); }

IAWord comm_gen(int a, int alpha, int b, int beta, int c, int gamma, int n) {
  if (a == b || a == c || b == c) throw std::invalid_argument("comm_gen needs distinct indices");
  IAAtom atom;
  atom.name = "M(x" + std::to_string(a) + "^" + std::to_string(alpha) + ",[x" + std::to_string(b) +
              "^" + std::to_string(beta) + ",x" + std::to_string(c) + "^" + std::to_string(gamma) +
              "])";
  // x_a^alpha -> [x_b^beta, x_c^gamma] x_a^alpha; for alpha = -1 this reads
  // x_a -> x_a [x_c^gamma, x_b^beta]
  Substitution s = Substitution::identity(n);
  std::vector<std::pair<int, int>> K{{b, beta}, {c, gamma}, {b, -beta}, {c, -gamma}};
  if (alpha > 0) {
    std::vector<std::pair<int, int>> img = K;
    img.emplace_back(a, 1);
    s.images[a - 1] = img;
  } else {
    std::vector<std::pair<int, int>> img{{a, 1}};
    for (auto it = K.rbegin(); it != K.rend(); ++it) img.emplace_back(it->first, -it->second);
    s.images[a - 1] = img;
  }
  atom.subst = s;
  atom.johnson = ChartTensor(n, johnson_factors());
  atom.johnson.add_raw({{a}, {b, c}}, Rational(alpha * beta * gamma));
  return IAWord{n, {{atom, 1}}};
}

IAWord inner_word(int i, int n) {
  IAWord out = IAWord::identity(n);
  for (int b = 1; b <= n; ++b)
    if (b != i) out = out * magnus_g_word(i, b, n);
  return out;
}

ChartTensor johnson_class(const IAWord& w) {
  ChartTensor out(w.rank, johnson_factors());
  for (const auto& [atom, e] : w.factors) out = out + atom.johnson.scaled(e);
  return out;
}

bool same_element(const IAWord& a, const IAWord& b) {
  if (a.rank != b.rank) return false;
  return a.substitution().images == b.substitution().images;
}

}  // namespace jacobirep
