#include "jacobirep/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacobirep {

DiagramKey DiagramKey::chord_pair(std::array<int, 2> a, std::array<int, 2> b) {
  if (a[0] > a[1]) std::swap(a[0], a[1]);
  if (b[0] > b[1]) std::swap(b[0], b[1]);
  DiagramKey k;
  k.shape = Shape::Chords;
  k.chords = a <= b ? std::array{a, b} : std::array{b, a};
  return k;
}

DiagramKey DiagramKey::tripod(int a, int b, int c) {
  if (!(a < b && b < c)) throw std::invalid_argument("tripod arcs must be increasing");
  DiagramKey k;
  k.shape = Shape::Tripod;
  k.tri = {a, b, c};
  return k;
}

DiagramKey DiagramKey::bubble(int i, int j) {
  DiagramKey k;
  k.shape = Shape::Bubble;
  k.bub = i <= j ? std::array{i, j} : std::array{j, i};
  return k;
}

int DiagramKey::trivalent_count() const {
  switch (shape) {
    case Shape::Chords: return 0;
    case Shape::Tripod: return 1;
    case Shape::Bubble: return 2;
  }
  return 0;
}

std::string DiagramKey::pretty() const {
  switch (shape) {
    case Shape::Chords:
      return "D(" + std::to_string(chords[0][0]) + std::to_string(chords[0][1]) + ")(" +
             std::to_string(chords[1][0]) + std::to_string(chords[1][1]) + ")";
    case Shape::Tripod:
      return "u" + std::to_string(tri[0]) + std::to_string(tri[1]) + std::to_string(tri[2]);
    case Shape::Bubble:
      return "w" + std::to_string(bub[0]) + (bub[0] == bub[1] ? "" : std::to_string(bub[1]));
  }
  return "?";
}

void DiagramVector::add(const DiagramKey& k, const Rational& c) {
  if (c == 0) return;
  auto it = coeffs.find(k);
  if (it == coeffs.end()) {
    coeffs.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

DiagramVector DiagramVector::operator+(const DiagramVector& o) const {
  DiagramVector out = *this;
  for (const auto& [k, c] : o.coeffs) out.add(k, c);
  return out;
}

DiagramVector DiagramVector::operator-(const DiagramVector& o) const {
  DiagramVector out = *this;
  for (const auto& [k, c] : o.coeffs) out.add(k, -c);
  return out;
}

DiagramVector DiagramVector::scaled(const Rational& c) const {
  DiagramVector out(rank);
  if (c == 0) return out;
  for (const auto& [k, v] : coeffs) out.coeffs.emplace(k, v * c);
  return out;
}

std::string DiagramVector::pretty() const {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : coeffs) {
    if (!first) out += c > 0 ? " + " : " - ";
    if (first && c < 0) out += "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    out += k.pretty();
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Rewriting configurations.
//
// A chord-pair configuration has legs 0..3; legs {0,1} and {2,3} are the two
// chords. A tripod configuration has legs 0,1,2 whose counterclockwise
// cyclic order at the vertex is (0,1,2). Only the per-arc order of legs
// matters, kept in `order`.
// ---------------------------------------------------------------------------

struct LegConfig {
  std::vector<int> arc;                   // arc of each leg (1-based)
  std::map<int, std::vector<int>> order;  // per arc: leg ids in position order

  int rank_of(int leg) const {
    const auto& v = order.at(arc[leg]);
    return static_cast<int>(std::find(v.begin(), v.end(), leg) - v.begin());
  }
};

// Value of a tripod configuration with cyclic order (legs[0],legs[1],legs[2]).
// `legs` lists leg ids as placed in cfg.
DiagramVector reduce_tripod(const LegConfig& cfg, const std::array<int, 3>& legs, int n,
                            const Rational& coeff) {
  DiagramVector out(n);
  if (coeff == 0) return out;
  int a0 = cfg.arc[legs[0]], a1 = cfg.arc[legs[1]], a2 = cfg.arc[legs[2]];
  if (a0 != a1 && a1 != a2 && a0 != a2) {
    // sign: parity of (a0,a1,a2) against sorted order
    std::array<int, 3> s{a0, a1, a2};
    std::sort(s.begin(), s.end());
    int sign = 1;
    std::array<int, 3> t{a0, a1, a2};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (t[i] > t[j]) {
          std::swap(t[i], t[j]);
          sign = -sign;
        }
    out.add(DiagramKey::tripod(s[0], s[1], s[2]), coeff * sign);
    return out;
  }
  // pick the repeated arc; merge its first two legs (adjacent by
  // construction: only tripod legs live on the arcs)
  int rep = (a0 == a1 || a0 == a2) ? a0 : a1;
  std::vector<int> on_rep;
  for (int leg : cfg.order.at(rep))
    if (leg == legs[0] || leg == legs[1] || leg == legs[2]) on_rep.push_back(leg);
  int x = on_rep[0], y = on_rep[1];
  int z = -1;
  for (int leg : legs)
    if (leg != x && leg != y) z = leg;
  // orientation: is the cyclic order (x,y,z)?
  std::array<std::array<int, 3>, 3> rots{{{legs[0], legs[1], legs[2]},
                                          {legs[1], legs[2], legs[0]},
                                          {legs[2], legs[0], legs[1]}}};
  int s = -1;
  for (const auto& r : rots)
    if (r == std::array<int, 3>{x, y, z}) s = 1;
  // STU merge of an adjacent same-arc pair of tripod legs: with the cyclic
  // order (first,second,other) the value is -1/2 of the bubble.
  out.add(DiagramKey::bubble(rep, cfg.arc[z]), coeff * s * Rational(-1, 2));
  return out;
}

DiagramVector reduce_chords(const LegConfig& start, int n, const Rational& coeff0);

// S-term for swapping adjacent chord legs x (earlier) and y: the merged
// tripod with cyclic order (new leg, partner(x), partner(y)).
DiagramVector chord_merge_term(const LegConfig& cfg, int x, int y, int n, const Rational& coeff) {
  auto partner = [](int leg) { return leg ^ 1; };
  int px = partner(x), py = partner(y);
  if (px == y) return DiagramVector(n);  // same chord: tadpole, vanishes
  // build the tripod config: remove x,y, insert a new leg (id 2) where the
  // pair sat; relabel px,py as legs 0,1 to keep ids small
  LegConfig tri;
  tri.arc = {cfg.arc[px], cfg.arc[py], cfg.arc[x]};
  std::map<int, int> relabel{{px, 0}, {py, 1}};
  int merged_arc = cfg.arc[x];
  for (const auto& [arc, legs] : cfg.order) {
    std::vector<int> seq;
    for (int leg : legs) {
      if (leg == y) continue;
      if (leg == x) {
        if (arc == merged_arc) seq.push_back(2);
        continue;
      }
      auto it = relabel.find(leg);
      if (it != relabel.end()) seq.push_back(it->second);
    }
    if (!seq.empty()) tri.order[arc] = seq;
  }
  return reduce_tripod(tri, {2, 0, 1}, n, coeff);
}

DiagramVector reduce_chords(const LegConfig& start, int n, const Rational& coeff0) {
  DiagramVector out(n);
  std::vector<std::pair<Rational, LegConfig>> work{{coeff0, start}};
  while (!work.empty()) {
    auto [coeff, cfg] = work.back();
    work.pop_back();
    if (coeff == 0) continue;
    // chord labels: chord 0 = legs {0,1}, chord 1 = legs {2,3}
    auto chord_of = [](int leg) { return leg / 2; };
    std::array<int, 2> k0{cfg.arc[0], cfg.arc[1]}, k1{cfg.arc[2], cfg.arc[3]};
    if (k0[0] > k0[1]) std::swap(k0[0], k0[1]);
    if (k1[0] > k1[1]) std::swap(k1[0], k1[1]);
    int first_chord;  // whose legs come first on every arc in canonical form
    if (k0 != k1) {
      first_chord = k0 < k1 ? 0 : 1;
    } else {
      // tied chords: the chord holding the first leg of the lowest arc leads
      first_chord = chord_of(cfg.order.begin()->second.front());
    }
    // find the first deviation from the canonical pattern
    int swap_arc = 0, swap_pos = -1;
    for (const auto& [arc, legs] : cfg.order) {
      int lead = 0;
      for (int leg : legs) lead += chord_of(leg) == first_chord;
      for (size_t i = 0; i < legs.size(); ++i) {
        bool want_first = static_cast<int>(i) < lead;
        if ((chord_of(legs[i]) == first_chord) != want_first) {
          // bubble the next leading-chord leg to the left
          size_t j = i + 1;
          while (j < legs.size() && chord_of(legs[j]) != first_chord) ++j;
          swap_arc = arc;
          swap_pos = static_cast<int>(j - 1);
          break;
        }
      }
      if (swap_pos >= 0) break;
    }
    if (swap_pos < 0) {
      out.add(DiagramKey::chord_pair(k0, k1), coeff);
      continue;
    }
    auto& legs = cfg.order[swap_arc];
    int x = legs[swap_pos], y = legs[swap_pos + 1];
    // STU: cfg = swapped + merge(x, y)
    out = out + chord_merge_term(cfg, x, y, n, coeff);
    std::swap(legs[swap_pos], legs[swap_pos + 1]);
    work.emplace_back(coeff, cfg);
  }
  return out;
}

// Occurrence table of a substitution: for each arc i, the list of
// (target arc, block index, sign) positions where a leg on arc i lands.
struct Occurrences {
  std::vector<std::vector<std::array<int, 3>>> at;  // at[i-1] = {target, block, eps}

  Occurrences(const Substitution& f) {
    at.assign(f.rank, {});
    for (int l = 1; l <= f.rank; ++l) {
      const auto& word = f.images[l - 1];
      for (size_t k = 0; k < word.size(); ++k) {
        auto [arc, eps] = word[k];
        at[arc - 1].push_back({l, static_cast<int>(k), eps});
      }
    }
  }
};

// Materialize the canonical configuration of a basis key. Returns the leg
// config plus shape data needed to reduce the rerouted result.
struct Materialized {
  DiagramKey::Shape shape;
  LegConfig cfg;
  std::array<int, 3> tri_legs{0, 1, 2};
};

Materialized materialize(const DiagramKey& key) {
  Materialized m;
  m.shape = key.shape;
  switch (key.shape) {
    case DiagramKey::Shape::Chords: {
      // canonical interleaving: chord with lex-smaller arc pair first; for
      // tied pairs the parallel matching
      std::array<std::array<int, 2>, 2> ch = key.chords;
      m.cfg.arc = {ch[0][0], ch[0][1], ch[1][0], ch[1][1]};
      // per-arc order: chord 0 legs before chord 1 legs, each chord's legs
      // in id order
      for (int leg : {0, 1, 2, 3}) m.cfg.order[m.cfg.arc[leg]].push_back(leg);
      break;
    }
    case DiagramKey::Shape::Tripod: {
      m.cfg.arc = {key.tri[0], key.tri[1], key.tri[2]};
      for (int leg : {0, 1, 2}) m.cfg.order[m.cfg.arc[leg]].push_back(leg);
      break;
    }
    case DiagramKey::Shape::Bubble: {
      m.cfg.arc = {key.bub[0], key.bub[1]};
      for (int leg : {0, 1}) m.cfg.order[m.cfg.arc[leg]].push_back(leg);
      break;
    }
  }
  return m;
}

// Check the canonical interleaving assumption for chord keys: with legs
// inserted in id order, tied chords come out parallel and untied ones have
// the lex-smaller chord's legs first. This holds because chords are stored
// sorted.

DiagramVector act_on_key(const Substitution& f, const DiagramKey& key, const Rational& coeff) {
  int n = f.rank;
  Occurrences occ(f);
  Materialized m = materialize(key);
  int nlegs = static_cast<int>(m.cfg.arc.size());
  std::vector<int> choice(nlegs, 0);
  DiagramVector out(n);
  auto rec = [&](auto&& self, int leg) -> void {
    if (leg == nlegs) {
      // assemble the rerouted configuration
      LegConfig moved;
      moved.arc.assign(nlegs, 0);
      int sign = 1;
      for (int i = 0; i < nlegs; ++i) {
        const auto& o = occ.at[m.cfg.arc[i] - 1][choice[i]];
        moved.arc[i] = o[0];
        sign *= o[2];
      }
      // per target arc: sort by (block, source order within block,
      // reversed when the block is orientation-reversing)
      std::map<int, std::vector<std::pair<std::pair<int, int>, int>>> buckets;
      for (int i = 0; i < nlegs; ++i) {
        const auto& o = occ.at[m.cfg.arc[i] - 1][choice[i]];
        int src_rank = m.cfg.rank_of(i);
        int within = o[2] > 0 ? src_rank : -src_rank;
        buckets[o[0]].push_back({{o[1], within}, i});
      }
      for (auto& [arc, v] : buckets) {
        std::sort(v.begin(), v.end());
        auto& seq = moved.order[arc];
        for (const auto& [k, leg_id] : v) seq.push_back(leg_id);
      }
      Rational c = coeff * sign;
      switch (m.shape) {
        case DiagramKey::Shape::Chords:
          out = out + reduce_chords(moved, n, c);
          break;
        case DiagramKey::Shape::Tripod:
          out = out + reduce_tripod(moved, m.tri_legs, n, c);
          break;
        case DiagramKey::Shape::Bubble:
          out.add(DiagramKey::bubble(moved.arc[0], moved.arc[1]), c);
          break;
      }
      return;
    }
    const auto& options = occ.at[m.cfg.arc[leg] - 1];
    for (size_t k = 0; k < options.size(); ++k) {
      choice[leg] = static_cast<int>(k);
      self(self, leg + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Substitution Substitution::identity(int n) {
  Substitution s;
  s.rank = n;
  s.images.resize(n);
  for (int i = 1; i <= n; ++i) s.images[i - 1] = {{i, 1}};
  return s;
}

Substitution Substitution::compose(const Substitution& a, const Substitution& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  Substitution out;
  out.rank = a.rank;
  out.images.resize(a.rank);
  for (int l = 0; l < a.rank; ++l) {
    std::vector<std::pair<int, int>> word;
    for (auto [arc, eps] : b.images[l]) {
      const auto& rep = a.images[arc - 1];
      if (eps > 0) {
        word.insert(word.end(), rep.begin(), rep.end());
      } else {
        for (auto it = rep.rbegin(); it != rep.rend(); ++it)
          word.emplace_back(it->first, -it->second);
      }
    }
    // free reduction
    std::vector<std::pair<int, int>> red;
    for (auto& letter : word) {
      if (!red.empty() && red.back().first == letter.first && red.back().second == -letter.second)
        red.pop_back();
      else
        red.push_back(letter);
    }
    out.images[l] = red;
  }
  return out;
}

bool Substitution::is_identity() const {
  for (int i = 1; i <= rank; ++i)
    if (images[i - 1] != std::vector<std::pair<int, int>>{{i, 1}}) return false;
  return true;
}

std::vector<std::vector<int>> Substitution::abelianized() const {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  for (int l = 0; l < rank; ++l)
    for (auto [arc, eps] : images[l]) m[arc - 1][l] += eps;
  return m;
}

Substitution AutGenerator::substitution(int n) const {
  Substitution s = Substitution::identity(n);
  auto need = [&](int i) {
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
  };
  switch (kind) {
    case Kind::NielsenU:
      need(2);
      s.images[0] = {{1, 1}, {2, 1}};
      break;
    case Kind::NielsenP:
      need(2);
      s.images[0] = {{2, 1}};
      s.images[1] = {{1, 1}};
      break;
    case Kind::NielsenSigma:
      need(1);
      s.images[0] = {{1, -1}};
      break;
    case Kind::NielsenQ: {
      need(3);
      if (n != 3) throw std::invalid_argument("Q is a rank-3 generator");
      s.images[0] = {{2, 1}};
      s.images[1] = {{3, 1}};
      s.images[2] = {{1, 1}};
      break;
    }
    case Kind::MagnusG:
      need(a);
      need(b);
      if (a == b) throw std::invalid_argument("g(a,b) needs a != b");
      s.images[b - 1] = {{a, 1}, {b, 1}, {a, -1}};
      break;
    case Kind::MagnusF:
      need(a);
      need(b);
      need(c);
      if (!(a < b) || c == a || c == b) throw std::invalid_argument("f(a,b,c) needs a<b, c not in {a,b}");
      s.images[c - 1] = {{c, 1}, {a, 1}, {b, 1}, {a, -1}, {b, -1}};
      break;
    case Kind::Inner: {
      need(a);
      for (int j = 1; j <= n; ++j)
        if (j != a) s.images[j - 1] = {{a, 1}, {j, 1}, {a, -1}};
      break;
    }
  }
  return s;
}

std::string AutGenerator::name() const {
  switch (kind) {
    case Kind::NielsenU: return "U";
    case Kind::NielsenP: return "P";
    case Kind::NielsenSigma: return "sigma";
    case Kind::NielsenQ: return "Q";
    case Kind::MagnusG: return "g(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::MagnusF:
      return "f(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    case Kind::Inner: return "inner(" + std::to_string(a) + ")";
  }
  return "?";
}

DiagramVector act_subst(const Substitution& f, const DiagramVector& v) {
  if (f.rank != v.rank) throw std::invalid_argument("rank mismatch");
  DiagramVector out(v.rank);
  for (const auto& [key, c] : v.coeffs) out = out + act_on_key(f, key, c);
  return out;
}

DiagramVector act_aut(const AutGenerator& g, const DiagramVector& v) {
  return act_subst(g.substitution(v.rank), v);
}

DiagramVector act_word(const std::vector<AutGenerator>& gens, const DiagramVector& v) {
  DiagramVector out = v;
  for (const auto& g : gens) out = act_aut(g, out);
  return out;
}

DiagramVector bracket(const DiagramVector& v, const Substitution& f) {
  // only defined for IA elements
  auto m = f.abelianized();
  for (int i = 0; i < f.rank; ++i)
    for (int j = 0; j < f.rank; ++j)
      if (m[i][j] != (i == j ? 1 : 0))
        throw std::invalid_argument("bracket requires an IA element");
  return act_subst(f, v) - v;
}

int filtration_level(const DiagramVector& v) {
  if (v.is_zero()) throw std::invalid_argument("zero vector has no filtration level");
  int level = 2;
  for (const auto& [k, c] : v.coeffs) level = std::min(level, k.trivalent_count());
  return level;
}

DiagramVector make_u(int a, int b, int c, int n) {
  DiagramVector v(n);
  v.add(DiagramKey::tripod(a, b, c), 1);
  return v;
}

DiagramVector make_w(int i, int j, int n) {
  DiagramVector v(n);
  v.add(DiagramKey::bubble(i, j), 1);
  return v;
}

DiagramVector make_v(int d, int o1, int o2, int n) {
  // leading term: double chord on arc d paired with chord {o1,o2};
  // correction terms: the two re-pairings, each with weight -1/2
  LegConfig A;
  A.arc = {d, d, o1, o2};
  A.order[d] = {0, 1};
  A.order[o1].push_back(2);
  A.order[o2].push_back(3);

  LegConfig B;  // chords {d,o1}, {d,o2}; on arc d the o1-chord leg first
  B.arc = {d, o1, d, o2};
  B.order[d] = {0, 2};
  B.order[o1].push_back(1);
  B.order[o2].push_back(3);

  LegConfig C = B;
  C.order[d] = {2, 0};

  return reduce_chords(A, n, 1) + reduce_chords(B, n, Rational(-1, 2)) +
         reduce_chords(C, n, Rational(-1, 2));
}

DiagramVector make_vpair(int i, int j, int n) {
  LegConfig A;
  A.arc = {i, i, j, j};
  A.order[i] = {0, 1};
  A.order[j] = {2, 3};

  LegConfig P;  // parallel (i,j)(i,j)
  P.arc = {i, j, i, j};
  P.order[i] = {0, 2};
  P.order[j] = {1, 3};

  LegConfig X = P;  // crossed
  X.order[j] = {3, 1};

  return reduce_chords(A, n, 1) + reduce_chords(P, n, Rational(-1, 2)) +
         reduce_chords(X, n, Rational(-1, 2));
}

const std::vector<DiagramVector>& basis_B() {
  static const std::vector<DiagramVector> basis = [] {
    std::vector<DiagramVector> b;
    b.push_back(make_v(1, 2, 3, 3));
    b.push_back(make_v(2, 1, 3, 3));
    b.push_back(make_v(3, 1, 2, 3));
    b.push_back(make_vpair(1, 2, 3));
    b.push_back(make_vpair(1, 3, 3));
    b.push_back(make_vpair(2, 3, 3));
    b.push_back(make_u(1, 2, 3, 3));
    b.push_back(make_w(1, 1, 3));
    b.push_back(make_w(2, 2, 3));
    b.push_back(make_w(3, 3, 3));
    b.push_back(make_w(1, 2, 3));
    b.push_back(make_w(1, 3, 3));
    b.push_back(make_w(2, 3, 3));
    return b;
  }();
  return basis;
}

const std::vector<std::string>& basis_B_names() {
  static const std::vector<std::string> names{"v1",  "v2",  "v3",  "v12", "v13", "v23", "u123",
                                              "w1",  "w2",  "w3",  "w12", "w13", "w23"};
  return names;
}

ChartTensor quotient_class(const DiagramVector& v, int level) {
  if (level != 1 && level != 2) throw std::invalid_argument("level must be 1 or 2");
  if (!v.is_zero() && filtration_level(v) < level)
    throw std::invalid_argument("insufficient filtration for quotient_class");
  if (level == 2) {
    ChartTensor out(v.rank, {{FactorKind::DualSym, 2}});
    for (const auto& [k, c] : v.coeffs)
      if (k.shape == DiagramKey::Shape::Bubble) out.add({{k.bub[0], k.bub[1]}}, c);
    return out;
  }
  ChartTensor out(v.rank, {{FactorKind::DualWedge, 3}});
  for (const auto& [k, c] : v.coeffs)
    if (k.shape == DiagramKey::Shape::Tripod) out.add({{k.tri[0], k.tri[1], k.tri[2]}}, c);
  return out;
}

bool inner_action_check(int i, const DiagramVector& v) {
  // inner conjugation expressed through the Magnus generators g(i,b)
  std::vector<AutGenerator> gens;
  for (int b = 1; b <= v.rank; ++b)
    if (b != i) gens.push_back(AutGenerator::magnus_g(i, b));
  return act_word(gens, v) == v;
}

}  // namespace jacobirep
