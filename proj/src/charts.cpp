#include "jacobirep/charts.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <stdexcept>

#include "jacobirep/symgroup.hpp"

namespace jacobirep {

namespace {

bool is_dual(FactorKind k) {
  return k == FactorKind::DualWedge || k == FactorKind::DualSym || k == FactorKind::DualVec;
}

bool is_wedge(FactorKind k) { return k == FactorKind::DualWedge || k == FactorKind::Wedge; }

}  // namespace

void ChartTensor::add_raw(const ChartKey& key, const Rational& c) {
  if (c == 0) return;
  ChartKey sorted = key;
  Rational coeff = c;
  for (size_t f = 0; f < factors.size(); ++f) {
    auto& tuple = sorted[f];
    if (static_cast<int>(tuple.size()) != factors[f].arity)
      throw std::invalid_argument("chart key arity mismatch");
    if (is_wedge(factors[f].kind)) {
      // bubble sort, tracking the sign
      for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = 0; j + 1 < tuple.size() - i; ++j)
          if (tuple[j] > tuple[j + 1]) {
            std::swap(tuple[j], tuple[j + 1]);
            coeff = -coeff;
          }
      for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] == tuple[i + 1]) return;  // degenerate wedge
    } else {
      std::sort(tuple.begin(), tuple.end());
    }
  }
  add(sorted, coeff);
}

void ChartTensor::add(const ChartKey& key, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ChartTensor ChartTensor::operator+(const ChartTensor& other) const {
  ChartTensor out = *this;
  for (const auto& [k, c] : other.terms) out.add(k, c);
  return out;
}

ChartTensor ChartTensor::operator-(const ChartTensor& other) const {
  ChartTensor out = *this;
  for (const auto& [k, c] : other.terms) out.add(k, -c);
  return out;
}

ChartTensor ChartTensor::scaled(const Rational& c) const {
  ChartTensor out(rank, factors);
  if (c == 0) return out;
  for (const auto& [k, v] : terms) out.terms.emplace(k, v * c);
  return out;
}

std::string ChartTensor::to_json() const {
  nlohmann::json j;
  j["rank"] = rank;
  nlohmann::json fj = nlohmann::json::array();
  for (const auto& f : factors) {
    static const char* names[] = {"dual_wedge", "dual_sym", "dual_vec", "wedge", "vec"};
    fj.push_back({{"kind", names[static_cast<int>(f.kind)]}, {"arity", f.arity}});
  }
  j["factors"] = fj;
  nlohmann::json tj = nlohmann::json::array();
  for (const auto& [k, c] : terms) tj.push_back({{"key", k}, {"coeff", to_string(c)}});
  j["terms"] = tj;
  return j.dump();
}

ChartTensor ChartTensor::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Factor> factors;
  for (const auto& fj : j.at("factors")) {
    std::string kind = fj.at("kind").get<std::string>();
    FactorKind k;
    if (kind == "dual_wedge") k = FactorKind::DualWedge;
    else if (kind == "dual_sym") k = FactorKind::DualSym;
    else if (kind == "dual_vec") k = FactorKind::DualVec;
    else if (kind == "wedge") k = FactorKind::Wedge;
    else if (kind == "vec") k = FactorKind::Vec;
    else throw std::invalid_argument("bad factor kind: " + kind);
    factors.push_back({k, fj.at("arity").get<int>()});
  }
  ChartTensor out(j.at("rank").get<int>(), factors);
  for (const auto& tj : j.at("terms"))
    out.add(tj.at("key").get<ChartKey>(), rational_from_string(tj.at("coeff").get<std::string>()));
  return out;
}

std::string ChartTensor::pretty() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string coeff = to_string(c);
    if (!first) out += c >= 0 ? " + " : " - ";
    if (first && c < 0) out += "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    for (size_t f = 0; f < factors.size(); ++f) {
      if (f) out += "(x)";
      const char* sep = is_wedge(factors[f].kind) ? "^" : ".";
      for (size_t i = 0; i < k[f].size(); ++i) {
        if (i) out += sep;
        out += "e" + std::to_string(k[f][i]) + (is_dual(factors[f].kind) ? "*" : "");
      }
    }
  }
  return out;
}

ChartTensor act_gl(const GLGenerator& g, const ChartTensor& t) {
  ChartTensor out(t.rank, t.factors);
  for (const auto& [key, c] : t.terms) {
    // expand factorwise; each index slot substitutes independently
    std::vector<std::pair<ChartKey, Rational>> partial{{key, c}};
    for (size_t f = 0; f < t.factors.size(); ++f) {
      bool dual = is_dual(t.factors[f].kind);
      for (int slot = 0; slot < t.factors[f].arity; ++slot) {
        std::vector<std::pair<ChartKey, Rational>> next;
        for (const auto& [k, coeff] : partial) {
          int idx = k[f][slot];
          switch (g.kind) {
            case GLGenerator::Kind::Permutation: {
              ChartKey k2 = k;
              k2[f][slot] = idx == g.k ? g.l : (idx == g.l ? g.k : idx);
              next.emplace_back(k2, coeff);
              break;
            }
            case GLGenerator::Kind::NegateFirst: {
              next.emplace_back(k, idx == 1 ? -coeff : coeff);
              break;
            }
            case GLGenerator::Kind::Elementary: {
              next.emplace_back(k, coeff);
              if (!dual && idx == g.l) {
                ChartKey k2 = k;
                k2[f][slot] = g.k;
                next.emplace_back(k2, coeff);
              } else if (dual && idx == g.k) {
                ChartKey k2 = k;
                k2[f][slot] = g.l;
                next.emplace_back(k2, -coeff);
              }
              break;
            }
          }
        }
        partial = std::move(next);
      }
    }
    for (const auto& [k, coeff] : partial) out.add_raw(k, coeff);
  }
  return out;
}

std::optional<Weight> weight_of(const ChartTensor& t) {
  std::optional<Weight> found;
  for (const auto& [key, c] : t.terms) {
    Weight wt(t.rank, 0);
    for (size_t f = 0; f < t.factors.size(); ++f) {
      int sign = is_dual(t.factors[f].kind) ? -1 : 1;
      for (int x : key[f]) wt[x - 1] += sign;
    }
    if (!found) found = wt;
    else if (*found != wt) return std::nullopt;
  }
  return found;
}

MixedTensor embed(const ChartTensor& t) {
  int q = 0, p = 0;
  for (const auto& f : t.factors) (is_dual(f.kind) ? q : p) += f.arity;
  MixedTensor out(q, p, t.rank);
  for (const auto& [key, c] : t.terms) {
    MixedTensor term(0, 0, t.rank);
    term.add({{}, {}}, c);
    for (size_t f = 0; f < t.factors.size(); ++f) {
      const auto& tuple = key[f];
      int k = t.factors[f].arity;
      MixedTensor factor(is_dual(t.factors[f].kind) ? k : 0,
                         is_dual(t.factors[f].kind) ? 0 : k, t.rank);
      if (is_wedge(t.factors[f].kind) && k > 1) {
        // (1/k!) alternating sum
        Rational norm(1);
        for (int i = 2; i <= k; ++i) norm /= i;
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        do {
          std::vector<int> arranged(k);
          for (int i = 0; i < k; ++i) arranged[i] = tuple[order[i]];
          Perm pm(order.begin(), order.end());
          TensorWord w;
          if (is_dual(t.factors[f].kind)) w.co = arranged;
          else w.contra = arranged;
          factor.add(w, Rational(perm_sign(pm)) * norm);
        } while (std::next_permutation(order.begin(), order.end()));
      } else if (t.factors[f].kind == FactorKind::DualSym && k == 2) {
        // (1/2)(a (x) b + b (x) a)
        TensorWord w1{{tuple[0], tuple[1]}, {}}, w2{{tuple[1], tuple[0]}, {}};
        factor.add(w1, Rational(1, 2));
        factor.add(w2, Rational(1, 2));
      } else {
        TensorWord w;
        if (is_dual(t.factors[f].kind)) w.co = tuple;
        else w.contra = tuple;
        factor.add(w, 1);
      }
      term = term.tensor(factor);
    }
    out = out + term;
  }
  return out;
}

std::vector<Factor> level1_chart_factors() {
  return {{FactorKind::DualWedge, 3}, {FactorKind::DualVec, 1}, {FactorKind::Wedge, 2}};
}

std::vector<Factor> level2_chart_factors() {
  return {{FactorKind::DualSym, 2}, {FactorKind::DualVec, 1}, {FactorKind::Wedge, 2}};
}

std::string contraction_name_string(ContractionName name) {
  switch (name) {
    case ContractionName::c_12_14: return "c_{1^2,1^4}";
    case ContractionName::c_12_212: return "c_{1^2,21^2}";
    case ContractionName::c_1_13: return "c_{1,1^3}";
    case ContractionName::cp_1_13: return "c'_{1,1^3}";
    case ContractionName::c_1_21: return "c_{1,21}";
    case ContractionName::c_0_12: return "c_{0,1^2}";
    case ContractionName::cp_0_12: return "c'_{0,1^2}";
    case ContractionName::c_12_21: return "c_{1^2,21}";
    case ContractionName::c_12_3: return "c_{1^2,3}";
    case ContractionName::c_1_12: return "c_{1,1^2}";
    case ContractionName::c_1_2: return "c_{1,2}";
    case ContractionName::cp_1_2: return "c'_{1,2}";
    case ContractionName::c_0_1: return "c_{0,1}";
  }
  throw std::logic_error("unreachable");
}

ContractionName contraction_name_parse(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ContractionName::c_0_1); ++i)
    if (contraction_name_string(static_cast<ContractionName>(i)) == s)
      return static_cast<ContractionName>(i);
  throw std::invalid_argument("unknown contraction: " + s);
}

ChartTensor named_contraction(ContractionName name, const MixedTensor& t) {
  int n = t.rank;
  bool four = name == ContractionName::c_12_14 || name == ContractionName::c_12_212 ||
              name == ContractionName::c_1_13 || name == ContractionName::cp_1_13 ||
              name == ContractionName::c_1_21 || name == ContractionName::c_0_12 ||
              name == ContractionName::cp_0_12;
  if (four && (t.q != 4 || t.p != 2)) throw std::invalid_argument("contraction needs q=4,p=2");
  if (!four && (t.q != 3 || t.p != 2)) throw std::invalid_argument("contraction needs q=3,p=2");

  ChartTensor out;
  switch (name) {
    case ContractionName::c_12_14:
      out = ChartTensor(n, {{FactorKind::DualWedge, 4}, {FactorKind::Wedge, 2}});
      for (const auto& [w, c] : t.terms)
        out.add_raw({{w.co[0], w.co[1], w.co[2], w.co[3]}, {w.contra[0], w.contra[1]}}, c);
      return out;
    case ContractionName::c_12_212:
      out = ChartTensor(n, level1_chart_factors());
      for (const auto& [w, c] : t.terms)
        out.add_raw({{w.co[0], w.co[1], w.co[2]}, {w.co[3]}, {w.contra[0], w.contra[1]}}, c);
      return out;
    case ContractionName::c_1_13:
      out = ChartTensor(n, {{FactorKind::DualWedge, 3}, {FactorKind::Vec, 1}});
      for (const auto& [w, c] : t.terms)
        if (w.co[3] == w.contra[1])
          out.add_raw({{w.co[0], w.co[1], w.co[2]}, {w.contra[0]}}, c);
      return out;
    case ContractionName::cp_1_13:
      out = ChartTensor(n, {{FactorKind::DualWedge, 3}, {FactorKind::Vec, 1}});
      for (const auto& [w, c] : t.terms)
        if (w.co[0] == w.contra[1])
          out.add_raw({{w.co[1], w.co[2], w.co[3]}, {w.contra[0]}}, c);
      return out;
    case ContractionName::c_1_21:
      out = ChartTensor(n, {{FactorKind::DualWedge, 2}, {FactorKind::DualVec, 1}, {FactorKind::Vec, 1}});
      for (const auto& [w, c] : t.terms)
        if (w.co[0] == w.contra[1])
          out.add_raw({{w.co[1], w.co[2]}, {w.co[3]}, {w.contra[0]}}, c);
      return out;
    case ContractionName::c_0_12:
      out = ChartTensor(n, {{FactorKind::DualWedge, 2}});
      for (const auto& [w, c] : t.terms)
        if (w.co[3] == w.contra[1] && w.co[0] == w.contra[0])
          out.add_raw({{w.co[1], w.co[2]}}, c);
      return out;
    case ContractionName::cp_0_12:
      out = ChartTensor(n, {{FactorKind::DualWedge, 2}});
      for (const auto& [w, c] : t.terms)
        if (w.co[0] == w.contra[0] && w.co[1] == w.contra[1])
          out.add_raw({{w.co[2], w.co[3]}}, c);
      return out;
    case ContractionName::c_12_21:
      out = ChartTensor(n, {{FactorKind::DualVec, 1}, {FactorKind::DualWedge, 2}, {FactorKind::Wedge, 2}});
      for (const auto& [w, c] : t.terms)
        out.add_raw({{w.co[0]}, {w.co[1], w.co[2]}, {w.contra[0], w.contra[1]}}, c);
      return out;
    case ContractionName::c_12_3:
      out = ChartTensor(n, {{FactorKind::DualVec, 1}, {FactorKind::DualVec, 1}, {FactorKind::DualVec, 1}, {FactorKind::Wedge, 2}});
      for (const auto& [w, c] : t.terms)
        out.add_raw({{w.co[0]}, {w.co[1]}, {w.co[2]}, {w.contra[0], w.contra[1]}}, c);
      return out;
    case ContractionName::c_1_12:
      out = ChartTensor(n, {{FactorKind::DualWedge, 2}, {FactorKind::Vec, 1}});
      for (const auto& [w, c] : t.terms)
        if (w.co[1] == w.contra[0])
          out.add_raw({{w.co[0], w.co[2]}, {w.contra[1]}}, c);
      return out;
    case ContractionName::c_1_2:
      out = ChartTensor(n, {{FactorKind::DualVec, 1}, {FactorKind::DualVec, 1}, {FactorKind::Vec, 1}});
      for (const auto& [w, c] : t.terms)
        if (w.co[1] == w.contra[0])
          out.add_raw({{w.co[0]}, {w.co[2]}, {w.contra[1]}}, c);
      return out;
    case ContractionName::cp_1_2:
      out = ChartTensor(n, {{FactorKind::DualVec, 1}, {FactorKind::DualVec, 1}, {FactorKind::Vec, 1}});
      for (const auto& [w, c] : t.terms)
        if (w.co[2] == w.contra[1])
          out.add_raw({{w.co[0]}, {w.co[1]}, {w.contra[0]}}, c);
      return out;
    case ContractionName::c_0_1:
      out = ChartTensor(n, {{FactorKind::DualVec, 1}});
      for (const auto& [w, c] : t.terms)
        if (w.co[1] == w.contra[0] && w.co[2] == w.contra[1])
          out.add_raw({{w.co[0]}}, c);
      return out;
  }
  throw std::logic_error("unreachable");
}

int vij_index(std::pair<int, int> ab, std::pair<int, int> pq) {
  static const std::pair<int, int> wedges[] = {{1, 2}, {1, 3}, {2, 3}};
  static const std::pair<int, int> syms[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  int wi = -1, si = -1;
  for (int i = 0; i < 3; ++i)
    if (wedges[i] == ab) wi = i;
  for (int i = 0; i < 6; ++i)
    if (syms[i] == pq) si = i;
  if (wi < 0 || si < 0) throw std::invalid_argument("bad v^i_j labels");
  return wi * 6 + si + 1;
}

ChartTensor vij_chart(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 18) throw std::invalid_argument("v^i_j out of range");
  static const std::pair<int, int> wedges[] = {{1, 2}, {1, 3}, {2, 3}};
  static const std::pair<int, int> syms[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  auto [a, b] = wedges[(j - 1) / 6];
  auto [p, q] = syms[(j - 1) % 6];
  ChartTensor out(3, level2_chart_factors());
  out.add({{p, q}, {i}, {a, b}}, 1);
  return out;
}

MixedTensor vij_basis(int i, int j) { return embed(vij_chart(i, j)); }

std::map<std::pair<int, int>, Rational> vij_coordinates(const ChartTensor& t) {
  if (t.rank != 3 || t.factors != level2_chart_factors())
    throw std::invalid_argument("vij_coordinates wants the rank-3 level-2 chart");
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [key, c] : t.terms) {
    int i = key[1][0];
    int j = vij_index({key[2][0], key[2][1]}, {key[0][0], key[0][1]});
    out[{i, j}] = c;
  }
  return out;
}

std::string vij_pretty(const std::map<std::pair<int, int>, Rational>& coords) {
  if (coords.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ij, c] : coords) {
    if (c == 0) continue;
    if (!first) out += c > 0 ? " + " : " - ";
    if (first && c < 0) out += "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    out += "v^" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
  }
  return out;
}

}  // namespace jacobirep
