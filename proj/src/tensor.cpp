#include "jacobirep/tensor.hpp"

#include <json.hpp>
#include <stdexcept>

#include "jacobirep/character.hpp"
#include "jacobirep/symgroup.hpp"

namespace jacobirep {

MixedTensor MixedTensor::basis_vector(int i, int n) {
  MixedTensor t(0, 1, n);
  t.add({{}, {i}}, 1);
  return t;
}

MixedTensor MixedTensor::basis_covector(int i, int n) {
  MixedTensor t(1, 0, n);
  t.add({{i}, {}}, 1);
  return t;
}

void MixedTensor::add(const TensorWord& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

MixedTensor MixedTensor::operator+(const MixedTensor& other) const {
  MixedTensor out = *this;
  for (const auto& [w, c] : other.terms) out.add(w, c);
  return out;
}

MixedTensor MixedTensor::operator-(const MixedTensor& other) const {
  MixedTensor out = *this;
  for (const auto& [w, c] : other.terms) out.add(w, -c);
  return out;
}

MixedTensor MixedTensor::scaled(const Rational& c) const {
  MixedTensor out(q, p, rank);
  if (c == 0) return out;
  for (const auto& [w, k] : terms) out.terms.emplace(w, k * c);
  return out;
}

MixedTensor MixedTensor::tensor(const MixedTensor& other) const {
  if (rank != other.rank) throw std::invalid_argument("rank mismatch");
  MixedTensor out(q + other.q, p + other.p, rank);
  for (const auto& [w1, c1] : terms)
    for (const auto& [w2, c2] : other.terms) {
      TensorWord w = w1;
      w.co.insert(w.co.end(), w2.co.begin(), w2.co.end());
      w.contra.insert(w.contra.end(), w2.contra.begin(), w2.contra.end());
      out.add(w, c1 * c2);
    }
  return out;
}

std::string MixedTensor::to_json() const {
  nlohmann::json terms_json = nlohmann::json::array();
  for (const auto& [w, c] : terms) {
    nlohmann::json t;
    t["co"] = w.co;
    t["contra"] = w.contra;
    t["coeff"] = to_string(c);
    terms_json.push_back(t);
  }
  nlohmann::json j;
  j["q"] = q;
  j["p"] = p;
  j["rank"] = rank;
  j["terms"] = terms_json;
  return j.dump();
}

MixedTensor MixedTensor::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MixedTensor out(j.at("q").get<int>(), j.at("p").get<int>(), j.at("rank").get<int>());
  for (const auto& t : j.at("terms")) {
    TensorWord w{t.at("co").get<std::vector<int>>(), t.at("contra").get<std::vector<int>>()};
    out.add(w, rational_from_string(t.at("coeff").get<std::string>()));
  }
  return out;
}

MixedTensor act_gl(const GLGenerator& g, const MixedTensor& t) {
  if ((g.kind != GLGenerator::Kind::NegateFirst) && (g.k > t.rank || g.l > t.rank || g.k == g.l))
    throw std::invalid_argument("generator index out of range");
  MixedTensor out(t.q, t.p, t.rank);
  switch (g.kind) {
    case GLGenerator::Kind::Permutation: {
      for (const auto& [w, c] : t.terms) {
        TensorWord v = w;
        auto swap_idx = [&](int x) { return x == g.k ? g.l : (x == g.l ? g.k : x); };
        for (int& x : v.co) x = swap_idx(x);
        for (int& x : v.contra) x = swap_idx(x);
        out.add(v, c);
      }
      return out;
    }
    case GLGenerator::Kind::NegateFirst: {
      for (const auto& [w, c] : t.terms) {
        int count = 0;
        for (int x : w.co) count += (x == 1);
        for (int x : w.contra) count += (x == 1);
        out.add(w, (count % 2) ? -c : c);
      }
      return out;
    }
    case GLGenerator::Kind::Elementary: {
      // multilinear expansion: e_l -> e_l + e_k (contra), e_k* -> e_k* - e_l* (co)
      for (const auto& [w, c] : t.terms) {
        std::vector<std::pair<TensorWord, Rational>> partial{{w, c}};
        auto branch = [&](bool covariant, size_t slot) {
          std::vector<std::pair<TensorWord, Rational>> next;
          for (auto& [v, coeff] : partial) {
            int idx = covariant ? v.co[slot] : v.contra[slot];
            if (covariant ? (idx != g.k) : (idx != g.l)) {
              next.emplace_back(v, coeff);
              continue;
            }
            next.emplace_back(v, coeff);
            TensorWord v2 = v;
            if (covariant) {
              v2.co[slot] = g.l;
              next.emplace_back(v2, -coeff);
            } else {
              v2.contra[slot] = g.k;
              next.emplace_back(v2, coeff);
            }
          }
          partial = std::move(next);
        };
        for (size_t s = 0; s < w.co.size(); ++s) branch(true, s);
        for (size_t s = 0; s < w.contra.size(); ++s) branch(false, s);
        for (const auto& [v, coeff] : partial) out.add(v, coeff);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

MixedTensor contraction(const MixedTensor& t, int k, int l) {
  if (k < 1 || k > t.p || l < 1 || l > t.q) throw std::invalid_argument("slot out of range");
  MixedTensor out(t.q - 1, t.p - 1, t.rank);
  for (const auto& [w, c] : t.terms) {
    if (w.contra[k - 1] != w.co[l - 1]) continue;
    TensorWord v;
    for (int i = 0; i < t.q; ++i)
      if (i != l - 1) v.co.push_back(w.co[i]);
    for (int i = 0; i < t.p; ++i)
      if (i != k - 1) v.contra.push_back(w.contra[i]);
    out.add(v, c);
  }
  return out;
}

bool is_traceless(const MixedTensor& t) {
  for (int k = 1; k <= t.p; ++k)
    for (int l = 1; l <= t.q; ++l)
      if (!contraction(t, k, l).is_zero()) return false;
  return true;
}

std::optional<Weight> weight_of(const MixedTensor& t) {
  std::optional<Weight> found;
  for (const auto& [w, c] : t.terms) {
    Weight wt(t.rank, 0);
    for (int x : w.contra) wt[x - 1] += 1;
    for (int x : w.co) wt[x - 1] -= 1;
    if (!found) {
      found = wt;
    } else if (*found != wt) {
      return std::nullopt;
    }
  }
  return found;
}

bool is_highest_weight_vector(const MixedTensor& t, const Bipartition& bip) {
  if (t.is_zero()) return false;
  auto wt = weight_of(t);
  if (!wt || *wt != dominant_weight(bip, t.rank)) return false;
  for (int k = 1; k <= t.rank; ++k)
    for (int l = k + 1; l <= t.rank; ++l)
      if (act_gl(GLGenerator::elementary(k, l), t) != t) return false;
  return true;
}

namespace {

// Enumerate all basis words of (H*)^q (x) H^p at rank n, in map order.
std::vector<TensorWord> all_words(int q, int p, int n) {
  std::vector<TensorWord> out;
  TensorWord w;
  w.co.assign(q, 1);
  w.contra.assign(p, 1);
  while (true) {
    out.push_back(w);
    int i = q + p - 1;
    for (; i >= 0; --i) {
      int& x = i < q ? w.co[i] : w.contra[i - q];
      if (x < n) {
        ++x;
        break;
      }
      x = 1;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

std::vector<MixedTensor> realize_irrep(const Bipartition& bip, int n) {
  if (bip.vanishes_at(n)) throw std::invalid_argument("zero representation");
  int p = bip.plus.size(), q = bip.minus.size();
  std::vector<TensorWord> words = all_words(q, p, n);
  std::map<TensorWord, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  int dim = static_cast<int>(words.size());

  // traceless part: joint kernel of the stacked contraction matrices
  int n_pairs = p * q;
  int small_dim = 1;
  for (int i = 0; i < p + q - 2; ++i) small_dim *= n;
  RatMatrix stacked = RatMatrix::Zero(n_pairs * (p + q >= 2 ? small_dim : 1), dim);
  int block = 0;
  for (int k = 1; k <= p; ++k)
    for (int l = 1; l <= q; ++l) {
      for (int col = 0; col < dim; ++col) {
        const TensorWord& w = words[col];
        if (w.contra[k - 1] != w.co[l - 1]) continue;
        // row index of the contracted word in the smaller space
        int row = 0;
        for (int i = 0; i < q; ++i)
          if (i != l - 1) row = row * n + (w.co[i] - 1);
        for (int i = 0; i < p; ++i)
          if (i != k - 1) row = row * n + (w.contra[i] - 1);
        stacked(block * small_dim + row, col) += 1;
      }
      ++block;
    }
  RatMatrix kern = n_pairs == 0 ? RatMatrix::Identity(dim, dim) : kernel_basis(stacked);

  // Young symmetrizers acting by slot permutation: plus on contravariant
  // slots, minus on covariant slots.
  SymGroupAlgebraElement cp = bip.plus.size() ? young_symmetrizer(bip.plus)
                                              : SymGroupAlgebraElement(0);
  SymGroupAlgebraElement cm = bip.minus.size() ? young_symmetrizer(bip.minus)
                                               : SymGroupAlgebraElement(0);
  if (bip.plus.size() == 0) cp.add(Perm{}, 1);
  if (bip.minus.size() == 0) cm.add(Perm{}, 1);

  RatMatrix images(kern.cols(), dim);
  for (int v = 0; v < kern.cols(); ++v) {
    std::map<int, Rational> img;
    for (int col = 0; col < dim; ++col) {
      if (kern(col, v) == 0) continue;
      const TensorWord& w = words[col];
      for (const auto& [sp, csp] : cp.terms)
        for (const auto& [sm, csm] : cm.terms) {
          TensorWord moved;
          moved.co.resize(q);
          moved.contra.resize(p);
          // slot i of the result takes the index from slot perm^{-1}(i);
          // equivalently send slot j to slot perm[j]
          for (int j = 0; j < q; ++j) moved.co[sm.empty() ? j : sm[j]] = w.co[j];
          for (int j = 0; j < p; ++j) moved.contra[sp.empty() ? j : sp[j]] = w.contra[j];
          img[index[moved]] += kern(col, v) * csp * csm;
        }
    }
    for (int col = 0; col < dim; ++col) images(v, col) = 0;
    for (const auto& [col, c] : img) images(v, col) = c;
  }
  RatMatrix basis = row_space(images);

  std::vector<MixedTensor> out;
  for (int r = 0; r < basis.rows(); ++r) {
    MixedTensor t(q, p, n);
    for (int col = 0; col < dim; ++col)
      if (basis(r, col) != 0) t.add(words[col], basis(r, col));
    out.push_back(t);
  }
  Integer expect = weyl_dimension(bip, n);
  if (Integer(static_cast<long>(out.size())) != expect)
    throw std::logic_error("realize_irrep: basis size mismatch");
  return out;
}

}  // namespace jacobirep
