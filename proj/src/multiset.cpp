#include "jacobirep/multiset.hpp"

#include <algorithm>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "jacobirep/lr.hpp"

namespace jacobirep {

DecompositionMultiset::DecompositionMultiset(int n,
                                             std::initializer_list<std::pair<Bipartition, long>> init)
    : rank(n) {
  for (const auto& [b, m] : init) add(b, m);
}

void DecompositionMultiset::add(const Bipartition& bip, long mult) {
  if (mult == 0) return;
  if (bip.vanishes_at(rank)) return;
  auto it = entries.find(bip);
  if (it == entries.end()) {
    entries.emplace(bip, mult);
  } else {
    it->second += mult;
    if (it->second == 0) entries.erase(it);
  }
  if (auto jt = entries.find(bip); jt != entries.end() && jt->second < 0)
    throw std::logic_error("negative multiplicity for " + bip.brackets());
}

long DecompositionMultiset::multiplicity(const Bipartition& bip) const {
  auto it = entries.find(bip);
  return it == entries.end() ? 0 : it->second;
}

long DecompositionMultiset::component_total() const {
  long t = 0;
  for (const auto& [b, m] : entries) t += m;
  return t;
}

Integer DecompositionMultiset::dimension() const {
  Integer d = 0;
  for (const auto& [b, m] : entries) d += Integer(m) * weyl_dimension(b, rank);
  return d;
}

DecompositionMultiset DecompositionMultiset::operator+(const DecompositionMultiset& other) const {
  DecompositionMultiset out = *this;
  for (const auto& [b, m] : other.entries) out.add(b, m);
  return out;
}

DecompositionMultiset DecompositionMultiset::minus(const DecompositionMultiset& other) const {
  DecompositionMultiset out = *this;
  for (const auto& [b, m] : other.entries) {
    if (out.multiplicity(b) < m)
      throw std::domain_error("multiset subtraction would go negative at V_{" + b.display() + "}");
    out.add(b, -m);
  }
  return out;
}

DecompositionMultiset DecompositionMultiset::clamped_minus(const DecompositionMultiset& other) const {
  DecompositionMultiset out(rank);
  for (const auto& [b, m] : entries) {
    long r = m - other.multiplicity(b);
    if (r > 0) out.add(b, r);
  }
  return out;
}

bool DecompositionMultiset::contains(const DecompositionMultiset& other) const {
  for (const auto& [b, m] : other.entries)
    if (multiplicity(b) < m) return false;
  return true;
}

std::string DecompositionMultiset::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [b, m] : entries) {
    nlohmann::json c;
    c["plus"] = b.plus.parts;
    c["minus"] = b.minus.parts;
    c["mult"] = m;
    comps.push_back(c);
  }
  nlohmann::json j;
  j["rank"] = rank;
  j["components"] = comps;
  return j.dump();
}

DecompositionMultiset DecompositionMultiset::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  DecompositionMultiset out(j.at("rank").get<int>());
  for (const auto& c : j.at("components")) {
    Bipartition b{Partition(c.at("plus").get<std::vector<int>>()),
                  Partition(c.at("minus").get<std::vector<int>>())};
    out.add(b, c.at("mult").get<long>());
  }
  return out;
}

std::string DecompositionMultiset::to_markdown() const {
  if (entries.empty()) return "0";
  std::vector<std::pair<Bipartition, long>> order(entries.begin(), entries.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.total_size() != b.first.total_size())
      return a.first.total_size() > b.first.total_size();
    if (a.first.plus != b.first.plus) return a.first.plus < b.first.plus;
    return a.first.minus < b.first.minus;
  });
  std::string out;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) out += " \xE2\x8A\x95 ";  // ⊕
    out += "V_{" + order[i].first.display() + "}";
    if (order[i].second > 1) out += "^{\xE2\x8A\x95" + std::to_string(order[i].second) + "}";
  }
  return out;
}

std::string DecompositionMultiset::to_csv() const {
  std::string out = "plus,minus,mult\n";
  for (const auto& [b, m] : entries)
    out += b.plus.compact() + "," + b.minus.compact() + "," + std::to_string(m) + "\n";
  return out;
}

DecompositionMultiset dual_multiset(const DecompositionMultiset& ms) {
  DecompositionMultiset out(ms.rank);
  for (const auto& [b, m] : ms.entries) out.add(b.dual(), m);
  return out;
}

long koike_multiplicity(const Bipartition& lam, const Bipartition& mu, const Bipartition& nu) {
  // N^{nu}_{lam mu} = sum over alpha,beta,theta,delta of
  //   (sum_kappa N^{lam+}_{kappa alpha} N^{mu-}_{kappa beta})
  //   (sum_eps   N^{lam-}_{eps theta}   N^{mu+}_{eps delta})
  //   N^{nu+}_{alpha delta} N^{nu-}_{beta theta}
  long total = 0;
  int sp = lam.plus.size(), sm = lam.minus.size();
  int tp = mu.plus.size(), tm = mu.minus.size();
  for (int k = 0; k <= std::min(sp, tm); ++k) {
    int sa = sp - k, sb = tm - k;
    for (int e = 0; e <= std::min(sm, tp); ++e) {
      int st = sm - e, sd = tp - e;
      if (sa + sd != nu.plus.size() || sb + st != nu.minus.size()) continue;
      for (const Partition& alpha : partitions_of(sa))
        for (const Partition& delta : partitions_of(sd)) {
          long npd = lr_coefficient(nu.plus, alpha, delta);
          if (npd == 0) continue;
          for (const Partition& beta : partitions_of(sb))
            for (const Partition& theta : partitions_of(st)) {
              long nbt = lr_coefficient(nu.minus, beta, theta);
              if (nbt == 0) continue;
              long first = 0;
              for (const Partition& kappa : partitions_of(k))
                first += lr_coefficient(lam.plus, kappa, alpha) *
                         lr_coefficient(mu.minus, kappa, beta);
              if (first == 0) continue;
              long second = 0;
              for (const Partition& eps : partitions_of(e))
                second += lr_coefficient(lam.minus, eps, theta) *
                          lr_coefficient(mu.plus, eps, delta);
              total += first * second * npd * nbt;
            }
        }
    }
  }
  return total;
}

DecompositionMultiset peel_decompose(const LaurentCharacter& chi, int n) {
  DecompositionMultiset out(n);
  LaurentCharacter rest = chi;
  Integer claimed = chi.dimension();
  while (!rest.is_zero()) {
    // lexicographically maximal exponent vector; by symmetry it is dominant
    auto it = std::prev(rest.terms.end());
    const std::vector<int>& top = it->first;
    if (!is_dominant(top)) throw std::logic_error("peeling hit a non-dominant leading term");
    if (it->second < 0) throw std::domain_error("virtual character");
    Bipartition bip = bipartition_of_weight(top);
    long mult = static_cast<long>(it->second.get_si());
    LaurentCharacter irr = irreducible_character(bip, n);
    for (const auto& [e, c] : irr.terms) rest.add(e, -Integer(mult) * c);
    out.add(bip, mult);
  }
  if (out.dimension() != claimed) throw std::logic_error("peeling lost dimension");
  return out;
}

namespace {

LaurentCharacter cached_character(const Bipartition& bip, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, Bipartition>, LaurentCharacter> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, bip);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LaurentCharacter chi = irreducible_character(bip, n);
  cache.emplace(key, chi);
  return chi;
}

// Every candidate nu reachable from the Koike quadruple sum has
// |nu+| <= |lam+|+|mu+|, |nu-| <= |lam-|+|mu-| with matched defect.
DecompositionMultiset koike_pair(const Bipartition& a, const Bipartition& b, int n) {
  DecompositionMultiset out(n);
  int maxp = a.plus.size() + b.plus.size();
  int maxm = a.minus.size() + b.minus.size();
  for (int k = 0; k <= std::min(maxp, maxm); ++k) {
    int sp = maxp - k, sm = maxm - k;
    for (const Partition& np : partitions_of(sp))
      for (const Partition& nm : partitions_of(sm)) {
        Bipartition nu{np, nm};
        if (nu.vanishes_at(n)) continue;
        long mult = koike_multiplicity(a, b, nu);
        if (mult > 0) out.add(nu, mult);
      }
  }
  return out;
}

}  // namespace

DecompositionMultiset decompose_tensor_pair(const Bipartition& a, const Bipartition& b, int n,
                                            CrossCheck check) {
  bool stable =
      n >= a.plus.length() + a.minus.length() + b.plus.length() + b.minus.length();
  Integer dim_product = weyl_dimension(a, n) * weyl_dimension(b, n);
  DecompositionMultiset result(n);
  bool peel_feasible = dim_product <= 400000;
  if (stable) {
    result = koike_pair(a, b, n);
    bool do_check = check == CrossCheck::Force || (check == CrossCheck::Auto && dim_product <= 4000);
    if (do_check && peel_feasible) {
      LaurentCharacter prod = character_product(cached_character(a, n), cached_character(b, n));
      if (peel_decompose(prod, n) != result)
        throw std::logic_error("internal-consistency error: Koike and peeling disagree");
    }
  } else {
    if (!peel_feasible) throw std::domain_error("tensor product too large to peel below stability");
    LaurentCharacter prod = character_product(cached_character(a, n), cached_character(b, n));
    result = peel_decompose(prod, n);
  }
  if (result.dimension() != dim_product)
    throw std::logic_error("dimension conservation violated in decompose_tensor");
  return result;
}

DecompositionMultiset decompose_tensor(const DecompositionMultiset& left,
                                       const DecompositionMultiset& right, int n,
                                       CrossCheck check) {
  if (left.rank != n || right.rank != n) throw std::invalid_argument("rank mismatch");
  DecompositionMultiset out(n);
  for (const auto& [a, ma] : left.entries)
    for (const auto& [b, mb] : right.entries) {
      DecompositionMultiset part = decompose_tensor_pair(a, b, n, check);
      for (const auto& [nu, m] : part.entries) out.add(nu, m * ma * mb);
    }
  if (out.dimension() != left.dimension() * right.dimension())
    throw std::logic_error("dimension conservation violated in decompose_tensor");
  return out;
}

}  // namespace jacobirep
