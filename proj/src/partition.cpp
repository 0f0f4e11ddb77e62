#include "jacobirep/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jacobirep {

void Partition::validate() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts[i] > parts[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int i = 0; i < part(0); ++i) {
    int c = 0;
    for (int p : parts)
      if (p > i) ++c;
    out.push_back(c);
  }
  return Partition(out);
}

Partition Partition::parse(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("expected bracketed list, got: " + text);
  std::vector<int> parts;
  std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
  }
  return Partition(parts);
}

std::string Partition::brackets() const {
  std::string out = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

std::string Partition::compact() const {
  if (parts.empty()) return "0";
  std::string out;
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += std::to_string(parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Bipartition Bipartition::parse(const std::string& text) {
  auto pos = text.find(';');
  if (pos == std::string::npos)
    throw std::invalid_argument("expected [..];[..], got: " + text);
  return {Partition::parse(text.substr(0, pos)), Partition::parse(text.substr(pos + 1))};
}

std::string Bipartition::brackets() const { return plus.brackets() + ";" + minus.brackets(); }

std::string Bipartition::display() const { return plus.compact() + "," + minus.compact(); }

Weight dominant_weight(const Bipartition& bip, int n) {
  Weight w(n, 0);
  for (int i = 0; i < bip.plus.length(); ++i) w[i] = bip.plus.parts[i];
  for (int i = 0; i < bip.minus.length(); ++i) w[n - 1 - i] = -bip.minus.parts[i];
  return w;
}

bool is_dominant(const Weight& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1]) return false;
  return true;
}

Bipartition bipartition_of_weight(const Weight& w) {
  if (!is_dominant(w)) throw std::invalid_argument("weight is not dominant");
  std::vector<int> plus, minus;
  for (int x : w)
    if (x > 0) plus.push_back(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (*it < 0) minus.push_back(-*it);
  return {Partition(plus), Partition(minus)};
}

const std::vector<Partition>& partitions_of(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (m >= 0) rec(rec, m, m == 0 ? 1 : m);
  std::sort(out.begin(), out.end());
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace jacobirep
