#pragma once

// Partitions of n ordered by part merging: nu' <= nu when nu' arises from nu
// by repeatedly summing two parts.  This order governs which multiplicity
// strata appear in the closure of a given one.

#include "aq/rational.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace aq {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw ArithmeticError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int size() const { return static_cast<int>(parts_.size()); }
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(parts_[k]);
    }
    return out + ")";
  }

  static Partition parse(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '(') s.erase(s.begin());
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t end = s.find(',', start);
      std::string tok = s.substr(start, end == std::string::npos ? end : end - start);
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        parts.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad partition part '" + tok + "'", start);
      }
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return Partition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

// All single-merge coarsenings of p, deduplicated.
inline std::vector<Partition> merge_successors(const Partition& p) {
  std::set<Partition> out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      std::vector<int> q;
      for (std::size_t k = 0; k < parts.size(); ++k)
        if (k != i && k != j) q.push_back(parts[k]);
      q.push_back(parts[i] + parts[j]);
      out.insert(Partition(std::move(q)));
    }
  return {out.begin(), out.end()};
}

// a <= b in the merge order: a reachable from b by merging parts (possibly
// by the empty sequence).
inline bool partition_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n())
    throw ArithmeticError("cannot compare partitions of " + std::to_string(a.n()) + " and " +
                          std::to_string(b.n()));
  if (a == b) return true;
  if (a.size() >= b.size()) return false;
  std::set<Partition> seen{b};
  std::vector<Partition> frontier{b};
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& p : frontier)
      for (const auto& q : merge_successors(p))
        if (seen.insert(q).second) {
          if (q == a) return true;
          next.push_back(q);
        }
    frontier = std::move(next);
  }
  return false;
}

// All partitions of n, largest-first lexicographically: (n) first,
// (1,...,1) last.
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace aq
