#ifndef G2K_COVERING_HPP
#define G2K_COVERING_HPP

// The degree-15 map Sym^3(Sym^2 C) -> Sym^6 C: pair partitions of six labels, the
// stabiliser H of one partition inside S_6, fibres over six points and their
// ramification labels.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2k/curve.hpp"

namespace g2k {

/// A permutation of {1..6}, stored 0-based: p[i] is the image of i.
using Permutation = std::array<std::uint8_t, 6>;

inline Permutation identity_perm() { return {0, 1, 2, 3, 4, 5}; }

/// (a o b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r{};
  for (std::size_t i = 0; i < 6; ++i) r[i] = a[b[i]];
  return r;
}

inline Permutation inverse(const Permutation& a) {
  Permutation r{};
  for (std::uint8_t i = 0; i < 6; ++i) r[a[i]] = i;
  return r;
}

/// Builds a permutation from 1-based disjoint cycles, e.g. {{1,3},{2,4}}.
inline Permutation from_cycles(const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity_perm();
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k], to = c[(k + 1) % c.size()];
      if (from < 1 || from > 6 || to < 1 || to > 6) fail(ErrorCode::InvalidArgument, "cycle entry outside 1..6");
      p[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
    }
  }
  return p;
}

class PermGroup {
 public:
  /// Closure of the generators under composition (BFS over the Cayley graph).
  explicit PermGroup(std::vector<Permutation> gens) : gens_(std::move(gens)) {
    std::deque<Permutation> queue{identity_perm()};
    elems_.insert(identity_perm());
    while (!queue.empty()) {
      auto g = queue.front();
      queue.pop_front();
      for (const auto& s : gens_) {
        auto h = compose(s, g);
        if (elems_.insert(h).second) queue.push_back(h);
      }
    }
  }

  static PermGroup symmetric() { return PermGroup({from_cycles({{1, 2}}), from_cycles({{1, 2, 3, 4, 5, 6}})}); }

  std::size_t order() const { return elems_.size(); }
  bool contains(const Permutation& p) const { return elems_.count(p) != 0; }
  const std::set<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// Normal in S_6 iff conjugation by the two generators of S_6 preserves the group.
  bool is_normal_in_s6() const {
    const auto s6 = symmetric();
    for (const auto& s : s6.generators())
      for (const auto& h : gens_)
        if (!contains(compose(compose(s, h), inverse(s)))) return false;
    return true;
  }

 private:
  std::vector<Permutation> gens_;
  std::set<Permutation> elems_;
};

/// Three disjoint unordered pairs covering {1..6}, 1-based, each pair (small, large),
/// pairs sorted by their smaller entry.
using PairPartition = std::array<std::pair<int, int>, 3>;

inline PairPartition canonical(PairPartition p) {
  for (auto& [a, b] : p)
    if (a > b) std::swap(a, b);
  std::sort(p.begin(), p.end());
  return p;
}

inline std::vector<PairPartition> pair_partitions() {
  std::vector<PairPartition> out;
  for (int b = 2; b <= 6; ++b) {
    std::vector<int> rest;
    for (int i = 2; i <= 6; ++i)
      if (i != b) rest.push_back(i);
    for (std::size_t j = 1; j < 4; ++j) {
      std::vector<int> last;
      for (std::size_t k = 1; k < 4; ++k)
        if (k != j) last.push_back(rest[k]);
      out.push_back(canonical({{{1, b}, {rest[0], rest[j]}, {last[0], last[1]}}}));
    }
  }
  return out;
}

inline PairPartition act(const Permutation& g, const PairPartition& p) {
  PairPartition q = p;
  for (auto& [a, b] : q) {
    a = g[static_cast<std::size_t>(a - 1)] + 1;
    b = g[static_cast<std::size_t>(b - 1)] + 1;
  }
  return canonical(q);
}

inline std::string to_string(const PairPartition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < 3; ++i)
    s += (i ? "," : "") + std::string("{") + std::to_string(p[i].first) + "," + std::to_string(p[i].second) + "}";
  return s + "}";
}

/// H = <(12), (13)(24), (15)(26)>: the stabiliser of {{1,2},{3,4},{5,6}}.
inline PermGroup group_H() {
  return PermGroup({from_cycles({{1, 2}}), from_cycles({{1, 3}, {2, 4}}), from_cycles({{1, 5}, {2, 6}})});
}

struct GroupReport {
  std::size_t order, index;
  bool normal;
  std::size_t orbit_size;            // S_6-orbit of the base partition
  bool orbit_is_all_partitions;
  bool is_stabilizer;                // H is exactly the stabiliser of the base partition
};

inline GroupReport group_H_report() {
  auto H = group_H();
  auto S6 = PermGroup::symmetric();
  const PairPartition base{{{1, 2}, {3, 4}, {5, 6}}};
  std::set<PairPartition> orbit;
  std::set<Permutation> stab;
  for (const auto& g : S6.elements()) {
    auto img = act(g, base);
    orbit.insert(img);
    if (img == base) stab.insert(g);
  }
  auto all = pair_partitions();
  return {H.order(),
          S6.order() / H.order(),
          H.is_normal_in_s6(),
          orbit.size(),
          orbit == std::set<PairPartition>(all.begin(), all.end()),
          stab == H.elements()};
}

template <FieldDescriptor F>
using PointPair = std::pair<PointP113<F>, PointP113<F>>;

/// A multiset of three unordered pairs of curve points.
template <FieldDescriptor F>
class TriplePairing {
 public:
  using Point = PointP113<F>;

  explicit TriplePairing(std::array<PointPair<F>, 3> pairs) : pairs_(std::move(pairs)) {
    for (auto& [a, b] : pairs_)
      if (b < a) std::swap(a, b);
    std::sort(pairs_.begin(), pairs_.end());
  }

  const std::array<PointPair<F>, 3>& pairs() const { return pairs_; }

  friend bool operator==(const TriplePairing&, const TriplePairing&) = default;
  friend auto operator<=>(const TriplePairing& a, const TriplePairing& b) { return a.pairs_ <=> b.pairs_; }

 private:
  std::array<PointPair<F>, 3> pairs_;
};

/// Distinct pairings of six points (listed with repetition) under the 15 partitions.
template <FieldDescriptor F>
std::vector<TriplePairing<F>> fiber(const std::vector<PointP113<F>>& pts) {
  if (pts.size() != 6) fail(ErrorCode::InvalidArgument, "a fibre needs exactly six points");
  std::set<TriplePairing<F>> seen;
  for (const auto& part : pair_partitions()) {
    auto pick = [&](std::size_t i) {
      return PointPair<F>{pts[static_cast<std::size_t>(part[i].first - 1)], pts[static_cast<std::size_t>(part[i].second - 1)]};
    };
    seen.insert(TriplePairing<F>({pick(0), pick(1), pick(2)}));
  }
  return {seen.begin(), seen.end()};
}

enum class Ramification { Generic, R1, R2 };

inline const char* ramification_name(Ramification r) {
  switch (r) {
    case Ramification::Generic: return "generic";
    case Ramification::R1: return "R1";
    case Ramification::R2: return "R2";
  }
  return "?";
}

struct Classification {
  Ramification kind;
  int local_degree;
};

/// R2 when two slots share a support point (local degree 2), else R1 when some pair is
/// doubled, else generic.
template <FieldDescriptor F>
Classification classify(const TriplePairing<F>& t) {
  const auto& ps = t.pairs();
  auto meets = [](const PointPair<F>& u, const PointPair<F>& v) {
    return u.first == v.first || u.first == v.second || u.second == v.first || u.second == v.second;
  };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (meets(ps[i], ps[j])) return {Ramification::R2, 2};
  for (const auto& [a, b] : ps)
    if (a == b) return {Ramification::R1, 1};
  return {Ramification::Generic, 1};
}

template <FieldDescriptor F>
int fiber_degree_check(const std::vector<PointP113<F>>& pts) {
  int total = 0;
  for (const auto& t : fiber(pts)) total += classify(t).local_degree;
  return total;
}

template <FieldDescriptor F>
bool in_E(const CurveGenus2<F>& C, const PointPair<F>& pr) {
  return pr.second == C.sigma(pr.first);
}

enum class FType { F1, F2, Neither };

inline const char* ftype_name(FType f) {
  switch (f) {
    case FType::F1: return "F1";
    case FType::F2: return "F2";
    case FType::Neither: return "neither";
  }
  return "?";
}

/// F1: every pair is {p, sigma p}. F2: {p + sigma q, q + sigma p, r + sigma r} with
/// q not in {p, sigma p}.
template <FieldDescriptor F>
FType classify_F(const CurveGenus2<F>& C, const TriplePairing<F>& t) {
  const auto& ps = t.pairs();
  std::vector<std::size_t> in, out;
  for (std::size_t i = 0; i < 3; ++i) (in_E(C, ps[i]) ? in : out).push_back(i);
  if (in.size() == 3) return FType::F1;
  if (in.size() != 1) return FType::Neither;
  const auto &u = ps[out[0]], &v = ps[out[1]];
  if (u.first == u.second) return FType::Neither;
  auto a = C.sigma(u.first), b = C.sigma(u.second);
  const bool crossed = (v.first == a && v.second == b) || (v.first == b && v.second == a);
  return crossed ? FType::F2 : FType::Neither;
}

}  // namespace g2k

#endif  // G2K_COVERING_HPP
