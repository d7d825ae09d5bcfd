#pragma once

// Definition-level reference implementations. They work on raw bit masks and
// scan whole families, sharing nothing with the library beyond the mask
// encoding, so agreement with the fast operators is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "deltatop/finite_space.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Topo {
  std::size_t n = 0;
  std::vector<Mask> opens;

  Mask full() const { return (Mask{1} << n) - 1; }
  Mask comp(Mask a) const { return ~a & full(); }
};

inline Topo from(const deltatop::FinSpace& s) {
  Topo t{s.size(), {}};
  for (const auto& u : s.opens()) t.opens.push_back(u.bits());
  return t;
}

inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

// Directly checks the axioms, including closure under every union of members.
inline bool is_topology(std::size_t n, const std::vector<Mask>& fam) {
  const Mask full = (Mask{1} << n) - 1;
  auto has = [&](Mask m) { return std::find(fam.begin(), fam.end(), m) != fam.end(); };
  if (!has(0) || !has(full)) return false;
  for (Mask a : fam) {
    for (Mask b : fam) {
      if (!has(a & b) || !has(a | b)) return false;
    }
  }
  return true;
}

// Number of topologies on n points by filtering every family of subsets.
inline std::uint64_t count_topologies(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::uint64_t count = 0;
  const Mask full = (Mask{1} << n) - 1;
  // ∅ and X are forced; enumerate the rest.
  std::vector<Mask> middle;
  for (Mask m = 1; m + 1 < subsets; ++m) middle.push_back(m);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::vector<Mask> fam{0, full};
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((pick >> i) & 1U) fam.push_back(middle[i]);
    }
    if (is_topology(n, fam)) ++count;
  }
  return count;
}

inline Mask interior(const Topo& t, Mask a) {
  Mask out = 0;
  for (Mask u : t.opens) {
    if (sub(u, a)) out |= u;
  }
  return out;
}

inline Mask closure(const Topo& t, Mask a) {
  Mask out = t.full();
  for (Mask u : t.opens) {
    const Mask c = t.comp(u);
    if (sub(a, c)) out &= c;
  }
  return out;
}

inline bool regular_open(const Topo& t, Mask a) { return interior(t, closure(t, a)) == a; }
inline bool regular_closed(const Topo& t, Mask a) { return closure(t, interior(t, a)) == a; }

inline std::vector<Mask> regular_opens(const Topo& t) {
  std::vector<Mask> out;
  for (Mask a = 0; a <= t.full(); ++a) {
    if (regular_open(t, a)) out.push_back(a);
  }
  return out;
}

// Each point of a has a regular open P with x in P inside a.
inline bool delta_open(const Topo& t, Mask a) {
  const auto ro = regular_opens(t);
  for (std::size_t x = 0; x < t.n; ++x) {
    if (!((a >> x) & 1U)) continue;
    bool found = false;
    for (Mask p : ro) found = found || (((p >> x) & 1U) && sub(p, a));
    if (!found) return false;
  }
  return true;
}

// x is a delta-cluster point when a meets int(cl(U)) for every open U containing x.
inline Mask delta_closure(const Topo& t, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < t.n; ++x) {
    bool all = true;
    for (Mask u : t.opens) {
      if (((u >> x) & 1U) && (interior(t, closure(t, u)) & a) == 0) all = false;
    }
    if (all) out |= Mask{1} << x;
  }
  return out;
}

// Intersection of the regular closed supersets (X when there are none) equals a.
inline bool delta_closed(const Topo& t, Mask a) {
  Mask meet = t.full();
  for (Mask c = 0; c <= t.full(); ++c) {
    if (sub(a, c) && regular_closed(t, c)) meet &= c;
  }
  return meet == a;
}

inline bool disjoint_opens(const Topo& t, Mask a, Mask b) {
  for (Mask u : t.opens) {
    if (!sub(a, u)) continue;
    for (Mask v : t.opens) {
      if (sub(b, v) && (u & v) == 0) return true;
    }
  }
  return false;
}

inline deltatop::SeparationProfile profile(const Topo& t) {
  deltatop::SeparationProfile p;
  p.t0 = p.t1 = p.t2 = true;
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      if (x == y) continue;
      const Mask mx = Mask{1} << x;
      const Mask my = Mask{1} << y;
      bool some_x_not_y = false;
      bool some_y_not_x = false;
      for (Mask u : t.opens) {
        if ((u & mx) && !(u & my)) some_x_not_y = true;
        if ((u & my) && !(u & mx)) some_y_not_x = true;
      }
      if (!some_x_not_y && !some_y_not_x) p.t0 = false;
      if (!some_x_not_y) p.t1 = false;
      if (!disjoint_opens(t, mx, my)) p.t2 = false;
    }
  }
  p.regular = p.normal = true;
  for (Mask u : t.opens) {
    const Mask c = t.comp(u);
    for (std::size_t x = 0; x < t.n; ++x) {
      if (!((c >> x) & 1U) && !disjoint_opens(t, c, Mask{1} << x)) p.regular = false;
    }
    for (Mask w : t.opens) {
      const Mask d = t.comp(w);
      if ((c & d) == 0 && !disjoint_opens(t, c, d)) p.normal = false;
    }
  }
  p.t3 = p.regular && p.t2;
  p.t4 = p.normal && p.t1;
  return p;
}

// Open-set preserving bijection, by trying every permutation.
inline bool homeomorphic(const Topo& a, const Topo& b) {
  if (a.n != b.n || a.opens.size() != b.opens.size()) return false;
  std::vector<std::size_t> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> target = b.opens;
  std::sort(target.begin(), target.end());
  do {
    std::vector<Mask> image;
    for (Mask u : a.opens) {
      Mask m = 0;
      for (std::size_t x = 0; x < a.n; ++x) {
        if ((u >> x) & 1U) m |= Mask{1} << perm[x];
      }
      image.push_back(m);
    }
    std::sort(image.begin(), image.end());
    if (image == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Smallest number of members whose union contains target, over all 2^m subfamilies.
inline std::optional<std::size_t> min_cover_size(const std::vector<Mask>& fam, Mask target) {
  std::optional<std::size_t> best;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << fam.size()); ++pick) {
    Mask u = 0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if ((pick >> i) & 1U) u |= fam[i];
    }
    const auto k = static_cast<std::size_t>(std::popcount(pick));
    if (sub(target, u) && (!best || k < *best)) best = k;
  }
  return best;
}

// Real-line membership sampled on the grid k/8. Sets whose finite endpoints lie
// on multiples of 1/4 inside [-4, 4] are determined by these samples: even k are
// potential endpoints, odd k sit inside the open cells between them.
struct Samples {
  static constexpr int kLo = -40;
  static constexpr int kHi = 40;
  std::vector<bool> in = std::vector<bool>(kHi - kLo + 1, false);

  bool at(int k) const {
    k = std::clamp(k, kLo, kHi);
    return in[static_cast<std::size_t>(k - kLo)];
  }
  void set(int k, bool v) { in[static_cast<std::size_t>(k - kLo)] = v; }
  friend bool operator==(const Samples&, const Samples&) = default;
};

inline Samples closure(const Samples& a) {
  Samples out;
  for (int k = Samples::kLo; k <= Samples::kHi; ++k) {
    const bool edge = k % 2 == 0;
    out.set(k, a.at(k) || (edge && (a.at(k - 1) || a.at(k + 1))));
  }
  return out;
}

inline Samples interior(const Samples& a) {
  Samples out;
  for (int k = Samples::kLo; k <= Samples::kHi; ++k) {
    const bool edge = k % 2 == 0;
    out.set(k, a.at(k) && (!edge || (a.at(k - 1) && a.at(k + 1))));
  }
  return out;
}

inline Samples complement(const Samples& a) {
  Samples out;
  for (int k = Samples::kLo; k <= Samples::kHi; ++k) out.set(k, !a.at(k));
  return out;
}

}  // namespace oracle
