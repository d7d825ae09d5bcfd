#include "deltatop/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <thread>

namespace deltatop {

namespace {

using Rows = std::array<std::uint8_t, kMaxEnumeratedPoints>;

void check_n(std::size_t n) {
  if (n < 1 || n > kMaxEnumeratedPoints) {
    throw OutOfRange("enumeration supports 1 to " + std::to_string(kMaxEnumeratedPoints) + " points, got " +
                     std::to_string(n));
  }
}

// Row j may only be chosen once rows 0..j-1 are fixed. Transitivity is the
// pairwise condition "y in row x implies row y subset of row x", checked
// between row j and every earlier row.
template <class Emit>
void extend(std::size_t n, std::size_t j, Rows& rows, Emit& emit) {
  if (j >= n || j >= rows.size()) {
    emit(rows);
    return;
  }
  const std::uint8_t full = static_cast<std::uint8_t>((1U << n) - 1);
  const std::uint8_t self = static_cast<std::uint8_t>(1U << j);
  std::uint8_t bound = full;
  for (std::size_t i = 0; i < j; ++i) {
    if (rows[i] & self) bound &= rows[i];
  }
  const std::uint8_t free_bits = static_cast<std::uint8_t>(bound & ~self);
  std::uint8_t s = 0;
  while (true) {
    const std::uint8_t cand = static_cast<std::uint8_t>(s | self);
    bool ok = true;
    for (std::size_t i = 0; i < j && ok; ++i) {
      if ((cand >> i) & 1U) ok = (rows[i] & ~cand) == 0;
    }
    if (ok) {
      rows[j] = cand;
      extend(n, j + 1, rows, emit);
    }
    if (s == free_bits) break;
    s = static_cast<std::uint8_t>((s - free_bits) & free_bits);
  }
}

std::vector<std::uint8_t> first_rows(std::size_t n) {
  std::vector<std::uint8_t> out;
  for (unsigned r = 0; r < (1U << n); ++r) {
    if (r & 1U) out.push_back(static_cast<std::uint8_t>(r));
  }
  return out;
}

std::vector<Rows> chunk_for(std::size_t n, std::uint8_t first) {
  std::vector<Rows> out;
  Rows rows{};
  rows[0] = first;
  auto emit = [&](const Rows& r) { out.push_back(r); };
  extend(n, 1, rows, emit);
  return out;
}

// Visits every preorder as raw rows, in order, on the calling thread.
template <class F>
void for_each_rows(std::size_t n, std::size_t jobs, F&& fn) {
  check_n(n);
  const auto firsts = first_rows(n);
  if (jobs <= 1) {
    Rows rows{};
    for (auto f : firsts) {
      rows[0] = f;
      extend(n, 1, rows, fn);
    }
    return;
  }
  for (std::size_t start = 0; start < firsts.size(); start += jobs) {
    const std::size_t end = std::min(firsts.size(), start + jobs);
    std::vector<std::vector<Rows>> chunks(end - start);
    std::vector<std::thread> workers;
    for (std::size_t k = start; k < end; ++k) {
      workers.emplace_back([&, k] { chunks[k - start] = chunk_for(n, firsts[k]); });
    }
    for (auto& w : workers) w.join();
    for (const auto& chunk : chunks) {
      for (const auto& r : chunk) fn(r);
    }
  }
}

Preorder to_preorder(std::size_t n, const Rows& rows) {
  Preorder p{n, std::vector<std::uint64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) p.rows[i] = rows[i];
  return p;
}

// Canonical key of a preorder given by its rows: the lexicographically least
// encoding over all orderings compatible with a refined, label-independent
// colouring of the points.
CanonicalKey canonical_key_rows(std::size_t n, const std::vector<std::uint64_t>& rows) {
  auto rel = [&](std::size_t x, std::size_t y) -> std::uint8_t { return (rows[x] >> y) & 1U; };

  std::vector<std::size_t> color(n, 0);
  {
    std::vector<std::pair<int, int>> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      int down = 0;
      for (std::size_t y = 0; y < n; ++y) down += rel(y, x);
      sig[x] = {std::popcount(rows[x]), down};
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t x = 0; x < n; ++x) {
      color[x] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sig[x]) - uniq.begin());
    }
    std::size_t classes = uniq.size();
    while (true) {
      using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
      std::vector<Sig> refined(n);
      for (std::size_t x = 0; x < n; ++x) {
        refined[x].first = color[x];
        for (std::size_t y = 0; y < n; ++y) {
          if (y != x) refined[x].second.push_back(color[y] * 4 + rel(x, y) * 2 + rel(y, x));
        }
        std::sort(refined[x].second.begin(), refined[x].second.end());
      }
      auto u = refined;
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      for (std::size_t x = 0; x < n; ++x) {
        color[x] = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), refined[x]) - u.begin());
      }
      if (u.size() == classes) break;
      classes = u.size();
    }
  }

  // Slot p of the ordering is reserved for a point of colour slot_color[p].
  std::vector<std::size_t> slot_color = color;
  std::sort(slot_color.begin(), slot_color.end());

  // Swapping twins is an automorphism, so only the lowest unused twin is tried.
  std::vector<std::uint64_t> twins(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || color[x] != color[y] || rel(x, y) != rel(y, x)) continue;
      bool same = true;
      for (std::size_t z = 0; z < n && same; ++z) {
        if (z == x || z == y) continue;
        same = rel(x, z) == rel(y, z) && rel(z, x) == rel(z, y);
      }
      if (same) twins[x] |= std::uint64_t{1} << y;
    }
  }

  const std::size_t code_len = n * (n - 1);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> code;
  code.reserve(code_len);
  std::vector<std::size_t> perm(n);
  std::uint64_t used = 0;

  // Lexicographic comparison of the current prefix with the same-length prefix of best.
  auto prefix_cmp = [&]() -> int {
    if (best.empty()) return -1;
    for (std::size_t k = 0; k < code.size(); ++k) {
      if (code[k] != best[k]) return code[k] < best[k] ? -1 : 1;
    }
    return 0;
  };
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      if (prefix_cmp() < 0) best = code;
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if ((used >> x) & 1U || color[x] != slot_color[p]) continue;
      if ((twins[x] & ~used & ((std::uint64_t{1} << x) - 1)) != 0) continue;
      const std::size_t mark = code.size();
      for (std::size_t q = 0; q < p; ++q) {
        code.push_back(rel(x, perm[q]));
        code.push_back(rel(perm[q], x));
      }
      if (prefix_cmp() <= 0) {
        perm[p] = x;
        used |= std::uint64_t{1} << x;
        self(self, p + 1);
        used &= ~(std::uint64_t{1} << x);
      }
      code.resize(mark);
    }
  };
  dfs(dfs, 0);

  CanonicalKey key;
  key.bytes.push_back(static_cast<char>(n));
  std::uint8_t acc = 0;
  std::size_t filled = 0;
  for (auto bit : best) {
    acc = static_cast<std::uint8_t>((acc << 1) | bit);
    if (++filled == 8) {
      key.bytes.push_back(static_cast<char>(acc));
      acc = 0;
      filled = 0;
    }
  }
  if (filled != 0) key.bytes.push_back(static_cast<char>(acc << (8 - filled)));
  return key;
}

}  // namespace

bool Preorder::valid() const {
  if (rows.size() != n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq(x, x)) return false;
    if ((rows[x] & ~PtSet::full_mask(n)) != 0) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (leq(x, y) && (rows[y] & ~rows[x]) != 0) return false;
    }
  }
  return true;
}

FinSpace to_space(const Preorder& p) {
  if (!p.valid()) throw MalformedInput("relation is not a preorder");
  std::vector<PtSet> nb;
  nb.reserve(p.n);
  for (auto r : p.rows) nb.emplace_back(p.n, r);
  return FinSpace::from_min_neighborhoods(std::move(nb));
}

Preorder specialization_preorder(const FinSpace& s) {
  Preorder p{s.size(), {}};
  for (const auto& nb : s.min_nbhds()) p.rows.push_back(nb.bits());
  return p;
}

CanonicalKey canonical_form(const FinSpace& s) {
  if (s.size() > 16) throw OutOfRange("canonical form limited to 16 points");
  return canonical_key_rows(s.size(), specialization_preorder(s).rows);
}

void for_each_preorder(std::size_t n, const std::function<void(const Preorder&)>& fn, std::size_t jobs) {
  for_each_rows(n, jobs, [&](const Rows& r) { fn(to_preorder(n, r)); });
}

void for_each_space(std::size_t n, bool up_to_homeo, const std::function<void(const FinSpace&)>& fn,
                    std::size_t jobs) {
  std::set<CanonicalKey> seen;
  for_each_rows(n, jobs, [&](const Rows& r) {
    Preorder p = to_preorder(n, r);
    if (up_to_homeo && !seen.insert(canonical_key_rows(n, p.rows)).second) return;
    fn(to_space(p));
  });
}

std::vector<FinSpace> enumerate_spaces(std::size_t n, bool up_to_homeo, std::size_t jobs) {
  std::vector<FinSpace> out;
  for_each_space(n, up_to_homeo, [&](const FinSpace& s) { out.push_back(s); }, jobs);
  return out;
}

std::uint64_t count_spaces(std::size_t n, bool up_to_homeo, std::size_t jobs) {
  std::uint64_t count = 0;
  if (!up_to_homeo) {
    for_each_rows(n, jobs, [&](const Rows&) { ++count; });
    return count;
  }
  std::set<CanonicalKey> seen;
  std::vector<std::uint64_t> rows(n);
  for_each_rows(n, jobs, [&](const Rows& r) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = r[i];
    seen.insert(canonical_key_rows(n, rows));
  });
  return seen.size();
}

std::uint64_t automorphism_count(const FinSpace& s) {
  const std::size_t n = s.size();
  if (n > 8) throw OutOfRange("automorphism brute force limited to 8 points");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        ok = s.min_nbhd(x).contains(y) == s.min_nbhd(perm[x]).contains(perm[y]);
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<SpaceMap> enumerate_maps(const std::shared_ptr<const FinSpace>& dom,
                                     const std::shared_ptr<const FinSpace>& cod, MapFilter filter) {
  if (!dom || !cod) throw MalformedInput("map enumeration needs two spaces");
  if (dom->size() > kMaxMapCarrier || cod->size() > kMaxMapCarrier) {
    throw OutOfRange("map enumeration limited to spaces of at most 4 points");
  }
  const std::size_t n = dom->size();
  const std::size_t m = cod->size();
  std::vector<SpaceMap> out;
  std::vector<std::size_t> table(n, 0);
  while (true) {
    SpaceMap f(dom, cod, table);
    const bool wanted = [&] {
      if (!filter.continuous && !filter.open && !filter.closed) return true;
      const MapClass c = classify_map(f);
      return (!filter.continuous || c.continuous) && (!filter.open || c.open) && (!filter.closed || c.closed);
    }();
    if (wanted) out.push_back(std::move(f));
    std::size_t i = n;
    while (i > 0 && table[i - 1] + 1 == m) table[--i] = 0;
    if (i == 0) break;
    ++table[i - 1];
  }
  return out;
}

}  // namespace deltatop
