#pragma once

// Covering relations of the dominance order on partitions of a fixed weight.
//
// `upper` covers `lower` iff upper = lower + e_i - e_j for some i < j with
// either j == i + 1 or lower_i == lower_j (Brylawski). Everything here works
// on zero-padded copies one entry longer than the longer input so that a
// move may create a new trailing part.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dominance/enumerate.hpp"
#include "dominance/partition.hpp"

namespace dominance {

/// One covering step, 1-based: the upper partition has part i one larger
/// and part j one smaller than the lower partition. Both flavors may hold.
struct CoverMove {
  std::size_t i = 0;
  std::size_t j = 0;
  bool adjacent = false;     // j == i + 1
  bool equal_parts = false;  // lower_i == lower_j

  friend bool operator==(const CoverMove&, const CoverMove&) = default;
};

struct Cover {
  Partition partition;
  CoverMove move;
};

struct HasseEdge {
  Partition upper;
  Partition lower;
  CoverMove move;
};

namespace detail {

inline std::vector<part_t> padded_values(const Partition& p, std::size_t len) {
  std::vector<part_t> v(len, 0);
  std::copy_n(p.parts().begin(), std::min(len, p.stored_length()), v.begin());
  return v;
}

inline bool non_increasing(const std::vector<part_t>& v) {
  for (std::size_t p = 0; p + 1 < v.size(); ++p)
    if (v[p] < v[p + 1]) return false;
  return true;
}

inline Partition strip_vector(std::vector<part_t> v) {
  v.resize(positive_count(v));
  return Partition(std::move(v));
}

}  // namespace detail

/// Whether `move` is a Brylawski move on `lower`: lower_j >= 1, the result
/// is non-increasing, and j == i + 1 or lower_i == lower_j. The flavor flags
/// of `move` are not consulted.
inline bool is_valid_move(const Partition& lower, const CoverMove& move) {
  if (move.i < 1 || move.j <= move.i) return false;
  const std::size_t len = std::max(lower.length() + 1, move.j);
  auto v = detail::padded_values(lower, len);
  const part_t li = v[move.i - 1], lj = v[move.j - 1];
  if (lj < 1) return false;
  if (!(move.j == move.i + 1 || li == lj)) return false;
  ++v[move.i - 1];
  --v[move.j - 1];
  return detail::non_increasing(v);
}

/// The partition `lower` + e_i - e_j, keeping the stored length of `lower`
/// when it is long enough. Throws invalid_input for an invalid move.
inline Partition apply_move(const Partition& lower, const CoverMove& move) {
  if (!is_valid_move(lower, move))
    throw invalid_input("apply_move: (" + std::to_string(move.i) + "," + std::to_string(move.j) +
                        ") is not a covering move");
  auto v = detail::padded_values(lower, std::max(lower.stored_length(), move.j));
  ++v[move.i - 1];
  --v[move.j - 1];
  return Partition(std::move(v));
}

/// The move taking `b` up to `a` when `a` covers `b`, otherwise empty.
inline std::optional<CoverMove> find_cover_move(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return std::nullopt;
  const std::size_t len = std::max(a.length(), b.length()) + 1;
  const auto va = detail::padded_values(a, len);
  const auto vb = detail::padded_values(b, len);
  std::size_t i = 0, j = 0;
  for (std::size_t p = 0; p < len; ++p) {
    const part_t d = va[p] - vb[p];
    if (d == 0) continue;
    if (d == 1 && i == 0 && j == 0)
      i = p + 1;
    else if (d == -1 && i != 0 && j == 0)
      j = p + 1;
    else
      return std::nullopt;
  }
  if (i == 0 || j == 0) return std::nullopt;
  CoverMove m{i, j, j == i + 1, vb[i - 1] == vb[j - 1]};
  if (!m.adjacent && !m.equal_parts) return std::nullopt;
  return m;
}

/// Reference check by enumeration: a > b strictly and no partition of the
/// same weight lies strictly between them.
inline bool covers_bruteforce(const Partition& a, const Partition& b, part_t max_n = kDefaultMaxN) {
  if (a.weight() != b.weight()) return false;
  check_enumeration_bound(a.weight(), max_n);
  if (!strictly_dominates(a, b)) return false;
  for (const auto& nu : partitions_of(a.weight(), {.max_n = max_n}))
    if (nu != a && nu != b && dominates(a, nu) && dominates(nu, b)) return false;
  return true;
}

/// Every partition covered by `a`, ordered by (i, j).
inline std::vector<Cover> lower_covers(const Partition& a) {
  const std::size_t len = a.length() + 1;
  const auto va = detail::padded_values(a, len);
  std::vector<Cover> out;
  for (std::size_t i = 1; i <= len; ++i) {
    for (std::size_t j = i + 1; j <= len; ++j) {
      auto v = va;
      --v[i - 1];
      ++v[j - 1];
      if (v[i - 1] < 0 || !detail::non_increasing(v)) continue;
      const bool adjacent = j == i + 1;
      const bool equal = v[i - 1] == v[j - 1];
      if (!adjacent && !equal) continue;
      out.push_back({detail::strip_vector(std::move(v)), CoverMove{i, j, adjacent, equal}});
    }
  }
  return out;
}

/// Every partition covering `b`, ordered by (i, j).
inline std::vector<Cover> upper_covers(const Partition& b) {
  const std::size_t len = b.length() + 1;
  const auto vb = detail::padded_values(b, len);
  std::vector<Cover> out;
  for (std::size_t i = 1; i <= len; ++i) {
    for (std::size_t j = i + 1; j <= len; ++j) {
      const bool adjacent = j == i + 1;
      const bool equal = vb[i - 1] == vb[j - 1];
      if (!adjacent && !equal) continue;
      auto v = vb;
      ++v[i - 1];
      --v[j - 1];
      if (v[j - 1] < 0 || !detail::non_increasing(v)) continue;
      out.push_back({detail::strip_vector(std::move(v)), CoverMove{i, j, adjacent, equal}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// saturated chains

struct chain_error : invalid_input {
  enum class cause { unequal_weight, not_dominating };

  chain_error(cause c, const std::string& msg) : invalid_input(msg), cause_(c) {}
  cause why() const noexcept { return cause_; }

 private:
  cause cause_;
};

struct ChainDiagnostics {
  /// Steps where the greedy rule found no admissible cover and breadth-first
  /// search took over.
  std::size_t fallback_steps = 0;
};

namespace detail {

// Shortest descent from `from` to `to` through lower covers that stay
// above `to`.
inline std::vector<Partition> bfs_descent(const Partition& from, const Partition& to) {
  std::unordered_map<Partition, Partition> parent;
  std::deque<Partition> queue{from};
  parent.emplace(from, from);
  while (!queue.empty()) {
    const Partition cur = queue.front();
    queue.pop_front();
    if (cur == to) {
      std::vector<Partition> path{cur};
      for (Partition p = cur; p != from;) {
        p = parent.at(p);
        path.push_back(p);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto& c : lower_covers(cur))
      if (dominates(c.partition, to) && parent.emplace(c.partition, cur).second)
        queue.push_back(c.partition);
  }
  return {};
}

}  // namespace detail

/// A saturated chain a = c_0 > c_1 > ... > c_m = b (stripped forms).
/// Each step takes the lower cover with the smallest (i, j) that still
/// dominates b.
inline std::vector<Partition> cover_chain(const Partition& a, const Partition& b,
                                          ChainDiagnostics* diag = nullptr) {
  if (a.weight() != b.weight())
    throw chain_error(chain_error::cause::unequal_weight,
                      "chain: weights differ (" + std::to_string(a.weight()) + " vs " +
                          std::to_string(b.weight()) + ")");
  if (!dominates(a, b))
    throw chain_error(chain_error::cause::not_dominating, "chain: first partition does not dominate the second");

  const Partition target = b.stripped();
  std::vector<Partition> chain{a.stripped()};
  while (chain.back() != target) {
    const auto covers = lower_covers(chain.back());
    auto it = std::find_if(covers.begin(), covers.end(),
                           [&](const Cover& c) { return dominates(c.partition, target); });
    if (it != covers.end()) {
      chain.push_back(it->partition);
      continue;
    }
    if (diag) ++diag->fallback_steps;
    auto rest = detail::bfs_descent(chain.back(), target);
    if (rest.empty()) throw std::logic_error("chain: no saturated chain found");
    chain.insert(chain.end(), rest.begin() + 1, rest.end());
  }
  return chain;
}

/// All covering pairs among the partitions of n: uppers in enumeration
/// order, then lower covers by (i, j).
inline std::vector<HasseEdge> hasse_edges(part_t n, part_t max_n = kDefaultMaxN) {
  std::vector<HasseEdge> edges;
  for (const auto& upper : partitions_of(n, {.max_n = max_n}))
    for (auto& c : lower_covers(upper)) edges.push_back({upper, std::move(c.partition), c.move});
  return edges;
}

}  // namespace dominance
