#pragma once

#include <cstddef>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dominance/partition.hpp"

namespace dominance {

inline constexpr part_t kDefaultMaxN = 40;

struct EnumerationOptions {
  std::optional<std::size_t> max_len;
  std::optional<part_t> max_part;
  /// Safety bound on n; raise it explicitly to enumerate larger weights.
  part_t max_n = kDefaultMaxN;
};

inline void check_enumeration_bound(part_t n, part_t max_n) {
  if (n < 0) throw invalid_input("weight must be non-negative, got " + std::to_string(n));
  if (n > max_n)
    throw bound_exceeded("weight " + std::to_string(n) + " exceeds the enumeration bound " +
                         std::to_string(max_n) + " (raise it with --max-n)");
}

/// Single-pass range over the partitions of n in descending lexicographic
/// order, so (n) comes first and (1,...,1) last.
class PartitionRange {
 public:
  PartitionRange(part_t n, EnumerationOptions opts) : n_(n), opts_(opts) {
    check_enumeration_bound(n, opts.max_n);
    if (opts_.max_part && *opts_.max_part < 0) throw invalid_input("max_part must be non-negative");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class PartitionRange;

    iterator(part_t n, std::size_t max_len, part_t max_part) : max_len_(max_len) {
      const part_t top = std::min(n, max_part);
      if (n > 0 && top == 0) {
        done_ = true;
        return;
      }
      for (part_t rem = n; rem > 0; rem -= std::min(rem, top)) parts_.push_back(std::min(rem, top));
      if (parts_.size() > max_len_) {
        done_ = true;
        return;
      }
      current_ = Partition(parts_);
    }

    void advance() {
      part_t suffix = 0;
      for (std::size_t p = parts_.size(); p-- > 0;) {
        const part_t v = parts_[p];
        if (v > 1) {
          const part_t next = v - 1;
          const part_t rem = suffix + 1;
          const std::size_t slots = max_len_ - (p + 1);
          // greedy refill with parts of size `next` needs ceil(rem/next) slots
          const auto needed = static_cast<std::size_t>((rem + next - 1) / next);
          if (needed <= slots) {
            parts_.resize(p + 1);
            parts_[p] = next;
            for (part_t r = rem; r > 0; r -= std::min(r, next)) parts_.push_back(std::min(r, next));
            current_ = Partition(parts_);
            return;
          }
        }
        suffix += v;
      }
      done_ = true;
    }

    std::vector<part_t> parts_;
    Partition current_;
    std::size_t max_len_ = 0;
    bool done_ = false;
  };

  iterator begin() const {
    return iterator(n_, opts_.max_len.value_or(std::numeric_limits<std::size_t>::max()),
                    opts_.max_part.value_or(n_));
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  part_t n_;
  EnumerationOptions opts_;
};

inline PartitionRange partitions_of(part_t n, EnumerationOptions opts = {}) {
  return PartitionRange(n, opts);
}

inline std::vector<Partition> all_partitions(part_t n, EnumerationOptions opts = {}) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(n, opts)) out.push_back(p);
  return out;
}

}  // namespace dominance
