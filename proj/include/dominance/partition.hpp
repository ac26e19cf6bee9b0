#pragma once

// Integer partitions, non-increasing sequences, the dominance order and the
// k-absolute-difference transform.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dominance {

using part_t = std::int64_t;

/// Largest accepted part, weight, or |k|.
inline constexpr part_t kMaxMagnitude = part_t{1} << 31;

// ---------------------------------------------------------------------------
// errors

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unsorted, negative, out of range, bad padding length.
struct invalid_input : error {
  using error::error;
};

struct overflow_error : error {
  using error::error;
};

/// Enumeration requested above the configured safety bound.
struct bound_exceeded : error {
  using error::error;
};

namespace detail {

inline part_t checked_add(part_t a, part_t b) {
  part_t out{};
  if (__builtin_add_overflow(a, b, &out))
    throw overflow_error("integer overflow in partition arithmetic");
  return out;
}

inline part_t checked_sub(part_t a, part_t b) {
  part_t out{};
  if (__builtin_sub_overflow(a, b, &out))
    throw overflow_error("integer overflow in partition arithmetic");
  return out;
}

inline void require_non_increasing(std::span<const part_t> v, const char* what) {
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p] < 0)
      throw invalid_input(std::string(what) + ": negative value " + std::to_string(v[p]) +
                          " at position " + std::to_string(p + 1));
    if (p + 1 < v.size() && v[p] < v[p + 1])
      throw invalid_input(std::string(what) + ": values increase at position " +
                          std::to_string(p + 1) + " (" + std::to_string(v[p]) + " < " +
                          std::to_string(v[p + 1]) + ")");
  }
}

inline std::size_t positive_count(std::span<const part_t> v) {
  std::size_t n = v.size();
  while (n > 0 && v[n - 1] == 0) --n;
  return n;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Partition

/// A non-increasing sequence of non-negative integers. Trailing zeros are
/// kept as stored (they matter to k_transform) but equality and hashing
/// look only at the zero-stripped form.
class Partition {
 public:
  using value_type = part_t;

  Partition() = default;

  /// Strict: throws invalid_input unless `parts` is non-increasing and
  /// non-negative with every part and the weight at most 2^31.
  explicit Partition(std::vector<part_t> parts) : parts_(std::move(parts)) { validate(); }

  Partition(std::initializer_list<part_t> parts) : Partition(std::vector<part_t>(parts)) {}

  /// Sorts into non-increasing order first. Negative values are still rejected.
  static Partition from_unsorted(std::vector<part_t> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  std::span<const part_t> parts() const noexcept { return parts_; }
  std::span<const part_t> values() const noexcept { return parts_; }

  /// Number of stored entries, including trailing zeros.
  std::size_t stored_length() const noexcept { return parts_.size(); }

  /// Number of positive parts.
  std::size_t length() const noexcept { return detail::positive_count(parts_); }

  part_t weight() const noexcept { return weight_; }

  /// 1-based part access; positions past the stored length read as zero.
  part_t part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  part_t largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition stripped() const {
    return Partition(std::vector<part_t>(parts_.begin(), parts_.begin() + length()), weight_);
  }

  bool empty() const noexcept { return length() == 0; }

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    const auto la = a.length();
    return la == b.length() && std::equal(a.parts_.begin(), a.parts_.begin() + la, b.parts_.begin());
  }

  /// Lexicographic on the stripped form (not the dominance order).
  friend bool lex_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.begin() + a.length(),
                                        b.parts_.begin(), b.parts_.begin() + b.length());
  }

 private:
  Partition(std::vector<part_t> parts, part_t weight) : parts_(std::move(parts)), weight_(weight) {}

  void validate() {
    detail::require_non_increasing(parts_, "partition");
    part_t w = 0;
    for (part_t v : parts_) {
      if (v > kMaxMagnitude)
        throw invalid_input("partition: part " + std::to_string(v) + " exceeds 2^31");
      w = detail::checked_add(w, v);
      if (w > kMaxMagnitude) throw invalid_input("partition: weight exceeds 2^31");
    }
    weight_ = w;
  }

  std::vector<part_t> parts_;
  part_t weight_ = 0;
};

inline part_t weight(const Partition& p) noexcept { return p.weight(); }

/// Returns `p` stored with exactly `len` entries.
inline Partition pad(const Partition& p, std::size_t len) {
  if (len < p.length())
    throw invalid_input("pad: length " + std::to_string(len) + " is smaller than the " +
                        std::to_string(p.length()) + " positive parts");
  std::vector<part_t> out(p.parts().begin(), p.parts().begin() + p.length());
  out.resize(len, 0);
  return Partition(std::move(out));
}

// ---------------------------------------------------------------------------
// NonIncSequence

/// Non-increasing sequence of non-negative integers whose length is part of
/// its identity. This is the codomain of k_transform.
class NonIncSequence {
 public:
  NonIncSequence() = default;

  explicit NonIncSequence(std::vector<part_t> values) : values_(std::move(values)) {
    detail::require_non_increasing(values_, "sequence");
  }

  NonIncSequence(std::initializer_list<part_t> values)
      : NonIncSequence(std::vector<part_t>(values)) {}

  static NonIncSequence from_unsorted(std::vector<part_t> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return NonIncSequence(std::move(values));
  }

  std::span<const part_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  part_t operator[](std::size_t p) const { return values_.at(p); }

  friend bool operator==(const NonIncSequence&, const NonIncSequence&) = default;

 private:
  std::vector<part_t> values_;
};

// ---------------------------------------------------------------------------
// dominance

template <typename T>
concept SequenceLike = requires(const T& t) {
  { t.values() } -> std::convertible_to<std::span<const part_t>>;
};

/// First 1-based prefix length at which sum(a) < sum(b), zero-padding the
/// shorter input. Empty when `a` dominates `b`.
inline std::optional<std::size_t> first_violated_prefix(std::span<const part_t> a,
                                                        std::span<const part_t> b) {
  const std::size_t len = std::max(a.size(), b.size());
  part_t sa = 0, sb = 0;
  for (std::size_t p = 0; p < len; ++p) {
    if (p < a.size()) sa = detail::checked_add(sa, a[p]);
    if (p < b.size()) sb = detail::checked_add(sb, b[p]);
    if (sa < sb) return p + 1;
  }
  return std::nullopt;
}

template <SequenceLike A, SequenceLike B>
std::optional<std::size_t> first_violated_prefix(const A& a, const B& b) {
  return first_violated_prefix(std::span<const part_t>(a.values()),
                               std::span<const part_t>(b.values()));
}

/// True iff every prefix sum of `a` is at least the matching prefix sum of `b`.
inline bool dominates(std::span<const part_t> a, std::span<const part_t> b) {
  return !first_violated_prefix(a, b).has_value();
}

template <SequenceLike A, SequenceLike B>
bool dominates(const A& a, const B& b) {
  return !first_violated_prefix(a, b).has_value();
}

inline bool strictly_dominates(const Partition& a, const Partition& b) {
  return a != b && dominates(a, b);
}

// ---------------------------------------------------------------------------
// k-transform

/// Sorts { |p_i - k| : 1 <= i <= stored_length } non-increasingly. The
/// output has exactly `p.stored_length()` entries, so pad `p` first when a
/// particular length is intended.
inline NonIncSequence k_transform(const Partition& p, part_t k) {
  if (k > kMaxMagnitude || k < -kMaxMagnitude)
    throw invalid_input("k_transform: |k| exceeds 2^31");
  std::vector<part_t> out;
  out.reserve(p.stored_length());
  for (part_t v : p.parts()) out.push_back(v >= k ? v - k : k - v);
  return NonIncSequence::from_unsorted(std::move(out));
}

}  // namespace dominance

template <>
struct std::hash<dominance::Partition> {
  std::size_t operator()(const dominance::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const auto parts = p.parts().first(p.length());
    for (auto v : parts) h ^= std::hash<dominance::part_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
