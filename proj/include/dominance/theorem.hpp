#pragma once

// Monotonicity of the k-transform under dominance: if lambda >= mu have the
// same weight and are padded to a common length, then lambda^(k) >= mu^(k)
// for every k >= 1. This header classifies a covering step (mu, move, k)
// into one of five regimes, rebuilds lambda^(k) from mu^(k) by two value
// substitutions, and runs exhaustive sweeps over all partitions of n.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dominance/cover.hpp"
#include "dominance/enumerate.hpp"
#include "dominance/partition.hpp"

namespace dominance {

enum class CaseLabel : std::uint8_t {
  KBelow,            // k < mu_j
  KEqualsLowerOnly,  // k == mu_j < mu_i
  KEqualsBoth,       // k == mu_j == mu_i
  KBetween,          // mu_j < k <= mu_i
  KAbove,            // k > mu_i
};

inline constexpr std::array<CaseLabel, 5> kAllCases{CaseLabel::KBelow, CaseLabel::KEqualsLowerOnly,
                                                    CaseLabel::KEqualsBoth, CaseLabel::KBetween,
                                                    CaseLabel::KAbove};

constexpr std::string_view to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::KBelow: return "k_below";
    case CaseLabel::KEqualsLowerOnly: return "k_equals_lower_only";
    case CaseLabel::KEqualsBoth: return "k_equals_both";
    case CaseLabel::KBetween: return "k_between";
    case CaseLabel::KAbove: return "k_above";
  }
  return "?";
}

enum class Occurrence : std::uint8_t { First, Last };

struct Substitution {
  part_t old_value = 0;
  part_t new_value = 0;
  /// Which copy of old_value the case description targets in mu^(k).
  Occurrence target = Occurrence::First;
};

/// Two substitutions turning the multiset {|mu_p - k|} into {|lambda_p - k|}.
struct ReplacementPlan {
  CaseLabel label{};
  std::array<Substitution, 2> steps{};
  /// False when the two targeted copies cannot be told apart (KAbove with
  /// mu_i == mu_j); only multiset equality is claimed there.
  bool positional = true;
};

namespace detail {

inline void require_case_inputs(const Partition& mu, const CoverMove& move, part_t k) {
  if (k < 1) throw invalid_input("k must be a positive integer, got " + std::to_string(k));
  if (k > kMaxMagnitude) throw invalid_input("k exceeds 2^31");
  if (!is_valid_move(mu, move))
    throw invalid_input("(" + std::to_string(move.i) + "," + std::to_string(move.j) +
                        ") is not a covering move on the given partition");
  if (move.j > mu.stored_length())
    throw invalid_input("partition must be stored with at least j entries");
}

}  // namespace detail

inline CaseLabel classify_case(const Partition& mu, const CoverMove& move, part_t k) {
  detail::require_case_inputs(mu, move, k);
  const part_t mi = mu.part(move.i), mj = mu.part(move.j);
  if (k < mj) return CaseLabel::KBelow;
  if (k == mj) return mj < mi ? CaseLabel::KEqualsLowerOnly : CaseLabel::KEqualsBoth;
  if (k <= mi) return CaseLabel::KBetween;
  return CaseLabel::KAbove;
}

inline ReplacementPlan replacement_plan(const Partition& mu, const CoverMove& move, part_t k) {
  const CaseLabel label = classify_case(mu, move, k);
  const part_t mi = mu.part(move.i), mj = mu.part(move.j);
  using enum Occurrence;
  ReplacementPlan plan{label, {}, true};
  switch (label) {
    case CaseLabel::KBelow:
      plan.steps = {{{mi - k, mi - k + 1, First}, {mj - k, mj - k - 1, Last}}};
      break;
    case CaseLabel::KEqualsLowerOnly:
      plan.steps = {{{mi - k, mi - k + 1, First}, {0, 1, First}}};
      break;
    case CaseLabel::KEqualsBoth:
      plan.steps = {{{0, 1, First}, {0, 1, First}}};
      break;
    case CaseLabel::KBetween:
      plan.steps = {{{mi - k, mi - k + 1, First}, {k - mj, k - mj + 1, First}}};
      break;
    case CaseLabel::KAbove:
      plan.steps = {{{k - mj, k - mj + 1, First}, {k - mi, k - mi - 1, First}}};
      plan.positional = mi != mj;
      break;
  }
  return plan;
}

/// lambda^(k) rebuilt from mu^(k): each substitution replaces one copy of
/// its old value, then the result is re-sorted. The output length equals
/// mu's stored length.
inline NonIncSequence apply_case_replacement(const Partition& mu, const CoverMove& move, part_t k) {
  const auto plan = replacement_plan(mu, move, k);
  const auto base = k_transform(mu, k);
  std::vector<part_t> values(base.values().begin(), base.values().end());
  for (const auto& s : plan.steps) {
    auto it = std::find(values.begin(), values.end(), s.old_value);
    if (it == values.end())
      throw std::logic_error("replacement: value " + std::to_string(s.old_value) + " missing from mu^(k)");
    *it = s.new_value;
  }
  return NonIncSequence::from_unsorted(std::move(values));
}

struct PositionalOutcome {
  std::vector<part_t> values;  // after in-place replacement, not re-sorted
  bool sorted = false;
};

enum class TargetPolicy : std::uint8_t {
  /// First/last copy exactly as each case description states.
  AsStated,
  /// Increments hit the first copy, decrements the last copy.
  OrderPreserving,
};

/// Performs the plan's substitutions in place on mu^(k) without re-sorting.
/// Empty when the plan is not positional.
inline std::optional<PositionalOutcome> apply_positional_replacement(
    const Partition& mu, const CoverMove& move, part_t k, TargetPolicy policy = TargetPolicy::AsStated) {
  const auto plan = replacement_plan(mu, move, k);
  if (!plan.positional) return std::nullopt;
  const auto base = k_transform(mu, k);
  PositionalOutcome out{{base.values().begin(), base.values().end()}, false};
  auto& v = out.values;
  for (const auto& s : plan.steps) {
    const Occurrence target = policy == TargetPolicy::AsStated ? s.target
                              : s.new_value < s.old_value     ? Occurrence::Last
                                                              : Occurrence::First;
    auto it = std::find(v.begin(), v.end(), s.old_value);
    if (target == Occurrence::Last) {
      auto rit = std::find(v.rbegin(), v.rend(), s.old_value);
      it = rit == v.rend() ? v.end() : std::prev(rit.base());
    }
    if (it == v.end())
      throw std::logic_error("replacement: value " + std::to_string(s.old_value) + " missing from mu^(k)");
    *it = s.new_value;
  }
  out.sorted = std::is_sorted(v.begin(), v.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------
// direct verification

struct precondition_violation : invalid_input {
  using invalid_input::invalid_input;
};

/// Pads both to a common length, then checks lambda^(k) >= mu^(k).
/// Unequal weights or lambda not dominating mu are errors, not false.
inline bool verify_pair(const Partition& lambda, const Partition& mu, part_t k) {
  if (lambda.weight() != mu.weight())
    throw precondition_violation(
        "weights differ (" + std::to_string(lambda.weight()) + " vs " + std::to_string(mu.weight()) +
        "); the property needs equal weights, e.g. (2) and (1) at k=2 give (0) and (1)");
  if (!dominates(lambda, mu)) throw precondition_violation("first partition does not dominate the second");
  if (k < 1) throw invalid_input("k must be a positive integer, got " + std::to_string(k));
  const std::size_t len = std::max(lambda.stored_length(), mu.stored_length());
  return dominates(k_transform(pad(lambda, len), k), k_transform(pad(mu, len), k));
}

struct UnequalWeightDemo {
  Partition lambda;
  Partition mu;
  part_t k = 0;
  NonIncSequence lambda_k;
  NonIncSequence mu_k;
  bool dominance = false;
};

/// Transforms both without any weight check.
inline UnequalWeightDemo unequal_weight_demo(const Partition& lambda, const Partition& mu, part_t k) {
  const std::size_t len = std::max(lambda.stored_length(), mu.stored_length());
  auto lk = k_transform(pad(lambda, len), k);
  auto mk = k_transform(pad(mu, len), k);
  const bool d = dominates(lk, mk);
  return {lambda, mu, k, std::move(lk), std::move(mk), d};
}

/// (2) dominates (1), yet (2)^(2) = (0) does not dominate (1)^(2) = (1).
inline UnequalWeightDemo check_counterexample_unequal_weights() {
  return unequal_weight_demo(Partition{2}, Partition{1}, 2);
}

// ---------------------------------------------------------------------------
// sweeps

struct Counterexample {
  Partition lambda;
  Partition mu;
  part_t k = 0;
  NonIncSequence lambda_k;
  NonIncSequence mu_k;
  std::size_t first_violated_prefix = 0;
};

struct PositionalViolation {
  Partition lambda;
  Partition mu;
  CoverMove move;
  part_t k = 0;
  CaseLabel label{};
  std::vector<part_t> values;
};

struct VerificationReport {
  part_t n = 0;
  part_t k_min = 1;
  part_t k_max = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t covers_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::array<std::uint64_t, 5> case_histogram{};
  /// Covering instances where apply_case_replacement != k_transform(lambda, k).
  std::uint64_t replacement_mismatches = 0;
  std::uint64_t positional_checked = 0;
  std::uint64_t positional_skipped = 0;
  std::vector<PositionalViolation> positional_violations;
  /// KBetween instances by how mu_i - k compares with k - mu_j.
  struct {
    std::uint64_t upper_larger = 0;
    std::uint64_t lower_larger = 0;
    std::uint64_t equal = 0;
  } between_order;
  std::chrono::milliseconds elapsed{0};

  bool holds() const noexcept { return counterexamples.empty(); }
  std::uint64_t histogram_total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : case_histogram) t += c;
    return t;
  }
  std::uint64_t count(CaseLabel c) const noexcept { return case_histogram[static_cast<std::size_t>(c)]; }
};

struct SweepOptions {
  std::optional<part_t> k_max;
  unsigned threads = 1;
  part_t max_n = kDefaultMaxN;
};

namespace detail {

inline void merge_into(VerificationReport& into, VerificationReport&& part) {
  into.pairs_checked += part.pairs_checked;
  into.covers_checked += part.covers_checked;
  for (std::size_t c = 0; c < into.case_histogram.size(); ++c) into.case_histogram[c] += part.case_histogram[c];
  into.replacement_mismatches += part.replacement_mismatches;
  into.positional_checked += part.positional_checked;
  into.positional_skipped += part.positional_skipped;
  into.between_order.upper_larger += part.between_order.upper_larger;
  into.between_order.lower_larger += part.between_order.lower_larger;
  into.between_order.equal += part.between_order.equal;
  std::move(part.counterexamples.begin(), part.counterexamples.end(), std::back_inserter(into.counterexamples));
  std::move(part.positional_violations.begin(), part.positional_violations.end(),
            std::back_inserter(into.positional_violations));
}

// Rows [begin, end) of the lambda index; transforms[idx][k - 1] is
// precomputed for every padded partition.
inline VerificationReport sweep_rows(const std::vector<Partition>& parts,
                                     const std::vector<std::vector<NonIncSequence>>& transforms, part_t k_max,
                                     std::size_t begin, std::size_t end) {
  VerificationReport r;
  for (std::size_t a = begin; a < end; ++a) {
    const Partition& lambda = parts[a];
    for (std::size_t b = 0; b < parts.size(); ++b) {
      const Partition& mu = parts[b];
      if (!dominates(lambda, mu)) continue;
      ++r.pairs_checked;
      for (part_t k = 1; k <= k_max; ++k) {
        const auto& lk = transforms[a][k - 1];
        const auto& mk = transforms[b][k - 1];
        if (auto bad = first_violated_prefix(lk, mk))
          r.counterexamples.push_back({lambda, mu, k, lk, mk, *bad});
      }
      const auto move = find_cover_move(lambda, mu);
      if (!move) continue;
      ++r.covers_checked;
      for (part_t k = 1; k <= k_max; ++k) {
        const CaseLabel label = classify_case(mu, *move, k);
        ++r.case_histogram[static_cast<std::size_t>(label)];
        if (label == CaseLabel::KBetween) {
          const part_t up = mu.part(move->i) - k, low = k - mu.part(move->j);
          if (up > low)
            ++r.between_order.upper_larger;
          else if (up < low)
            ++r.between_order.lower_larger;
          else
            ++r.between_order.equal;
        }
        if (apply_case_replacement(mu, *move, k) != transforms[a][k - 1]) ++r.replacement_mismatches;
        if (auto pos = apply_positional_replacement(mu, *move, k)) {
          ++r.positional_checked;
          if (!pos->sorted) r.positional_violations.push_back({lambda, mu, *move, k, label, std::move(pos->values)});
        } else {
          ++r.positional_skipped;
        }
      }
    }
  }
  return r;
}

}  // namespace detail

/// Checks every ordered dominating pair of partitions of n (all padded to
/// length n) for every k in [1, k_max], default k_max = n + 1, and
/// exercises the case engine on every covering pair. The report does not
/// depend on the thread count apart from `elapsed`.
inline VerificationReport sweep(part_t n, SweepOptions opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  check_enumeration_bound(n, opts.max_n);
  const part_t k_max = opts.k_max.value_or(n + 1);
  if (k_max < 1) throw invalid_input("k_max must be a positive integer");
  if (k_max > kMaxMagnitude) throw invalid_input("k_max exceeds 2^31");

  std::vector<Partition> parts;
  for (const auto& p : partitions_of(n, {.max_n = opts.max_n})) parts.push_back(pad(p, static_cast<std::size_t>(n)));

  std::vector<std::vector<NonIncSequence>> transforms(parts.size());
  for (std::size_t a = 0; a < parts.size(); ++a) {
    transforms[a].reserve(static_cast<std::size_t>(k_max));
    for (part_t k = 1; k <= k_max; ++k) transforms[a].push_back(k_transform(parts[a], k));
  }

  VerificationReport report;
  report.n = n;
  report.k_max = k_max;

  const std::size_t rows = parts.size();
  const std::size_t workers = std::clamp<std::size_t>(opts.threads, 1, std::max<std::size_t>(rows, 1));
  if (workers == 1) {
    detail::merge_into(report, detail::sweep_rows(parts, transforms, k_max, 0, rows));
  } else {
    // Contiguous row blocks merged in block order keep list ordering fixed.
    std::vector<VerificationReport> partial(workers);
    std::vector<std::exception_ptr> failures(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = rows * w / workers, hi = rows * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
          try {
            partial[w] = detail::sweep_rows(parts, transforms, k_max, lo, hi);
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
    for (auto& p : partial) detail::merge_into(report, std::move(p));
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace dominance
