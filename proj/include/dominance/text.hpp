#pragma once

// Text form of partitions and sequences: non-negative integers separated by
// commas and/or whitespace, e.g. "4,2,1,0" or "4 2 1 0".

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "dominance/partition.hpp"

namespace dominance {

struct parse_error : invalid_input {
  parse_error(const std::string& msg, std::string token)
      : invalid_input(msg), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

struct ParseOptions {
  /// Accept values in any order and sort them.
  bool unsorted = false;
};

/// Splits and converts without any ordering check. "()" denotes the empty
/// sequence, as does an all-blank string.
inline std::vector<part_t> parse_values(std::string_view text) {
  std::vector<part_t> out;
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "()") return out;

  std::size_t pos = 0;
  bool expect_value = true;
  while (pos < trimmed.size()) {
    const char c = trimmed[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == ',') {
      if (expect_value) throw parse_error("empty entry before ',' at offset " + std::to_string(pos), ",");
      expect_value = true;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < trimmed.size() && trimmed[end] != ',' &&
           !std::isspace(static_cast<unsigned char>(trimmed[end])))
      ++end;
    const std::string token(trimmed.substr(pos, end - pos));
    if (token.front() == '-' && token.size() > 1)
      throw parse_error("negative value '" + token + "' is not allowed", token);
    part_t v{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc::result_out_of_range || (ec == std::errc{} && v > kMaxMagnitude))
      throw parse_error("value '" + token + "' exceeds 2^31", token);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw parse_error("'" + token + "' is not a non-negative integer", token);
    out.push_back(v);
    expect_value = false;
    pos = end;
  }
  if (expect_value) throw parse_error("trailing ',' in '" + std::string(text) + "'", ",");
  return out;
}

inline Partition parse_partition(std::string_view text, ParseOptions opts = {}) {
  auto values = parse_values(text);
  if (!opts.unsorted) {
    for (std::size_t p = 0; p + 1 < values.size(); ++p)
      if (values[p] < values[p + 1]) {
        const auto token = std::to_string(values[p + 1]);
        throw parse_error("'" + token + "' at position " + std::to_string(p + 2) + " is larger than the part before it" +
                              " (pass --unsorted to accept any order)",
                          token);
      }
    return Partition(std::move(values));
  }
  return Partition::from_unsorted(std::move(values));
}

inline std::string format_values(std::span<const part_t> values) {
  std::string out;
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (p) out += ',';
    out += std::to_string(values[p]);
  }
  return out;
}

/// Stored parts including trailing zeros. The empty partition prints as "0".
inline std::string format(const Partition& p) {
  return p.stored_length() == 0 ? std::string("0") : format_values(p.parts());
}

inline std::string format(const NonIncSequence& s) { return format_values(s.values()); }

/// Zero-stripped form; the empty partition prints as "0".
inline std::string format_stripped(const Partition& p) {
  return p.empty() ? std::string("0") : format_values(p.parts().first(p.length()));
}

}  // namespace dominance
