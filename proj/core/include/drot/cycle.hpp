#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drot {

/// One period (b0, ..., b_{n-1}) of a periodic integer sequence. Two cycles
/// compare equal when their words agree up to cyclic rotation; use
/// same_word() for literal equality.
class Cycle {
 public:
  /// Throws std::invalid_argument on an empty word.
  explicit Cycle(std::vector<std::int64_t> word);

  /// Parses "b0,b1,...", optionally wrapped in parentheses, spaces allowed.
  static Cycle parse(std::string_view text);

  std::span<const std::int64_t> word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::int64_t operator[](std::size_t i) const { return word_[i % word_.size()]; }

  Cycle reversed() const;

  /// Lexicographically least rotation.
  Cycle canonical() const;

  bool is_cyclic_palindrome() const;

  /// True when (a, b) occur as consecutive entries, cyclically.
  bool contains_adjacent(std::int64_t a, std::int64_t b) const;

  bool same_word(const Cycle& other) const { return word_ == other.word_; }

  /// "(b0, b1, ..., b_{n-1})"
  std::string to_string() const;

  friend bool operator==(const Cycle& a, const Cycle& b);

 private:
  std::vector<std::int64_t> word_;
};

/// Start index of the lexicographically least rotation (Booth).
std::size_t least_rotation(std::span<const std::int64_t> word);

}  // namespace drot
