#include "drot/cycle.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace drot {

Cycle::Cycle(std::vector<std::int64_t> word) : word_(std::move(word)) {
  if (word_.empty()) {
    throw std::invalid_argument("cycle word must be non-empty");
  }
}

Cycle Cycle::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::int64_t> word;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    std::int64_t value = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (item.empty() || ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("malformed cycle word entry: '" + std::string(item) + "'");
    }
    word.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text = text.substr(comma + 1);
  }
  return Cycle(std::move(word));
}

Cycle Cycle::reversed() const { return Cycle(std::vector<std::int64_t>(word_.rbegin(), word_.rend())); }

Cycle Cycle::canonical() const {
  std::vector<std::int64_t> rotated(word_);
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(least_rotation(word_)),
              rotated.end());
  return Cycle(std::move(rotated));
}

bool Cycle::is_cyclic_palindrome() const { return *this == reversed(); }

bool Cycle::contains_adjacent(std::int64_t a, std::int64_t b) const {
  const std::size_t n = word_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (word_[i] == a && word_[(i + 1) % n] == b) {
      return true;
    }
  }
  return false;
}

std::string Cycle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(word_[i]);
  }
  return out + ")";
}

bool operator==(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) {
    return false;
  }
  const auto wa = a.word();
  const auto wb = b.word();
  const std::size_t ra = least_rotation(wa);
  const std::size_t rb = least_rotation(wb);
  const std::size_t n = wa.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (wa[(ra + i) % n] != wb[(rb + i) % n]) {
      return false;
    }
  }
  return true;
}

std::size_t least_rotation(std::span<const std::int64_t> word) {
  // Booth's algorithm over the doubled word.
  const std::size_t n = word.size();
  if (n == 0) {
    return 0;
  }
  auto at = [&](std::size_t i) { return word[i % n]; };
  std::vector<std::ptrdiff_t> failure(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const std::int64_t sj = at(j);
    std::ptrdiff_t i = failure[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) {
        k = j - static_cast<std::size_t>(i) - 1;
      }
      i = failure[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      // i == -1 here
      if (sj < at(k)) {
        k = j;
      }
      failure[j - k] = -1;
    } else {
      failure[j - k] = i + 1;
    }
  }
  return k % n;
}

}  // namespace drot
