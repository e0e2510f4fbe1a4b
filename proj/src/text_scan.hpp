#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <span>
#include <string_view>

#include "pigeon/clause.hpp"
#include "pigeon/dimacs.hpp"

namespace pigeon::detail {

// Whitespace tokenizer over a single line.
class TokenScanner {
 public:
  explicit TokenScanner(std::string_view line) : rest_(line) { skip_space(); }

  bool at_end() const { return rest_.empty(); }

  std::string_view peek() const { return rest_.substr(0, token_length()); }

  std::string_view next() {
    auto token = peek();
    rest_.remove_prefix(token.size());
    skip_space();
    return token;
  }

  bool next_int(std::int64_t& value) {
    auto token = peek();
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return false;
    next();
    return true;
  }

 private:
  std::size_t token_length() const {
    std::size_t i = 0;
    while (i < rest_.size() && !std::isspace(static_cast<unsigned char>(rest_[i]))) ++i;
    return i;
  }
  void skip_space() {
    while (!rest_.empty() && std::isspace(static_cast<unsigned char>(rest_.front())))
      rest_.remove_prefix(1);
  }

  std::string_view rest_;
};

inline void require_no_duplicates_at(std::span<const Literal> literals, std::size_t line) {
  try {
    require_no_duplicates(literals);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace pigeon::detail
