#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "davkit/core/arith.hpp"
#include "davkit/error.hpp"

namespace davkit::detail {

// Whitespace-skipping character cursor shared by the text parsers. Positions
// reported in errors are byte offsets into the original text.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_with(std::string_view s) {
    skip_ws();
    return text_.substr(pos_).starts_with(s);
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  i64 integer() {
    skip_ws();
    if (starts_with("inf") || starts_with("-inf") || starts_with("+inf") || starts_with("\xE2\x88\x9E") ||
        starts_with("-\xE2\x88\x9E")) {
      fail("infinite ground sets are not supported (every bound must be a finite integer)");
    }
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    const std::size_t digits = p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    if (p == digits) fail("expected an integer");
    std::string_view tok = text_.substr(start, p - start);
    if (tok.front() == '+') tok.remove_prefix(1);
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw OverflowError("integer literal out of 64-bit range at position " + std::to_string(start));
    }
    pos_ = p;
    return v;
  }

  std::size_t position() const noexcept { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace davkit::detail
