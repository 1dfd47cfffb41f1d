#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "scpd/lang/token.hpp"

namespace scpd::lang {

/// One `.mj` file. The content is never modified after construction.
class SourceText {
 public:
  SourceText() = default;
  SourceText(std::string path, std::string content);

  static SourceText load(const std::filesystem::path& file);

  [[nodiscard]] const std::string& path() const noexcept { return path_; }
  [[nodiscard]] const std::string& content() const noexcept { return content_; }

  struct Position {
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based, in bytes
  };
  [[nodiscard]] Position position_of(std::size_t offset) const;

 private:
  std::string path_;
  std::string content_;
  std::vector<std::size_t> line_starts_;
};

class LexError : public std::runtime_error {
 public:
  LexError(std::size_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Span span, std::string expected, std::string found);
  [[nodiscard]] Span span() const noexcept { return span_; }
  [[nodiscard]] const std::string& expected() const noexcept { return expected_; }
  [[nodiscard]] const std::string& found() const noexcept { return found_; }

 private:
  Span span_;
  std::string expected_;
  std::string found_;
};

/// `path:line:col: message` for lexer and parser failures.
std::string render_diagnostic(const SourceText& src, const LexError& err);
std::string render_diagnostic(const SourceText& src, const ParseError& err);

}  // namespace scpd::lang
