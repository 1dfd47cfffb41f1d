#include "scpd/lang/source.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace scpd::lang {

SourceText::SourceText(std::string path, std::string content)
    : path_(std::move(path)), content_(std::move(content)) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < content_.size(); ++i) {
    if (content_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

SourceText SourceText::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return SourceText(file.filename().string(), std::move(content));
}

SourceText::Position SourceText::position_of(std::size_t offset) const {
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  const auto line = static_cast<std::size_t>(std::distance(line_starts_.begin(), it));
  return {line, offset - line_starts_[line - 1] + 1};
}

ParseError::ParseError(Span span, std::string expected, std::string found)
    : std::runtime_error("expected " + expected + ", found " + found),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {
std::string render(const SourceText& src, std::size_t offset, const char* message) {
  const auto pos = src.position_of(offset);
  std::ostringstream os;
  os << src.path() << ':' << pos.line << ':' << pos.column << ": " << message;
  return os.str();
}
}  // namespace

std::string render_diagnostic(const SourceText& src, const LexError& err) {
  return render(src, err.offset(), err.what());
}

std::string render_diagnostic(const SourceText& src, const ParseError& err) {
  return render(src, err.span().begin, err.what());
}

}  // namespace scpd::lang
