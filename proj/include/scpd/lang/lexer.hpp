#pragma once

#include <string_view>
#include <vector>

#include "scpd/lang/source.hpp"
#include "scpd/lang/token.hpp"

namespace scpd::lang {

/// Splits `content` into tokens. Whitespace is skipped; comments are kept as
/// LineComment/BlockComment tokens. Throws LexError on an unrecognized
/// character or an unterminated literal/comment.
std::vector<Token> tokenize(std::string_view content);

inline std::vector<Token> tokenize(const SourceText& src) {
  return tokenize(std::string_view(src.content()));
}

}  // namespace scpd::lang
