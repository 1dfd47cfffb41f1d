#pragma once

#include <string_view>

#include "scpd/lang/ast.hpp"
#include "scpd/lang/source.hpp"

namespace scpd::lang {

/// Parses one MiniJ file. Comments are attached to the nearest following
/// class, member or statement; comments with no following node in their
/// enclosing block or class become that block's trailing comments.
///
/// Throws LexError or ParseError; never returns a partial unit. Node ids are
/// assigned before returning.
CompilationUnit parse(std::string_view content);

inline CompilationUnit parse(const SourceText& src) {
  return parse(std::string_view(src.content()));
}

}  // namespace scpd::lang
