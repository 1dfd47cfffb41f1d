#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scpd/lang/ast.hpp"
#include "scpd/lang/source.hpp"
#include "scpd/lang/token.hpp"

namespace scpd::repr {

/// Character view of a file, byte for byte.
std::string_view text_of(const lang::SourceText& src) noexcept;

/// Lexical token kinds of a file with comments removed.
struct TokenString {
  std::vector<lang::TokenKind> kinds;
  std::vector<lang::Span> spans;  // parallel to kinds

  [[nodiscard]] std::size_t size() const noexcept { return kinds.size(); }
  /// Space-separated mnemonic codes, e.g. "PUBL CLAS IDNT LBRC".
  [[nodiscard]] std::string codes() const;
};

TokenString token_string_of(std::string_view content);
inline TokenString token_string_of(const lang::SourceText& src) {
  return token_string_of(std::string_view(src.content()));
}

/// Ordered tree with integer labels, nodes stored in pre-order (node 0 is
/// the root when the tree is non-empty).
struct LabeledTree {
  std::vector<std::uint32_t> labels;
  std::vector<std::vector<std::uint32_t>> children;

  [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
  std::uint32_t add(std::uint32_t label);  // returns the new node index
};

/// AST of a unit as a node-kind-labeled tree. Identifiers, literal values
/// and comments are not part of the labels; operators are.
LabeledTree ast_tree_of(const lang::CompilationUnit& unit);

/// Interned name of an AST tree label.
std::string_view ast_label_name(std::uint32_t label);

}  // namespace scpd::repr
