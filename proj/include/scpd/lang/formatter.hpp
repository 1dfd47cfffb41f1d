#pragma once

#include <string>

#include "scpd/lang/ast.hpp"

namespace scpd::lang {

/// Canonical layout: two-space indent, one statement per line, comments on
/// their own lines before the node they are attached to, single spaces
/// around binary operators. The layout is fixed; there are no options.
std::string format(const CompilationUnit& unit);

std::string format_expr(const Expr& e);

/// Binding strength used by the printer: 1 (assignment) .. 10 (primary).
int precedence(const Expr& e);

/// Wraps sub-expressions in Paren nodes wherever the printed form would
/// otherwise re-parse into a different tree. Trees produced by the parser
/// are left unchanged.
void normalize_parens(CompilationUnit& unit);

}  // namespace scpd::lang
