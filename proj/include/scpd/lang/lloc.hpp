#pragma once

#include <cstddef>

#include "scpd/lang/ast.hpp"

namespace scpd::lang {

/// Logical lines of code: the number of statements that are not blocks.
/// A `for` header counts as part of its `for` statement.
std::size_t lloc(const CompilationUnit& unit);
std::size_t lloc(const ClassDecl& cls);
std::size_t lloc(const MethodDecl& method);
std::size_t lloc(const Block& block);
std::size_t lloc(const Stmt& stmt);

}  // namespace scpd::lang
