#include "scpd/lang/lloc.hpp"

namespace scpd::lang {

std::size_t lloc(const Stmt& stmt) {
  if (const auto* b = stmt.as<Block>()) return lloc(*b);
  std::size_t n = 1;
  if (const auto* i = stmt.as<If>()) {
    n += lloc(*i->then_branch);
    if (i->else_branch) n += lloc(**i->else_branch);
  } else if (const auto* w = stmt.as<While>()) {
    n += lloc(*w->body);
  } else if (const auto* f = stmt.as<For>()) {
    n += lloc(*f->body);
  }
  return n;
}

std::size_t lloc(const Block& block) {
  std::size_t n = 0;
  for (const auto& s : block.stmts) n += lloc(s);
  return n;
}

std::size_t lloc(const MethodDecl& method) { return lloc(method.body); }

std::size_t lloc(const ClassDecl& cls) {
  std::size_t n = 0;
  for (const auto& member : cls.members) {
    if (const auto* m = std::get_if<MethodDecl>(&member)) n += lloc(*m);
  }
  return n;
}

std::size_t lloc(const CompilationUnit& unit) {
  std::size_t n = 0;
  for (const auto& cls : unit.type_decls) n += lloc(cls);
  return n;
}

}  // namespace scpd::lang
