#include "scpd/lang/formatter.hpp"

#include <sstream>
#include <utility>

namespace scpd::lang {

int precedence(const Expr& e) {
  if (e.as<Assign>() != nullptr || e.as<CompoundAssign>() != nullptr) return 1;
  if (const auto* b = e.as<Binary>()) {
    switch (b->op) {
      case BinaryOp::Or: return 2;
      case BinaryOp::And: return 3;
      case BinaryOp::Eq:
      case BinaryOp::Ne: return 4;
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge: return 5;
      case BinaryOp::Add:
      case BinaryOp::Sub: return 6;
      case BinaryOp::Mul:
      case BinaryOp::Div:
      case BinaryOp::Mod: return 7;
    }
  }
  if (const auto* u = e.as<Unary>()) return u->postfix ? 9 : 8;
  return 10;
}

namespace {

enum class Role { Operand, LeftOperand, RightOperand, Postfix, Selector, Free };

bool needs_parens(const Expr& child, const Expr& parent, Role role) {
  const int child_prec = precedence(child);
  switch (role) {
    case Role::Free: return false;
    case Role::Selector: return child_prec < 10;
    case Role::Postfix: return child_prec < 9;
    case Role::LeftOperand: return child_prec < precedence(parent);
    case Role::RightOperand: return child_prec <= precedence(parent);
    case Role::Operand: {
      if (child_prec < 8) return true;
      // `- -x` and `- --x` must not print as `--x` / `---x`.
      const auto* pu = parent.as<Unary>();
      const auto* cu = child.as<Unary>();
      return pu != nullptr && pu->op == UnaryOp::Neg && cu != nullptr && !cu->postfix &&
             (cu->op == UnaryOp::Neg || cu->op == UnaryOp::Dec);
    }
  }
  return false;
}

// Calls fn(child, role) for each direct sub-expression of e.
template <typename E, typename F>
void each_child(E& e, F&& fn) {
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FieldAccess>) {
          fn(*n.target, Role::Selector);
        } else if constexpr (std::is_same_v<T, Call>) {
          if (n.target) fn(**n.target, Role::Selector);
          for (auto& a : n.args) fn(a, Role::Free);
        } else if constexpr (std::is_same_v<T, ArrayAccess>) {
          fn(*n.array, Role::Selector);
          fn(*n.index, Role::Free);
        } else if constexpr (std::is_same_v<T, NewObject>) {
          for (auto& a : n.args) fn(a, Role::Free);
        } else if constexpr (std::is_same_v<T, NewArray>) {
          for (auto& s : n.sizes) fn(s, Role::Free);
        } else if constexpr (std::is_same_v<T, Unary>) {
          fn(*n.operand, n.postfix ? Role::Postfix : Role::Operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          fn(*n.lhs, Role::LeftOperand);
          fn(*n.rhs, Role::RightOperand);
        } else if constexpr (std::is_same_v<T, Assign> || std::is_same_v<T, CompoundAssign>) {
          fn(*n.target, Role::Free);
          fn(*n.value, Role::Free);
        } else if constexpr (std::is_same_v<T, Paren>) {
          fn(*n.inner, Role::Free);
        }
      },
      e.node);
}

// ------------------------------------------------------------------ printer

class Printer {
 public:
  std::string take() { return std::move(out_).str(); }

  void unit(const CompilationUnit& u) {
    comments(u.leading_orphans, 0);
    bool first = true;
    for (const auto& cls : u.type_decls) {
      if (!first) out_ << '\n';
      first = false;
      class_decl(cls);
    }
  }

  void expr(const Expr& e) {
    std::visit([&](const auto& n) { expr_node(e, n); }, e.node);
  }

 private:
  void indent(int level) {
    for (int i = 0; i < level; ++i) out_ << "  ";
  }

  void comments(const Comments& cs, int level) {
    for (const auto& c : cs) {
      indent(level);
      out_ << c.text << '\n';
    }
  }

  void modifiers(const std::vector<Modifier>& mods) {
    for (auto m : mods) out_ << spelling(m) << ' ';
  }

  void type(const TypeRef& t) {
    out_ << t.name;
    for (int i = 0; i < t.dims; ++i) out_ << "[]";
  }

  void declarators(const std::vector<Declarator>& ds) {
    bool first = true;
    for (const auto& d : ds) {
      if (!first) out_ << ", ";
      first = false;
      out_ << d.name;
      for (int i = 0; i < d.extra_dims; ++i) out_ << "[]";
      if (d.init) {
        out_ << " = ";
        expr(*d.init);
      }
    }
  }

  void class_decl(const ClassDecl& cls) {
    comments(cls.comments, 0);
    modifiers(cls.modifiers);
    out_ << "class " << cls.name << " {\n";
    for (const auto& member : cls.members) {
      if (const auto* f = std::get_if<FieldDecl>(&member)) {
        comments(f->comments, 1);
        indent(1);
        modifiers(f->modifiers);
        type(f->type);
        out_ << ' ';
        declarators(f->declarators);
        out_ << ";\n";
      } else {
        method(std::get<MethodDecl>(member));
      }
    }
    comments(cls.trailing, 1);
    out_ << "}\n";
  }

  void method(const MethodDecl& m) {
    comments(m.comments, 1);
    indent(1);
    modifiers(m.modifiers);
    if (m.return_type) {
      type(*m.return_type);
    } else {
      out_ << "void";
    }
    out_ << ' ' << m.name << '(';
    bool first = true;
    for (const auto& p : m.params) {
      if (!first) out_ << ", ";
      first = false;
      type(p.type);
      out_ << ' ' << p.name;
      for (int i = 0; i < p.extra_dims; ++i) out_ << "[]";
    }
    out_ << ") ";
    block_body(m.body, 1);
    out_ << '\n';
  }

  // Prints `{`, the statements one level deeper, and `}` (no newline after).
  void block_body(const Block& b, int level) {
    out_ << "{\n";
    for (const auto& s : b.stmts) stmt(s, level + 1);
    comments(b.trailing, level + 1);
    indent(level);
    out_ << '}';
  }

  static bool inline_block(const Stmt& s) {
    return s.comments.empty() && s.as<Block>() != nullptr;
  }

  // Body of if/while/for: ` {...}` inline, or on the following lines one
  // level deeper. Returns true for the inline form. Never ends the line.
  bool body(const Stmt& s, int level) {
    if (inline_block(s)) {
      out_ << ' ';
      block_body(*s.as<Block>(), level);
      return true;
    }
    out_ << '\n';
    stmt_unterminated(s, level + 1);
    return false;
  }

  void stmt(const Stmt& s, int level) {
    stmt_unterminated(s, level);
    out_ << '\n';
  }

  void stmt_unterminated(const Stmt& s, int level) {
    comments(s.comments, level);
    indent(level);
    stmt_inline(s, level);
  }

  // Writes the statement starting at the current column, without the final
  // newline.
  void stmt_inline(const Stmt& s, int level) {
    if (const auto* b = s.as<Block>()) {
      block_body(*b, level);
    } else if (const auto* d = s.as<LocalVarDecl>()) {
      if (d->is_final) out_ << "final ";
      type(d->type);
      out_ << ' ';
      declarators(d->declarators);
      out_ << ';';
    } else if (const auto* e = s.as<ExprStmt>()) {
      expr(e->expr);
      out_ << ';';
    } else if (const auto* i = s.as<If>()) {
      if_stmt(*i, level);
    } else if (const auto* w = s.as<While>()) {
      out_ << "while (";
      expr(w->cond);
      out_ << ')';
      body(*w->body, level);
    } else if (const auto* f = s.as<For>()) {
      for_header(*f);
      body(*f->body, level);
    } else if (const auto* r = s.as<Return>()) {
      out_ << "return";
      if (r->value) {
        out_ << ' ';
        expr(*r->value);
      }
      out_ << ';';
    }
  }

  void if_stmt(const If& node, int level) {
    out_ << "if (";
    expr(node.cond);
    out_ << ')';
    const bool then_inline = body(*node.then_branch, level);
    if (!node.else_branch) return;
    const Stmt& else_branch = **node.else_branch;
    if (then_inline) {
      out_ << " else";
    } else {
      out_ << '\n';
      indent(level);
      out_ << "else";
    }
    if (else_branch.comments.empty() && else_branch.as<If>() != nullptr) {
      out_ << ' ';
      if_stmt(*else_branch.as<If>(), level);
      return;
    }
    body(else_branch, level);
  }

  void for_header(const For& f) {
    out_ << "for (";
    if (const auto* d = std::get_if<ForDecl>(&f.init)) {
      type(d->type);
      out_ << ' ';
      declarators(d->declarators);
    } else if (const auto* es = std::get_if<std::vector<Expr>>(&f.init)) {
      expr_list(*es);
    }
    out_ << ';';
    if (f.cond) {
      out_ << ' ';
      expr(*f.cond);
    }
    out_ << ';';
    if (!f.update.empty()) {
      out_ << ' ';
      expr_list(f.update);
    }
    out_ << ')';
  }

  void expr_list(const std::vector<Expr>& es) {
    bool first = true;
    for (const auto& e : es) {
      if (!first) out_ << ", ";
      first = false;
      expr(e);
    }
  }

  void sub(const Expr& child, const Expr& parent, Role role) {
    if (needs_parens(child, parent, role)) {
      out_ << '(';
      expr(child);
      out_ << ')';
    } else {
      expr(child);
    }
  }

  void expr_node(const Expr&, const Literal& n) { out_ << n.text; }
  void expr_node(const Expr&, const Name& n) { out_ << n.id; }
  void expr_node(const Expr& e, const FieldAccess& n) {
    sub(*n.target, e, Role::Selector);
    out_ << '.' << n.member;
  }
  void expr_node(const Expr& e, const Call& n) {
    if (n.target) {
      sub(**n.target, e, Role::Selector);
      out_ << '.';
    }
    out_ << n.name << '(';
    expr_list(n.args);
    out_ << ')';
  }
  void expr_node(const Expr& e, const ArrayAccess& n) {
    sub(*n.array, e, Role::Selector);
    out_ << '[';
    expr(*n.index);
    out_ << ']';
  }
  void expr_node(const Expr&, const NewObject& n) {
    out_ << "new " << n.type << '(';
    expr_list(n.args);
    out_ << ')';
  }
  void expr_node(const Expr&, const NewArray& n) {
    out_ << "new " << n.element.name;
    for (const auto& s : n.sizes) {
      out_ << '[';
      expr(s);
      out_ << ']';
    }
    for (int i = 0; i < n.element.dims; ++i) out_ << "[]";
  }
  void expr_node(const Expr& e, const Unary& n) {
    if (n.postfix) {
      sub(*n.operand, e, Role::Postfix);
      out_ << spelling(n.op);
    } else {
      out_ << spelling(n.op);
      sub(*n.operand, e, Role::Operand);
    }
  }
  void expr_node(const Expr& e, const Binary& n) {
    sub(*n.lhs, e, Role::LeftOperand);
    out_ << ' ' << spelling(n.op) << ' ';
    sub(*n.rhs, e, Role::RightOperand);
  }
  void expr_node(const Expr&, const Assign& n) {
    expr(*n.target);
    out_ << " = ";
    expr(*n.value);
  }
  void expr_node(const Expr&, const CompoundAssign& n) {
    expr(*n.target);
    out_ << ' ' << spelling(n.op) << ' ';
    expr(*n.value);
  }
  void expr_node(const Expr&, const Paren& n) {
    out_ << '(';
    expr(*n.inner);
    out_ << ')';
  }

  std::ostringstream out_;
};

// ------------------------------------------------------------ parenthesize

void paren_expr(Expr& e) {
  each_child(e, [&](Expr& child, Role role) {
    if (needs_parens(child, e, role)) {
      Expr wrapped(Paren{std::move(child)});
      child = std::move(wrapped);
    }
    paren_expr(child);
  });
}

void paren_declarators(std::vector<Declarator>& ds) {
  for (auto& d : ds) {
    if (d.init) paren_expr(*d.init);
  }
}

void paren_stmt(Stmt& s);

void paren_block(Block& b) {
  for (auto& s : b.stmts) paren_stmt(s);
}

void paren_stmt(Stmt& s) {
  std::visit(
      [](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Block>) {
          paren_block(n);
        } else if constexpr (std::is_same_v<T, LocalVarDecl>) {
          paren_declarators(n.declarators);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          paren_expr(n.expr);
        } else if constexpr (std::is_same_v<T, If>) {
          paren_expr(n.cond);
          paren_stmt(*n.then_branch);
          if (n.else_branch) paren_stmt(**n.else_branch);
        } else if constexpr (std::is_same_v<T, While>) {
          paren_expr(n.cond);
          paren_stmt(*n.body);
        } else if constexpr (std::is_same_v<T, For>) {
          if (auto* d = std::get_if<ForDecl>(&n.init)) paren_declarators(d->declarators);
          if (auto* es = std::get_if<std::vector<Expr>>(&n.init)) {
            for (auto& e : *es) paren_expr(e);
          }
          if (n.cond) paren_expr(*n.cond);
          for (auto& e : n.update) paren_expr(e);
          paren_stmt(*n.body);
        } else if constexpr (std::is_same_v<T, Return>) {
          if (n.value) paren_expr(*n.value);
        }
      },
      s.node);
}

}  // namespace

std::string format(const CompilationUnit& unit) {
  Printer p;
  p.unit(unit);
  return p.take();
}

std::string format_expr(const Expr& e) {
  Printer p;
  p.expr(e);
  return p.take();
}

void normalize_parens(CompilationUnit& unit) {
  for (auto& cls : unit.type_decls) {
    for (auto& member : cls.members) {
      if (auto* f = std::get_if<FieldDecl>(&member)) {
        paren_declarators(f->declarators);
      } else {
        paren_block(std::get<MethodDecl>(member).body);
      }
    }
  }
}

}  // namespace scpd::lang
