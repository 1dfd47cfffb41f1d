#include "scpd/lang/ast.hpp"

#include <array>

namespace scpd::lang {

bool TypeRef::is_primitive() const {
  static constexpr std::array<std::string_view, 6> kPrimitives = {
      "boolean", "char", "int", "long", "float", "double"};
  for (auto p : kPrimitives) {
    if (name == p) return true;
  }
  return false;
}

std::string_view spelling(Modifier m) {
  switch (m) {
    case Modifier::Public: return "public";
    case Modifier::Private: return "private";
    case Modifier::Protected: return "protected";
    case Modifier::Static: return "static";
    case Modifier::Final: return "final";
  }
  return "";
}

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "";
}

std::string_view spelling(UnaryOp op) {
  switch (op) {
    case UnaryOp::Inc: return "++";
    case UnaryOp::Dec: return "--";
    case UnaryOp::Not: return "!";
    case UnaryOp::Neg: return "-";
  }
  return "";
}

std::string_view spelling(CompoundOp op) {
  switch (op) {
    case CompoundOp::Add: return "+=";
    case CompoundOp::Sub: return "-=";
    case CompoundOp::Mul: return "*=";
    case CompoundOp::Div: return "/=";
  }
  return "";
}

BinaryOp binary_of(CompoundOp op) {
  switch (op) {
    case CompoundOp::Add: return BinaryOp::Add;
    case CompoundOp::Sub: return BinaryOp::Sub;
    case CompoundOp::Mul: return BinaryOp::Mul;
    case CompoundOp::Div: return BinaryOp::Div;
  }
  return BinaryOp::Add;
}

bool is_commutative(BinaryOp op) {
  switch (op) {
    case BinaryOp::Mul:
    case BinaryOp::Add:
    case BinaryOp::Eq:
    case BinaryOp::Ne:
    case BinaryOp::And:
    case BinaryOp::Or:
      return true;
    default:
      return false;
  }
}

std::string_view kind_name(const Stmt& s) {
  static constexpr std::array<std::string_view, 7> kNames = {
      "Block", "LocalVarDecl", "ExprStmt", "If", "While", "For", "Return"};
  return kNames[s.node.index()];
}

std::string_view kind_name(const Expr& e) {
  static constexpr std::array<std::string_view, 12> kNames = {
      "Literal", "Name",  "FieldAccess", "Call",   "ArrayAccess",    "NewObject",
      "NewArray", "Unary", "Binary",     "Assign", "CompoundAssign", "Paren"};
  return kNames[e.node.index()];
}

// ------------------------------------------------------------------ ids

namespace {

struct IdAssigner {
  NodeId next = 1;

  void expr(Expr& e) {
    e.id = next++;
    std::visit([this](auto& n) { children(n); }, e.node);
  }
  void children(Literal&) {}
  void children(Name&) {}
  void children(FieldAccess& n) { expr(*n.target); }
  void children(Call& n) {
    if (n.target) expr(**n.target);
    for (auto& a : n.args) expr(a);
  }
  void children(ArrayAccess& n) {
    expr(*n.array);
    expr(*n.index);
  }
  void children(NewObject& n) {
    for (auto& a : n.args) expr(a);
  }
  void children(NewArray& n) {
    for (auto& s : n.sizes) expr(s);
  }
  void children(Unary& n) { expr(*n.operand); }
  void children(Binary& n) {
    expr(*n.lhs);
    expr(*n.rhs);
  }
  void children(Assign& n) {
    expr(*n.target);
    expr(*n.value);
  }
  void children(CompoundAssign& n) {
    expr(*n.target);
    expr(*n.value);
  }
  void children(Paren& n) { expr(*n.inner); }

  void declarators(std::vector<Declarator>& ds) {
    for (auto& d : ds) {
      if (d.init) expr(*d.init);
    }
  }

  void stmt(Stmt& s) {
    s.id = next++;
    std::visit([this](auto& n) { stmt_children(n); }, s.node);
  }
  void stmt_children(Block& b) {
    for (auto& s : b.stmts) stmt(s);
  }
  void stmt_children(LocalVarDecl& d) { declarators(d.declarators); }
  void stmt_children(ExprStmt& e) { expr(e.expr); }
  void stmt_children(If& n) {
    expr(n.cond);
    stmt(*n.then_branch);
    if (n.else_branch) stmt(**n.else_branch);
  }
  void stmt_children(While& n) {
    expr(n.cond);
    stmt(*n.body);
  }
  void stmt_children(For& n) {
    if (auto* d = std::get_if<ForDecl>(&n.init)) declarators(d->declarators);
    if (auto* es = std::get_if<std::vector<Expr>>(&n.init)) {
      for (auto& e : *es) expr(e);
    }
    if (n.cond) expr(*n.cond);
    for (auto& e : n.update) expr(e);
    stmt(*n.body);
  }
  void stmt_children(Return& r) {
    if (r.value) expr(*r.value);
  }
};

}  // namespace

NodeId assign_ids(CompilationUnit& unit) {
  IdAssigner ids;
  for (auto& cls : unit.type_decls) {
    cls.id = ids.next++;
    for (auto& member : cls.members) {
      if (auto* f = std::get_if<FieldDecl>(&member)) {
        f->id = ids.next++;
        ids.declarators(f->declarators);
      } else {
        auto& m = std::get<MethodDecl>(member);
        m.id = ids.next++;
        ids.stmt_children(m.body);
      }
    }
  }
  return ids.next - 1;
}

// ------------------------------------------------------------ equality

namespace {

bool eq(const Comment& a, const Comment& b) { return a.block == b.block && a.text == b.text; }

bool eq(const Comments& a, const Comments& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

bool eq(const TypeRef& a, const TypeRef& b) { return a.name == b.name && a.dims == b.dims; }

bool eq(const Expr& a, const Expr& b);

bool eq(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

struct ExprEq {
  bool operator()(const Literal& a, const Literal& b) const {
    return a.kind == b.kind && a.text == b.text;
  }
  bool operator()(const Name& a, const Name& b) const { return a.id == b.id; }
  bool operator()(const FieldAccess& a, const FieldAccess& b) const {
    return a.member == b.member && eq(*a.target, *b.target);
  }
  bool operator()(const Call& a, const Call& b) const {
    if (a.name != b.name || a.target.has_value() != b.target.has_value()) return false;
    if (a.target && !eq(**a.target, **b.target)) return false;
    return eq(a.args, b.args);
  }
  bool operator()(const ArrayAccess& a, const ArrayAccess& b) const {
    return eq(*a.array, *b.array) && eq(*a.index, *b.index);
  }
  bool operator()(const NewObject& a, const NewObject& b) const {
    return a.type == b.type && eq(a.args, b.args);
  }
  bool operator()(const NewArray& a, const NewArray& b) const {
    return eq(a.element, b.element) && eq(a.sizes, b.sizes);
  }
  bool operator()(const Unary& a, const Unary& b) const {
    return a.op == b.op && a.postfix == b.postfix && eq(*a.operand, *b.operand);
  }
  bool operator()(const Binary& a, const Binary& b) const {
    return a.op == b.op && eq(*a.lhs, *b.lhs) && eq(*a.rhs, *b.rhs);
  }
  bool operator()(const Assign& a, const Assign& b) const {
    return eq(*a.target, *b.target) && eq(*a.value, *b.value);
  }
  bool operator()(const CompoundAssign& a, const CompoundAssign& b) const {
    return a.op == b.op && eq(*a.target, *b.target) && eq(*a.value, *b.value);
  }
  bool operator()(const Paren& a, const Paren& b) const { return eq(*a.inner, *b.inner); }
  template <typename A, typename B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

bool eq(const Expr& a, const Expr& b) { return std::visit(ExprEq{}, a.node, b.node); }

bool eq(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq(*a, *b);
}

bool eq(const std::vector<Declarator>& a, const std::vector<Declarator>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || a[i].extra_dims != b[i].extra_dims ||
        !eq(a[i].init, b[i].init)) {
      return false;
    }
  }
  return true;
}

bool eq(const Stmt& a, const Stmt& b);

bool eq(const Block& a, const Block& b) {
  if (a.stmts.size() != b.stmts.size() || !eq(a.trailing, b.trailing)) return false;
  for (std::size_t i = 0; i < a.stmts.size(); ++i) {
    if (!eq(a.stmts[i], b.stmts[i])) return false;
  }
  return true;
}

struct StmtEq {
  bool operator()(const Block& a, const Block& b) const { return eq(a, b); }
  bool operator()(const LocalVarDecl& a, const LocalVarDecl& b) const {
    return a.is_final == b.is_final && eq(a.type, b.type) && eq(a.declarators, b.declarators);
  }
  bool operator()(const ExprStmt& a, const ExprStmt& b) const { return eq(a.expr, b.expr); }
  bool operator()(const If& a, const If& b) const {
    if (!eq(a.cond, b.cond) || !eq(*a.then_branch, *b.then_branch)) return false;
    if (a.else_branch.has_value() != b.else_branch.has_value()) return false;
    return !a.else_branch || eq(**a.else_branch, **b.else_branch);
  }
  bool operator()(const While& a, const While& b) const {
    return eq(a.cond, b.cond) && eq(*a.body, *b.body);
  }
  bool operator()(const For& a, const For& b) const {
    if (a.init.index() != b.init.index()) return false;
    if (const auto* da = std::get_if<ForDecl>(&a.init)) {
      const auto& db = std::get<ForDecl>(b.init);
      if (!eq(da->type, db.type) || !eq(da->declarators, db.declarators)) return false;
    }
    if (const auto* ea = std::get_if<std::vector<Expr>>(&a.init)) {
      if (!eq(*ea, std::get<std::vector<Expr>>(b.init))) return false;
    }
    return eq(a.cond, b.cond) && eq(a.update, b.update) && eq(*a.body, *b.body);
  }
  bool operator()(const Return& a, const Return& b) const { return eq(a.value, b.value); }
  template <typename A, typename B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

bool eq(const Stmt& a, const Stmt& b) {
  return eq(a.comments, b.comments) && std::visit(StmtEq{}, a.node, b.node);
}

bool eq(const Member& a, const Member& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<FieldDecl>(&a)) {
    const auto& fb = std::get<FieldDecl>(b);
    return eq(fa->comments, fb.comments) && fa->modifiers == fb.modifiers &&
           eq(fa->type, fb.type) && eq(fa->declarators, fb.declarators);
  }
  const auto& ma = std::get<MethodDecl>(a);
  const auto& mb = std::get<MethodDecl>(b);
  if (!eq(ma.comments, mb.comments) || ma.modifiers != mb.modifiers || ma.name != mb.name) {
    return false;
  }
  if (ma.return_type.has_value() != mb.return_type.has_value()) return false;
  if (ma.return_type && !eq(*ma.return_type, *mb.return_type)) return false;
  if (ma.params.size() != mb.params.size()) return false;
  for (std::size_t i = 0; i < ma.params.size(); ++i) {
    const auto& pa = ma.params[i];
    const auto& pb = mb.params[i];
    if (!eq(pa.type, pb.type) || pa.name != pb.name || pa.extra_dims != pb.extra_dims) {
      return false;
    }
  }
  return eq(ma.body, mb.body);
}

}  // namespace

bool structurally_equal(const CompilationUnit& a, const CompilationUnit& b) {
  if (a.type_decls.size() != b.type_decls.size()) return false;
  if (!eq(a.leading_orphans, b.leading_orphans)) return false;
  for (std::size_t i = 0; i < a.type_decls.size(); ++i) {
    const auto& ca = a.type_decls[i];
    const auto& cb = b.type_decls[i];
    if (ca.name != cb.name || ca.modifiers != cb.modifiers || !eq(ca.comments, cb.comments) ||
        !eq(ca.trailing, cb.trailing) || ca.members.size() != cb.members.size()) {
      return false;
    }
    for (std::size_t j = 0; j < ca.members.size(); ++j) {
      if (!eq(ca.members[j], cb.members[j])) return false;
    }
  }
  return true;
}

namespace {

std::size_t count_comments(const Stmt& s);

std::size_t count_comments(const Block& b) {
  std::size_t n = b.trailing.size();
  for (const auto& s : b.stmts) n += count_comments(s);
  return n;
}

std::size_t count_comments(const Stmt& s) {
  std::size_t n = s.comments.size();
  if (const auto* b = s.as<Block>()) n += count_comments(*b);
  if (const auto* i = s.as<If>()) {
    n += count_comments(*i->then_branch);
    if (i->else_branch) n += count_comments(**i->else_branch);
  }
  if (const auto* w = s.as<While>()) n += count_comments(*w->body);
  if (const auto* f = s.as<For>()) n += count_comments(*f->body);
  return n;
}

}  // namespace

std::size_t comment_count(const CompilationUnit& unit) {
  std::size_t n = unit.leading_orphans.size();
  for (const auto& cls : unit.type_decls) {
    n += cls.comments.size() + cls.trailing.size();
    for (const auto& member : cls.members) {
      if (const auto* f = std::get_if<FieldDecl>(&member)) {
        n += f->comments.size();
      } else {
        const auto& m = std::get<MethodDecl>(member);
        n += m.comments.size() + count_comments(m.body);
      }
    }
  }
  return n;
}

}  // namespace scpd::lang
