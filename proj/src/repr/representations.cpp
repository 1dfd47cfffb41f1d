#include "scpd/repr/representations.hpp"

#include <array>

#include "scpd/lang/lexer.hpp"

namespace scpd::repr {

using namespace scpd::lang;

std::string_view text_of(const SourceText& src) noexcept { return src.content(); }

std::string TokenString::codes() const {
  std::string out;
  for (auto k : kinds) {
    if (!out.empty()) out += ' ';
    out += code_of(k);
  }
  return out;
}

TokenString token_string_of(std::string_view content) {
  TokenString ts;
  for (auto& t : tokenize(content)) {
    if (t.is_comment()) continue;
    ts.kinds.push_back(t.kind);
    ts.spans.push_back(t.span);
  }
  return ts;
}

std::uint32_t LabeledTree::add(std::uint32_t label) {
  labels.push_back(label);
  children.emplace_back();
  return static_cast<std::uint32_t>(labels.size() - 1);
}

namespace {

enum Label : std::uint32_t {
  kUnit, kClass, kField, kMethod, kParam, kDeclarator,
  kPrimitiveType, kClassType, kArrayType, kVoidType,
  kBlock, kLocalVarDecl, kExprStmt, kIf, kWhile, kFor, kReturn,
  kIntLiteral, kFloatLiteral, kStringLiteral, kCharLiteral, kBooleanLiteral, kNullLiteral,
  kName, kFieldAccess, kCall, kArrayAccess, kNewObject, kNewArray,
  kPreInc, kPreDec, kNot, kNeg, kPostInc, kPostDec,
  kMul, kDiv, kMod, kAdd, kSub, kLt, kLe, kGt, kGe, kEq, kNe, kAnd, kOr,
  kAssign, kAddAssign, kSubAssign, kMulAssign, kDivAssign,
  kParen,
  kLabelCount,
};

constexpr std::array<std::string_view, kLabelCount> kLabelNames = {
    "Unit", "Class", "Field", "Method", "Param", "Declarator",
    "PrimitiveType", "ClassType", "ArrayType", "VoidType",
    "Block", "LocalVarDecl", "ExprStmt", "If", "While", "For", "Return",
    "IntLiteral", "FloatLiteral", "StringLiteral", "CharLiteral", "BooleanLiteral", "NullLiteral",
    "Name", "FieldAccess", "Call", "ArrayAccess", "NewObject", "NewArray",
    "PreInc", "PreDec", "Not", "Neg", "PostInc", "PostDec",
    "Mul", "Div", "Mod", "Add", "Sub", "Lt", "Le", "Gt", "Ge", "Eq", "Ne", "And", "Or",
    "Assign", "AddAssign", "SubAssign", "MulAssign", "DivAssign",
    "Paren",
};

class TreeBuilder {
 public:
  LabeledTree tree;

  std::uint32_t node(std::uint32_t label, std::uint32_t parent) {
    const auto id = tree.add(label);
    tree.children[parent].push_back(id);
    return id;
  }

  void type(const TypeRef& t, std::uint32_t parent) {
    if (t.dims > 0) {
      node(kArrayType, parent);
    } else {
      node(t.is_primitive() ? kPrimitiveType : kClassType, parent);
    }
  }

  void declarators(const std::vector<Declarator>& ds, std::uint32_t parent) {
    for (const auto& d : ds) {
      const auto id = node(kDeclarator, parent);
      if (d.init) expr(*d.init, id);
    }
  }

  void unit(const CompilationUnit& u) {
    const auto root = tree.add(kUnit);
    for (const auto& cls : u.type_decls) {
      const auto cid = node(kClass, root);
      for (const auto& member : cls.members) {
        if (const auto* f = std::get_if<FieldDecl>(&member)) {
          const auto fid = node(kField, cid);
          type(f->type, fid);
          declarators(f->declarators, fid);
        } else {
          const auto& m = std::get<MethodDecl>(member);
          const auto mid = node(kMethod, cid);
          if (m.return_type) {
            type(*m.return_type, mid);
          } else {
            node(kVoidType, mid);
          }
          for (const auto& p : m.params) type(p.type, node(kParam, mid));
          block(m.body, mid);
        }
      }
    }
  }

  void block(const Block& b, std::uint32_t parent) {
    const auto id = node(kBlock, parent);
    for (const auto& s : b.stmts) stmt(s, id);
  }

  void stmt(const Stmt& s, std::uint32_t parent) {
    if (const auto* b = s.as<Block>()) {
      block(*b, parent);
    } else if (const auto* d = s.as<LocalVarDecl>()) {
      const auto id = node(kLocalVarDecl, parent);
      type(d->type, id);
      declarators(d->declarators, id);
    } else if (const auto* e = s.as<ExprStmt>()) {
      expr(e->expr, node(kExprStmt, parent));
    } else if (const auto* i = s.as<If>()) {
      const auto id = node(kIf, parent);
      expr(i->cond, id);
      stmt(*i->then_branch, id);
      if (i->else_branch) stmt(**i->else_branch, id);
    } else if (const auto* w = s.as<While>()) {
      const auto id = node(kWhile, parent);
      expr(w->cond, id);
      stmt(*w->body, id);
    } else if (const auto* f = s.as<For>()) {
      const auto id = node(kFor, parent);
      if (const auto* fd = std::get_if<ForDecl>(&f->init)) {
        const auto did = node(kLocalVarDecl, id);
        type(fd->type, did);
        declarators(fd->declarators, did);
      } else if (const auto* es = std::get_if<std::vector<Expr>>(&f->init)) {
        for (const auto& e : *es) expr(e, id);
      }
      if (f->cond) expr(*f->cond, id);
      for (const auto& e : f->update) expr(e, id);
      stmt(*f->body, id);
    } else if (const auto* r = s.as<Return>()) {
      const auto id = node(kReturn, parent);
      if (r->value) expr(*r->value, id);
    }
  }

  void expr(const Expr& e, std::uint32_t parent) {
    std::visit([&](const auto& n) { expr_node(n, parent); }, e.node);
  }

  void expr_node(const Literal& n, std::uint32_t parent) {
    static constexpr std::array<std::uint32_t, 6> kByKind = {
        kIntLiteral, kFloatLiteral, kStringLiteral, kCharLiteral, kBooleanLiteral, kNullLiteral};
    node(kByKind[static_cast<std::size_t>(n.kind)], parent);
  }
  void expr_node(const Name&, std::uint32_t parent) { node(kName, parent); }
  void expr_node(const FieldAccess& n, std::uint32_t parent) {
    expr(*n.target, node(kFieldAccess, parent));
  }
  void expr_node(const Call& n, std::uint32_t parent) {
    const auto id = node(kCall, parent);
    if (n.target) expr(**n.target, id);
    for (const auto& a : n.args) expr(a, id);
  }
  void expr_node(const ArrayAccess& n, std::uint32_t parent) {
    const auto id = node(kArrayAccess, parent);
    expr(*n.array, id);
    expr(*n.index, id);
  }
  void expr_node(const NewObject& n, std::uint32_t parent) {
    const auto id = node(kNewObject, parent);
    for (const auto& a : n.args) expr(a, id);
  }
  void expr_node(const NewArray& n, std::uint32_t parent) {
    const auto id = node(kNewArray, parent);
    type(n.element, id);
    for (const auto& s : n.sizes) expr(s, id);
  }
  void expr_node(const Unary& n, std::uint32_t parent) {
    std::uint32_t label = kNot;
    switch (n.op) {
      case UnaryOp::Inc: label = n.postfix ? kPostInc : kPreInc; break;
      case UnaryOp::Dec: label = n.postfix ? kPostDec : kPreDec; break;
      case UnaryOp::Not: label = kNot; break;
      case UnaryOp::Neg: label = kNeg; break;
    }
    expr(*n.operand, node(label, parent));
  }
  void expr_node(const Binary& n, std::uint32_t parent) {
    const auto id = node(kMul + static_cast<std::uint32_t>(n.op), parent);
    expr(*n.lhs, id);
    expr(*n.rhs, id);
  }
  void expr_node(const Assign& n, std::uint32_t parent) {
    const auto id = node(kAssign, parent);
    expr(*n.target, id);
    expr(*n.value, id);
  }
  void expr_node(const CompoundAssign& n, std::uint32_t parent) {
    const auto id = node(kAddAssign + static_cast<std::uint32_t>(n.op), parent);
    expr(*n.target, id);
    expr(*n.value, id);
  }
  void expr_node(const Paren& n, std::uint32_t parent) { expr(*n.inner, node(kParen, parent)); }
};

}  // namespace

LabeledTree ast_tree_of(const CompilationUnit& unit) {
  TreeBuilder b;
  b.unit(unit);
  return std::move(b.tree);
}

std::string_view ast_label_name(std::uint32_t label) {
  return label < kLabelNames.size() ? kLabelNames[label] : std::string_view("?");
}

}  // namespace scpd::repr
