#include "scpd/lang/parser.hpp"

#include <utility>

#include "scpd/lang/lexer.hpp"

namespace scpd::lang {

namespace {

bool is_primitive_kw(TokenKind k) {
  switch (k) {
    case TokenKind::KwBoolean:
    case TokenKind::KwChar:
    case TokenKind::KwInt:
    case TokenKind::KwLong:
    case TokenKind::KwFloat:
    case TokenKind::KwDouble:
      return true;
    default:
      return false;
  }
}

bool is_modifier_kw(TokenKind k, Modifier& out) {
  switch (k) {
    case TokenKind::KwPublic: out = Modifier::Public; return true;
    case TokenKind::KwPrivate: out = Modifier::Private; return true;
    case TokenKind::KwProtected: out = Modifier::Protected; return true;
    case TokenKind::KwStatic: out = Modifier::Static; return true;
    case TokenKind::KwFinal: out = Modifier::Final; return true;
    default: return false;
  }
}

std::string describe(TokenKind k) {
  const auto spelling = spelling_of(k);
  if (!spelling.empty()) return "'" + std::string(spelling) + "'";
  switch (category_of(k)) {
    case TokenCategory::Identifier: return "identifier";
    case TokenCategory::Comment: return "comment";
    default: return "literal";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens, std::size_t end_offset)
      : tokens_(std::move(tokens)), end_offset_(end_offset) {}

  CompilationUnit unit() {
    CompilationUnit u;
    while (!at_end()) {
      u.type_decls.push_back(class_decl());
    }
    if (!pending_.empty()) {
      if (u.type_decls.empty()) {
        u.leading_orphans = take_pending();
      } else {
        auto& trailing = u.type_decls.back().trailing;
        for (auto& c : take_pending()) trailing.push_back(std::move(c));
      }
    }
    return u;
  }

 private:
  // ------------------------------------------------------------ cursor

  void drain_comments() {
    while (pos_ < tokens_.size() && tokens_[pos_].is_comment()) {
      const auto& t = tokens_[pos_];
      pending_.push_back(Comment{t.kind == TokenKind::BlockComment, t.lexeme});
      ++pos_;
    }
  }

  bool at_end() {
    drain_comments();
    return pos_ >= tokens_.size();
  }

  const Token* current() {
    drain_comments();
    return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
  }

  // Looks `n` non-comment tokens ahead of the current one.
  const Token* lookahead(std::size_t n) {
    drain_comments();
    std::size_t i = pos_;
    while (i < tokens_.size()) {
      if (!tokens_[i].is_comment()) {
        if (n == 0) return &tokens_[i];
        --n;
      }
      ++i;
    }
    return nullptr;
  }

  bool check(TokenKind k) {
    const Token* t = current();
    return t != nullptr && t->kind == k;
  }

  bool accept(TokenKind k) {
    if (!check(k)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) {
    const Token* t = current();
    if (t == nullptr) throw ParseError(Span{end_offset_, end_offset_}, expected, "end of file");
    std::string found = describe(t->kind);
    if (spelling_of(t->kind).empty()) found += " '" + t->lexeme + "'";
    throw ParseError(t->span, expected, found);
  }

  const Token& expect(TokenKind k) {
    if (!check(k)) fail(describe(k));
    return tokens_[pos_++];
  }

  std::string identifier() { return expect(TokenKind::Identifier).lexeme; }

  Comments take_pending() { return std::exchange(pending_, {}); }

  // ------------------------------------------------------- declarations

  std::vector<Modifier> modifiers() {
    std::vector<Modifier> mods;
    Modifier m{};
    while (const Token* t = current()) {
      if (!is_modifier_kw(t->kind, m)) break;
      mods.push_back(m);
      ++pos_;
    }
    return mods;
  }

  ClassDecl class_decl() {
    ClassDecl cls;
    current();
    cls.comments = take_pending();
    cls.modifiers = modifiers();
    expect(TokenKind::KwClass);
    cls.name = identifier();
    expect(TokenKind::LBrace);
    while (!check(TokenKind::RBrace)) {
      if (at_end()) fail("'}'");
      cls.members.push_back(member());
    }
    cls.trailing = take_pending();
    expect(TokenKind::RBrace);
    return cls;
  }

  int dims() {
    int n = 0;
    while (check(TokenKind::LBracket)) {
      const Token* next = lookahead(1);
      if (next == nullptr || next->kind != TokenKind::RBracket) break;
      ++pos_;
      expect(TokenKind::RBracket);
      ++n;
    }
    return n;
  }

  TypeRef type_ref() {
    const Token* t = current();
    if (t == nullptr || !(is_primitive_kw(t->kind) || t->kind == TokenKind::Identifier)) {
      fail("type");
    }
    TypeRef type{t->lexeme, 0};
    ++pos_;
    type.dims = dims();
    return type;
  }

  Member member() {
    current();
    Comments comments = take_pending();
    auto mods = modifiers();
    if (accept(TokenKind::KwVoid)) {
      MethodDecl m;
      m.comments = std::move(comments);
      m.modifiers = std::move(mods);
      m.name = identifier();
      method_rest(m);
      return m;
    }
    TypeRef type = type_ref();
    const Token* after_name = lookahead(1);
    if (check(TokenKind::Identifier) && after_name != nullptr &&
        after_name->kind == TokenKind::LParen) {
      MethodDecl m;
      m.comments = std::move(comments);
      m.modifiers = std::move(mods);
      m.return_type = std::move(type);
      m.name = identifier();
      method_rest(m);
      return m;
    }
    FieldDecl f;
    f.comments = std::move(comments);
    f.modifiers = std::move(mods);
    f.type = std::move(type);
    f.declarators = declarators();
    expect(TokenKind::Semicolon);
    return f;
  }

  void method_rest(MethodDecl& m) {
    expect(TokenKind::LParen);
    if (!check(TokenKind::RParen)) {
      do {
        Param p;
        p.type = type_ref();
        p.name = identifier();
        p.extra_dims = dims();
        m.params.push_back(std::move(p));
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RParen);
    m.body = block();
  }

  std::vector<Declarator> declarators() {
    std::vector<Declarator> out;
    do {
      Declarator d;
      d.name = identifier();
      d.extra_dims = dims();
      if (accept(TokenKind::Assign)) d.init = expression();
      out.push_back(std::move(d));
    } while (accept(TokenKind::Comma));
    return out;
  }

  // ---------------------------------------------------------- statements

  Block block() {
    expect(TokenKind::LBrace);
    Block b;
    while (!check(TokenKind::RBrace)) {
      if (at_end()) fail("'}'");
      b.stmts.push_back(statement());
    }
    b.trailing = take_pending();
    expect(TokenKind::RBrace);
    return b;
  }

  bool starts_local_decl() {
    const Token* t = current();
    if (t == nullptr) return false;
    if (t->kind == TokenKind::KwFinal || is_primitive_kw(t->kind)) return true;
    if (t->kind != TokenKind::Identifier) return false;
    const Token* next = lookahead(1);
    if (next == nullptr) return false;
    if (next->kind == TokenKind::Identifier) return true;
    if (next->kind == TokenKind::LBracket) {
      const Token* close = lookahead(2);
      return close != nullptr && close->kind == TokenKind::RBracket;
    }
    return false;
  }

  Stmt statement() {
    current();
    Comments comments = take_pending();
    Stmt s = statement_body();
    s.comments = std::move(comments);
    return s;
  }

  Stmt statement_body() {
    if (check(TokenKind::LBrace)) return Stmt(block());
    if (accept(TokenKind::KwIf)) {
      If node;
      expect(TokenKind::LParen);
      node.cond = expression();
      expect(TokenKind::RParen);
      node.then_branch = statement();
      if (accept(TokenKind::KwElse)) node.else_branch = Box<Stmt>(statement());
      return Stmt(std::move(node));
    }
    if (accept(TokenKind::KwWhile)) {
      While node;
      expect(TokenKind::LParen);
      node.cond = expression();
      expect(TokenKind::RParen);
      node.body = statement();
      return Stmt(std::move(node));
    }
    if (accept(TokenKind::KwFor)) return Stmt(for_statement());
    if (accept(TokenKind::KwReturn)) {
      Return node;
      if (!check(TokenKind::Semicolon)) node.value = expression();
      expect(TokenKind::Semicolon);
      return Stmt(std::move(node));
    }
    if (starts_local_decl()) {
      LocalVarDecl decl;
      decl.is_final = accept(TokenKind::KwFinal);
      decl.type = type_ref();
      decl.declarators = declarators();
      expect(TokenKind::Semicolon);
      return Stmt(std::move(decl));
    }
    ExprStmt es{expression()};
    expect(TokenKind::Semicolon);
    return Stmt(std::move(es));
  }

  For for_statement() {
    For node;
    expect(TokenKind::LParen);
    if (!check(TokenKind::Semicolon)) {
      if (starts_local_decl()) {
        ForDecl decl;
        decl.type = type_ref();
        decl.declarators = declarators();
        node.init = std::move(decl);
      } else {
        node.init = expression_list();
      }
    }
    expect(TokenKind::Semicolon);
    if (!check(TokenKind::Semicolon)) node.cond = expression();
    expect(TokenKind::Semicolon);
    if (!check(TokenKind::RParen)) node.update = expression_list();
    expect(TokenKind::RParen);
    node.body = statement();
    return node;
  }

  std::vector<Expr> expression_list() {
    std::vector<Expr> out;
    do {
      out.push_back(expression());
    } while (accept(TokenKind::Comma));
    return out;
  }

  // --------------------------------------------------------- expressions

  static bool is_lvalue(const Expr& e) {
    return e.as<Name>() != nullptr || e.as<FieldAccess>() != nullptr ||
           e.as<ArrayAccess>() != nullptr;
  }

  Expr expression() {
    const Token* start = current();
    const Span start_span = start != nullptr ? start->span : Span{end_offset_, end_offset_};
    Expr lhs = binary(0);
    const Token* t = current();
    if (t == nullptr) return lhs;
    std::optional<CompoundOp> compound;
    switch (t->kind) {
      case TokenKind::Assign: break;
      case TokenKind::PlusAssign: compound = CompoundOp::Add; break;
      case TokenKind::MinusAssign: compound = CompoundOp::Sub; break;
      case TokenKind::StarAssign: compound = CompoundOp::Mul; break;
      case TokenKind::SlashAssign: compound = CompoundOp::Div; break;
      default: return lhs;
    }
    if (!is_lvalue(lhs)) throw ParseError(start_span, "assignable expression", "expression");
    ++pos_;
    Expr rhs = expression();
    if (compound) return Expr(CompoundAssign{*compound, std::move(lhs), std::move(rhs)});
    return Expr(Assign{std::move(lhs), std::move(rhs)});
  }

  static int binary_level(TokenKind k, BinaryOp& op) {
    switch (k) {
      case TokenKind::OrOr: op = BinaryOp::Or; return 1;
      case TokenKind::AndAnd: op = BinaryOp::And; return 2;
      case TokenKind::EqualEqual: op = BinaryOp::Eq; return 3;
      case TokenKind::NotEqual: op = BinaryOp::Ne; return 3;
      case TokenKind::Less: op = BinaryOp::Lt; return 4;
      case TokenKind::LessEqual: op = BinaryOp::Le; return 4;
      case TokenKind::Greater: op = BinaryOp::Gt; return 4;
      case TokenKind::GreaterEqual: op = BinaryOp::Ge; return 4;
      case TokenKind::Plus: op = BinaryOp::Add; return 5;
      case TokenKind::Minus: op = BinaryOp::Sub; return 5;
      case TokenKind::Star: op = BinaryOp::Mul; return 6;
      case TokenKind::Slash: op = BinaryOp::Div; return 6;
      case TokenKind::Percent: op = BinaryOp::Mod; return 6;
      default: return -1;
    }
  }

  // Left-associative precedence climbing over levels > min_level.
  Expr binary(int min_level) {
    Expr lhs = unary();
    while (true) {
      const Token* t = current();
      if (t == nullptr) break;
      BinaryOp op{};
      const int level = binary_level(t->kind, op);
      if (level <= min_level) break;
      ++pos_;
      Expr rhs = binary(level);
      lhs = Expr(Binary{op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr unary() {
    const Token* t = current();
    if (t != nullptr) {
      std::optional<UnaryOp> op;
      switch (t->kind) {
        case TokenKind::Bang: op = UnaryOp::Not; break;
        case TokenKind::Minus: op = UnaryOp::Neg; break;
        case TokenKind::PlusPlus: op = UnaryOp::Inc; break;
        case TokenKind::MinusMinus: op = UnaryOp::Dec; break;
        default: break;
      }
      if (op) {
        ++pos_;
        return Expr(Unary{*op, false, unary()});
      }
    }
    return postfix();
  }

  Expr postfix() {
    Expr e = primary();
    while (true) {
      if (accept(TokenKind::Dot)) {
        std::string name = identifier();
        if (accept(TokenKind::LParen)) {
          Call call;
          call.target = Box<Expr>(std::move(e));
          call.name = std::move(name);
          call.args = arguments();
          e = Expr(std::move(call));
        } else {
          e = Expr(FieldAccess{std::move(e), std::move(name)});
        }
      } else if (check(TokenKind::LBracket)) {
        ++pos_;
        Expr index = expression();
        expect(TokenKind::RBracket);
        e = Expr(ArrayAccess{std::move(e), std::move(index)});
      } else {
        break;
      }
    }
    while (true) {
      if (accept(TokenKind::PlusPlus)) {
        e = Expr(Unary{UnaryOp::Inc, true, std::move(e)});
      } else if (accept(TokenKind::MinusMinus)) {
        e = Expr(Unary{UnaryOp::Dec, true, std::move(e)});
      } else {
        break;
      }
    }
    return e;
  }

  // Consumes arguments after the opening parenthesis.
  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    if (!check(TokenKind::RParen)) args = expression_list();
    expect(TokenKind::RParen);
    return args;
  }

  Expr primary() {
    const Token* t = current();
    if (t == nullptr) fail("expression");
    const Token tok = *t;
    switch (tok.kind) {
      case TokenKind::IntLiteral:
        ++pos_;
        return Expr(Literal{LiteralKind::Int, tok.lexeme});
      case TokenKind::FloatLiteral:
        ++pos_;
        return Expr(Literal{LiteralKind::Float, tok.lexeme});
      case TokenKind::StringLiteral:
        ++pos_;
        return Expr(Literal{LiteralKind::String, tok.lexeme});
      case TokenKind::CharLiteral:
        ++pos_;
        return Expr(Literal{LiteralKind::Char, tok.lexeme});
      case TokenKind::KwTrue:
      case TokenKind::KwFalse:
        ++pos_;
        return Expr(Literal{LiteralKind::Boolean, tok.lexeme});
      case TokenKind::KwNull:
        ++pos_;
        return Expr(Literal{LiteralKind::Null, tok.lexeme});
      case TokenKind::Identifier:
        ++pos_;
        if (accept(TokenKind::LParen)) {
          Call call;
          call.name = tok.lexeme;
          call.args = arguments();
          return Expr(std::move(call));
        }
        return Expr(Name{tok.lexeme});
      case TokenKind::LParen: {
        ++pos_;
        Expr inner = expression();
        expect(TokenKind::RParen);
        return Expr(Paren{std::move(inner)});
      }
      case TokenKind::KwNew:
        ++pos_;
        return creation();
      default:
        fail("expression");
    }
  }

  Expr creation() {
    const Token* t = current();
    if (t == nullptr || !(is_primitive_kw(t->kind) || t->kind == TokenKind::Identifier)) {
      fail("type");
    }
    std::string type = t->lexeme;
    const bool primitive = is_primitive_kw(t->kind);
    ++pos_;
    if (!primitive && accept(TokenKind::LParen)) {
      NewObject obj;
      obj.type = std::move(type);
      obj.args = arguments();
      return Expr(std::move(obj));
    }
    NewArray arr;
    arr.element.name = std::move(type);
    if (!check(TokenKind::LBracket)) fail("'['");
    while (check(TokenKind::LBracket)) {
      const Token* next = lookahead(1);
      if (next != nullptr && next->kind == TokenKind::RBracket) break;
      ++pos_;
      arr.sizes.push_back(expression());
      expect(TokenKind::RBracket);
    }
    if (arr.sizes.empty()) fail("array size");
    arr.element.dims = dims();
    return Expr(std::move(arr));
  }

  std::vector<Token> tokens_;
  std::size_t end_offset_;
  std::size_t pos_ = 0;
  Comments pending_;
};

}  // namespace

CompilationUnit parse(std::string_view content) {
  Parser parser(tokenize(content), content.size());
  CompilationUnit unit = parser.unit();
  assign_ids(unit);
  return unit;
}

}  // namespace scpd::lang
