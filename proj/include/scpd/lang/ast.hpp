#pragma once

// MiniJ abstract syntax tree.
//
// All nodes are value types: copying a CompilationUnit deep-clones it. Child
// expressions and statements that would otherwise be recursive are held in
// Box<T>, a copyable owning pointer.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace scpd::lang {

template <typename T>
class Box {
 public:
  Box() : ptr_(std::make_unique<T>()) {}
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(implicit)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() noexcept { return *ptr_; }
  const T& operator*() const noexcept { return *ptr_; }
  T* operator->() noexcept { return ptr_.get(); }
  const T* operator->() const noexcept { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

using NodeId = std::uint32_t;

struct Comment {
  bool block = false;  // `/* ... */` when true, `// ...` otherwise
  std::string text;    // full lexeme including delimiters
};

using Comments = std::vector<Comment>;

/// Primitive keyword (boolean, char, int, long, float, double) or a class
/// name such as String, plus array dimensions.
struct TypeRef {
  std::string name;
  int dims = 0;

  [[nodiscard]] bool is_primitive() const;
};

enum class Modifier : std::uint8_t { Public, Private, Protected, Static, Final };

std::string_view spelling(Modifier m);

// ---------------------------------------------------------------- expressions

enum class BinaryOp : std::uint8_t {
  Mul, Div, Mod,
  Add, Sub,
  Lt, Le, Gt, Ge,
  Eq, Ne,
  And,
  Or,
};

enum class UnaryOp : std::uint8_t { Inc, Dec, Not, Neg };

enum class CompoundOp : std::uint8_t { Add, Sub, Mul, Div };

enum class LiteralKind : std::uint8_t { Int, Float, String, Char, Boolean, Null };

std::string_view spelling(BinaryOp op);
std::string_view spelling(UnaryOp op);
std::string_view spelling(CompoundOp op);
BinaryOp binary_of(CompoundOp op);
bool is_commutative(BinaryOp op);

struct Expr;

struct Literal {
  LiteralKind kind = LiteralKind::Int;
  std::string text;
};
struct Name {
  std::string id;
};
struct FieldAccess {
  Box<Expr> target;
  std::string member;
};
struct Call {
  std::optional<Box<Expr>> target;  // `target.name(args)` when present
  std::string name;
  std::vector<Expr> args;
};
struct ArrayAccess {
  Box<Expr> array;
  Box<Expr> index;
};
struct NewObject {
  std::string type;
  std::vector<Expr> args;
};
struct NewArray {
  TypeRef element;  // dims counts trailing `[]` after the sized dimensions
  std::vector<Expr> sizes;
};
struct Unary {
  UnaryOp op = UnaryOp::Not;
  bool postfix = false;
  Box<Expr> operand;
};
struct Binary {
  BinaryOp op = BinaryOp::Add;
  Box<Expr> lhs;
  Box<Expr> rhs;
};
struct Assign {
  Box<Expr> target;
  Box<Expr> value;
};
struct CompoundAssign {
  CompoundOp op = CompoundOp::Add;
  Box<Expr> target;
  Box<Expr> value;
};
struct Paren {
  Box<Expr> inner;
};

struct Expr {
  using Node = std::variant<Literal, Name, FieldAccess, Call, ArrayAccess, NewObject, NewArray,
                            Unary, Binary, Assign, CompoundAssign, Paren>;
  NodeId id = 0;
  Node node;

  Expr() = default;
  template <typename T>
  Expr(T n) : node(std::move(n)) {}  // NOLINT(implicit)

  template <typename T>
  [[nodiscard]] T* as() noexcept { return std::get_if<T>(&node); }
  template <typename T>
  [[nodiscard]] const T* as() const noexcept { return std::get_if<T>(&node); }
};

// ----------------------------------------------------------------- statements

struct Stmt;

struct Declarator {
  std::string name;
  int extra_dims = 0;  // C-style `int a[]`
  std::optional<Expr> init;
};

struct Block {
  std::vector<Stmt> stmts;
  Comments trailing;  // comments before the closing brace
};
struct LocalVarDecl {
  bool is_final = false;
  TypeRef type;
  std::vector<Declarator> declarators;
};
struct ExprStmt {
  Expr expr;
};
struct If {
  Expr cond;
  Box<Stmt> then_branch;
  std::optional<Box<Stmt>> else_branch;
};
struct While {
  Expr cond;
  Box<Stmt> body;
};
/// `for` header initializer: nothing, a declaration, or expressions.
struct ForDecl {
  TypeRef type;
  std::vector<Declarator> declarators;
};
using ForInit = std::variant<std::monostate, ForDecl, std::vector<Expr>>;
struct For {
  ForInit init;
  std::optional<Expr> cond;
  std::vector<Expr> update;
  Box<Stmt> body;
};
struct Return {
  std::optional<Expr> value;
};

struct Stmt {
  using Node = std::variant<Block, LocalVarDecl, ExprStmt, If, While, For, Return>;
  NodeId id = 0;
  Comments comments;
  Node node;

  Stmt() = default;
  template <typename T>
  Stmt(T n) : node(std::move(n)) {}  // NOLINT(implicit)

  template <typename T>
  [[nodiscard]] T* as() noexcept { return std::get_if<T>(&node); }
  template <typename T>
  [[nodiscard]] const T* as() const noexcept { return std::get_if<T>(&node); }
};

/// Kind tag of a statement ("Block", "LocalVarDecl", ...).
std::string_view kind_name(const Stmt& s);
std::string_view kind_name(const Expr& e);

// --------------------------------------------------------------- declarations

struct Param {
  TypeRef type;
  std::string name;
  int extra_dims = 0;
};

struct FieldDecl {
  NodeId id = 0;
  Comments comments;
  std::vector<Modifier> modifiers;
  TypeRef type;
  std::vector<Declarator> declarators;
};

struct MethodDecl {
  NodeId id = 0;
  Comments comments;
  std::vector<Modifier> modifiers;
  std::optional<TypeRef> return_type;  // nullopt means void
  std::string name;
  std::vector<Param> params;
  Block body;
};

using Member = std::variant<FieldDecl, MethodDecl>;

struct ClassDecl {
  NodeId id = 0;
  Comments comments;
  std::vector<Modifier> modifiers;
  std::string name;
  std::vector<Member> members;
  Comments trailing;  // comments before the closing brace or at end of file
};

struct CompilationUnit {
  std::vector<ClassDecl> type_decls;
  Comments leading_orphans;  // comments in a file with no class
};

/// Renumbers every node in pre-order starting at 1; returns the count.
NodeId assign_ids(CompilationUnit& unit);

/// Structural equality ignoring node ids (comments included).
bool structurally_equal(const CompilationUnit& a, const CompilationUnit& b);

/// Total number of comments anywhere in the unit.
std::size_t comment_count(const CompilationUnit& unit);

}  // namespace scpd::lang
