#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace scpd::lang {

/// Coarse token classes.
enum class TokenCategory : std::uint8_t {
  Keyword,
  Identifier,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
  BooleanLiteral,
  Operator,
  Delimiter,
  Comment,
};

/// Closed set of MiniJ token kinds. Each kind has a short mnemonic code
/// (PUBL, IDNT, LBRC, ...) used when a token string is rendered.
enum class TokenKind : std::uint8_t {
  // keywords
  KwClass,
  KwPublic,
  KwPrivate,
  KwProtected,
  KwStatic,
  KwFinal,
  KwVoid,
  KwBoolean,
  KwChar,
  KwInt,
  KwLong,
  KwFloat,
  KwDouble,
  KwIf,
  KwElse,
  KwWhile,
  KwFor,
  KwReturn,
  KwNew,
  KwNull,
  // literals
  KwTrue,
  KwFalse,
  Identifier,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
  // operators
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  PlusPlus,
  MinusMinus,
  PlusAssign,
  MinusAssign,
  StarAssign,
  SlashAssign,
  Assign,
  EqualEqual,
  NotEqual,
  Less,
  LessEqual,
  Greater,
  GreaterEqual,
  AndAnd,
  OrOr,
  Bang,
  // delimiters
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Semicolon,
  Comma,
  Dot,
  // comments
  LineComment,
  BlockComment,
};

inline constexpr std::size_t kTokenKindCount =
    static_cast<std::size_t>(TokenKind::BlockComment) + 1;

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  TokenKind kind = TokenKind::Identifier;
  std::string lexeme;
  Span span;

  [[nodiscard]] bool is_comment() const noexcept {
    return kind == TokenKind::LineComment || kind == TokenKind::BlockComment;
  }
};

TokenCategory category_of(TokenKind kind) noexcept;

/// Mnemonic code, e.g. "PUBL" for `public`, "IDNT" for identifiers.
std::string_view code_of(TokenKind kind) noexcept;

/// Canonical spelling for fixed-lexeme kinds; empty for identifiers,
/// literals and comments.
std::string_view spelling_of(TokenKind kind) noexcept;

/// Keyword lookup; returns false when `word` is not reserved.
bool keyword_kind(std::string_view word, TokenKind& out) noexcept;

}  // namespace scpd::lang
