#include "scpd/lang/token.hpp"

#include <array>
#include <utility>

namespace scpd::lang {

namespace {

struct KindInfo {
  TokenCategory category;
  std::string_view code;
  std::string_view spelling;
};

constexpr std::array<KindInfo, kTokenKindCount> kKindTable{{
    {TokenCategory::Keyword, "CLAS", "class"},
    {TokenCategory::Keyword, "PUBL", "public"},
    {TokenCategory::Keyword, "PRIV", "private"},
    {TokenCategory::Keyword, "PROT", "protected"},
    {TokenCategory::Keyword, "STAT", "static"},
    {TokenCategory::Keyword, "FINL", "final"},
    {TokenCategory::Keyword, "VOID", "void"},
    {TokenCategory::Keyword, "BOOL", "boolean"},
    {TokenCategory::Keyword, "CHAR", "char"},
    {TokenCategory::Keyword, "INTK", "int"},
    {TokenCategory::Keyword, "LONG", "long"},
    {TokenCategory::Keyword, "FLOT", "float"},
    {TokenCategory::Keyword, "DOUB", "double"},
    {TokenCategory::Keyword, "IFKW", "if"},
    {TokenCategory::Keyword, "ELSE", "else"},
    {TokenCategory::Keyword, "WHIL", "while"},
    {TokenCategory::Keyword, "FORK", "for"},
    {TokenCategory::Keyword, "RETN", "return"},
    {TokenCategory::Keyword, "NEWK", "new"},
    {TokenCategory::Keyword, "NULL", "null"},
    {TokenCategory::BooleanLiteral, "TRUE", "true"},
    {TokenCategory::BooleanLiteral, "FALS", "false"},
    {TokenCategory::Identifier, "IDNT", ""},
    {TokenCategory::IntLiteral, "INTL", ""},
    {TokenCategory::FloatLiteral, "FLTL", ""},
    {TokenCategory::StringLiteral, "STRN", ""},
    {TokenCategory::CharLiteral, "CHRL", ""},
    {TokenCategory::Operator, "PLUS", "+"},
    {TokenCategory::Operator, "MINS", "-"},
    {TokenCategory::Operator, "STAR", "*"},
    {TokenCategory::Operator, "SLSH", "/"},
    {TokenCategory::Operator, "PCNT", "%"},
    {TokenCategory::Operator, "INCR", "++"},
    {TokenCategory::Operator, "DECR", "--"},
    {TokenCategory::Operator, "PLEQ", "+="},
    {TokenCategory::Operator, "MIEQ", "-="},
    {TokenCategory::Operator, "STEQ", "*="},
    {TokenCategory::Operator, "SLEQ", "/="},
    {TokenCategory::Operator, "ASGN", "="},
    {TokenCategory::Operator, "EQEQ", "=="},
    {TokenCategory::Operator, "NTEQ", "!="},
    {TokenCategory::Operator, "LESS", "<"},
    {TokenCategory::Operator, "LSEQ", "<="},
    {TokenCategory::Operator, "GRTR", ">"},
    {TokenCategory::Operator, "GREQ", ">="},
    {TokenCategory::Operator, "ANDA", "&&"},
    {TokenCategory::Operator, "OROR", "||"},
    {TokenCategory::Operator, "BANG", "!"},
    {TokenCategory::Delimiter, "LPAR", "("},
    {TokenCategory::Delimiter, "RPAR", ")"},
    {TokenCategory::Delimiter, "LBRC", "{"},
    {TokenCategory::Delimiter, "RBRC", "}"},
    {TokenCategory::Delimiter, "LBRK", "["},
    {TokenCategory::Delimiter, "RBRK", "]"},
    {TokenCategory::Delimiter, "SEMI", ";"},
    {TokenCategory::Delimiter, "COMA", ","},
    {TokenCategory::Delimiter, "DOTT", "."},
    {TokenCategory::Comment, "LCOM", ""},
    {TokenCategory::Comment, "BCOM", ""},
}};

const KindInfo& info(TokenKind kind) noexcept {
  return kKindTable[static_cast<std::size_t>(kind)];
}

}  // namespace

TokenCategory category_of(TokenKind kind) noexcept { return info(kind).category; }

std::string_view code_of(TokenKind kind) noexcept { return info(kind).code; }

std::string_view spelling_of(TokenKind kind) noexcept { return info(kind).spelling; }

bool keyword_kind(std::string_view word, TokenKind& out) noexcept {
  for (std::size_t i = 0; i <= static_cast<std::size_t>(TokenKind::KwFalse); ++i) {
    if (kKindTable[i].spelling == word) {
      out = static_cast<TokenKind>(i);
      return true;
    }
  }
  return false;
}

}  // namespace scpd::lang
