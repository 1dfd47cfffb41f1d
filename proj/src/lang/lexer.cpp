#include "scpd/lang/lexer.hpp"

#include <cctype>

namespace scpd::lang {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$';
}
bool is_ident_part(char c) {
  return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_whitespace();
      if (pos_ >= text_.size()) break;
      out.push_back(next());
    }
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_whitespace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  Token make(TokenKind kind, std::size_t begin) const {
    return Token{kind, std::string(text_.substr(begin, pos_ - begin)), Span{begin, pos_}};
  }

  Token next() {
    const std::size_t begin = pos_;
    const char c = peek();

    if (c == '/' && peek(1) == '/') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      return make(TokenKind::LineComment, begin);
    }
    if (c == '/' && peek(1) == '*') {
      pos_ += 2;
      while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) ++pos_;
      if (pos_ >= text_.size()) throw LexError(begin, "unterminated block comment");
      pos_ += 2;
      return make(TokenKind::BlockComment, begin);
    }
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_part(text_[pos_])) ++pos_;
      TokenKind kind = TokenKind::Identifier;
      keyword_kind(text_.substr(begin, pos_ - begin), kind);
      return make(kind, begin);
    }
    if (is_digit(c)) return number(begin);
    if (c == '"') return quoted(begin, '"', TokenKind::StringLiteral, "unterminated string literal");
    if (c == '\'') return quoted(begin, '\'', TokenKind::CharLiteral, "unterminated char literal");
    return punctuation(begin);
  }

  Token number(std::size_t begin) {
    while (is_digit(peek())) ++pos_;
    bool is_float = false;
    if (peek() == '.' && is_digit(peek(1))) {
      is_float = true;
      ++pos_;
      while (is_digit(peek())) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t ahead = 1;
      if (peek(ahead) == '+' || peek(ahead) == '-') ++ahead;
      if (is_digit(peek(ahead))) {
        is_float = true;
        pos_ += ahead;
        while (is_digit(peek())) ++pos_;
      }
    }
    const char suffix = peek();
    if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
      is_float = true;
      ++pos_;
    } else if (!is_float && (suffix == 'l' || suffix == 'L')) {
      ++pos_;
    }
    if (is_ident_part(peek())) throw LexError(pos_, "malformed numeric literal");
    return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, begin);
  }

  Token quoted(std::size_t begin, char quote, TokenKind kind, const char* unterminated) {
    ++pos_;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') throw LexError(begin, unterminated);
      const char ch = text_[pos_];
      if (ch == '\\') {
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (ch == quote) break;
    }
    return make(kind, begin);
  }

  Token punctuation(std::size_t begin) {
    struct Op {
      std::string_view text;
      TokenKind kind;
    };
    // Longest spellings first.
    static constexpr Op kOps[] = {
        {"++", TokenKind::PlusPlus},    {"--", TokenKind::MinusMinus},
        {"+=", TokenKind::PlusAssign},  {"-=", TokenKind::MinusAssign},
        {"*=", TokenKind::StarAssign},  {"/=", TokenKind::SlashAssign},
        {"==", TokenKind::EqualEqual},  {"!=", TokenKind::NotEqual},
        {"<=", TokenKind::LessEqual},   {">=", TokenKind::GreaterEqual},
        {"&&", TokenKind::AndAnd},      {"||", TokenKind::OrOr},
        {"+", TokenKind::Plus},         {"-", TokenKind::Minus},
        {"*", TokenKind::Star},         {"/", TokenKind::Slash},
        {"%", TokenKind::Percent},      {"=", TokenKind::Assign},
        {"<", TokenKind::Less},         {">", TokenKind::Greater},
        {"!", TokenKind::Bang},         {"(", TokenKind::LParen},
        {")", TokenKind::RParen},       {"{", TokenKind::LBrace},
        {"}", TokenKind::RBrace},       {"[", TokenKind::LBracket},
        {"]", TokenKind::RBracket},     {";", TokenKind::Semicolon},
        {",", TokenKind::Comma},        {".", TokenKind::Dot},
    };
    const std::string_view rest = text_.substr(pos_);
    for (const auto& op : kOps) {
      if (rest.substr(0, op.text.size()) == op.text) {
        pos_ += op.text.size();
        return make(op.kind, begin);
      }
    }
    std::string message = "unrecognized character '";
    message += text_[pos_];
    message += '\'';
    throw LexError(begin, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view content) { return Lexer(content).run(); }

}  // namespace scpd::lang
