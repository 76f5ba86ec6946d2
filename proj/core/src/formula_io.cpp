// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <charconv>

#include "ncproof/formula.hpp"

namespace ncproof {

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const FormulaSyntax& syntax)
      : text_(text), syntax_(syntax), line_(syntax.line), column_(syntax.column) {}

  Formula parse_all() {
    skip_space();
    if (pos_ == text_.size()) fail("empty formula");
    Formula f = parse();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input '" + std::string(peek_token()) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view peek_token() const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && text_[end] != '(' &&
           text_[end] != ')') {
      ++end;
    }
    if (end == pos_ && end < text_.size()) ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string_view take_atom() {
    std::string_view tok = peek_token();
    for (std::size_t i = 0; i < tok.size(); ++i) advance();
    return tok;
  }

  Formula parse() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == ')') fail("unexpected ')'");
    if (c != '(') return parse_atom();
    advance();
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char op = text_[pos_];
    if (op != '+' && op != '*') fail("expected '+' or '*' after '('");
    advance();
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(') {
      fail("expected whitespace after operator");
    }
    Formula left = parse();
    Formula right = parse();
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (text_[pos_] != ')') fail("expected ')' after two operands");
    advance();
    return op == '+' ? Formula::plus(std::move(left), std::move(right))
                     : Formula::times(std::move(left), std::move(right));
  }

  Formula parse_atom() {
    std::size_t line = line_;
    std::size_t column = column_;
    std::string_view tok = take_atom();
    if (tok.front() == 'x' || tok.front() == 'X') {
      bool barred = tok.front() == 'X';
      std::string_view digits = tok.substr(1);
      std::uint32_t index = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError("malformed variable '" + std::string(tok) + "'", line, column);
      }
      if (index == 0 || (syntax_.nvars != 0 && index > syntax_.nvars)) {
        throw ParseError("unknown variable '" + std::string(tok) + "'", line, column);
      }
      if (barred && !syntax_.allow_barred) {
        throw ParseError("barred variable '" + std::string(tok) + "' not allowed here", line, column);
      }
      return Formula::variable(VarId{index, barred});
    }
    try {
      return Formula::constant(syntax_.field.parse_scalar(tok));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line, column);
    }
  }

  std::string_view text_;
  const FormulaSyntax& syntax_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += to_string(f.var());
      return;
    case Formula::Kind::Const:
      out += scalar_to_string(f.value());
      return;
    case Formula::Kind::Plus:
    case Formula::Kind::Times:
      out += f.is_plus() ? "(+ " : "(* ";
      print(f.left(), out);
      out += ' ';
      print(f.right(), out);
      out += ')';
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const FormulaSyntax& syntax) {
  return FormulaParser(text, syntax).parse_all();
}

std::string to_string(const Formula& f) {
  std::string out;
  out.reserve(f.size() * 4);
  print(f, out);
  return out;
}

}  // namespace ncproof
