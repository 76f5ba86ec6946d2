// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <charconv>

#include "ncproof/proof.hpp"

namespace ncproof {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class ProofReader {
 public:
  explicit ProofReader(std::string_view text) : text_(text) {}

  Proof read() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      handle(text_.substr(start, end - start));
      start = end + 1;
    }
    finish_header(1);
    return std::move(proof_);
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw ParseError(message, line_no_, column);
  }

  std::size_t column_of(std::string_view raw, std::string_view part) const {
    return static_cast<std::size_t>(part.data() - raw.data()) + 1;
  }

  void handle(std::string_view raw) {
    std::string_view content = raw.substr(0, raw.find('#'));
    std::string_view body = trim(content);
    if (body.empty()) return;
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) fail("expected 'key: value'", column_of(raw, body));
    std::string_view key = trim(body.substr(0, colon));
    std::string_view value = trim(body.substr(colon + 1));
    std::size_t value_column = value.empty() ? column_of(raw, body) + colon + 1 : column_of(raw, value);

    if (key.starts_with("input") || key.starts_with("line")) {
      bool is_input = key.starts_with("input");
      std::string_view number = trim(key.substr(is_input ? 5 : 4));
      std::size_t index = 0;
      auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), index);
      if (number.empty() || ec != std::errc() || ptr != number.data() + number.size()) {
        fail("malformed " + std::string(is_input ? "input" : "line") + " number", column_of(raw, body));
      }
      finish_header(column_of(raw, body));
      if (is_input) {
        read_input(raw, index, value, value_column);
      } else {
        read_line(raw, index, value, value_column);
      }
      return;
    }

    if (header_done_) fail("header entry '" + std::string(key) + "' after inputs or lines", column_of(raw, body));
    try {
      if (key == "system") {
        proof_.system = parse_system(value);
        have_system_ = true;
      } else if (key == "field") {
        proof_.field = Field::parse(value);
        have_field_ = true;
      } else if (key == "vars") {
        std::uint32_t n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
          throw InvalidArgument("malformed variable count '" + std::string(value) + "'");
        }
        proof_.nvars = n;
        have_vars_ = true;
      } else if (key == "order") {
        order_text_ = std::string(value);
        order_line_ = line_no_;
        order_column_ = value_column;
      } else {
        fail("unknown header key '" + std::string(key) + "'", column_of(raw, body));
      }
    } catch (const InvalidArgument& e) {
      fail(e.what(), value_column);
    }
  }

  void finish_header(std::size_t column) {
    if (header_done_) return;
    header_done_ = true;
    if (!have_system_) fail("missing 'system:' header", column);
    if (!have_field_) fail("missing 'field:' header", column);
    if (!have_vars_) fail("missing 'vars:' header", column);
    try {
      proof_.order = Order::parse(order_text_, proof_.nvars);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), order_line_, order_column_);
    }
  }

  FormulaSyntax syntax(std::size_t column) const {
    FormulaSyntax s;
    s.field = proof_.field;
    s.nvars = proof_.nvars;
    s.allow_barred = proof_.system == ProofSystem::PCR;
    s.line = line_no_;
    s.column = column;
    return s;
  }

  void read_input(std::string_view, std::size_t index, std::string_view value, std::size_t column) {
    if (!proof_.lines.empty()) fail("inputs must precede proof lines", 1);
    if (index != proof_.inputs.size() + 1) {
      fail("expected input " + std::to_string(proof_.inputs.size() + 1), 1);
    }
    proof_.inputs.push_back(parse_formula(value, syntax(column)));
  }

  void read_line(std::string_view raw, std::size_t index, std::string_view value, std::size_t column) {
    if (index != proof_.lines.size() + 1) fail("expected line " + std::to_string(proof_.lines.size() + 1), 1);
    std::size_t semi = value.find(';');
    if (semi == std::string_view::npos) fail("missing ';' before the justification", column + value.size());
    std::string_view formula_text = trim(value.substr(0, semi));
    std::string_view just_text = trim(value.substr(semi + 1));
    Formula f = parse_formula(formula_text, syntax(formula_text.empty() ? column : column_of(raw, formula_text)));
    std::size_t just_column = just_text.empty() ? column + semi + 1 : column_of(raw, just_text);
    try {
      Justification j = parse_justification(just_text);
      if (auto* add = std::get_if<just::Add>(&j)) {
        add->a = proof_.field.reduce(add->a);
        add->b = proof_.field.reduce(add->b);
      }
      proof_.lines.push_back(ProofLine{std::move(f), std::move(j)});
    } catch (const InvalidArgument& e) {
      fail(e.what(), just_column);
    }
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  Proof proof_;
  bool header_done_ = false;
  bool have_system_ = false;
  bool have_field_ = false;
  bool have_vars_ = false;
  std::string order_text_ = "default";
  std::size_t order_line_ = 0;
  std::size_t order_column_ = 0;
};

}  // namespace

Proof parse_proof(std::string_view text) { return ProofReader(text).read(); }

std::string to_string(const Proof& proof) {
  std::string out;
  out += "system: " + std::string(to_string(proof.system)) + "\n";
  out += "field: " + proof.field.to_string() + "\n";
  out += "vars: " + std::to_string(proof.nvars) + "\n";
  out += "order: " + proof.order.to_string() + "\n";
  for (std::size_t i = 0; i < proof.inputs.size(); ++i) {
    out += "input " + std::to_string(i + 1) + ": " + to_string(proof.inputs[i]) + "\n";
  }
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    out += "line " + std::to_string(i + 1) + ": " + to_string(proof.lines[i].formula) + " ; " +
           to_string(proof.lines[i].justification) + "\n";
  }
  return out;
}

}  // namespace ncproof
