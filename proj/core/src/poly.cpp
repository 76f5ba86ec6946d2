// SPDX-License-Identifier: Apache-2.0
#include "ncproof/poly.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace ncproof {

std::string to_string(VarId v) { return (v.barred ? "X" : "x") + std::to_string(v.index); }

std::string word_to_string(const Letters& letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(letters[i]);
  }
  return out;
}

Order Order::identity(std::uint32_t n) {
  Order o;
  o.positions_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) o.positions_[i] = i + 1;
  return o;
}

Order Order::from_positions(std::vector<std::uint32_t> positions) {
  std::vector<bool> seen(positions.size() + 1, false);
  for (std::uint32_t p : positions) {
    if (p == 0 || p > positions.size() || seen[p]) {
      throw InvalidArgument("order must be a permutation of 1.." + std::to_string(positions.size()));
    }
    seen[p] = true;
  }
  Order o;
  o.positions_ = std::move(positions);
  return o;
}

Order Order::parse(std::string_view text, std::uint32_t n) {
  std::vector<std::uint32_t> values;
  std::size_t i = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (start == i) break;
    std::string_view tok = text.substr(start, i - start);
    if (tok == "default") {
      if (!values.empty()) throw InvalidArgument("malformed order '" + std::string(text) + "'");
      values.clear();
      while (i < text.size() && is_sep(text[i])) ++i;
      if (i != text.size()) throw InvalidArgument("malformed order '" + std::string(text) + "'");
      return identity(n);
    }
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("malformed order entry '" + std::string(tok) + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) return identity(n);
  if (values.size() != n) {
    throw InvalidArgument("order lists " + std::to_string(values.size()) + " positions for " +
                          std::to_string(n) + " variables");
  }
  return from_positions(std::move(values));
}

bool Order::is_identity() const noexcept {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] != i + 1) return false;
  }
  return true;
}

VarId Order::at_position(std::uint32_t pos) const {
  if (pos == 0) throw InvalidArgument("positions are 1-based");
  if (pos > positions_.size()) return VarId::x(pos);
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] == pos) return VarId::x(static_cast<std::uint32_t>(i + 1));
  }
  throw InvalidArgument("position out of range");
}

std::string Order::to_string() const {
  if (is_identity()) return "default";
  std::string out;
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(positions_[i]);
  }
  return out;
}

NCPoly embed(const CPoly& f, const Order& order) {
  NCPoly out(f.field());
  for (const auto& [mono, c] : f.terms()) {
    Word w = mono;
    for (VarId v : w) {
      if (v.barred) throw InvalidArgument("embed: barred variable " + to_string(v));
    }
    std::stable_sort(w.begin(), w.end(), [&](VarId a, VarId b) { return order.less(a, b); });
    out.add_term(std::move(w), c);
  }
  return out;
}

CPoly erase_order(const NCPoly& p) {
  CPoly out(p.field());
  for (const auto& [word, c] : p.terms()) out.add_term(word, c);
  return out;
}

CPoly multilinearize(const CPoly& q) {
  CPoly out(q.field());
  for (const auto& [mono, c] : q.terms()) {
    Monomial m = mono;
    m.erase(std::unique(m.begin(), m.end()), m.end());
    out.add_term(std::move(m), c);
  }
  return out;
}

CPoly tau_substitute(const CPoly& p) {
  const Field& field = p.field();
  CPoly out(field);
  for (const auto& [mono, c] : p.terms()) {
    CPoly term = CPoly::constant(field, c);
    Monomial plain;
    for (VarId v : mono) {
      if (!v.barred) {
        plain.push_back(v);
        continue;
      }
      CPoly complement = CPoly::constant(field, 1) - CPoly::variable(field, VarId::x(v.index));
      term = term * complement;
    }
    term = term * CPoly::term(field, plain, 1);
    out = out + term;
  }
  return out;
}

std::vector<CPoly> substitute_family(std::span<const CPoly> q, std::span<const CPoly> f) {
  std::set<VarId> seen;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (VarId v : variables(f[i])) {
      if (!seen.insert(v).second) {
        throw InvalidArgument("substitute_family: " + to_string(v) + " occurs in more than one f_i");
      }
    }
  }
  std::vector<CPoly> out;
  out.reserve(q.size());
  for (const CPoly& qj : q) {
    const Field& field = qj.field();
    CPoly acc(field);
    for (const auto& [mono, c] : qj.terms()) {
      CPoly term = CPoly::constant(field, c);
      for (VarId v : mono) {
        if (v.barred) throw InvalidArgument("substitute_family: barred variable " + to_string(v));
        if (v.index == 0 || v.index > f.size()) {
          throw InvalidArgument("substitute_family: no substitute for " + to_string(v));
        }
        term = term * f[v.index - 1];
      }
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace ncproof
