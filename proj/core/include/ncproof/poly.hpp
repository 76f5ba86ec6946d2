// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncproof/error.hpp"
#include "ncproof/field.hpp"

namespace ncproof {

/// Names x_i, or the complement variable x̄_i when `barred` is set (PCR only).
struct VarId {
  std::uint32_t index = 0;
  bool barred = false;

  static constexpr VarId x(std::uint32_t i) { return VarId{i, false}; }
  static constexpr VarId bar(std::uint32_t i) { return VarId{i, true}; }

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

/// "x3" or "X3".
std::string to_string(VarId v);

using Letters = std::vector<VarId>;
/// Noncommutative monomial; letter order is significant.
using Word = Letters;
/// Commutative monomial, kept sorted with multiplicity.
using Monomial = Letters;

/// Shorter sequences first, then letterwise. Gives every container of words
/// a reproducible iteration order.
struct ShortLex {
  bool operator()(const Letters& a, const Letters& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string word_to_string(const Letters& letters);

struct WordTraits {
  static void normalize(Letters&) {}
  static Letters multiply(const Letters& a, const Letters& b) {
    Letters out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }
};

struct MonomialTraits {
  static void normalize(Letters& m) { std::sort(m.begin(), m.end()); }
  static Letters multiply(const Letters& a, const Letters& b) {
    Letters out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
};

/// Sparse polynomial in canonical form: one entry per key, no zero
/// coefficients, every coefficient reduced into `field()`.
template <class Traits>
class Polynomial {
 public:
  using Key = Letters;
  using Terms = std::map<Key, Scalar, ShortLex>;

  Polynomial() = default;
  explicit Polynomial(Field field) : field_(field) {}

  static Polynomial constant(const Field& field, const Scalar& c) {
    Polynomial p(field);
    p.add_term({}, c);
    return p;
  }
  static Polynomial variable(const Field& field, VarId v) {
    Polynomial p(field);
    p.add_term({v}, Scalar(1));
    return p;
  }
  static Polynomial term(const Field& field, Key key, const Scalar& c) {
    Polynomial p(field);
    p.add_term(std::move(key), c);
    return p;
  }

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.size());
  }

  bool is_homogeneous() const noexcept {
    return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
  }

  bool is_constant() const noexcept { return degree() <= 0; }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Accumulates c·key, dropping the entry if it cancels.
  void add_term(Key key, const Scalar& c) {
    Traits::normalize(key);
    Scalar value = field_.reduce(c);
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), value);
    if (!inserted) {
      it->second = field_.add(it->second, value);
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// a·p + b·q.
  static Polynomial combine(const Polynomial& p, const Polynomial& q, const Scalar& a, const Scalar& b) {
    if (!(p.field_ == q.field_)) throw FieldMismatch();
    Polynomial out(p.field_);
    if (p.field_.reduce(a) != 0) {
      for (const auto& [key, c] : p.terms_) out.add_term(key, a * c);
    }
    if (q.field_.reduce(b) != 0) {
      for (const auto& [key, c] : q.terms_) out.add_term(key, b * c);
    }
    return out;
  }

  /// Throws CapExceeded as soon as the partial product holds more than
  /// `cap` terms.
  static Polynomial product(const Polynomial& p, const Polynomial& q,
                            std::size_t cap = std::numeric_limits<std::size_t>::max()) {
    if (!(p.field_ == q.field_)) throw FieldMismatch();
    Polynomial out(p.field_);
    for (const auto& [kp, cp] : p.terms_) {
      for (const auto& [kq, cq] : q.terms_) {
        out.add_term(Traits::multiply(kp, kq), cp * cq);
        if (out.size() > cap) throw CapExceeded(cap);
      }
    }
    return out;
  }

  Polynomial scaled(const Scalar& a) const { return combine(*this, *this, a, Scalar(0)); }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) { return combine(p, q, 1, 1); }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return combine(p, q, 1, -1); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) { return product(p, q); }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.field_ == q.field_ && p.terms_ == q.terms_;
  }

 private:
  Field field_;
  Terms terms_;
};

/// Element of F<x_1, ..., x_n>.
using NCPoly = Polynomial<WordTraits>;
/// Element of F[x_1, ..., x_n, x̄_1, ..., x̄_n].
using CPoly = Polynomial<MonomialTraits>;

inline NCPoly nc_add(const NCPoly& p, const NCPoly& q, const Scalar& a, const Scalar& b) {
  return NCPoly::combine(p, q, a, b);
}
inline NCPoly nc_mul(const NCPoly& p, const NCPoly& q) { return NCPoly::product(p, q); }

/// One `coeff : word` entry per line in canonical order; "0" for the zero
/// polynomial. The empty word prints as "1".
template <class Traits>
std::string to_listing(const Polynomial<Traits>& p) {
  if (p.is_zero()) return "0\n";
  std::string out;
  for (const auto& [key, c] : p.terms()) {
    out += scalar_to_string(c) + " : " + word_to_string(key) + "\n";
  }
  return out;
}

/// Human-readable infix rendering, e.g. "x1*x2 - 1/2*x3 + 1".
template <class Traits>
std::string to_infix(const Polynomial<Traits>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    Scalar mag = c;
    bool negative = c < 0;
    if (negative) mag = -c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (key.empty()) {
      out += scalar_to_string(mag);
      continue;
    }
    if (mag != 1) out += scalar_to_string(mag) + "*";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0) out += "*";
      out += to_string(key[i]);
    }
  }
  return out;
}

/// A linear order ≼ on variables, stored as the position of each x_i.
/// Variables beyond size() sit after all ordered ones in index order, so an
/// order on x_1..x_n extends to x_1..x_m (m > n) without changing the prefix.
class Order {
 public:
  Order() = default;

  static Order identity(std::uint32_t n);
  /// `positions[i-1]` is the 1-based position of x_i; must be a permutation.
  static Order from_positions(std::vector<std::uint32_t> positions);
  /// "default" or a whitespace/comma separated permutation of 1..n.
  static Order parse(std::string_view text, std::uint32_t n);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(positions_.size()); }
  const std::vector<std::uint32_t>& positions() const noexcept { return positions_; }
  bool is_identity() const noexcept;

  std::uint32_t position(VarId v) const noexcept {
    return v.index >= 1 && v.index <= positions_.size() ? positions_[v.index - 1] : v.index;
  }
  /// Unbarred variable at the given 1-based position.
  VarId at_position(std::uint32_t pos) const;

  /// Strict ≺ on variables; a barred letter follows its unbarred twin.
  bool less(VarId a, VarId b) const noexcept {
    auto pa = position(a);
    auto pb = position(b);
    return pa != pb ? pa < pb : (a.barred != b.barred ? b.barred : false);
  }
  bool less_equal(VarId a, VarId b) const noexcept { return !less(b, a); }

  /// "default" for the identity, else the positions separated by spaces.
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> positions_;
};

/// ⟦f⟧: each commutative monomial becomes its ≼-sorted word.
/// Throws InvalidArgument on barred variables.
NCPoly embed(const CPoly& f, const Order& order);

/// Commutative image: forgets the letter order of every word.
CPoly erase_order(const NCPoly& p);

/// Collapses every exponent ≥ 1 to 1 (reduction modulo x_i^2 - x_i).
CPoly multilinearize(const CPoly& q);

/// τ: x̄_i ↦ 1 - x_i, fully expanded.
CPoly tau_substitute(const CPoly& p);

/// Q_j(f_1, ..., f_n) for every j, with x_i ↦ f[i-1]. The f_i must use
/// pairwise disjoint variable sets; Q must be free of barred variables.
std::vector<CPoly> substitute_family(std::span<const CPoly> q, std::span<const CPoly> f);

/// Evaluates at a point; `value_of` receives each variable.
template <class Traits, class ValueOf>
Scalar evaluate(const Polynomial<Traits>& p, ValueOf&& value_of) {
  const Field& field = p.field();
  Scalar acc(0);
  for (const auto& [key, c] : p.terms()) {
    Scalar t = c;
    for (VarId v : key) {
      t = field.mul(t, value_of(v));
      if (t == 0) break;
    }
    acc = field.add(acc, t);
  }
  return acc;
}

/// Variables occurring in p, sorted.
template <class Traits>
std::vector<VarId> variables(const Polynomial<Traits>& p) {
  std::vector<VarId> out;
  for (const auto& [key, c] : p.terms()) out.insert(out.end(), key.begin(), key.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ncproof
