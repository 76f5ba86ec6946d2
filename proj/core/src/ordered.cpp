// SPDX-License-Identifier: Apache-2.0
#include "ncproof/ordered.hpp"

namespace ncproof::ordered {

bool is_ordered_poly(const NCPoly& p, const Order& order) {
  for (const auto& [word, c] : p.terms()) {
    for (std::size_t i = 1; i < word.size(); ++i) {
      if (order.less(word[i], word[i - 1])) return false;
    }
  }
  return true;
}

namespace {

struct Span {
  bool any = false;
  VarId min{};
  VarId max{};
};

struct Violation {
  std::string path;
  VarId high;
  VarId low;
};

Span merge(const Span& a, const Span& b, const Order& order) {
  if (!a.any) return b;
  if (!b.any) return a;
  return Span{true, order.less(b.min, a.min) ? b.min : a.min, order.less(a.max, b.max) ? b.max : a.max};
}

// Post-order scan; records the first violating product gate.
Span scan(const Formula& f, const Order& order, std::string& path, std::optional<Violation>& found) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      return Span{true, f.var(), f.var()};
    case Formula::Kind::Const:
      return Span{};
    default:
      break;
  }
  path.push_back('L');
  Span left = scan(f.left(), order, path, found);
  path.back() = 'R';
  Span right = scan(f.right(), order, path, found);
  path.pop_back();
  if (!found && f.is_times() && left.any && right.any && order.less(right.min, left.max)) {
    found = Violation{path, left.max, right.min};
  }
  return merge(left, right, order);
}

std::optional<Violation> find_violation(const Formula& f, const Order& order) {
  std::string path;
  std::optional<Violation> found;
  scan(f, order, path, found);
  return found;
}

bool contains(const Word& w, VarId v) { return std::find(w.begin(), w.end(), v) != w.end(); }

std::optional<Word> longest_word_with(const NCPoly& p, VarId v) {
  std::optional<Word> best;
  for (const auto& [word, c] : p.terms()) {
    if (contains(word, v) && (!best || word.size() > best->size())) best = word;
  }
  return best;
}

std::string path_label(const std::string& path) { return path.empty() ? "." : path; }

}  // namespace

bool is_syntactic_ordered(const Formula& f, const Order& order) { return !find_violation(f, order); }

Word Witness::product_word() const { return WordTraits::multiply(left_word, right_word); }

std::string Witness::describe() const {
  return "product gate at " + path_label(path) + ": " + to_string(high) + " occurs on the left (word " +
         word_to_string(left_word) + "), " + to_string(low) + " occurs on the right (word " +
         word_to_string(right_word) + "), so the product contains " + word_to_string(product_word());
}

Verdict recognize(const Formula& f, const Order& order, const Field& field, const pit::Options& options) {
  const Formula zero = Formula::constant(Scalar(0));
  Formula current = f;
  while (auto violation = find_violation(current, order)) {
    const Formula& gate = subformula(current, violation->path);
    Formula left = gate.left();
    Formula right = gate.right();

    Formula left_zeroed = substitute(left, violation->high, zero);
    if (pit::equal(left, left_zeroed, field, options)) {
      current = replace_at(current, violation->path + "L", left_zeroed);
      continue;
    }
    Formula right_zeroed = substitute(right, violation->low, zero);
    if (pit::equal(right, right_zeroed, field, options)) {
      current = replace_at(current, violation->path + "R", right_zeroed);
      continue;
    }

    auto left_word = longest_word_with(expand(left, field, options.cap), violation->high);
    auto right_word = longest_word_with(expand(right, field, options.cap), violation->low);
    if (!left_word || !right_word) {
      throw Error("identity test and expansion disagree at gate " + path_label(violation->path));
    }
    return Verdict{std::nullopt,
                   Witness{violation->path, violation->high, violation->low, *left_word, *right_word}};
  }
  return Verdict{std::move(current), std::nullopt};
}

namespace {

Span span_of(const Formula& f, const Order& order) {
  if (f.is_var()) return Span{true, f.var(), f.var()};
  if (f.is_const()) return Span{};
  return merge(span_of(f.left(), order), span_of(f.right(), order), order);
}

Formula multiply_rec(const Formula& f, VarId r, const Order& order) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return Formula::times(f, Formula::variable(r));
    case Formula::Kind::Var:
      if (order.less_equal(r, f.var())) return Formula::times(Formula::variable(r), f);
      return Formula::times(f, Formula::variable(r));
    case Formula::Kind::Plus:
      return Formula::plus(multiply_rec(f.left(), r, order), multiply_rec(f.right(), r, order));
    case Formula::Kind::Times: {
      Span right = span_of(f.right(), order);
      if (!right.any || order.less_equal(r, right.min)) {
        return Formula::times(multiply_rec(f.left(), r, order), f.right());
      }
      return Formula::times(f.left(), multiply_rec(f.right(), r, order));
    }
  }
  return f;
}

}  // namespace

Formula multiply_by_var(const Formula& f, VarId r, const Order& order) {
  if (!is_syntactic_ordered(f, order)) {
    throw InvalidArgument("multiply_by_var needs a syntactic ordered formula");
  }
  return multiply_rec(f, r, order);
}

Formula product_of(const std::vector<Formula>& factors) {
  if (factors.empty()) return Formula::constant(Scalar(1));
  Formula acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = Formula::times(factors[i], acc);
  return acc;
}

Formula ordered_sum_of_monomials(const CPoly& p, const Order& order) {
  std::optional<Formula> sum;
  for (const auto& [monomial, c] : p.terms()) {
    Letters letters = monomial;
    std::stable_sort(letters.begin(), letters.end(), [&](VarId a, VarId b) { return order.less(a, b); });
    std::vector<Formula> factors;
    factors.reserve(letters.size());
    for (VarId v : letters) factors.push_back(Formula::variable(v));
    Formula term = letters.empty() ? Formula::constant(c) : product_of(factors);
    if (!letters.empty() && c != 1) term = Formula::scaled(c, term);
    sum = sum ? Formula::plus(*sum, term) : term;
  }
  return sum ? *sum : Formula::constant(Scalar(0));
}

}  // namespace ncproof::ordered
