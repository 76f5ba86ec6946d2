// SPDX-License-Identifier: Apache-2.0
#include "ncproof/formula.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

namespace ncproof {

Formula Formula::variable(VarId v) {
  if (v.index == 0) throw InvalidArgument("variable indices start at 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->var = v;
  node->degree = 1;
  node->has_vars = true;
  return Formula(std::move(node));
}

Formula Formula::constant(Scalar c) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Const;
  node->value = std::move(c);
  return Formula(std::move(node));
}

Formula Formula::plus(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Plus;
  node->size = 1 + left.size() + right.size();
  node->depth = 1 + std::max(left.depth(), right.depth());
  node->degree = std::max(left.syntactic_degree(), right.syntactic_degree());
  node->has_vars = left.has_variables() || right.has_variables();
  node->children = {std::move(left), std::move(right)};
  return Formula(std::move(node));
}

Formula Formula::times(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Times;
  node->size = 1 + left.size() + right.size();
  node->depth = 1 + std::max(left.depth(), right.depth());
  node->degree = left.syntactic_degree() + right.syntactic_degree();
  node->has_vars = left.has_variables() || right.has_variables();
  node->children = {std::move(left), std::move(right)};
  return Formula(std::move(node));
}

Formula Formula::difference(Formula a, Formula b) {
  return plus(std::move(a), times(constant(Scalar(-1)), std::move(b)));
}

Formula Formula::scaled(Scalar c, Formula f) { return times(constant(std::move(c)), std::move(f)); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Formula::Kind::Var:
      return a.var() == b.var();
    case Formula::Kind::Const:
      return a.value() == b.value();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

std::size_t dag_size(const Formula& f) {
  std::unordered_set<const void*> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.insert(g->id()).second) continue;
    if (!g->is_leaf()) {
      stack.push_back(&g->left());
      stack.push_back(&g->right());
    }
  }
  return seen.size();
}

namespace {

void collect_vars(const Formula& f, std::vector<VarId>& out) {
  if (!f.has_variables()) return;
  if (f.is_var()) {
    out.push_back(f.var());
    return;
  }
  collect_vars(f.left(), out);
  collect_vars(f.right(), out);
}

}  // namespace

std::vector<VarId> variables(const Formula& f) {
  std::vector<VarId> out;
  collect_vars(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_occurrences(const Formula& f, VarId v) {
  std::vector<VarId> all;
  collect_vars(f, all);
  return static_cast<std::size_t>(std::count(all.begin(), all.end(), v));
}

const Formula& subformula(const Formula& f, std::string_view path) {
  const Formula* cur = &f;
  for (char step : path) {
    if (cur->is_leaf() || (step != 'L' && step != 'R')) {
      throw InvalidArgument("path '" + std::string(path) + "' does not address a subformula");
    }
    cur = step == 'L' ? &cur->left() : &cur->right();
  }
  return *cur;
}

Formula replace_at(const Formula& f, std::string_view path, const Formula& g) {
  if (path.empty()) return g;
  if (f.is_leaf() || (path.front() != 'L' && path.front() != 'R')) {
    throw InvalidArgument("path does not address a subformula");
  }
  bool go_left = path.front() == 'L';
  Formula l = go_left ? replace_at(f.left(), path.substr(1), g) : f.left();
  Formula r = go_left ? f.right() : replace_at(f.right(), path.substr(1), g);
  return f.is_plus() ? Formula::plus(std::move(l), std::move(r)) : Formula::times(std::move(l), std::move(r));
}

Formula substitute(const Formula& f, VarId v, const Formula& g) {
  if (!f.has_variables()) return f;
  if (f.is_var()) return f.var() == v ? g : f;
  Formula l = substitute(f.left(), v, g);
  Formula r = substitute(f.right(), v, g);
  if (l.id() == f.left().id() && r.id() == f.right().id()) return f;
  return f.is_plus() ? Formula::plus(std::move(l), std::move(r)) : Formula::times(std::move(l), std::move(r));
}

namespace {

void find_paths(const Formula& f, VarId v, std::string& path, std::vector<std::string>& out) {
  if (!f.has_variables()) return;
  if (f.is_var()) {
    if (f.var() == v) out.push_back(path);
    return;
  }
  path.push_back('L');
  find_paths(f.left(), v, path, out);
  path.back() = 'R';
  find_paths(f.right(), v, path, out);
  path.pop_back();
}

}  // namespace

std::string path_to_unique(const Formula& f, VarId v) {
  std::vector<std::string> paths;
  std::string scratch;
  find_paths(f, v, scratch, paths);
  if (paths.empty()) throw InvalidArgument(to_string(v) + " does not occur in the context");
  if (paths.size() > 1) throw InvalidArgument(to_string(v) + " occurs more than once in the context");
  return paths.front();
}

const NCPoly& Expander::operator()(const Formula& f) {
  if (auto it = cache_.find(f.id()); it != cache_.end()) return it->second;
  NCPoly result(field_);
  switch (f.kind()) {
    case Formula::Kind::Var:
      result = NCPoly::variable(field_, f.var());
      break;
    case Formula::Kind::Const:
      result = NCPoly::constant(field_, f.value());
      break;
    case Formula::Kind::Plus: {
      const NCPoly& l = (*this)(f.left());
      const NCPoly& r = (*this)(f.right());
      result = l + r;
      break;
    }
    case Formula::Kind::Times: {
      const NCPoly& l = (*this)(f.left());
      const NCPoly& r = (*this)(f.right());
      result = NCPoly::product(l, r, cap_);
      break;
    }
  }
  if (result.size() > cap_) throw CapExceeded(cap_);
  pinned_.push_back(f);
  return cache_.emplace(f.id(), std::move(result)).first->second;
}

NCPoly expand(const Formula& f, const Field& field, std::size_t cap) {
  Expander expander(field, cap);
  return expander(f);
}

Scalar evaluate(const Formula& f, const Field& field, const std::function<Scalar(VarId)>& value_of) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      return field.reduce(value_of(f.var()));
    case Formula::Kind::Const:
      return field.reduce(f.value());
    case Formula::Kind::Plus:
      return field.add(evaluate(f.left(), field, value_of), evaluate(f.right(), field, value_of));
    case Formula::Kind::Times: {
      Scalar l = evaluate(f.left(), field, value_of);
      if (l == 0) return l;
      return field.mul(l, evaluate(f.right(), field, value_of));
    }
  }
  return Scalar(0);
}

namespace {

using ComponentTable = std::vector<std::optional<Formula>>;

class Homogenizer {
 public:
  Homogenizer(std::size_t k, const Field& field) : k_(k), field_(field) {}

  const ComponentTable& operator()(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    ComponentTable table(k_ + 1);
    switch (f.kind()) {
      case Formula::Kind::Var:
        if (k_ >= 1) table[1] = f;
        break;
      case Formula::Kind::Const:
        if (field_.reduce(f.value()) != 0) table[0] = f;
        break;
      case Formula::Kind::Plus: {
        const ComponentTable& l = (*this)(f.left());
        const ComponentTable& r = (*this)(f.right());
        for (std::size_t j = 0; j <= k_; ++j) table[j] = sum(l[j], r[j]);
        break;
      }
      case Formula::Kind::Times: {
        const ComponentTable& l = (*this)(f.left());
        const ComponentTable& r = (*this)(f.right());
        for (std::size_t j = 0; j <= k_; ++j) {
          std::optional<Formula> acc;
          for (std::size_t a = 0; a <= j; ++a) {
            if (l[a] && r[j - a]) acc = sum(acc, Formula::times(*l[a], *r[j - a]));
          }
          table[j] = std::move(acc);
        }
        break;
      }
    }
    pinned_.push_back(f);
    return memo_.emplace(f.id(), std::move(table)).first->second;
  }

 private:
  static std::optional<Formula> sum(const std::optional<Formula>& a, const std::optional<Formula>& b) {
    if (!a) return b;
    if (!b) return a;
    return Formula::plus(*a, *b);
  }

  std::size_t k_;
  Field field_;
  std::unordered_map<const void*, ComponentTable> memo_;
  std::vector<Formula> pinned_;
};

}  // namespace

Formula homogeneous_component(const Formula& f, std::size_t k, const Field& field) {
  Homogenizer homogenizer(k, field);
  const auto& table = homogenizer(f);
  return table[k] ? *table[k] : Formula::constant(Scalar(0));
}

}  // namespace ncproof
