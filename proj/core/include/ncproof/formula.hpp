// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncproof/field.hpp"
#include "ncproof/poly.hpp"

namespace ncproof {

inline constexpr std::size_t kDefaultExpandCap = 1'000'000;

/// Immutable binary formula tree with ordered children. Copies share nodes,
/// so building large formulas out of existing subformulas is cheap; all
/// size measures still count the tree, not the shared DAG.
class Formula {
 public:
  enum class Kind : std::uint8_t { Var, Const, Plus, Times };

  static Formula variable(VarId v);
  static Formula constant(Scalar c);
  static Formula plus(Formula left, Formula right);
  static Formula times(Formula left, Formula right);

  /// a + (-1)·b
  static Formula difference(Formula a, Formula b);
  /// c·f
  static Formula scaled(Scalar c, Formula f);

  Kind kind() const noexcept { return node_->kind; }
  bool is_leaf() const noexcept { return kind() == Kind::Var || kind() == Kind::Const; }
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_const() const noexcept { return kind() == Kind::Const; }
  bool is_plus() const noexcept { return kind() == Kind::Plus; }
  bool is_times() const noexcept { return kind() == Kind::Times; }

  VarId var() const noexcept { return node_->var; }
  const Scalar& value() const noexcept { return node_->value; }
  const Formula& left() const noexcept { return node_->children[0]; }
  const Formula& right() const noexcept { return node_->children[1]; }

  /// Node count, leaves included.
  std::size_t size() const noexcept { return node_->size; }
  /// Edges on the longest root-leaf path.
  std::size_t depth() const noexcept { return node_->depth; }
  /// Leaf variables count 1, constants 0, plus takes the max, times the sum.
  std::size_t syntactic_degree() const noexcept { return node_->degree; }
  bool has_variables() const noexcept { return node_->has_vars; }

  /// Address of the underlying node; equal ids imply equal formulas.
  const void* id() const noexcept { return node_.get(); }

  /// Structural equality (constants compared by value).
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind = Kind::Const;
    VarId var{};
    Scalar value;
    std::vector<Formula> children;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t degree = 0;
    bool has_vars = false;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Number of distinct nodes reachable from the root (shared subtrees once).
std::size_t dag_size(const Formula& f);

/// Sorted distinct variables occurring as leaves.
std::vector<VarId> variables(const Formula& f);
std::size_t count_occurrences(const Formula& f, VarId v);

/// Subformula at a path over {L, R} from the root ("" is the root).
/// Throws InvalidArgument for paths that leave the tree.
const Formula& subformula(const Formula& f, std::string_view path);
/// f with the subtree at `path` replaced by `g`.
Formula replace_at(const Formula& f, std::string_view path, const Formula& g);
/// Replaces every leaf labelled v.
Formula substitute(const Formula& f, VarId v, const Formula& g);
/// Path to the unique leaf labelled v. Throws if v is absent or repeated.
std::string path_to_unique(const Formula& f, VarId v);

/// Expansion to the computed noncommutative polynomial. Subformulas shared
/// between calls are expanded once.
class Expander {
 public:
  explicit Expander(Field field, std::size_t cap = kDefaultExpandCap) : field_(field), cap_(cap) {}

  /// Throws CapExceeded when an intermediate result exceeds the cap.
  const NCPoly& operator()(const Formula& f);

  const Field& field() const noexcept { return field_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  Field field_;
  std::size_t cap_;
  std::unordered_map<const void*, NCPoly> cache_;
  std::vector<Formula> pinned_;
};

NCPoly expand(const Formula& f, const Field& field, std::size_t cap = kDefaultExpandCap);

/// Commutative value at a point.
Scalar evaluate(const Formula& f, const Field& field, const std::function<Scalar(VarId)>& value_of);

/// Formula computing the degree-k homogeneous part of f; Const 0 when that
/// part is empty. Every original gate becomes a table of per-degree
/// components, so the result shares structure and its DAG size is at most
/// dag_size(f)·(k+1)^2.
Formula homogeneous_component(const Formula& f, std::size_t k, const Field& field);

struct FormulaSyntax {
  Field field;
  /// Largest admissible variable index; 0 accepts any positive index.
  std::uint32_t nvars = 0;
  bool allow_barred = true;
  /// Location of the first character, for diagnostics inside larger files.
  std::size_t line = 1;
  std::size_t column = 1;
};

/// S-expression grammar:
///   formula := var | const | "(" "+" formula formula ")" | "(" "*" formula formula ")"
///   var     := "x" int | "X" int
///   const   := int | int "/" posint
/// Throws ParseError with a line and column.
Formula parse_formula(std::string_view text, const FormulaSyntax& syntax = {});

std::string to_string(const Formula& f);

}  // namespace ncproof
