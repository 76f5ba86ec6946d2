// SPDX-License-Identifier: Apache-2.0
#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace gen {

using ncproof::Formula;
using ncproof::Order;
using ncproof::Scalar;
using ncproof::VarId;

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Formula small_constant(Rng& rng) {
  return Formula::constant(Scalar(static_cast<long>(uniform(rng, 0, 6)) - 2));
}

// Odd sizes for the two children of a binary gate with `nodes` nodes.
std::pair<std::size_t, std::size_t> split(Rng& rng, std::size_t nodes) {
  std::size_t left = 2 * uniform(rng, 0, (nodes - 3) / 2) + 1;
  return {left, nodes - 1 - left};
}

std::size_t odd(std::size_t n) { return n % 2 == 0 ? std::max<std::size_t>(1, n - 1) : n; }

bool mentions_range(const oracle::Expansion& e, const Order& order, std::uint32_t lo, std::uint32_t hi) {
  for (const auto& [w, c] : e) {
    for (auto l : w) {
      auto pos = order.position(VarId::x(static_cast<std::uint32_t>(l)));
      if (pos >= lo && pos <= hi) return true;
    }
  }
  return false;
}

void collect_paths(const Formula& f, std::string& path, std::vector<std::string>& out) {
  out.push_back(path);
  if (f.is_leaf()) return;
  path.push_back('L');
  collect_paths(f.left(), path, out);
  path.back() = 'R';
  collect_paths(f.right(), path, out);
  path.pop_back();
}

Formula rewrite_node(Rng& rng, const Formula& g) {
  switch (uniform(rng, 0, 5)) {
    case 0:
      if (g.is_plus()) return Formula::plus(g.right(), g.left());
      break;
    case 1:
      if (g.is_plus() && g.right().is_plus()) {
        return Formula::plus(Formula::plus(g.left(), g.right().left()), g.right().right());
      }
      if (g.is_times() && g.right().is_times()) {
        return Formula::times(Formula::times(g.left(), g.right().left()), g.right().right());
      }
      break;
    case 2:
      if (g.is_times() && g.right().is_plus()) {
        return Formula::plus(Formula::times(g.left(), g.right().left()), Formula::times(g.left(), g.right().right()));
      }
      if (g.is_times() && g.left().is_plus()) {
        return Formula::plus(Formula::times(g.left().left(), g.right()), Formula::times(g.left().right(), g.right()));
      }
      break;
    case 3:
      if (g.is_plus() && g.left().is_plus()) {
        return Formula::plus(g.left().left(), Formula::plus(g.left().right(), g.right()));
      }
      break;
    case 4:
      return Formula::plus(g, Formula::times(Formula::constant(0), g));
    default:
      break;
  }
  return Formula::times(Formula::constant(1), g);
}

}  // namespace

Formula formula(Rng& rng, std::size_t nodes, std::uint32_t nvars) {
  nodes = odd(nodes);
  if (nodes == 1) {
    if (coin(rng, 0.75)) return Formula::variable(VarId::x(static_cast<std::uint32_t>(uniform(rng, 1, nvars))));
    return small_constant(rng);
  }
  auto [l, r] = split(rng, nodes);
  Formula a = formula(rng, l, nvars);
  Formula b = formula(rng, r, nvars);
  return coin(rng, 0.5) ? Formula::plus(a, b) : Formula::times(a, b);
}

Formula nonconstant_formula(Rng& rng, std::size_t max_nodes, std::uint32_t nvars) {
  for (;;) {
    Formula f = formula(rng, uniform(rng, 1, max_nodes), nvars);
    auto e = oracle::expand_words(f);
    if (std::any_of(e.begin(), e.end(), [](const auto& t) { return !t.first.empty(); })) return f;
  }
}

Formula ordered_formula(Rng& rng, std::size_t nodes, const Order& order, std::uint32_t lo, std::uint32_t hi) {
  nodes = odd(nodes);
  if (nodes == 1) {
    if (coin(rng, 0.8)) return Formula::variable(order.at_position(static_cast<std::uint32_t>(uniform(rng, lo, hi))));
    return small_constant(rng);
  }
  auto [l, r] = split(rng, nodes);
  if (coin(rng, 0.5)) {
    return Formula::plus(ordered_formula(rng, l, order, lo, hi), ordered_formula(rng, r, order, lo, hi));
  }
  if (coin(rng, 0.15)) {
    // A variable-free side never constrains the order.
    auto constant_side = [&](std::size_t n) {
      Formula k = small_constant(rng);
      for (std::size_t i = 1; i < n; i += 2) k = Formula::plus(k, small_constant(rng));
      return k;
    };
    if (coin(rng, 0.5)) return Formula::times(constant_side(l), ordered_formula(rng, r, order, lo, hi));
    return Formula::times(ordered_formula(rng, l, order, lo, hi), constant_side(r));
  }
  auto mid = static_cast<std::uint32_t>(uniform(rng, lo, hi));
  return Formula::times(ordered_formula(rng, l, order, lo, mid), ordered_formula(rng, r, order, mid, hi));
}

Formula ordered_nonconstant(Rng& rng, std::size_t nodes, const Order& order, std::uint32_t lo, std::uint32_t hi) {
  for (;;) {
    Formula f = ordered_formula(rng, uniform(rng, 1, std::max<std::size_t>(nodes, 1)), order, lo, hi);
    if (mentions_range(oracle::expand_words(f), order, lo, hi)) return f;
  }
}

Formula order_violation(Rng& rng, std::size_t nodes, const Order& order) {
  const std::uint32_t n = order.size();
  auto m = static_cast<std::uint32_t>(uniform(rng, 1, n - 1));
  std::size_t part = std::max<std::size_t>(nodes / 4, 1);
  Formula core = Formula::times(ordered_nonconstant(rng, part, order, m + 1, n),
                                ordered_nonconstant(rng, part, order, 1, m));
  const auto wraps = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < wraps; ++i) {
    // Sums with ordered formulas cannot cancel a descending word, and the
    // free algebra has no zero divisors.
    switch (uniform(rng, 0, 3)) {
      case 0:
        core = Formula::plus(ordered_formula(rng, part, order, 1, n), core);
        break;
      case 1:
        core = Formula::plus(core, ordered_formula(rng, part, order, 1, n));
        break;
      case 2:
        core = Formula::times(ordered_nonconstant(rng, part, order, 1, n), core);
        break;
      default:
        core = Formula::times(core, ordered_nonconstant(rng, part, order, 1, n));
        break;
    }
  }
  return core;
}

Formula equivalent_variant(Rng& rng, const Formula& f, int steps) {
  Formula g = f;
  for (int s = 0; s < steps; ++s) {
    std::vector<std::string> paths;
    std::string path;
    collect_paths(g, path, paths);
    const std::string& at = paths[uniform(rng, 0, paths.size() - 1)];
    g = ncproof::replace_at(g, at, rewrite_node(rng, ncproof::subformula(g, at)));
  }
  return g;
}

ncproof::CPoly cpoly(Rng& rng, const ncproof::Field& field, std::uint32_t nvars, std::size_t terms,
                     std::size_t max_degree) {
  ncproof::CPoly p(field);
  const std::size_t count = uniform(rng, 0, terms);
  for (std::size_t t = 0; t < count; ++t) {
    ncproof::Monomial m;
    const std::size_t deg = uniform(rng, 0, max_degree);
    for (std::size_t i = 0; i < deg; ++i) m.push_back(VarId::x(static_cast<std::uint32_t>(uniform(rng, 1, nvars))));
    p.add_term(std::move(m), Scalar(static_cast<long>(uniform(rng, 1, 9)) - 5));
  }
  return p;
}

Order random_order(Rng& rng, std::uint32_t n) {
  std::vector<std::uint32_t> positions(n);
  std::iota(positions.begin(), positions.end(), 1U);
  std::shuffle(positions.begin(), positions.end(), rng);
  return Order::from_positions(positions);
}

}  // namespace gen
