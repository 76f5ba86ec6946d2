// SPDX-License-Identifier: Apache-2.0
#include "ncproof/instances.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ncproof/ordered.hpp"

namespace ncproof::instances {

Proof Instance::axiom_file(ProofSystem system) const {
  Proof proof;
  proof.system = system;
  proof.field = field;
  proof.nvars = nvars;
  proof.order = Order::identity(nvars);
  proof.inputs = formulas;
  return proof;
}

namespace {

CPoly var(const Field& field, std::uint32_t i) { return CPoly::variable(field, VarId::x(i)); }
CPoly constant(const Field& field, std::int64_t c) { return CPoly::constant(field, Scalar(static_cast<long>(c))); }

Formula fvar(std::uint32_t i) { return Formula::variable(VarId::x(i)); }

Formula one_minus(const Formula& f) {
  return Formula::plus(Formula::constant(Scalar(1)), Formula::scaled(Scalar(-1), f));
}

void add(Instance& inst, CPoly p, Formula f) {
  inst.axioms.push_back(std::move(p));
  inst.formulas.push_back(std::move(f));
}

void add(Instance& inst, CPoly p) {
  Formula f = ordered::ordered_sum_of_monomials(p, Order::identity(inst.nvars));
  add(inst, std::move(p), std::move(f));
}

Instance fphp_common(std::uint32_t m, std::uint32_t n, const Field& field, bool lowdeg) {
  if (n < 1 || m <= n) throw InvalidArgument("pigeonhole instances need m > n >= 1");
  Instance inst;
  inst.field = field;
  inst.nvars = m * n;
  inst.notes.push_back(std::string(lowdeg ? "fphp-lowdeg " : "fphp ") + std::to_string(m) + " " + std::to_string(n) +
                       ": x_{i,k} is x" + "((i-1)*" + std::to_string(n) + "+k)");
  inst.notes.push_back("axioms: pigeon " + std::to_string(m) + ", functional " + std::to_string(m * n * (n - 1) / 2) +
                       ", hole " + std::to_string(m * (m - 1) / 2 * n));
  for (std::uint32_t i = 1; i <= m; ++i) {
    if (lowdeg) {
      CPoly p = constant(field, 1);
      Formula sum = fvar(pigeon_var(i, 1, n));
      for (std::uint32_t k = 1; k <= n; ++k) {
        p = p - var(field, pigeon_var(i, k, n));
        if (k > 1) sum = Formula::plus(sum, fvar(pigeon_var(i, k, n)));
      }
      add(inst, std::move(p), one_minus(sum));
    } else {
      CPoly p = constant(field, 1);
      std::vector<Formula> factors;
      for (std::uint32_t k = 1; k <= n; ++k) {
        p = p * (constant(field, 1) - var(field, pigeon_var(i, k, n)));
        factors.push_back(one_minus(fvar(pigeon_var(i, k, n))));
      }
      add(inst, std::move(p), ordered::product_of(factors));
    }
  }
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      for (std::uint32_t l = k + 1; l <= n; ++l) {
        add(inst, var(field, pigeon_var(i, k, n)) * var(field, pigeon_var(i, l, n)),
            Formula::times(fvar(pigeon_var(i, k, n)), fvar(pigeon_var(i, l, n))));
      }
    }
  }
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (std::uint32_t j = i + 1; j <= m; ++j) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        add(inst, var(field, pigeon_var(i, k, n)) * var(field, pigeon_var(j, k, n)),
            Formula::times(fvar(pigeon_var(i, k, n)), fvar(pigeon_var(j, k, n))));
      }
    }
  }
  return inst;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

Instance gen_fphp(std::uint32_t m, std::uint32_t n, const Field& field) { return fphp_common(m, n, field, false); }

Instance gen_fphp_lowdeg(std::uint32_t m, std::uint32_t n, const Field& field) {
  return fphp_common(m, n, field, true);
}

Graph Graph::parse(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(start, end - start));
    start = end + 1;
    line = line.substr(0, line.find('#'));
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError("expected an edge 'u v'", line_no, 1);
    std::uint32_t uv[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
      auto [ptr, ec] = std::from_chars(tok[i].data(), tok[i].data() + tok[i].size(), uv[i]);
      if (ec != std::errc() || ptr != tok[i].data() + tok[i].size() || uv[i] == 0) {
        throw ParseError("vertices are positive integers, got '" + tok[i] + "'", line_no,
                         line.find(tok[i]) + 1);
      }
    }
    g.edges.emplace_back(uv[0], uv[1]);
    g.vertices = std::max({g.vertices, uv[0], uv[1]});
  }
  return g;
}

std::vector<std::vector<std::uint32_t>> Graph::components() const {
  std::vector<std::uint32_t> parent(vertices + 1);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  std::vector<std::vector<std::uint32_t>> by_root(vertices + 1);
  for (std::uint32_t v = 1; v <= vertices; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Instance gen_tseitin(const Graph& graph, std::uint64_t p, const std::vector<std::int64_t>& charge,
                     const Field& field) {
  if (p < 2 || !is_prime_u64(p)) throw InvalidArgument("Tseitin modulus must be prime");
  if (p > 64) throw InvalidArgument("Tseitin modulus above 64 is not supported");
  if (charge.size() != graph.vertices) {
    throw InvalidArgument("expected " + std::to_string(graph.vertices) + " charges, got " +
                          std::to_string(charge.size()));
  }
  const auto ip = static_cast<std::int64_t>(p);
  Instance inst;
  inst.field = field;
  const auto edge_count = static_cast<std::uint32_t>(graph.edges.size());
  inst.nvars = p == 2 ? edge_count : edge_count * static_cast<std::uint32_t>(p - 1);
  inst.notes.push_back("tseitin mod " + std::to_string(p) + " on " + std::to_string(graph.vertices) +
                       " vertices and " + std::to_string(edge_count) + " edges");
  if (p == 2) {
    inst.notes.push_back("edge e is x_e");
  } else {
    inst.notes.push_back("edge e has value a iff x((e-1)*" + std::to_string(p - 1) + "+a) = 1, value 0 if none");
  }
  auto indicator = [&](std::uint32_t e, std::uint32_t a) { return (e - 1) * static_cast<std::uint32_t>(p - 1) + a; };

  if (p > 2) {
    for (std::uint32_t e = 1; e <= edge_count; ++e) {
      for (std::uint32_t a = 1; a < p; ++a) {
        for (std::uint32_t b = a + 1; b < p; ++b) add(inst, var(field, indicator(e, a)) * var(field, indicator(e, b)));
      }
    }
  }

  for (std::uint32_t v = 1; v <= graph.vertices; ++v) {
    std::int64_t c = mod_floor(charge[v - 1], ip);
    if (p == 2) {
      if (field.is_prime() && field.modulus() == 2) {
        CPoly sum = constant(field, c);
        for (std::uint32_t e = 1; e <= edge_count; ++e) {
          auto [a, b] = graph.edges[e - 1];
          if (a == v) sum = sum + var(field, e);
          if (b == v) sum = sum + var(field, e);
        }
        add(inst, std::move(sum));
      } else {
        CPoly prod = constant(field, 1);
        for (std::uint32_t e = 1; e <= edge_count; ++e) {
          auto [a, b] = graph.edges[e - 1];
          int times = (a == v ? 1 : 0) + (b == v ? 1 : 0);
          for (int t = 0; t < times; ++t) prod = prod * (constant(field, 1) - var(field, e).scaled(Scalar(2)));
        }
        add(inst, prod - constant(field, c == 0 ? 1 : -1));
      }
      continue;
    }
    // s = Σ_out value(e) - Σ_in value(e), with value(e) = Σ_a a·y_{e,a}.
    CPoly s(field);
    std::int64_t low = 0;
    std::int64_t high = 0;
    for (std::uint32_t e = 1; e <= edge_count; ++e) {
      auto [a, b] = graph.edges[e - 1];
      int sign = (a == v ? 1 : 0) - (b == v ? 1 : 0);
      if (sign == 0) continue;
      for (std::uint32_t val = 1; val < p; ++val) {
        s = s + var(field, indicator(e, val)).scaled(Scalar(static_cast<long>(sign * static_cast<int>(val))));
      }
      (sign > 0 ? high : low) += sign * (ip - 1);
    }
    if (field.is_prime() && field.modulus() == p) {
      add(inst, s - constant(field, c));
      continue;
    }
    CPoly prod = constant(field, 1);
    for (std::int64_t t = low; t <= high; ++t) {
      if (mod_floor(t, ip) == c) prod = prod * (s - constant(field, t));
    }
    add(inst, std::move(prod));
  }

  bool unsat = false;
  for (const auto& comp : graph.components()) {
    std::int64_t total = 0;
    for (std::uint32_t v : comp) total = mod_floor(total + charge[v - 1], ip);
    if (total != 0) unsat = true;
  }
  if (!unsat) {
    inst.warnings.push_back("charges sum to 0 mod " + std::to_string(p) +
                            " on every connected component, so the constraints are satisfiable");
  }
  return inst;
}

Instance gen_subst_instance(const std::vector<CPoly>& q, std::uint32_t nvars, std::uint32_t width) {
  if (width < 1) throw InvalidArgument("substitution width must be positive");
  Field field = q.empty() ? Field::rationals() : q.front().field();
  std::vector<CPoly> f;
  for (std::uint32_t i = 1; i <= nvars; ++i) {
    CPoly fi(field);
    for (std::uint32_t t = 0; t < width; ++t) fi = fi + var(field, i + t * nvars);
    f.push_back(std::move(fi));
  }
  Instance inst;
  inst.field = field;
  inst.nvars = nvars * width;
  inst.notes.push_back("x_i replaced by x_i" + std::string(width > 1 ? " + x_{" + std::to_string(nvars) + "+i}" : "") +
                       (width > 2 ? " + ..." : "") + " for i = 1.." + std::to_string(nvars));
  for (CPoly& p : substitute_family(q, f)) add(inst, std::move(p));
  return inst;
}

bool has_boolean_root(const std::vector<CPoly>& axioms, std::uint32_t nvars) {
  if (nvars > 24) throw InvalidArgument("too many variables for an exhaustive search");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
    auto value = [mask](VarId v) {
      bool bit = v.index >= 1 && ((mask >> (v.index - 1)) & 1U) != 0;
      return Scalar(bit != v.barred ? 1 : 0);
    };
    bool root = std::all_of(axioms.begin(), axioms.end(), [&](const CPoly& p) { return evaluate(p, value) == 0; });
    if (root) return true;
  }
  return false;
}

}  // namespace ncproof::instances
