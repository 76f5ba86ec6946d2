// SPDX-License-Identifier: Apache-2.0
#include "ncproof/rank.hpp"

#include <algorithm>
#include <map>

namespace ncproof::rank {

Scalar NisanMatrix::entry(std::size_t row, std::size_t col) const {
  const SparseRow& r = entries.at(row);
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return it != r.end() && it->first == col ? it->second : Scalar(0);
}

std::vector<std::vector<Scalar>> NisanMatrix::dense() const {
  std::vector<std::vector<Scalar>> out(rows.size(), std::vector<Scalar>(cols.size(), Scalar(0)));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& [c, v] : entries[i]) out[i][c] = v;
  }
  return out;
}

NisanMatrix nisan_matrix(const NCPoly& f, std::size_t k) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial has no degree");
  if (!f.is_homogeneous()) throw InvalidArgument("Nisan matrices need a homogeneous polynomial");
  auto d = static_cast<std::size_t>(f.degree());
  if (k > d) throw InvalidArgument("k exceeds the degree");

  std::map<Word, std::size_t, ShortLex> row_index;
  std::map<Word, std::size_t, ShortLex> col_index;
  for (const auto& [word, c] : f.terms()) {
    row_index.emplace(Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k)), 0);
    col_index.emplace(Word(word.begin() + static_cast<std::ptrdiff_t>(k), word.end()), 0);
  }
  NisanMatrix m;
  m.k = k;
  for (auto& [w, i] : row_index) {
    i = m.rows.size();
    m.rows.push_back(w);
  }
  for (auto& [w, i] : col_index) {
    i = m.cols.size();
    m.cols.push_back(w);
  }
  m.entries.resize(m.rows.size());
  for (const auto& [word, c] : f.terms()) {
    std::size_t r = row_index.at(Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k)));
    std::size_t col = col_index.at(Word(word.begin() + static_cast<std::ptrdiff_t>(k), word.end()));
    m.entries[r].emplace_back(col, c);
  }
  for (auto& row : m.entries) std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return m;
}

namespace {

// Rows are kept as column → value maps; pivots are indexed by their leading
// column, so each new row is reduced left to right against existing pivots.
std::size_t rank_integer(const std::vector<SparseRow>& rows) {
  std::map<std::size_t, std::map<std::size_t, mpz_class>> pivots;
  for (const SparseRow& input : rows) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : input) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::map<std::size_t, mpz_class> row;
    for (const auto& [c, v] : input) {
      mpz_class scaled = v.get_num() * (lcm / v.get_den());
      if (scaled != 0) row.emplace(c, scaled);
    }
    while (!row.empty()) {
      auto lead = row.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) break;
      mpz_class a = pivot->second.begin()->second;
      mpz_class b = lead->second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a /= g;
      b /= g;
      // row := a·row - b·pivot
      for (auto& [c, v] : row) v *= a;
      for (const auto& [c, v] : pivot->second) {
        mpz_class& slot = row[c];
        slot -= b * v;
        if (slot == 0) row.erase(c);
      }
      mpz_class content = 0;
      for (const auto& [c, v] : row) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      if (content > 1) {
        for (auto& [c, v] : row) v /= content;
      }
    }
    if (!row.empty()) {
      std::size_t lead = row.begin()->first;
      pivots.emplace(lead, std::move(row));
    }
  }
  return pivots.size();
}

std::size_t rank_modular(const std::vector<SparseRow>& rows, std::uint64_t p) {
  std::map<std::size_t, std::map<std::size_t, std::uint64_t>> pivots;
  for (const SparseRow& input : rows) {
    std::map<std::size_t, std::uint64_t> row;
    for (const auto& [c, v] : input) {
      std::uint64_t x = scalar_mod(v, p);
      if (x != 0) row.emplace(c, x);
    }
    while (!row.empty()) {
      auto lead = row.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) break;
      std::uint64_t factor = lead->second;  // pivots are normalized to lead 1
      for (const auto& [c, v] : pivot->second) {
        std::uint64_t& slot = row[c];
        std::uint64_t sub = mulmod(factor, v, p);
        slot = slot >= sub ? slot - sub : slot + (p - sub);
        if (slot == 0) row.erase(c);
      }
    }
    if (!row.empty()) {
      std::uint64_t inv = powmod(row.begin()->second, p - 2, p);
      for (auto& [c, v] : row) v = mulmod(v, inv, p);
      std::size_t lead = row.begin()->first;
      pivots.emplace(lead, std::move(row));
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t rank_of(const std::vector<SparseRow>& rows, const Field& field) {
  if (field.is_prime()) return rank_modular(rows, field.modulus());
  return rank_integer(rows);
}

std::size_t rank_of(const NisanMatrix& m, const Field& field) { return rank_of(m.entries, field); }

RankReport nisan_bound(const NCPoly& f) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial has no degree");
  RankReport report;
  report.d = static_cast<std::size_t>(f.degree());
  for (std::size_t k = 0; k <= report.d; ++k) {
    std::size_t r = rank_of(nisan_matrix(f, k), f.field());
    report.per_k.push_back(r);
    report.total += r;
  }
  return report;
}

CPoly hard_poly(std::size_t d, const Order& order, const Field& field) {
  if (order.size() < 2 * d) {
    throw InvalidArgument("HARD_" + std::to_string(d) + " needs at least " + std::to_string(2 * d) + " variables");
  }
  CPoly acc = CPoly::constant(field, Scalar(1));
  for (std::size_t i = 1; i <= d; ++i) {
    VarId y = order.at_position(static_cast<std::uint32_t>(i));
    VarId z = order.at_position(static_cast<std::uint32_t>(d + i));
    acc = acc * (CPoly::variable(field, y) + CPoly::variable(field, z));
  }
  return acc;
}

NCPoly hard_nc_poly(std::size_t d, const Order& order, const Field& field) {
  return embed(hard_poly(d, order, field), order);
}

namespace {

void subsets(std::size_t d, std::size_t k, std::size_t start, std::vector<std::size_t>& current,
             std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i <= d; ++i) {
    current.push_back(i);
    subsets(d, k, i + 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  subsets(d, k, 1, current, out);
  return out;
}

}  // namespace

NisanMatrix permutation_submatrix(std::size_t d, std::size_t k, const Order& order, const Field& field) {
  if (k > d) throw InvalidArgument("k exceeds the degree");
  NCPoly f = hard_nc_poly(d, order, field);
  NisanMatrix m;
  m.k = k;
  for (const auto& s : subsets(d, k)) {
    Word w;
    for (std::size_t i : s) w.push_back(order.at_position(static_cast<std::uint32_t>(i)));
    m.rows.push_back(std::move(w));
  }
  for (const auto& s : subsets(d, d - k)) {
    Word w;
    for (std::size_t i : s) w.push_back(order.at_position(static_cast<std::uint32_t>(d + i)));
    m.cols.push_back(std::move(w));
  }
  m.entries.resize(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      Scalar v = f.coefficient(WordTraits::multiply(m.rows[r], m.cols[c]));
      if (v != 0) m.entries[r].emplace_back(c, v);
    }
  }
  return m;
}

bool is_permutation_matrix(const NisanMatrix& m) {
  if (m.rows.size() != m.cols.size()) return false;
  std::vector<int> col_hits(m.cols.size(), 0);
  for (const SparseRow& row : m.entries) {
    if (row.size() != 1 || row.front().second != 1) return false;
    ++col_hits[row.front().first];
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

}  // namespace ncproof::rank
