// SPDX-License-Identifier: Apache-2.0
#include "ncproof/pit.hpp"

#include <random>
#include <unordered_map>

namespace ncproof::pit {

Backend parse_backend(std::string_view name) {
  if (name == "expand") return Backend::Expand;
  if (name == "matrix" || name == "random-matrix") return Backend::RandomMatrix;
  throw InvalidArgument("unknown PIT backend '" + std::string(name) + "'");
}

std::size_t matrix_dimension(std::size_t syntactic_degree) { return (syntactic_degree + 1) / 2 + 1; }

namespace {

class Matrix {
 public:
  Matrix(std::size_t dim, std::uint64_t mod) : dim_(dim), mod_(mod), data_(dim * dim, 0) {}

  static Matrix scalar(std::size_t dim, std::uint64_t mod, std::uint64_t c) {
    Matrix m(dim, mod);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c;
    return m;
  }

  std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  Matrix operator+(const Matrix& o) const {
    Matrix out(dim_, mod_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      std::uint64_t s = data_[i] + o.data_[i];
      out.data_[i] = s >= mod_ ? s - mod_ : s;
    }
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix out(dim_, mod_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        uint128 acc = 0;
        for (std::size_t l = 0; l < dim_; ++l) {
          acc += static_cast<uint128>(at(i, l)) * o.at(l, j);
          acc %= mod_;
        }
        out.at(i, j) = static_cast<std::uint64_t>(acc);
      }
    }
    return out;
  }

  bool is_zero() const {
    for (std::uint64_t v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

 private:
  std::size_t dim_;
  std::uint64_t mod_;
  std::vector<std::uint64_t> data_;
};

class MatrixEvaluator {
 public:
  MatrixEvaluator(std::size_t dim, std::uint64_t mod, std::mt19937_64& rng) : dim_(dim), mod_(mod), rng_(rng) {}

  Matrix operator()(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Var:
        return assignment(f.var());
      case Formula::Kind::Const:
        return Matrix::scalar(dim_, mod_, scalar_mod(f.value(), mod_));
      case Formula::Kind::Plus:
        return (*this)(f.left()) + (*this)(f.right());
      case Formula::Kind::Times:
        return (*this)(f.left()) * (*this)(f.right());
    }
    return Matrix(dim_, mod_);
  }

 private:
  const Matrix& assignment(VarId v) {
    std::uint64_t key = (std::uint64_t{v.index} << 1U) | (v.barred ? 1U : 0U);
    auto it = vars_.find(key);
    if (it != vars_.end()) return it->second;
    Matrix m(dim_, mod_);
    std::uniform_int_distribution<std::uint64_t> dist(0, mod_ - 1);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = dist(rng_);
    }
    return vars_.emplace(key, std::move(m)).first->second;
  }

  std::size_t dim_;
  std::uint64_t mod_;
  std::mt19937_64& rng_;
  std::unordered_map<std::uint64_t, Matrix> vars_;
};

bool matrix_is_zero(const Formula& f, const Field& field, std::uint64_t seed) {
  std::uint64_t mod = field.is_prime() ? field.modulus() : kMersenne61;
  // Small prime fields get repeated trials; one trial suffices for 2^61 - 1.
  int trials = 1;
  if (field.is_prime() && mod < (std::uint64_t{1} << 40U)) trials = 16;
  std::size_t dim = matrix_dimension(f.syntactic_degree());
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    MatrixEvaluator eval(dim, mod, rng);
    if (!eval(f).is_zero()) return false;
  }
  return true;
}

}  // namespace

bool is_zero(const Formula& f, const Field& field, const Options& options) {
  if (options.backend == Backend::RandomMatrix) return matrix_is_zero(f, field, options.seed);
  return expand(f, field, options.cap).is_zero();
}

bool equal(const Formula& f, const Formula& g, const Field& field, const Options& options) {
  if (f == g) return true;
  if (options.backend == Backend::RandomMatrix) {
    return matrix_is_zero(Formula::difference(f, g), field, options.seed);
  }
  Expander expander(field, options.cap);
  return expander(f) == expander(g);
}

}  // namespace ncproof::pit
