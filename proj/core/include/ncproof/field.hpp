// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncproof {

/// Field elements are always stored as reduced rationals. Over GF(p) the
/// canonical representative is an integer in [0, p).
using Scalar = mpq_class;

/// The coefficient field: the rationals or a prime field GF(p) with p < 2^63.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InvalidArgument unless `modulus` is a prime below 2^63.
  static Field prime(std::uint64_t modulus);
  /// Parses "Q", "GF 7" or "GF:7".
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// Maps a rational onto its canonical representative in this field.
  /// Throws InvalidArgument when the denominator vanishes mod p.
  Scalar reduce(const Scalar& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inverse(const Scalar& a) const;

  /// Parses `int` or `int/posint` and reduces into the field.
  Scalar parse_scalar(std::string_view text) const;

  /// "Q" or "GF <p>", as used in proof-file headers.
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t modulus_ = 0;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Decimal rendering: "3", "-1/2".
std::string scalar_to_string(const Scalar& value);

__extension__ using uint128 = unsigned __int128;

/// (a * b) mod m without overflow.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Image of a rational in Z/mZ for prime m. Throws InvalidArgument if the
/// denominator is divisible by m.
std::uint64_t scalar_mod(const Scalar& value, std::uint64_t m);

}  // namespace ncproof
