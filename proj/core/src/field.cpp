// SPDX-License-Identifier: Apache-2.0
#include "ncproof/field.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "ncproof/error.hpp"

namespace ncproof {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are deterministic for all n < 3.3e24.
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t mpz_mod_u64(const mpz_class& value, std::uint64_t m) {
  mpz_class r;
  mpz_class mod;
  mpz_import(mod.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), mod.get_mpz_t());
  std::uint64_t out = 0;
  if (r != 0) mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

mpz_class u64_to_mpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

std::uint64_t scalar_mod(const Scalar& value, std::uint64_t m) {
  std::uint64_t num = mpz_mod_u64(value.get_num(), m);
  std::uint64_t den = mpz_mod_u64(value.get_den(), m);
  if (den == 0) throw InvalidArgument("denominator is not invertible modulo " + std::to_string(m));
  return mulmod(num, powmod(den, m - 2, m), m);
}

Field Field::prime(std::uint64_t modulus) {
  if (modulus >= (std::uint64_t{1} << 63U) || !is_prime_u64(modulus)) {
    throw InvalidArgument("field modulus " + std::to_string(modulus) + " is not a prime below 2^63");
  }
  return Field(Kind::Prime, modulus);
}

Field Field::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.substr(0, 2) == "GF") {
    std::string_view rest = trim(text.substr(2));
    if (!rest.empty() && rest.front() == ':') rest = trim(rest.substr(1));
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) return prime(p);
  }
  throw InvalidArgument("unknown field '" + std::string(text) + "' (expected Q or GF <p>)");
}

Scalar Field::reduce(const Scalar& value) const {
  if (kind_ == Kind::Rationals) return value;
  return Scalar(u64_to_mpz(scalar_mod(value, modulus_)));
}

Scalar Field::inverse(const Scalar& a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  if (kind_ == Kind::Rationals) return Scalar(1) / a;
  std::uint64_t v = scalar_mod(a, modulus_);
  return Scalar(u64_to_mpz(powmod(v, modulus_ - 2, modulus_)));
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid_int(den, false)) throw InvalidArgument("malformed constant '" + std::string(text) + "'");
  }
  if (!valid_int(num, true)) throw InvalidArgument("malformed constant '" + std::string(text) + "'");
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Scalar value{mpz_class(num_str, 10)};
  if (!den.empty()) {
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    value /= Scalar(d);
    value.canonicalize();
  }
  return reduce(value);
}

std::string Field::to_string() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "GF " + std::to_string(modulus_);
}

std::string scalar_to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ncproof
