#include "frobq/scalar.hpp"

#include <stdexcept>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar::Scalar(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

Scalar Scalar::modular(std::uint64_t residue, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  Scalar s;
  s.modulus_ = modulus;
  s.residue_ = residue % modulus;
  return s;
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw ScalarKindError("scalar is not rational");
  return value_;
}

std::uint64_t Scalar::residue() const {
  if (is_rational()) throw ScalarKindError("scalar is not a prime field element");
  return residue_;
}

bool Scalar::is_zero() const {
  return is_rational() ? sgn(value_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return is_rational() ? value_ == 1 : residue_ == 1 % modulus_;
}

int Scalar::sign() const {
  return is_rational() ? sgn(value_) : (residue_ == 0 ? 0 : 1);
}

void Scalar::check_same_kind(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw ScalarKindError("mixed scalar kinds: modulus " +
                          std::to_string(modulus_) + " vs " +
                          std::to_string(rhs.modulus_));
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (is_rational()) {
    r.value_ = -value_;
  } else {
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_kind(rhs);
  if (is_rational()) {
    value_ += rhs.value_;
  } else {
    residue_ = (residue_ + rhs.residue_) % modulus_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_kind(rhs);
  if (is_rational()) {
    value_ *= rhs.value_;
  } else {
    residue_ = mul_mod(residue_, rhs.residue_, modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (is_rational()) {
    r.value_ = 1 / value_;
    r.value_.canonicalize();
  } else {
    r.residue_ = pow_mod(residue_, modulus_ - 2, modulus_);
  }
  return r;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) return false;
  return is_rational() ? value_ == rhs.value_ : residue_ == rhs.residue_;
}

bool Scalar::smaller_magnitude(const Scalar& a, const Scalar& b) {
  a.check_same_kind(b);
  if (a.is_rational()) return cmp(abs(a.value_), abs(b.value_)) < 0;
  return a.residue_ < b.residue_;
}

std::string Scalar::fraction() const {
  if (!is_rational()) return std::to_string(residue_) + "/1";
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Scalar::str() const {
  if (!is_rational()) return std::to_string(residue_);
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return fraction();
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw ValidationError("field modulus " + std::to_string(p) +
                          " is not a prime below 2^32");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(modulus_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (is_rational()) return Scalar(value);
  return from_rational(mpq_class(value));
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (is_rational()) return Scalar(value);
  mpq_class q = value;
  q.canonicalize();
  const std::uint64_t den = reduce_mpz(q.get_den(), modulus_);
  if (den == 0) {
    throw std::domain_error("denominator of " + q.get_str() +
                            " vanishes in " + name());
  }
  const std::uint64_t num = reduce_mpz(q.get_num(), modulus_);
  return Scalar::modular(mul_mod(num, pow_mod(den, modulus_ - 2, modulus_), modulus_),
                         modulus_);
}

Scalar Field::convert(const Scalar& value) const {
  if (contains(value)) return value;
  if (!value.is_rational()) {
    throw ScalarKindError("cannot convert " + value.fraction() + " mod " +
                          std::to_string(value.modulus()) + " into " + name());
  }
  return from_rational(value.rational());
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-') {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(q);
}

}  // namespace frobq
