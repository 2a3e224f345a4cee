#include "gbihom/exactfield.hpp"

#include <sstream>
#include <vector>

#include "gbihom/error.hpp"

namespace gbihom {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

// Modular inverse via the extended Euclidean algorithm; a must be nonzero mod
// the prime m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
  return {Kind::PrimeField, p};
}

std::string FieldSpec::name() const {
  return is_prime_field() ? "F_" + std::to_string(modulus) : "Q";
}

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field_.is_prime_field())
    value_ = std::uint64_t{0};
  else
    value_ = mpq_class(0);
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_prime_field()) {
    const auto m = static_cast<__int128>(field_.modulus);
    __int128 r = static_cast<__int128>(value) % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  mpq_class q = value;
  q.canonicalize();
  if (field_.is_prime_field()) {
    std::uint64_t den = reduce_mpz(q.get_den(), field_.modulus);
    if (den == 0) throw DivisionByZero("denominator vanishes in " + field_.name());
    value_ = mul_mod(reduce_mpz(q.get_num(), field_.modulus), inv_mod(den, field_.modulus),
                     field_.modulus);
  } else {
    value_ = q;
  }
}

Scalar Scalar::parse(FieldSpec f, std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return InvalidInput("malformed scalar \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+')) throw bad();
  }
  if (!valid_int(num) || !valid_int(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero("zero denominator in \"" + s + "\"");
  try {
    return Scalar(f, mpq_class(n, d));
  } catch (const DivisionByZero&) {
    throw DivisionByZero("\"" + s + "\" has a denominator divisible by " + std::to_string(f.modulus));
  }
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(value_); }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("cannot combine " + field_.name() + " with " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto v = std::get_if<std::uint64_t>(&r.value_)) {
    if (*v != 0) *v = field_.modulus - *v;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (auto v = std::get_if<std::uint64_t>(&r.value_)) {
    *v = inv_mod(*v, field_.modulus);
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto v = std::get_if<std::uint64_t>(&value_)) {
    std::uint64_t w = std::get<std::uint64_t>(o.value_);
    *v = (*v >= field_.modulus - w) ? *v - (field_.modulus - w) : *v + w;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto v = std::get_if<std::uint64_t>(&value_)) {
    *v = mul_mod(*v, std::get<std::uint64_t>(o.value_), field_.modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (o.is_zero()) throw DivisionByZero("division by zero in " + field_.name());
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (auto v = std::get_if<std::uint64_t>(&value_)) return std::to_string(*v);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::uint64_t multiplicative_order(const Scalar& s) {
  if (s.is_zero()) throw DivisionByZero("zero has no multiplicative order");
  if (!s.field().is_prime_field()) {
    if (s.is_one()) return 1;
    return s.rational() == -1 ? 2 : 0;
  }
  Scalar x = s;
  std::uint64_t k = 1;
  while (!x.is_one()) {
    x *= s;
    ++k;
  }
  return k;
}

Scalar primitive_root_of_unity(const FieldSpec& field, std::uint64_t n) {
  if (n == 0) throw NoSuchRoot("order must be positive");
  if (!field.is_prime_field()) {
    if (n == 1) return Scalar::one(field);
    if (n == 2) return Scalar(field, -1L);
    throw NoSuchRoot("Q has no primitive " + std::to_string(n) + "-th root of unity");
  }
  const std::uint64_t p = field.modulus;
  if ((p - 1) % n != 0)
    throw NoSuchRoot(std::to_string(n) + " does not divide " + std::to_string(p - 1) + " in " +
                     field.name());
  // Prime divisors of n give the order test: x^n = 1 and x^(n/q) != 1.
  std::vector<std::uint64_t> prime_divisors;
  for (std::uint64_t m = n, q = 2; m > 1; ++q) {
    if (q * q > m) q = m;
    if (m % q == 0) {
      prime_divisors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  for (std::uint64_t cand = 1; cand < p; ++cand) {
    if (pow_mod(cand, n, p) != 1) continue;
    bool primitive = true;
    for (std::uint64_t q : prime_divisors) {
      if (pow_mod(cand, n / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return Scalar(field, static_cast<long>(cand));
  }
  throw NoSuchRoot("no primitive root found");  // unreachable for prime p
}

}  // namespace gbihom
