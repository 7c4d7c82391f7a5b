#include "tetrig/field.hpp"

#include <ostream>
#include <utility>

namespace tetrig {

namespace {

// Keeps trial division instant and residue products inside 64 bits.
constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a in [1, p), p prime
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxModulus)
    throw ParseError("modulus too large: " + std::to_string(p) + " (limit 2^31 - 1)");
  if (p == 2 || p == 3)
    throw ParseError("characteristic " + std::to_string(p) + " is not supported");
  if (!is_prime_u64(p)) throw ParseError("modulus is not prime: " + std::to_string(p));
  return FieldSpec(FieldKind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational") return rational();
  constexpr std::string_view kPrefix = "prime:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view digits = text.substr(kPrefix.size());
    if (digits.empty()) throw ParseError("missing modulus in field spec");
    std::uint64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("bad modulus in field spec: " + std::string(text));
      if (p > kMaxModulus) throw ParseError("modulus too large in field spec");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  throw ParseError("unknown field spec: '" + std::string(text) + "' (want rational or prime:<p>)");
}

std::string FieldSpec::str() const {
  return kind_ == FieldKind::rational ? "rational" : "prime:" + std::to_string(p_);
}

Scalar Scalar::of(long long n, const FieldSpec& spec) {
  if (spec.kind() == FieldKind::rational)
    return Scalar(mpq_class(mpz_class(static_cast<long>(n)), mpz_class(1)));
  long long p = static_cast<long long>(spec.modulus());
  long long m = n % p;
  if (m < 0) m += p;
  return Scalar(static_cast<std::uint64_t>(m), spec.modulus());
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& spec) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) throw ParseError("bad scalar literal: '" + std::string(text) + "'");
  std::size_t num_end = i;

  std::size_t den_begin = 0, den_end = 0;
  if (i < text.size() && text[i] == '/') {
    if (spec.kind() == FieldKind::prime)
      throw ParseError("fractional literal over a prime field: '" + std::string(text) + "'");
    ++i;
    den_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin) throw ParseError("bad scalar literal: '" + std::string(text) + "'");
    den_end = i;
  }
  if (i != text.size()) throw ParseError("bad scalar literal: '" + std::string(text) + "'");

  mpz_class num(std::string(text.substr(0, num_end)), 10);
  if (spec.kind() == FieldKind::rational) {
    mpz_class den(1);
    if (den_end > den_begin) den = mpz_class(std::string(text.substr(den_begin, den_end - den_begin)), 10);
    if (den == 0) throw ZeroDenominator("zero denominator in literal: '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class p(static_cast<unsigned long>(spec.modulus()));
  mpz_class m;
  mpz_mod(m.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(m.get_ui(), spec.modulus());
}

FieldSpec Scalar::spec() const {
  return kind_ == FieldKind::rational ? FieldSpec::rational() : FieldSpec(FieldKind::prime, p_);
}

bool Scalar::is_zero() const {
  return kind_ == FieldKind::rational ? q_ == 0 : r_ == 0;
}

std::string Scalar::str() const {
  return kind_ == FieldKind::rational ? q_.get_str() : std::to_string(r_);
}

void Scalar::require_same_spec(const Scalar& o) const {
  if (kind_ != o.kind_ || (kind_ == FieldKind::prime && p_ != o.p_))
    throw FieldMismatch("operands from different fields: " + spec().str() + " vs " + o.spec().str());
}

Scalar Scalar::operator-() const {
  if (kind_ == FieldKind::rational) return Scalar(mpq_class(-q_));
  return Scalar(r_ == 0 ? 0 : p_ - r_, p_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_spec(o);
  if (kind_ == FieldKind::rational) return Scalar(mpq_class(q_ + o.q_));
  std::uint64_t s = r_ + o.r_;
  if (s >= p_) s -= p_;
  return Scalar(s, p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_spec(o);
  if (kind_ == FieldKind::rational) return Scalar(mpq_class(q_ - o.q_));
  return Scalar(r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_spec(o);
  if (kind_ == FieldKind::rational) return Scalar(mpq_class(q_ * o.q_));
  return Scalar((r_ * o.r_) % p_, p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_spec(o);
  if (o.is_zero()) throw ZeroDenominator("division by zero");
  if (kind_ == FieldKind::rational) return Scalar(mpq_class(q_ / o.q_));
  return Scalar((r_ * mod_inverse(o.r_, p_)) % p_, p_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == FieldKind::rational) return q_ == o.q_;
  return p_ == o.p_ && r_ == o.r_;
}

int Scalar::sign() const {
  if (kind_ != FieldKind::rational)
    throw UnsupportedField("sign is undefined over " + spec().str());
  return sgn(q_);
}

double Scalar::to_double() const {
  if (kind_ != FieldKind::rational)
    throw UnsupportedField("no real embedding of " + spec().str());
  return q_.get_d();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tetrig
