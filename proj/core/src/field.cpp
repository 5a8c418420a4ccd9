#include "koszulcat/field.hpp"

#include <cctype>
#include <regex>

#include "koszulcat/errors.hpp"

namespace koszulcat {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  // Products of two residues must fit in 64 bits for the dense modular path.
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw RangeError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Field Field::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t == "Q" || t == "QQ") return rationals();
  static const std::regex prime_re(R"(^(?:F_?|GF\()(\d+)\)?$)");
  std::smatch m;
  if (std::regex_match(t, m, prime_re)) return prime(std::stoull(m[1].str()));
  throw ParseError("unknown field descriptor '" + text + "' (expected Q or F_p)");
}

void Field::normalize(mpq_class& v) const {
  if (p_ == 0) {
    v.canonicalize();
    return;
  }
  v = from_rational(v);
}

mpq_class Field::from_rational(const mpq_class& v) const {
  if (p_ == 0) {
    mpq_class r(v);
    r.canonicalize();
    return r;
  }
  const mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw RangeError("denominator vanishes in " + to_string());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return mpq_class(r);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= static_cast<unsigned long>(p_)) r -= static_cast<unsigned long>(p_);
  return mpq_class(r);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += static_cast<unsigned long>(p_);
  return mpq_class(r);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % static_cast<unsigned long>(p_);
  return mpq_class(r);
}

mpq_class Field::neg(const mpq_class& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return mpq_class(mpz_class(static_cast<unsigned long>(p_)) - a.get_num());
}

mpq_class Field::inv(const mpq_class& a) const {
  if (sgn(a) == 0) throw RangeError("division by zero in " + to_string());
  if (p_ == 0) return 1 / a;
  mpz_class r;
  const mpz_class p(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return mpq_class(r);
}

std::string Field::format(const mpq_class& v) const {
  if (p_ == 0) return v.get_str();
  return v.get_num().get_str() + " mod " + std::to_string(p_);
}

mpq_class Field::parse_value(const std::string& text) const {
  std::string t = trim(text);
  static const std::regex mod_re(R"(^(-?\d+)\s*mod\s*(\d+)$)");
  std::smatch m;
  if (std::regex_match(t, m, mod_re)) {
    if (std::stoull(m[2].str()) != p_) {
      throw ParseError("value '" + text + "' does not belong to " + to_string());
    }
    return from_rational(mpq_class(mpz_class(m[1].str())));
  }
  static const std::regex rat_re(R"(^[+-]?\d+(/\d+)?$)");
  if (!std::regex_match(t, rat_re)) throw ParseError("malformed field element '" + text + "'");
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  mpq_class v;
  if (v.set_str(t, 10) != 0 || v.get_den() == 0) {
    throw ParseError("malformed field element '" + text + "'");
  }
  v.canonicalize();
  return from_rational(v);
}

void Scalar::check(const Scalar& o) const {
  if (field_ != o.field_) {
    throw DimensionMismatch("mixing scalars of " + field_.to_string() + " and " +
                            o.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.add(value_, o.value_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.sub(value_, o.value_);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.mul(value_, o.value_);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.div(value_, o.value_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.neg(value_);
  return r;
}

Scalar Scalar::inverse() const {
  Scalar r;
  r.field_ = field_;
  r.value_ = field_.inv(value_);
  return r;
}

}  // namespace koszulcat
