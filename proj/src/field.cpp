#include "linsite/field.hpp"

#include <ostream>

namespace linsite {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid, p prime, a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_pos(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("field modulus " + std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 30)) throw DomainError("prime modulus too large");
  return Field(Kind::prime, p);
}

std::string Field::description() const {
  return is_prime_field() ? "F_" + std::to_string(p_) : "Q";
}

Scalar Scalar::from_int(const Field& f, std::int64_t v) {
  Scalar s;
  s.field_ = f;
  if (f.is_prime_field()) {
    s.res_ = mod_pos(v, f.characteristic());
  } else {
    s.rat_ = Rational(v);
  }
  return s;
}

Scalar Scalar::from_rational(const Field& f, const Rational& r) {
  if (f.is_prime_field()) {
    // Denominator must be a unit mod p.
    Rational num = boost::multiprecision::numerator(r);
    Rational den = boost::multiprecision::denominator(r);
    std::int64_t p = f.characteristic();
    auto to_res = [&](const Rational& x) {
      boost::multiprecision::cpp_int m =
          boost::multiprecision::numerator(x) % p;
      std::int64_t v = static_cast<std::int64_t>(m);
      return mod_pos(v, p);
    };
    std::int64_t d = to_res(den);
    if (d == 0) throw DomainError("denominator not invertible mod " + std::to_string(p));
    std::int64_t n = to_res(num);
    Scalar s;
    s.field_ = f;
    s.res_ = (n * mod_inverse(d, p)) % p;
    return s;
  }
  Scalar s;
  s.field_ = f;
  s.rat_ = r;
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return from_rational(f, Rational(boost::multiprecision::cpp_int(text)));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in scalar '" + text + "'");
    return from_rational(f, Rational(num, den));
  } catch (const std::exception& e) {
    throw DomainError("cannot parse scalar '" + text + "': " + e.what());
  }
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw DomainError("scalar field mismatch: " + field_.description() + " vs " +
                      o.field_.description());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime_field())
    s.res_ = (res_ + o.res_) % field_.characteristic();
  else
    s.rat_ = rat_ + o.rat_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime_field())
    s.res_ = mod_pos(res_ - o.res_, field_.characteristic());
  else
    s.rat_ = rat_ - o.rat_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime_field())
    s.res_ = (res_ * o.res_) % field_.characteristic();
  else
    s.rat_ = rat_ * o.rat_;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime_field())
    s.res_ = mod_pos(-res_, field_.characteristic());
  else
    s.rat_ = -rat_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime_field())
    s.res_ = mod_inverse(res_, field_.characteristic());
  else
    s.rat_ = 1 / rat_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::int64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw DomainError("residue() on a rational scalar");
  return res_;
}

const Rational& Scalar::rational() const {
  if (field_.is_prime_field()) throw DomainError("rational() on a prime-field scalar");
  return rat_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  return rat_.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace linsite
