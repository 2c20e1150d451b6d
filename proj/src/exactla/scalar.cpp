#include "semihom/scalar.hpp"

#include <ostream>

namespace semihom {

namespace {

std::int64_t mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

std::int64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t inv_mod(std::int64_t a, std::uint32_t p) {
  // extended Euclid
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
  if (r != 1) throw std::domain_error("division by zero in F_p");
  return mod(t, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p) || p > 0x7fffffffULL)
    throw InputError("field characteristic " + std::to_string(p) + " is not a supported prime");
  return {FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad field '" + text + "'");
    return prime(std::stoull(digits));
  }
  throw InputError("bad field '" + text + "' (expected q or fp:<p>)");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rationals ? "q" : "fp:" + std::to_string(characteristic);
}

Scalar Scalar::from_rational(mpq_class q) {
  Scalar s;
  s.q_ = std::move(q);
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::modular(std::int64_t v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = mod(v, p);
  return s;
}

Scalar Scalar::in(const FieldSpec& field, long v) {
  return field.characteristic ? modular(v, field.characteristic) : Scalar(v);
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw InputError("bad scalar '" + text + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  Scalar s = from_rational(q);
  if (field.characteristic) s.lift_to(field.characteristic);
  return s;
}

void Scalar::lift_to(std::uint32_t p) {
  if (p == p_ || p == 0) return;
  if (p_ != 0) throw std::logic_error("mixing scalars of different characteristic");
  std::int64_t den = reduce(q_.get_den(), p);
  if (den == 0) throw InputError("denominator not invertible in F_" + std::to_string(p));
  r_ = mod(reduce(q_.get_num(), p) * inv_mod(den, p), p);
  p_ = p;
  q_ = 0;
}

std::uint32_t Scalar::common(const Scalar& a, const Scalar& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_)
    throw std::logic_error("mixing scalars of different characteristic");
  return a.p_ ? a.p_ : b.p_;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = s.r_ == 0 ? 0 : p_ - s.r_;
  else
    s.q_ = -s.q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p == 0) {
    q_ += o.q_;
    return *this;
  }
  lift_to(p);
  Scalar b = o;
  b.lift_to(p);
  r_ += b.r_;
  if (r_ >= p) r_ -= p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p == 0) {
    q_ *= o.q_;
    return *this;
  }
  lift_to(p);
  Scalar b = o;
  b.lift_to(p);
  r_ = (r_ * b.r_) % p;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_) return modular(inv_mod(r_, p_), p_);
  Scalar s;
  s.q_ = 1 / q_;
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  Scalar b = o;
  b.lift_to(p);
  lift_to(p);
  return *this *= b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common(a, b);
  if (p == 0) return a.q_ == b.q_;
  Scalar x = a, y = b;
  x.lift_to(p);
  y.lift_to(p);
  return x.r_ == y.r_;
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

std::int64_t Scalar::residue() const {
  if (!p_) throw std::logic_error("residue() of a rational scalar");
  return r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace semihom
