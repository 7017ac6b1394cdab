#include "hopf/field.hpp"

namespace hopf {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw_input("prime field modulus too large (need p < 2^31): " + std::to_string(p));
  if (!is_prime_u64(p)) throw_input("modulus is not prime: " + std::to_string(p));
  return Field{FieldKind::Prime, p};
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Fp:", 0) == 0) {
    const std::string num = s.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw_input("bad field spec: " + s);
    return prime(std::stoull(num));
  }
  throw_input("bad field spec (expect Q or Fp:<p>): " + s);
}

std::string Field::str() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p);
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t mod_neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw_field("division by zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) s.q_ = 0;
  else s.r_ = 0;
  return s;
}

Scalar Scalar::one(const Field& f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) s.q_ = 1;
  else s.r_ = 1 % f.p;
  return s;
}

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += static_cast<long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  s.field_ = Field::rationals();
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
  if (f.is_rational()) throw_field("residue scalar requires a prime field");
  Scalar s;
  s.field_ = f;
  s.r_ = r % f.p;
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  if (s.empty()) throw_input("empty scalar string");
  std::string num = s, den;
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (den.empty()) throw_input("bad scalar string: " + s);
  }
  auto check_int = [&](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size() || t.find_first_not_of("0123456789", i) != std::string::npos)
      throw_input("bad scalar string: " + s);
  };
  check_int(num);
  if (!den.empty()) check_int(den);

  mpz_class n(num), d(den.empty() ? "1" : den);
  if (d == 0) throw_input("zero denominator in scalar: " + s);
  if (f.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return rational(q);
  }
  const mpz_class pz(static_cast<unsigned long>(f.p));
  mpz_class nm = n % pz;
  if (nm < 0) nm += pz;
  mpz_class dm = d % pz;
  if (dm < 0) dm += pz;
  if (dm == 0) throw_field("denominator not invertible mod " + std::to_string(f.p) + ": " + s);
  std::uint64_t nn = nm.get_ui();
  std::uint64_t dd = dm.get_ui();
  return residue(f, mod_mul(nn, mod_inv(dd, f.p), f.p));
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p; }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar add");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) s.q_ = q_ + o.q_;
  else s.r_ = mod_add(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar sub");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) s.q_ = q_ - o.q_;
  else s.r_ = mod_sub(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar mul");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) s.q_ = q_ * o.q_;
  else s.r_ = mod_mul(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::inv() const {
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) {
    if (q_ == 0) throw_field("division by zero");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inv(r_, field_.p);
  }
  return s;
}

Scalar Scalar::neg() const {
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) s.q_ = -q_;
  else s.r_ = mod_neg(r_, field_.p);
  return s;
}

std::string Scalar::str() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace hopf
