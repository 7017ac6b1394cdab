#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopf {

using Index = std::int64_t;

// Engine-wide error with a coarse kind so the CLI can map to exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { Input, Shape, Field, Precondition, Unsupported, Internal };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) { throw Error(Error::Kind::Input, msg); }
[[noreturn]] inline void throw_shape(const std::string& msg) { throw Error(Error::Kind::Shape, msg); }
[[noreturn]] inline void throw_field(const std::string& msg) { throw Error(Error::Kind::Field, msg); }
[[noreturn]] inline void throw_precondition(const std::string& msg) {
  throw Error(Error::Kind::Precondition, msg);
}
[[noreturn]] inline void throw_unsupported(const std::string& msg) {
  throw Error(Error::Kind::Unsupported, msg);
}

enum class FieldKind { Rationals, Prime };

// Field descriptor shared by every scalar of one computation.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // modulus, only for Prime

  static Field rationals() { return Field{FieldKind::Rationals, 0}; }
  static Field prime(std::uint64_t p);  // validates primality, requires p < 2^31
  static Field parse(const std::string& s);  // "Q" or "Fp:<p>"

  bool is_rational() const { return kind == FieldKind::Rationals; }
  bool operator==(const Field&) const = default;
  std::string str() const;
};

inline void require_same_field(const Field& a, const Field& b, const char* where) {
  if (!(a == b)) throw_field(std::string(where) + ": field mismatch (" + a.str() + " vs " + b.str() + ")");
}

// Modular arithmetic on residues in [0, p), p < 2^31.
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_neg(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

// A single exact field element; boundary type for parsing, printing and
// witness reporting. Matrices store raw element grids internally.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), q_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar rational(mpq_class q);
  static Scalar residue(const Field& f, std::uint64_t r);
  // Parses "n", "-n", or "n/d"; rejects zero denominators. Over F_p the
  // string is reduced mod p (a/b parsed as a * b^-1).
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;

  const mpq_class& q() const { return q_; }
  std::uint64_t r() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inv() const;
  Scalar neg() const;

  std::string str() const;  // canonical: lowest terms "n" / "n/d", residue in [0,p)

 private:
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace hopf
