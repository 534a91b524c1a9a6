#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace isotropica {

bool is_prime(std::uint64_t value);

/// The first `count` primes, ascending.
std::vector<std::uint32_t> first_primes(std::size_t count);

/// Value description of a coefficient field: F_p for a small prime p, or Q.
struct FieldSpec {
  enum class Kind { prime, rational };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;  // 0 for Q

  static constexpr std::uint32_t kMaxPrime = 97;

  /// Validates 2 <= p <= 97 and primality; throws std::invalid_argument otherwise.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rational() { return FieldSpec{}; }

  bool is_prime_field() const noexcept { return kind == Kind::prime; }
  std::uint32_t characteristic() const noexcept { return p; }

  /// "GF(7)" or "Q".
  std::string name() const;
  /// Inverse of name().
  static FieldSpec parse(const std::string& text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Arithmetic in F_p. Scalars are canonical representatives 0 <= e < p.
class PrimeField {
 public:
  using Scalar = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).p) {}
  explicit PrimeField(const FieldSpec& spec) : PrimeField(spec.p) {}

  std::uint32_t order() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime, p_}; }

  Scalar zero() const noexcept { return 0; }
  Scalar one() const noexcept { return 1; }
  Scalar from_int(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }

  Scalar add(Scalar a, Scalar b) const noexcept {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % p_; }
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const;

  bool is_zero(Scalar a) const noexcept { return a == 0; }
  bool is_one(Scalar a) const noexcept { return a == 1; }

  std::string to_string(Scalar a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// Arithmetic in Q with arbitrary-precision numerators and denominators, always in lowest terms.
class RationalField {
 public:
  using Scalar = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }
  FieldSpec spec() const { return FieldSpec::rational(); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(std::int64_t v) const { return Scalar(static_cast<long>(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar inv(const Scalar& a) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  /// "n" or "n/d".
  std::string to_string(const Scalar& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

}  // namespace isotropica
