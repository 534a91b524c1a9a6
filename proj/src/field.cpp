#include "isotropica/field.hpp"

#include <stdexcept>
#include <vector>

namespace isotropica {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 2; out.size() < count; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2 || p > kMaxPrime) {
    throw std::invalid_argument("prime field order " + std::to_string(p) + " outside [2, 97]");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::name() const {
  if (kind == Kind::rational) return "Q";
  return "GF(" + std::to_string(p) + ")";
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rational();
  if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
    const auto digits = text.substr(3, text.size() - 4);
    std::size_t used = 0;
    const auto value = std::stoul(digits, &used);
    if (used == digits.size()) return prime(static_cast<std::uint32_t>(value));
  }
  throw std::invalid_argument("unrecognized field '" + text + "'");
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
  // a^(p-2) by square and multiply
  Scalar result = 1;
  Scalar base = a;
  for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

RationalField::Scalar RationalField::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero in Q");
  return Scalar(1) / a;
}

}  // namespace isotropica
