#include "isotropica/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "isotropica/errors.hpp"

namespace isotropica {

namespace {

void require_positive(std::int64_t s) {
  if (s < 1) throw std::invalid_argument("s must be at least 1, got " + std::to_string(s));
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class ceil_of(const mpq_class& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return z.get_si();
}

mpq_class rational(std::int64_t num, std::int64_t den) {
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

}  // namespace

std::int64_t l_formula(std::int64_t s) {
  require_positive(s);
  if (s <= 7) return 2 * s - 1;
  return (s * s + 4) / 8 + s;
}

std::int64_t l_max_form(std::int64_t s) {
  require_positive(s);
  return std::max(2 * s - 1, (s * s + 4) / 8 + s);
}

mpq_class upper_bound_lemma6(std::int64_t s) {
  require_positive(s);
  return std::max(mpq_class(rational(s * s + 4, 8) + s), mpq_class(2 * s - 1));
}

std::int64_t lower_bound_lemma7(std::int64_t s) {
  require_positive(s);
  return 2 * s - 1;
}

mpq_class lower_bound_lemma8(std::int64_t s) {
  require_positive(s);
  return rational(s * s - 1, 8) + s;
}

Lemma8Params lemma8_params(std::int64_t s) {
  if (s < 2) throw std::domain_error("lemma8_params needs s >= 2, got " + std::to_string(s));
  Lemma8Params p{};
  p.s = s;
  if (s % 2 == 0) {
    p.t = s / 2;
    p.k = s / 2 + 1;
    p.n = (s * s + 4 * s + 7) / 8;
  } else {
    p.t = (s + 1) / 2;
    p.k = (s + 1) / 2;
    p.n = (s * s + 4 * s + 2) / 8;
  }
  p.dim_achieved = p.n + p.t;
  if (!(2 * p.n < p.t * (p.k - 1) + 2 * p.k)) {
    throw std::domain_error("infeasible: 2n < t(k-1) + 2k fails for s = " + std::to_string(s));
  }
  if (mpq_class(p.dim_achieved) < lower_bound_lemma8(s)) {
    throw std::domain_error("infeasible: n + t >= (s^2 - 1)/8 + s fails for s = " + std::to_string(s));
  }
  return p;
}

std::string to_string(Regime r) { return r == Regime::heisenberg ? "heisenberg" : "quadratic"; }

BoundRow bound_row(std::int64_t s) {
  BoundRow row{s,
               l_formula(s),
               to_int64(floor_of(upper_bound_lemma6(s))),
               lower_bound_lemma7(s),
               lower_bound_lemma8(s),
               s <= 7 ? Regime::heisenberg : Regime::quadratic};
  if (row.l_value != l_max_form(s)) throw InvariantViolation("piecewise and max forms of l disagree");
  if (row.lower_lemma7 > row.l_value || row.l_value > row.upper_lemma6)
    throw InvariantViolation("l(" + std::to_string(s) + ") lies outside its bounds");
  return row;
}

std::vector<BoundRow> bound_table(std::int64_t s_max) {
  require_positive(s_max);
  std::vector<BoundRow> rows;
  for (std::int64_t s = 1; s <= s_max; ++s) rows.push_back(bound_row(s));
  return rows;
}

std::int64_t sandwich_check(std::int64_t s) {
  const auto lo = std::max(mpz_class(lower_bound_lemma7(s)), ceil_of(lower_bound_lemma8(s)));
  const auto hi = floor_of(upper_bound_lemma6(s));
  if (lo != hi) {
    throw InvariantViolation("bounds for s = " + std::to_string(s) + " leave [" + lo.get_str() + ", " +
                             hi.get_str() + "]");
  }
  return to_int64(lo);
}

}  // namespace isotropica
