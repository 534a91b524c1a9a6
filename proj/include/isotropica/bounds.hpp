#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace isotropica {

/// l(s): 2s - 1 for 1 <= s <= 7 and floor((s^2 + 4)/8) + s for s >= 8.
std::int64_t l_formula(std::int64_t s);

/// max(2s - 1, floor((s^2 + 4)/8) + s).
std::int64_t l_max_form(std::int64_t s);

/// max((s^2 + 4)/8 + s, 2s - 1).
mpq_class upper_bound_lemma6(std::int64_t s);

/// 2s - 1, the dimension of the Heisenberg algebra h_{s-1}.
std::int64_t lower_bound_lemma7(std::int64_t s);

/// (s^2 - 1)/8 + s.
mpq_class lower_bound_lemma8(std::int64_t s);

struct Lemma8Params {
  std::int64_t s;
  std::int64_t t;
  std::int64_t k;
  std::int64_t n;
  std::int64_t dim_achieved;  // n + t
};

/// s even: (t, k, n) = (s/2, s/2 + 1, floor((s^2 + 4s + 7)/8));
/// s odd:  (t, k, n) = ((s+1)/2, (s+1)/2, floor((s^2 + 4s + 2)/8)).
/// Throws std::domain_error naming the failing inequality when 2n < t(k-1) + 2k or
/// n + t >= (s^2 - 1)/8 + s does not hold.
Lemma8Params lemma8_params(std::int64_t s);

enum class Regime { heisenberg, quadratic };

std::string to_string(Regime r);

struct BoundRow {
  std::int64_t s;
  std::int64_t l_value;
  std::int64_t upper_lemma6;  // floor of the rational bound
  std::int64_t lower_lemma7;
  mpq_class lower_lemma8;
  Regime regime;  // heisenberg for s <= 7
};

BoundRow bound_row(std::int64_t s);
std::vector<BoundRow> bound_table(std::int64_t s_max);

/// The integer forced by the bounds: the interval [max(lower7, ceil(lower8)), floor(upper6)].
/// Throws InvariantViolation unless it holds exactly one integer.
std::int64_t sandwich_check(std::int64_t s);

}  // namespace isotropica
