#include "isotropica/algebra.hpp"

#include <stdexcept>

namespace isotropica {

namespace {

constexpr std::size_t kRandomTriples = 32;
constexpr std::uint64_t kCheckSeed = 0x15070;
constexpr std::uint64_t kFallbackRestarts = 64;

std::vector<std::uint32_t> random_element(std::size_t d, const PrimeField& f, std::mt19937_64& rng) {
  std::vector<std::uint32_t> x(d);
  for (auto& e : x) e = static_cast<std::uint32_t>(uniform_below(rng, f.order()));
  return x;
}

std::vector<std::uint32_t> basis_element(std::size_t d, std::size_t i) {
  std::vector<std::uint32_t> x(d, 0);
  x[i] = 1;
  return x;
}

bool is_zero_vector(std::span<const std::uint32_t> x) {
  for (auto e : x)
    if (e != 0) return false;
  return true;
}

void check_class2(const Class2Algebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto xy = a.multiply(basis_element(d, i), basis_element(d, j));
      for (std::size_t w = 0; w < d; ++w) {
        const auto e = basis_element(d, w);
        if (!is_zero_vector(a.multiply(xy, e)) || !is_zero_vector(a.multiply(e, xy)))
          throw InvariantViolation("a product of three basis elements is nonzero");
      }
    }
}

void check_jacobi(const Class2Algebra& a) {
  const auto& f = a.field();
  auto rng = stream_engine(kCheckSeed, 0);
  for (std::size_t trial = 0; trial < kRandomTriples; ++trial) {
    const auto x = random_element(a.dim(), f, rng);
    const auto y = random_element(a.dim(), f, rng);
    const auto z = random_element(a.dim(), f, rng);
    const auto t1 = a.multiply(x, a.multiply(y, z));
    const auto t2 = a.multiply(y, a.multiply(z, x));
    const auto t3 = a.multiply(z, a.multiply(x, y));
    for (std::size_t r = 0; r < a.dim(); ++r)
      if (f.add(f.add(t1[r], t2[r]), t3[r]) != 0) throw InvariantViolation("Jacobi identity fails");
    const auto xx = a.multiply(x, x);
    if (!is_zero_vector(xx)) throw InvariantViolation("[x, x] is nonzero");
  }
}

void check_associative(const Class2Algebra& a) {
  const auto& f = a.field();
  auto rng = stream_engine(kCheckSeed, 1);
  for (std::size_t trial = 0; trial < kRandomTriples; ++trial) {
    const auto x = random_element(a.dim(), f, rng);
    const auto y = random_element(a.dim(), f, rng);
    const auto z = random_element(a.dim(), f, rng);
    if (a.multiply(a.multiply(x, y), z) != a.multiply(x, a.multiply(y, z)))
      throw InvariantViolation("product is not associative");
  }
}

std::vector<std::uint32_t> flatten(const std::vector<MatrixFp>& ms) {
  std::vector<std::uint32_t> out;
  for (const auto& m : ms) out.insert(out.end(), m.entries().begin(), m.entries().end());
  return out;
}

}  // namespace

std::string to_string(AlgebraKind k) { return k == AlgebraKind::lie ? "lie" : "associative"; }

FormTupleFp Class2Algebra::forms() const {
  if (kind_ != AlgebraKind::lie) throw std::logic_error("an associative algebra has no alternating forms");
  return FormTupleFp(matrices_);
}

std::vector<std::uint32_t> Class2Algebra::multiply(std::span<const std::uint32_t> x,
                                                   std::span<const std::uint32_t> y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("element length is not n + t");
  std::vector<std::uint32_t> out(dim(), 0);
  const auto xv = x.first(n());
  const auto yv = y.first(n());
  for (std::size_t l = 0; l < t(); ++l) out[n() + l] = bilinear(matrices_[l], xv, yv);
  return out;
}

std::vector<std::uint32_t> Class2Algebra::structure_constants() const {
  const std::size_t d = dim();
  std::vector<std::uint32_t> c(d * d * d, 0);
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      for (std::size_t l = 0; l < t(); ++l) c[(i * d + j) * d + n() + l] = matrices_[l](i, j);
  return c;
}

Class2Algebra make_lie(const FormTupleFp& phi) {
  Class2Algebra a(AlgebraKind::lie, phi.matrices());
  check_class2(a);
  check_jacobi(a);
  return a;
}

Class2Algebra make_associative(std::vector<MatrixFp> psi) {
  if (psi.empty()) throw std::invalid_argument("an associative algebra needs t >= 1 matrices");
  const auto n = psi.front().rows();
  for (const auto& m : psi)
    if (m.rows() != n || m.cols() != n || !(m.field() == psi.front().field()))
      throw DimensionMismatch("psi matrices must be n x n over a common field");
  Class2Algebra a(AlgebraKind::associative, std::move(psi));
  check_class2(a);
  check_associative(a);
  return a;
}

Class2Algebra lie_shadow(const Class2Algebra& a) {
  if (a.kind() != AlgebraKind::associative) throw std::invalid_argument("lie_shadow expects an associative algebra");
  std::vector<MatrixFp> skew;
  for (const auto& c : a.matrices()) skew.push_back(c - c.transpose());
  return make_lie(FormTupleFp(std::move(skew)));
}

FormTupleFp heisenberg_form(std::size_t m, const PrimeField& field) {
  if (m < 1) throw std::invalid_argument("heisenberg needs m >= 1");
  MatrixFp j(field, 2 * m, 2 * m);
  for (std::size_t b = 0; b < m; ++b) {
    j(2 * b, 2 * b + 1) = field.one();
    j(2 * b + 1, 2 * b) = field.neg(field.one());
  }
  return FormTupleFp({j});
}

Class2Algebra heisenberg(std::size_t m, const PrimeField& field) { return make_lie(heisenberg_form(m, field)); }

std::size_t center(const Class2Algebra& a) {
  // v is central iff v^T C_l = 0 and C_l v = 0 for all l
  MatrixFp stacked(a.field(), 0, a.n());
  for (const auto& c : a.matrices()) {
    const auto ct = c.transpose();
    for (std::size_t r = 0; r < a.n(); ++r) {
      stacked.append_row(c.row(r));
      stacked.append_row(ct.row(r));
    }
  }
  return a.t() + (a.n() - rank(stacked));
}

CommutationTest::CommutationTest(const Class2Algebra& a)
    : n_(a.n()), t_(a.t()), p_(a.field().order()), psi_(flatten(a.matrices())), left_(2 * n_) {}

bool CommutationTest::operator()(const MatrixFp& basis) {
  const std::size_t k = basis.rows();
  const auto b = basis.entries();
  for (std::size_t l = 0; l < t_; ++l) {
    const std::uint32_t* c = psi_.data() + l * n_ * n_;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const std::uint32_t* bi = b.data() + i * n_;
      // left_[0..n) = b_i^T C, left_[n..2n) = C b_i
      for (std::size_t col = 0; col < n_; ++col) {
        std::uint32_t acc_l = 0;
        std::uint32_t acc_r = 0;
        for (std::size_t r = 0; r < n_; ++r) {
          acc_l += bi[r] * c[r * n_ + col];
          acc_r += c[col * n_ + r] * bi[r];
        }
        left_[col] = acc_l % p_;
        left_[n_ + col] = acc_r % p_;
      }
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::uint32_t* bj = b.data() + j * n_;
        std::uint32_t xy = 0;
        std::uint32_t yx = 0;
        for (std::size_t col = 0; col < n_; ++col) {
          xy += left_[col] * bj[col];
          yx += bj[col] * left_[n_ + col];
        }
        if (xy % p_ != yx % p_) return false;
      }
    }
  }
  return true;
}

namespace {

AbelianReport from_search(const Class2Algebra& a, const SubspaceFp& w, SearchMethod method) {
  return AbelianReport{a.t() + w.dim(), w, method, false, std::nullopt};
}

FormTupleFp commutator_forms(const Class2Algebra& a) {
  return a.kind() == AlgebraKind::lie ? a.forms() : lie_shadow(a).forms();
}

}  // namespace

AbelianReport max_abelian(const Class2Algebra& a, const Budget& budget, SearchMethod mode, std::uint64_t seed,
                          Execution exec) {
  if (mode == SearchMethod::greedy) return from_search(a, greedy_isotropic(commutator_forms(a)), mode);
  if (mode == SearchMethod::randomized) {
    const auto found = randomized_isotropic(commutator_forms(a), seed, kFallbackRestarts);
    return from_search(a, *found.witness, mode);
  }

  if (a.n() == 0) return AbelianReport{a.t(), SubspaceFp::zero(a.field(), 0), mode, true, std::nullopt};
  // [x, y] = 0 for lie kind; x y = y x for associative kind (the two differ in characteristic 2)
  const std::optional<IsotropyTest> isotropy =
      a.kind() == AlgebraKind::lie ? std::optional<IsotropyTest>(IsotropyTest(a.forms())) : std::nullopt;
  const std::optional<CommutationTest> commutation =
      a.kind() == AlgebraKind::associative ? std::optional<CommutationTest>(CommutationTest(a)) : std::nullopt;
  std::uint64_t used = 0;
  for (std::size_t k = a.n(); k >= 1; --k) {
    const GrassmannianCells cells(a.n(), k, a.field());
    const std::uint64_t remaining = budget.max_tests - used;
    const auto hit = isotropy ? first_matching(cells, *isotropy, exec, remaining)
                              : first_matching(cells, *commutation, exec, remaining);
    if (hit)
      return AbelianReport{a.t() + k, cells.at(*hit), SearchMethod::exhaustive, true, std::nullopt};
    if (cells.size() > remaining) {
      auto report = from_search(a, *randomized_isotropic(commutator_forms(a), seed, kFallbackRestarts).witness,
                                SearchMethod::randomized);
      report.warning = "exhaustive scan stopped in G(" + std::to_string(k) + "," + std::to_string(a.n()) + ") over " +
                       a.field().spec().name() + " after the budget of " + std::to_string(budget.max_tests) +
                       " subspaces; result is a lower bound";
      return report;
    }
    used += cells.size();
  }
  // k = 1 always has a witness since every line commutes with itself
  throw InvariantViolation("no commuting line found");
}

}  // namespace isotropica
