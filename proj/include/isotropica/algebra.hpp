#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isotropica/enumerate.hpp"
#include "isotropica/forms.hpp"
#include "isotropica/scan.hpp"
#include "isotropica/search.hpp"

namespace isotropica {

enum class AlgebraKind { lie, associative };

std::string to_string(AlgebraKind k);

/// A class-2 nilpotent algebra V + Z over F_p, dim V = n and dim Z = t. Elements are coordinate
/// vectors of length n + t, V first. The product of two elements depends only on their V parts
/// and lands in Z:
///   lie:          [x, y] = sum_l phi_l(x, y) z_l
///   associative:   x . y = sum_l psi_l(x, y) z_l   with psi_l(x, y) = x^T C_l y
class Class2Algebra {
 public:
  AlgebraKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return matrices_.front().rows(); }
  std::size_t t() const noexcept { return matrices_.size(); }
  std::size_t dim() const noexcept { return n() + t(); }
  const PrimeField& field() const noexcept { return matrices_.front().field(); }

  /// The phi_l (lie) or the C_l (associative).
  const std::vector<MatrixFp>& matrices() const noexcept { return matrices_; }

  /// The forms of a lie algebra. Throws std::logic_error for associative kind.
  FormTupleFp forms() const;

  std::vector<std::uint32_t> multiply(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const;

  /// c[(i * d + j) * d + r] is the coefficient of e_r in e_i e_j, d = n + t.
  std::vector<std::uint32_t> structure_constants() const;

  friend bool operator==(const Class2Algebra&, const Class2Algebra&) = default;

 private:
  Class2Algebra(AlgebraKind kind, std::vector<MatrixFp> matrices) : kind_(kind), matrices_(std::move(matrices)) {}

  friend Class2Algebra make_lie(const FormTupleFp& phi);
  friend Class2Algebra make_associative(std::vector<MatrixFp> psi);

  AlgebraKind kind_;
  std::vector<MatrixFp> matrices_;
};

/// g(phi). Checks [[x,y],w] = 0 on basis triples and the Jacobi identity on random triples;
/// throws InvariantViolation otherwise.
Class2Algebra make_lie(const FormTupleFp& phi);

/// A(psi) from arbitrary n x n matrices C_1..C_t (t >= 1). Checks that triple products of basis
/// elements vanish and associativity on random triples.
Class2Algebra make_associative(std::vector<MatrixFp> psi);

/// The commutator algebra of an associative A(psi): forms C_l - C_l^T.
Class2Algebra lie_shadow(const Class2Algebra& a);

/// h_m: t = 1 and the form is block diagonal with m blocks (0 1; -1 0).
Class2Algebra heisenberg(std::size_t m, const PrimeField& field);
FormTupleFp heisenberg_form(std::size_t m, const PrimeField& field);

/// Dimension of the center (lie) or the annihilator {x : Ax = xA = 0} (associative):
/// t plus the dimension of the joint kernel of the forms on V.
std::size_t center(const Class2Algebra& a);

/// Pairwise commutation of the basis rows computed from products: psi_l(b_i, b_j) = psi_l(b_j, b_i).
/// Meaningful for associative kind; for lie kind abelian means the bracket vanishes, which is
/// IsotropyTest.
class CommutationTest {
 public:
  explicit CommutationTest(const Class2Algebra& a);

  bool operator()(const MatrixFp& basis);
  bool operator()(const GrassmannianCells::Cursor& cur) { return (*this)(cur.basis()); }

 private:
  std::size_t n_;
  std::size_t t_;
  std::uint32_t p_;
  std::vector<std::uint32_t> psi_;
  std::vector<std::uint32_t> left_;
};

struct AbelianReport {
  std::size_t max_abelian_dim;
  SubspaceFp witness;  // a subspace W of V; W + Z is abelian of dimension max_abelian_dim
  SearchMethod method;
  bool exhaustive_certified;
  std::optional<std::string> warning;  // set when the exhaustive scan fell back
};

/// Largest abelian (commutative) subalgebra. Abelian subalgebras of maximal dimension may be
/// taken to contain Z, so the answer is t + the largest k with a k-subspace of V on which all
/// products commute.
///
/// Exhaustive mode scans G(k,n)(F_p) for k = n, n-1, ... and stops at the first level with a
/// witness. The budget caps the total number of subspaces tested across levels; when it runs out
/// the report falls back to randomized search with exhaustive_certified = false and a warning. Greedy and randomized modes give lower bounds.
AbelianReport max_abelian(const Class2Algebra& a, const Budget& budget = Budget::from_env(),
                          SearchMethod mode = SearchMethod::exhaustive, std::uint64_t seed = 0,
                          Execution exec = Execution::parallel);

}  // namespace isotropica
