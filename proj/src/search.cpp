#include "isotropica/search.hpp"

#include <stdexcept>

namespace isotropica {

std::string to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::greedy: return "greedy";
    case SearchMethod::exhaustive: return "exhaustive";
    case SearchMethod::randomized: return "randomized";
  }
  return "unknown";
}

SearchMethod parse_search_method(const std::string& text) {
  if (text == "greedy") return SearchMethod::greedy;
  if (text == "exhaustive") return SearchMethod::exhaustive;
  if (text == "random" || text == "randomized") return SearchMethod::randomized;
  throw std::invalid_argument("unknown search method '" + text + "'");
}

IsotropyTest::IsotropyTest(const FormTupleFp& phi)
    : n_(phi.n()), t_(phi.t()), p_(phi.field().order()), forms_(t_ * n_ * n_), row_times_form_(n_) {
  for (std::size_t l = 0; l < t_; ++l)
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) forms_[(l * n_ + r) * n_ + c] = phi[l](r, c);
}

bool IsotropyTest::operator()(const MatrixFp& basis) {
  const std::size_t k = basis.rows();
  if (k < 2) return true;
  const auto b = basis.entries();
  for (std::size_t l = 0; l < t_; ++l) {
    const std::uint32_t* m = forms_.data() + l * n_ * n_;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const std::uint32_t* bi = b.data() + i * n_;
      for (std::size_t c = 0; c < n_; ++c) {
        std::uint32_t acc = 0;
        for (std::size_t r = 0; r < n_; ++r) acc += bi[r] * m[r * n_ + c];
        row_times_form_[c] = acc % p_;
      }
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::uint32_t* bj = b.data() + j * n_;
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < n_; ++c) acc += row_times_form_[c] * bj[c];
        if (acc % p_ != 0) return false;
      }
    }
  }
  return true;
}

SubspaceFp greedy_isotropic(const FormTupleFp& phi, std::uint64_t seed) {
  const auto& f = phi.field();
  const std::size_t n = phi.n();
  auto rng = stream_engine(seed, 0);
  MatrixFp chosen(f, 0, n);
  while (true) {
    MatrixFp constraints(f, 0, n);
    for (std::size_t j = 0; j < chosen.rows(); ++j)
      for (const auto& m : phi.matrices()) constraints.append_row(m.transpose().apply(chosen.row(j)));
    const auto kernel = kernel_basis(constraints);
    if (kernel.rows() <= chosen.rows()) break;
    const auto current = SubspaceFp::span(chosen);
    std::vector<std::uint32_t> y(n);
    do {
      std::fill(y.begin(), y.end(), 0u);
      for (std::size_t r = 0; r < kernel.rows(); ++r) {
        const auto coeff = static_cast<std::uint32_t>(uniform_below(rng, f.order()));
        for (std::size_t c = 0; c < n; ++c) y[c] = f.add(y[c], f.mul(coeff, kernel(r, c)));
      }
    } while (current.contains(y));
    chosen.append_row(y);
  }
  return SubspaceFp::span(std::move(chosen));
}

SearchOutcome randomized_isotropic(const FormTupleFp& phi, std::uint64_t seed, std::uint64_t restarts) {
  SearchOutcome best;
  best.method = SearchMethod::randomized;
  best.seed = seed;
  best.trials = restarts;
  for (std::uint64_t r = 0; r < restarts; ++r) {
    // restart r: derive a distinct seed from (seed, r)
    auto rng = stream_engine(seed, r);
    auto u = greedy_isotropic(phi, rng());
    if (!best.witness || u.dim() > best.witness->dim()) best.witness = std::move(u);
  }
  if (best.witness) {
    best.found = true;
    best.k_target = best.witness->dim();
  }
  return best;
}

SearchOutcome exhaustive_isotropic(const FormTupleFp& phi, std::size_t k, const Budget& budget, Execution exec) {
  SearchOutcome out;
  out.k_target = k;
  out.method = SearchMethod::exhaustive;
  if (k > phi.n()) return out;
  const GrassmannianCells cells(phi.n(), k, phi.field());
  const auto hit = first_matching(cells, IsotropyTest(phi), exec, budget.max_tests);
  if (!hit) cells.require_within(budget, "exhaustive_isotropic");
  out.trials = hit ? *hit + 1 : cells.size();
  if (hit) {
    out.found = true;
    out.witness = cells.at(*hit);
  }
  return out;
}

bool check_main_lemma_threshold(std::size_t n, std::size_t t, std::size_t k) {
  return t >= 2 && 2 * n >= t * (k - 1) + 2 * k;
}

std::size_t main_lemma_max_k(std::size_t n, std::size_t t) {
  // 2n >= t(k-1) + 2k  <=>  k <= (2n + t) / (t + 2)
  return (2 * n + t) / (t + 2);
}

bool lower_bound_inequality_holds(std::size_t n, std::size_t t, std::size_t k) {
  return k >= 1 && 2 * n < t * (k - 1) + 2 * k;
}

HuntResult witness_hunt_no_isotropic(std::size_t n, std::size_t t, std::size_t k, std::uint32_t q,
                                     std::uint64_t trials, std::uint64_t seed, const Budget& budget,
                                     Execution exec) {
  HuntResult out;
  out.n = n;
  out.t = t;
  out.k = k;
  out.q = q;
  out.seed = seed;
  out.trials = trials;
  if (k <= 1) return out;
  const PrimeField field(q);
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto rng = stream_engine(seed, i);
    auto phi = random_form_tuple(n, t, field, rng);
    if (!exhaustive_isotropic(phi, k, budget, exec).found) {
      ++out.successes;
      if (!out.tuple) {
        out.first = i;
        out.tuple = std::move(phi);
      }
    }
  }
  return out;
}

}  // namespace isotropica
