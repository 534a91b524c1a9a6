#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "isotropica/algebra.hpp"
#include "isotropica/bounds.hpp"
#include "isotropica/forms.hpp"
#include "isotropica/incidence.hpp"
#include "isotropica/pluecker.hpp"
#include "isotropica/search.hpp"
#include "isotropica/subspace.hpp"

namespace isotropica::io {

using nlohmann::json;

/// F_p entries as integers, rationals as "num/den" strings.
json scalar_to_json(const PrimeField& f, PrimeField::Scalar a);
json scalar_to_json(const RationalField& f, const RationalField::Scalar& a);

template <class Field>
json matrix_to_json(const Matrix<Field>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.field(), m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixFp matrix_from_json(const PrimeField& f, const json& rows, std::size_t cols);

template <class Field>
json to_json(const Subspace<Field>& u) {
  return json{{"ambient_dim", u.ambient_dim()},
              {"dim", u.dim()},
              {"field", u.field().spec().name()},
              {"basis", matrix_to_json(u.basis())}};
}

/// Coordinates in lexicographic tuple order; idx is 1-based.
template <class Field>
json to_json(const PlueckerPoint<Field>& p) {
  json coords = json::array();
  const auto tuples = combinations(p.n(), p.k());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    json idx = json::array();
    for (auto c : tuples[i]) idx.push_back(c + 1);
    coords.push_back(json{{"idx", idx}, {"val", scalar_to_json(p.field(), p.coords()[i])}});
  }
  return json{{"n", p.n()}, {"k", p.k()}, {"field", p.field().spec().name()}, {"coords", coords}};
}

template <class Field>
json to_json(const FormTuple<Field>& phi) {
  json ms = json::array();
  for (const auto& m : phi.matrices()) ms.push_back(matrix_to_json(m));
  return json{{"n", phi.n()}, {"t", phi.t()}, {"field", phi.field().spec().name()}, {"matrices", ms}};
}

SubspaceFp subspace_from_json(const json& j);
PlueckerPoint<PrimeField> pluecker_from_json(const json& j);
FormTupleFp forms_from_json(const json& j);

json to_json(const Class2Algebra& a);
/// Builds the algebra through make_lie or make_associative, so all checks run.
Class2Algebra algebra_from_json(const json& j);

json to_json(const AbelianReport& r);
json to_json(const SearchOutcome& s);
json to_json(const IncidenceCount& c);

/// RFC 4180: fields containing a comma, quote, CR or LF are quoted, with quotes doubled.
std::string csv_field(std::string_view text);
std::string csv_line(const std::vector<std::string>& fields);

/// "num/den" with den > 0; integers keep the "/1".
std::string rational_string(const mpq_class& q);

/// Fixed six decimals.
std::string format_rate(double x);

std::vector<std::string> bound_table_header();
std::vector<std::string> bound_row_fields(const BoundRow& row);

std::vector<std::string> hunt_header();
std::vector<std::string> hunt_fields(const HuntResult& h);

std::vector<std::string> incidence_header();
std::vector<std::string> incidence_fields(const IncidenceCount& c);

json read_json_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over the target.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace isotropica::io
