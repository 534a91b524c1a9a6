#include "isotropica/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isotropica::io {

json scalar_to_json(const PrimeField&, PrimeField::Scalar a) { return a; }

json scalar_to_json(const RationalField&, const RationalField::Scalar& a) { return rational_string(a); }

MatrixFp matrix_from_json(const PrimeField& f, const json& rows, std::size_t cols) {
  MatrixFp m(f, 0, cols);
  for (const auto& row : rows) {
    if (row.size() != cols)
      throw DimensionMismatch("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(cols));
    std::vector<std::uint32_t> entries;
    for (const auto& e : row) entries.push_back(f.from_int(e.get<std::int64_t>()));
    m.append_row(entries);
  }
  return m;
}

namespace {

PrimeField prime_field_of(const json& j) {
  const auto spec = FieldSpec::parse(j.at("field").get<std::string>());
  if (!spec.is_prime_field()) throw std::invalid_argument("expected a prime field, got " + spec.name());
  return PrimeField(spec);
}

}  // namespace

SubspaceFp subspace_from_json(const json& j) {
  const auto f = prime_field_of(j);
  const auto n = j.at("ambient_dim").get<std::size_t>();
  auto u = SubspaceFp::span(matrix_from_json(f, j.at("basis"), n));
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != u.dim())
    throw std::invalid_argument("basis rows are linearly dependent");
  return u;
}

PlueckerPoint<PrimeField> pluecker_from_json(const json& j) {
  const auto f = prime_field_of(j);
  const auto n = j.at("n").get<std::size_t>();
  const auto k = j.at("k").get<std::size_t>();
  std::vector<std::pair<std::vector<std::size_t>, std::uint32_t>> entries;
  for (const auto& c : j.at("coords")) {
    std::vector<std::size_t> idx;
    for (const auto& i : c.at("idx")) {
      const auto one_based = i.get<std::size_t>();
      if (one_based < 1 || one_based > n) throw std::invalid_argument("Pluecker index out of range");
      if (!idx.empty() && one_based - 1 <= idx.back()) throw std::invalid_argument("Pluecker idx must be increasing");
      idx.push_back(one_based - 1);
    }
    entries.emplace_back(std::move(idx), f.from_int(c.at("val").get<std::int64_t>()));
  }
  return PlueckerPoint<PrimeField>::from_entries(f, n, k, entries);
}

FormTupleFp forms_from_json(const json& j) {
  const auto f = prime_field_of(j);
  const auto n = j.at("n").get<std::size_t>();
  std::vector<MatrixFp> ms;
  for (const auto& m : j.at("matrices")) ms.push_back(matrix_from_json(f, m, n));
  if (j.contains("t") && j.at("t").get<std::size_t>() != ms.size())
    throw DimensionMismatch("t does not match the number of matrices");
  return FormTupleFp(std::move(ms));
}

json to_json(const Class2Algebra& a) {
  json ms = json::array();
  for (const auto& m : a.matrices()) ms.push_back(matrix_to_json(m));
  return json{{"kind", to_string(a.kind())},
              {"n", a.n()},
              {"t", a.t()},
              {"field", a.field().spec().name()},
              {a.kind() == AlgebraKind::lie ? "forms" : "psi", ms}};
}

Class2Algebra algebra_from_json(const json& j) {
  const auto f = prime_field_of(j);
  const auto n = j.at("n").get<std::size_t>();
  const auto kind = j.at("kind").get<std::string>();
  std::vector<MatrixFp> ms;
  const char* key = kind == "lie" ? "forms" : "psi";
  if (kind != "lie" && kind != "associative") throw std::invalid_argument("unknown algebra kind '" + kind + "'");
  for (const auto& m : j.at(key)) ms.push_back(matrix_from_json(f, m, n));
  if (j.contains("t") && j.at("t").get<std::size_t>() != ms.size())
    throw DimensionMismatch("t does not match the number of matrices");
  if (kind == "lie") return make_lie(FormTupleFp(std::move(ms)));
  return make_associative(std::move(ms));
}

json to_json(const AbelianReport& r) {
  json j{{"max_abelian_dim", r.max_abelian_dim},
         {"witness", to_json(r.witness)},
         {"method", to_string(r.method)},
         {"exhaustive_certified", r.exhaustive_certified}};
  if (r.warning) j["warning"] = *r.warning;
  return j;
}

json to_json(const SearchOutcome& s) {
  return json{{"found", s.found},
              {"witness", s.witness ? to_json(*s.witness) : json(nullptr)},
              {"k_target", s.k_target},
              {"method", to_string(s.method)},
              {"trials", s.trials},
              {"seed", s.seed}};
}

json to_json(const IncidenceCount& c) {
  json fibres = json::object();
  for (const auto& [d, count] : c.fibres) fibres[std::to_string(d)] = count;
  return json{{"n", c.n}, {"k", c.k}, {"t", c.t}, {"q", c.q}, {"count", c.count.get_str()},
              {"predicted_dim", c.predicted_dim}, {"fibres", fibres}};
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

std::string rational_string(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string format_rate(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::vector<std::string> bound_table_header() {
  return {"s", "l", "upper6", "lower7", "lower8", "regime", "g_complex"};
}

std::vector<std::string> bound_row_fields(const BoundRow& row) {
  return {std::to_string(row.s),           std::to_string(row.l_value),
          std::to_string(row.upper_lemma6), std::to_string(row.lower_lemma7),
          rational_string(row.lower_lemma8), to_string(row.regime),
          std::to_string(row.l_value)};
}

std::vector<std::string> hunt_header() {
  return {"n", "t", "k", "q", "seed", "trials", "found_tuple_json", "success_rate"};
}

std::vector<std::string> hunt_fields(const HuntResult& h) {
  return {std::to_string(h.n),     std::to_string(h.t),      std::to_string(h.k),
          std::to_string(h.q),     std::to_string(h.seed),   std::to_string(h.trials),
          h.tuple ? to_json(*h.tuple).dump() : std::string(), format_rate(h.success_rate())};
}

std::vector<std::string> incidence_header() { return {"n", "k", "t", "q", "count", "predicted_dim"}; }

std::vector<std::string> incidence_fields(const IncidenceCount& c) {
  return {std::to_string(c.n), std::to_string(c.k), std::to_string(c.t),
          std::to_string(c.q), c.count.get_str(),  std::to_string(c.predicted_dim)};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return json::parse(in);
}

void write_atomically(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace isotropica::io
