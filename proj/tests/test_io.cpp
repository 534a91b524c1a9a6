#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "isotropica/io.hpp"
#include "isotropica/algebra.hpp"

using namespace isotropica;
using io::json;

TEST(Csv, QuotesPerRfc4180) {
  EXPECT_EQ(io::csv_field("plain"), "plain");
  EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(io::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(io::csv_line({"1", "x,y", ""}), "1,\"x,y\",\r\n");
}

TEST(Csv, BoundRow) {
  EXPECT_EQ(io::bound_row_fields(bound_row(8)),
            (std::vector<std::string>{"8", "16", "16", "15", "127/8", "quadratic", "16"}));
  EXPECT_EQ(io::rational_string(mpq_class(4)), "4/1");
}

TEST(Json, SubspaceRoundTrip) {
  const auto u = SubspaceFp::span(MatrixFp::from_ints(PrimeField(7), {{1, 0, 2, 3}, {0, 1, 4, 5}}));
  const auto j = io::to_json(u);
  EXPECT_EQ(j.at("field"), "GF(7)");
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(io::subspace_from_json(j), u);
}

TEST(Json, RationalEntriesAreStrings) {
  const RationalField q;
  MatrixQ m(q, 1, 2);
  m(0, 0) = q.one();
  m(0, 1) = q.inv(q.from_int(3));
  const auto j = io::to_json(SubspaceQ::span(m));
  EXPECT_EQ(j.at("basis")[0][1], "1/3");
  EXPECT_EQ(j.at("field"), "Q");
}

TEST(Json, PlueckerUsesOneBasedIndices) {
  const auto u = SubspaceFp::span(MatrixFp::from_ints(PrimeField(7), {{1, 0, 2, 3}, {0, 1, 4, 5}}));
  const auto p = pluecker_of(u);
  const auto j = io::to_json(p);
  EXPECT_EQ(j.at("coords")[5].at("idx"), json::array({3, 4}));
  EXPECT_EQ(j.at("coords")[5].at("val"), 5);
  EXPECT_EQ(io::pluecker_from_json(j), p);
}

TEST(Json, FormsAndAlgebrasRoundTrip) {
  const auto phi = random_form_tuple(4, 2, PrimeField(5), 3);
  EXPECT_EQ(io::forms_from_json(io::to_json(phi)), phi);
  const auto a = make_lie(phi);
  EXPECT_EQ(io::algebra_from_json(io::to_json(a)), a);
  const auto assoc = make_associative({MatrixFp::from_ints(PrimeField(3), {{1, 2}, {0, 1}})});
  const auto j = io::to_json(assoc);
  EXPECT_TRUE(j.contains("psi"));
  EXPECT_EQ(io::algebra_from_json(j), assoc);
}

TEST(Json, RejectsMalformedInput) {
  auto j = io::to_json(random_form_tuple(3, 1, PrimeField(5), 1));
  j["matrices"][0][0][0] = 1;
  EXPECT_THROW(io::forms_from_json(j), std::invalid_argument);
  auto bad_t = io::to_json(random_form_tuple(3, 1, PrimeField(5), 1));
  bad_t["t"] = 2;
  EXPECT_THROW(io::forms_from_json(bad_t), DimensionMismatch);
  json q{{"field", "Q"}, {"ambient_dim", 2}, {"basis", json::array()}};
  EXPECT_THROW(io::subspace_from_json(q), std::invalid_argument);
}

TEST(Json, KeysAreSorted) {
  const auto r = max_abelian(heisenberg(1, PrimeField(2)));
  const auto text = io::to_json(r).dump();
  EXPECT_LT(text.find("exhaustive_certified"), text.find("max_abelian_dim"));
  EXPECT_LT(text.find("max_abelian_dim"), text.find("method"));
}

TEST(Files, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "isotropica_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  io::write_atomically(path, "{\"a\": 1}");
  io::write_atomically(path, "{\"a\": 2}");
  EXPECT_EQ(io::read_json_file(path).at("a"), 2);
  EXPECT_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  std::filesystem::remove_all(dir);
}
