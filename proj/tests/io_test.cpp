// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sumrank/conv_codes.hpp"
#include "sumrank/io.hpp"
#include "sumrank/recheck.hpp"

using namespace sumrank;

TEST(Io, MatrixRoundTrip) {
  std::mt19937_64 rng(61);
  for (auto d : {"2^3/1011", "3^2/112", "2^1/11"}) {
    auto f = Field::parse(d);
    const Matrix m = oracle::random_matrix(f, 3, 2, rng);
    const Json j = to_json(m);
    EXPECT_EQ(j.at("field"), d);
    EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), m);
  }
}

TEST(Io, MatrixEntryForms) {
  auto f = Field::parse("2^3/1011");
  const Json j = Json::parse(R"({"field": "2^3/1011", "data": [["0", "1", "a"], ["a^3", 6, "a^0"]]})");
  const Matrix m = matrix_from_json(j);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(0, 2), f->alpha());
  EXPECT_EQ(m(1, 0), f->pow(f->alpha(), 3));
  EXPECT_EQ(m(1, 1), 6u);
  EXPECT_EQ(m(1, 2), 1u);
  EXPECT_EQ(matrix_from_json(Json::parse(R"({"data": [[1]]})"), f).field()->descriptor(), "2^3/1011");
}

TEST(Io, MatrixErrors) {
  const char* bad[] = {
      R"({"field": "2^3/1011", "data": [[8]]})",
      R"({"field": "2^3/1011", "data": [["b"]]})",
      R"({"field": "2^3/1011", "data": [[1, 2], [1]]})",
      R"({"field": "2^3/1011", "rows": 2, "data": [[1]]})",
      R"({"field": "2^3/1111", "data": [[1]]})",
      R"({"data": [[1]]})",
      R"([1, 2])",
  };
  for (const char* s : bad) EXPECT_THROW(matrix_from_json(Json::parse(s)), ParseError) << s;
}

TEST(Io, CodeAndEncoderRoundTrip) {
  auto f = Field::parse("2^2/111");
  const SystematicBlockCode code{LengthPartition({2, 2}), {1, 1}, Matrix(f, 2, 2, {1, 2, 3, 1})};
  const auto back = code_from_json(Json::parse(to_json(code).dump()));
  EXPECT_EQ(back.partition, code.partition);
  EXPECT_EQ(back.dims, code.dims);
  EXPECT_EQ(back.parity, code.parity);

  const auto enc = construct_frobenius(3, 2, 1, Field::parse("2^4/11001")->params());
  const auto eback = encoder_from_json(Json::parse(to_json(enc).dump()));
  EXPECT_EQ(eback.n(), 3u);
  EXPECT_EQ(eback.memory(), 1u);
  EXPECT_TRUE(eback.is_systematic());
  EXPECT_EQ(eback.parity(1), enc.parity(1));

  Json j = to_json(enc);
  j["m"] = 3;
  EXPECT_THROW(encoder_from_json(j), ParseError);
  Json c = to_json(code);
  c["dims"] = {2, 2};
  EXPECT_THROW(code_from_json(c), ParseError);
}

TEST(Io, ReportRoundTripKeepsWitnessCheckable) {
  const auto enc = construct_frobenius(3, 2, 1, Field::parse("2^4/10011")->params());
  for (bool oracle_side : {false, true}) {
    const auto r = oracle_side ? check_mMSR_oracle(enc, 1) : check_mMSR(enc, 1);
    ASSERT_EQ(r.verdict, Verdict::no);
    const Json j = to_json(r);
    EXPECT_EQ(j.at("verdict"), "false");
    const auto back = report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.verdict, Verdict::no);
    EXPECT_EQ(back.method, r.method);
    EXPECT_EQ(back.counters, r.counters);
    EXPECT_EQ(back.levels.size(), r.levels.size());
    ASSERT_TRUE(back.witness);
    EXPECT_EQ(back.witness->kind, r.witness->kind);
    const auto res = recheck(*back.witness, {std::nullopt, std::nullopt, enc});
    EXPECT_TRUE(res.confirmed) << res.detail;
  }
  EXPECT_THROW(report_from_json(Json::parse(R"({"verdict": "maybe"})")), ParseError);
}

TEST(Io, DistanceResult) {
  auto f = Field::parse("2^3/1011");
  const auto d = min_sum_rank_distance(construct_gabidulin(3, 2, f->params()), LengthPartition::single(3));
  const Json j = to_json(d);
  EXPECT_EQ(j.at("distance"), 2);
  EXPECT_TRUE(j.at("feasible").get<bool>());
}
