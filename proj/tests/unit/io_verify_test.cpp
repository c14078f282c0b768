#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lhl/error.hpp"
#include "lhl/io.hpp"
#include "lhl/poset.hpp"
#include "lhl/simplex.hpp"
#include "lhl/verify.hpp"

namespace lhl {
namespace {

TEST(Json, PolynomialRoundTrip) {
  const IntPolynomial p{0, 1, 7, 1};
  EXPECT_EQ(to_json(p).dump(), "[0,1,7,1]");
  EXPECT_EQ(polynomial_from_json(Json::parse("[0,1,7,1]")), p);
  EXPECT_EQ(to_json(IntPolynomial()).dump(), "[]");
}

TEST(Json, BigIntegersBecomeStrings) {
  const BigInt big = BigInt(1) << 70;
  const Json j = to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(j.get<std::string>(), "1180591620717411303424");
  EXPECT_EQ(big_int_from_json(j), big);
  EXPECT_EQ(big_int_from_json(Json(42)), 42);
  const IntPolynomial p(std::vector<BigInt>{1, big});
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  EXPECT_THROW(big_int_from_json(Json("12x")), Error);
  EXPECT_THROW(big_int_from_json(Json(1.5)), Error);
}

TEST(Json, SimplexAndPosetRoundTrip) {
  const LatticeSimplex t = lecture_hall_simplex(SSequence({2, 3}));
  EXPECT_EQ(simplex_from_json(to_json(t)).vertices(), t.vertices());
  const Poset p(3, {{1, 3}, {2, 3}});
  EXPECT_EQ(to_json(p).dump(), R"({"n":3,"covers":[[1,3],[2,3]]})");
  EXPECT_EQ(poset_from_json(Json::parse(R"({"n": 3, "covers": [[1,3],[2,3]]})")), p);
  EXPECT_THROW(poset_from_json(Json::parse(R"({"n": 2, "covers": [[2,1]]})")), Error);
  EXPECT_THROW(poset_from_json(Json::parse(R"({"covers": []})")), Error);
}

TEST(Json, ReadFileReportsMissingPath) {
  EXPECT_THROW(read_json_file("/nonexistent/poset.json"), Error);
  const auto path = std::filesystem::temp_directory_path() / "lhl_io_test.json";
  std::ofstream(path) << R"({"n": 1, "covers": []})";
  EXPECT_EQ(poset_from_json(read_json_file(path)).size(), 1u);
  std::filesystem::remove(path);
}

TEST(Report, EmptyCsvIsHeaderOnly) {
  VerificationReport r;
  r.suite = "empty";
  EXPECT_EQ(emit_table(r, TableFormat::Csv), "suite,id,parameters,expected,actual,passed\n");
  EXPECT_TRUE(r.passed());
}

TEST(Report, JsonRoundTripIsLossless) {
  VerificationReport r;
  r.suite = "demo";
  r.duration_ms = 17;
  r.checks.push_back({"a/1", "n=3, r=2", "[1,2]", "[1,2]", true});
  r.checks.push_back({"b/\"quoted\"", "x", "1", "2", false});
  EXPECT_FALSE(r.passed());
  const VerificationReport back = report_from_json(Json::parse(emit_table(r, TableFormat::Json)));
  EXPECT_EQ(back, r);
}

TEST(Report, CsvQuotesFieldsWithCommas) {
  VerificationReport r;
  r.suite = "demo";
  r.checks.push_back({"a", "n=3, r=2", "\"x\"", "y", true});
  EXPECT_EQ(emit_table(r, TableFormat::Csv),
            "suite,id,parameters,expected,actual,passed\n"
            "demo,a,\"n=3, r=2\",\"\"\"x\"\"\",y,true\n");
}

TEST(Suites, EveryNamedSuitePassesAtSmallCaps) {
  VerifyOptions o;
  o.max_n = 3;
  o.max_entry = 3;
  o.samples = 2;
  for (const auto& name : suite_names()) {
    const VerificationReport r = run_suite(name, o);
    EXPECT_EQ(r.suite, name);
    EXPECT_FALSE(r.checks.empty()) << name;
    EXPECT_TRUE(r.passed()) << emit_table(r, TableFormat::Csv);
    EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                               [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
  }
}

TEST(Suites, AreDeterministic) {
  VerifyOptions o;
  o.max_n = 3;
  o.samples = 3;
  VerificationReport a = run_suite("recursion", o);
  VerificationReport b = run_suite("recursion", o);
  a.duration_ms = b.duration_ms = 0;
  EXPECT_EQ(a, b);
}

TEST(Suites, UnknownNameIsRejected) {
  try {
    run_suite("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

}  // namespace
}  // namespace lhl
