#include <gtest/gtest.h>

#include "fiberjoin/error.hpp"
#include "fiberjoin/report_io.hpp"

using namespace fiberjoin;

namespace {

Errc parse_error_of(const std::string& text) {
  try {
    validate(parse_spec(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Errc::ParseError;
}

}  // namespace

TEST(ParseSpec, Document) {
  const auto spec = parse_spec(R"({"base": [{"kind": "surface", "genus": 5}, {"kind": "surface", "genus": 3}],
                                   "K": [[2, 1], [1, 3]], "split": [0, 0]})");
  EXPECT_EQ(spec.base.factors[0], BaseFactor::surface(5));
  EXPECT_EQ(spec.classes, (KahlerMatrix{{2, 1}, {1, 3}}));
  EXPECT_EQ(spec.split, (Split{0, 0}));

  const auto other = parse_spec(R"({"base": [{"kind": "projective_space", "n": 2}, {"kind": "torus"}],
                                    "K": [[1, 1], [2, 1]]})");
  EXPECT_EQ(other.base.factors[0], BaseFactor::projective(2));
  EXPECT_EQ(other.base.factors[1], BaseFactor::torus());
  EXPECT_FALSE(other.split.has_value());
}

TEST(ParseSpec, Errors) {
  EXPECT_EQ(parse_error_of("{"), Errc::ParseError);
  EXPECT_EQ(parse_error_of("[1, 2]"), Errc::ParseError);
  EXPECT_EQ(parse_error_of(R"({"base": [{"kind": "klein_bottle"}], "K": [[1], [1]]})"), Errc::ParseError);
  EXPECT_EQ(parse_error_of(R"({"base": [{"kind": "surface"}], "K": [[1], [1]]})"), Errc::ParseError);
  EXPECT_EQ(parse_error_of(R"({"base": [{"kind": "surface", "genus": 1}], "K": [[1.5], [1]]})"), Errc::ParseError);
  EXPECT_EQ(parse_error_of(R"({"base": [{"kind": "surface", "genus": 1}], "K": [[0], [1]]})"), Errc::NonPositiveEntry);
  EXPECT_EQ(parse_error_of(R"({"base": [], "K": [[1], [1]]})"), Errc::EmptyBase);
  EXPECT_EQ(parse_error_of(R"({"base": [{"kind": "surface", "genus": 1}], "K": [[1], [2]], "split": [1, 0]})"),
            Errc::SplitMismatch);
  EXPECT_TRUE(is_input_error(Errc::SplitMismatch));
  EXPECT_FALSE(is_input_error(Errc::SingularSystem));
}

TEST(Emit, RationalsAndPolynomials) {
  CscResult r;
  r.s = Rational(-1);
  r.Q = Polynomial{9, -2, 1} * Rational(1, 12);
  r.verdict = CscKind::Csc;
  const auto j = to_json(r);
  EXPECT_EQ(j["s"], "-1/1");
  EXPECT_EQ(j["Q"], Json::parse(R"(["3/4", "-1/6", "1/12"])"));
  EXPECT_EQ(j["verdict"], "csc");
  EXPECT_EQ(to_json(Polynomial{}), Json::array());
}

TEST(Emit, StableFieldOrder) {
  const auto spec = validate(parse_spec(R"({"base": [{"kind": "surface", "genus": 5}, {"kind": "surface", "genus": 3}],
                                            "K": [[2, 1], [1, 3]]})"));
  const auto inv = to_json(invariant_report(spec));
  std::vector<std::string> keys;
  for (const auto& [k, v] : inv.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"c1", "colinear", "regular_join", "spin", "euler", "p1", "p1_2e_mod4",
                                            "cohomology", "homeo_key", "fano_index", "c2"}));
  const auto verdict = to_json(classify(spec).front());
  std::vector<std::string> vkeys;
  for (const auto& [k, v] : verdict.items()) vkeys.push_back(k);
  EXPECT_EQ(vkeys, (std::vector<std::string>{"kind", "rule", "citation", "open_set", "witness"}));
}

TEST(Emit, Csv) {
  EXPECT_EQ(to_csv({{"a", "b,c", "say \"hi\""}}), "a,\"b,c\",\"say \"\"hi\"\"\"\n");
  SurveyOptions opt;
  opt.base = {{BaseFactor::projective(1), BaseFactor::projective(1)}};
  opt.max_entry = 2;
  const auto csv = emit(survey(opt), Format::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "K,colinear,c1,spin,euler,p1,p1_2e_mod4,homeo_p1,homeo_e,fano_index,verdicts,rules");
  EXPECT_NE(csv.find("1 1;1 1,true,0 0,spin,2,0,true,,,2,"), std::string::npos) << csv;
}
