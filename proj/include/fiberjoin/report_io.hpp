#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fiberjoin/admissible.hpp"
#include "fiberjoin/classify.hpp"
#include "fiberjoin/einstein.hpp"
#include "fiberjoin/model.hpp"

namespace fiberjoin {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

/// {"base": [{"kind": "surface", "genus": 5}, ...], "K": [[2, 1], [1, 3]], "split": [0, 0]}
/// Throws ParseError; shape and positivity are left to validate().
FiberJoinSpec parse_spec(std::string_view text);

/// A spec document without K, plus optional "rows" and "max_entry".
SurveyOptions parse_survey_request(std::string_view text);

Json to_json(const Rational& r);
Json to_json(const Polynomial& p);
Json to_json(const BaseProduct& base);
Json to_json(const KahlerMatrix& k);
Json to_json(const InvariantReport& r);
Json to_json(const Verdict& v);
Json to_json(const AdmissibleData& data);
Json to_json(const CscResult& r);
Json to_json(const ExtremalResult& r);
Json to_json(const SEVerdict& v);
Json to_json(const SurveyReport& r);

/// One row per spec: flattened invariants followed by verdict kinds.
std::vector<std::string> csv_header();
std::vector<std::string> csv_row(const KahlerMatrix& k, const InvariantReport& r, const std::vector<Verdict>& v);

std::string to_csv(const std::vector<std::vector<std::string>>& rows);
std::string emit(const SurveyReport& report, Format format);

}  // namespace fiberjoin
