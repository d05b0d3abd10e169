#include "fiberjoin/report_io.hpp"

#include <sstream>

#include "fiberjoin/error.hpp"

namespace fiberjoin {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::int64_t as_int(const Json& j, const char* field) {
  if (!j.is_number_integer()) parse_fail(std::string(field) + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    parse_fail(std::string(field) + " is out of range");
  return j.get<std::int64_t>();
}

int as_small_int(const Json& j, const char* field) {
  const auto v = as_int(j, field);
  if (v < INT32_MIN || v > INT32_MAX) parse_fail(std::string(field) + " is out of range");
  return static_cast<int>(v);
}

Json parse_document(std::string_view text) {
  try {
    auto doc = Json::parse(text.begin(), text.end());
    if (!doc.is_object()) parse_fail("spec document must be a JSON object");
    return doc;
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

BaseFactor parse_factor(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) parse_fail("base factor needs a kind");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "surface" || kind == "riemann_surface") {
    if (!j.contains("genus")) parse_fail("surface needs a genus");
    return BaseFactor::surface(as_small_int(j["genus"], "genus"));
  }
  if (kind == "projective_space" || kind == "projective") {
    if (!j.contains("n")) parse_fail("projective space needs n");
    return BaseFactor::projective(as_small_int(j["n"], "n"));
  }
  if (kind == "torus" || kind == "torus_2d") return BaseFactor::torus();
  parse_fail("unknown base kind '" + kind + "'");
}

BaseProduct parse_base(const Json& doc) {
  if (!doc.contains("base") || !doc["base"].is_array()) parse_fail("spec needs a base array");
  BaseProduct base;
  for (const auto& f : doc["base"]) base.factors.push_back(parse_factor(f));
  return base;
}

std::optional<Split> parse_split(const Json& doc) {
  if (!doc.contains("split") || doc["split"].is_null()) return std::nullopt;
  const auto& s = doc["split"];
  if (!s.is_array() || s.size() != 2) parse_fail("split must be [d0, dinf]");
  return Split{as_small_int(s[0], "d0"), as_small_int(s[1], "dinf")};
}

Json ints(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FiberJoinSpec parse_spec(std::string_view text) {
  const Json doc = parse_document(text);
  FiberJoinSpec spec;
  spec.base = parse_base(doc);
  if (!doc.contains("K") || !doc["K"].is_array()) parse_fail("spec needs a K matrix");
  for (const auto& row : doc["K"]) {
    if (!row.is_array()) parse_fail("each row of K must be an array");
    KahlerRow r;
    for (const auto& v : row) r.push_back(as_int(v, "K entry"));
    spec.classes.push_back(std::move(r));
  }
  spec.split = parse_split(doc);
  return spec;
}

SurveyOptions parse_survey_request(std::string_view text) {
  const Json doc = parse_document(text);
  SurveyOptions opt;
  opt.base = parse_base(doc);
  opt.split = parse_split(doc);
  if (doc.contains("rows")) opt.rows = as_small_int(doc["rows"], "rows");
  if (doc.contains("max_entry")) opt.max_entry = as_int(doc["max_entry"], "max_entry");
  return opt;
}

Json to_json(const Rational& r) { return r.to_fraction_string(); }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const BaseProduct& base) {
  Json out = Json::array();
  for (const auto& f : base.factors) {
    Json j;
    switch (f.kind) {
      case FactorKind::RiemannSurface: j = {{"kind", "surface"}, {"genus", f.genus}}; break;
      case FactorKind::ProjectiveSpace: j = {{"kind", "projective_space"}, {"n", f.n}}; break;
      case FactorKind::Torus: j = {{"kind", "torus"}}; break;
    }
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const KahlerMatrix& k) {
  Json out = Json::array();
  for (const auto& row : k) out.push_back(ints(row));
  return out;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["c1"] = ints(r.c1);
  j["colinear"] = r.colinear;
  if (r.regular_join) {
    j["regular_join"] = {{"b", r.regular_join->b},
                         {"w", ints(r.regular_join->w)},
                         {"multiples", ints(r.regular_join->multiples)},
                         {"primitive", ints(r.regular_join->primitive)}};
  } else {
    j["regular_join"] = nullptr;
  }
  j["spin"] = to_string(r.spin);
  j["euler"] = optional_json(r.euler);
  j["p1"] = optional_json(r.p1);
  j["p1_2e_mod4"] = optional_json(r.p1_2e_mod4);
  if (r.cohomology) {
    Json groups = Json::array();
    for (const auto& g : r.cohomology->groups)
      groups.push_back({{"degree", g.degree}, {"rank", g.rank}, {"torsion", ints(g.torsion)}});
    j["cohomology"] = std::move(groups);
  } else {
    j["cohomology"] = nullptr;
  }
  j["homeo_key"] = r.homeo ? Json{{"p1", r.homeo->p1}, {"euler", r.homeo->euler}} : Json(nullptr);
  j["fano_index"] = optional_json(r.fano_index);
  if (r.c2) {
    Json terms = Json::array();
    for (const auto& [m, c] : *r.c2) {
      Json mono = Json::array();
      for (int e : m) mono.push_back(e);
      terms.push_back({{"monomial", std::move(mono)}, {"coefficient", c}});
    }
    j["c2"] = std::move(terms);
  } else {
    j["c2"] = nullptr;
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["rule"] = v.rule_id;
  j["citation"] = v.citation;
  j["open_set"] = v.open_set;
  if (v.witness.empty()) {
    j["witness"] = nullptr;
  } else {
    Json w = Json::object();
    if (v.witness.s) w["s"] = to_json(*v.witness.s);
    if (v.witness.Q) w["Q"] = to_json(*v.witness.Q);
    if (v.witness.F_extr) w["F_extr"] = to_json(*v.witness.F_extr);
    if (v.witness.count) w["count"] = *v.witness.count;
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const AdmissibleData& data) {
  Json out = Json::array();
  for (const auto& e : data.entries) {
    Json j;
    j["label"] = to_string(e.kind);
    if (e.kind == EntryKind::BaseFactor) j["factor"] = e.factor;
    j["d"] = e.d;
    j["s"] = to_json(e.s);
    j["r"] = to_json(e.r);
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const CscResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["s"] = r.s ? to_json(*r.s) : Json(nullptr);
  j["Q"] = r.Q ? to_json(*r.Q) : Json(nullptr);
  return j;
}

Json to_json(const ExtremalResult& r) {
  return {{"F_extr", to_json(r.F)}, {"P", to_json(r.P)}, {"p_c", to_json(r.p_c)}, {"positive", r.positive}};
}

Json to_json(const SEVerdict& v) {
  Json j;
  j["possible"] = v.possible;
  j["definite"] = v.definite;
  j["reason"] = v.reason;
  Json violations = Json::array();
  for (const auto& x : v.violations) violations.push_back({{"rule", x.rule}, {"detail", x.detail}});
  j["violations"] = std::move(violations);
  j["count"] = optional_json(v.count);
  return j;
}

Json to_json(const SurveyReport& r) {
  Json meta;
  meta["base"] = to_json(r.options.base);
  meta["split"] = r.options.split ? Json::array({r.options.split->d0, r.options.split->dinf}) : Json(nullptr);
  meta["rows"] = r.options.split ? r.options.split->d0 + r.options.split->dinf + 2 : r.options.rows;
  meta["bounds"] = {{"min_entry", 1}, {"max_entry", r.options.max_entry}};
  meta["enumerated"] = r.enumerated;
  meta["distinct"] = r.entries.size();
  meta["version"] = r.version;

  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json verdicts = Json::array();
    for (const auto& v : e.verdicts) verdicts.push_back(to_json(v));
    entries.push_back({{"K", to_json(e.K)}, {"invariants", to_json(e.invariants)}, {"verdicts", std::move(verdicts)}});
  }
  return {{"metadata", std::move(meta)}, {"entries", std::move(entries)}};
}

std::vector<std::string> csv_header() {
  return {"K", "colinear", "c1", "spin", "euler", "p1", "p1_2e_mod4", "homeo_p1", "homeo_e", "fano_index",
          "verdicts", "rules"};
}

std::vector<std::string> csv_row(const KahlerMatrix& k, const InvariantReport& r, const std::vector<Verdict>& v) {
  std::string matrix;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (j) matrix += ';';
    matrix += join(k[j], " ");
  }
  std::string kinds, rules;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) {
      kinds += '|';
      rules += '|';
    }
    kinds += to_string(v[i].kind);
    rules += v[i].rule_id;
  }
  return {matrix,
          r.colinear ? "true" : "false",
          join(r.c1, " "),
          to_string(r.spin),
          cell(r.euler),
          cell(r.p1),
          cell(r.p1_2e_mod4),
          r.homeo ? std::to_string(r.homeo->p1) : "",
          r.homeo ? std::to_string(r.homeo->euler) : "",
          cell(r.fano_index),
          kinds,
          rules};
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string emit(const SurveyReport& report, Format format) {
  if (format == Format::Json) return to_json(report).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows{csv_header()};
  for (const auto& e : report.entries) rows.push_back(csv_row(e.K, e.invariants, e.verdicts));
  return to_csv(rows);
}

}  // namespace fiberjoin
