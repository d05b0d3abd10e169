#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fiberjoin/admissible.hpp"
#include "fiberjoin/classify.hpp"
#include "fiberjoin/einstein.hpp"
#include "fiberjoin/error.hpp"
#include "fiberjoin/report_io.hpp"

using namespace fiberjoin;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CheckedSpec load_spec(const std::string& path) { return validate(parse_spec(read_input(path))); }

std::string poly_cell(const Polynomial& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ' ';
    out += c.to_fraction_string();
  }
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_invariants(const std::string& path, Format fmt) {
  const auto spec = load_spec(path);
  const auto inv = invariant_report(spec);
  if (fmt == Format::Json) {
    print_json({{"invariants", to_json(inv)}});
  } else {
    std::cout << to_csv({csv_header(), csv_row(spec.classes(), inv, {})});
  }
  return 0;
}

int run_classify(const std::string& path, Format fmt) {
  const auto spec = load_spec(path);
  const auto inv = invariant_report(spec);
  const auto verdicts = classify(spec);
  if (fmt == Format::Json) {
    Json list = Json::array();
    for (const auto& v : verdicts) list.push_back(to_json(v));
    print_json({{"invariants", to_json(inv)}, {"verdicts", std::move(list)}});
  } else {
    std::cout << to_csv({csv_header(), csv_row(spec.classes(), inv, verdicts)});
  }
  return 0;
}

int run_csc(const std::string& path, Format fmt) {
  const auto data = data_from_spec(load_spec(path));
  const auto result = csc_solve(data);
  if (fmt == Format::Json) {
    print_json({{"admissible_data", to_json(data)}, {"csc", to_json(result)}});
  } else {
    std::cout << to_csv({{"verdict", "s", "Q"},
                         {to_string(result.verdict), result.s ? result.s->to_fraction_string() : "",
                          result.Q ? poly_cell(*result.Q) : ""}});
  }
  return 0;
}

int run_extremal(const std::string& path, Format fmt) {
  const auto data = data_from_spec(load_spec(path));
  const auto result = extremal_polynomial(data);
  if (fmt == Format::Json) {
    print_json({{"admissible_data", to_json(data)}, {"extremal", to_json(result)}});
  } else {
    std::cout << to_csv({{"positive", "F_extr", "P", "p_c"},
                         {result.positive ? "true" : "false", poly_cell(result.F), poly_cell(result.P),
                          poly_cell(result.p_c)}});
  }
  return 0;
}

int run_se(const std::string& path, Format fmt) {
  const auto verdict = se_check(load_spec(path));
  if (fmt == Format::Json) {
    print_json({{"se", to_json(verdict)}});
  } else {
    std::cout << to_csv({{"possible", "definite", "reason", "count"},
                         {verdict.possible ? "true" : "false", verdict.definite ? "true" : "false", verdict.reason,
                          verdict.count ? std::to_string(*verdict.count) : ""}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sasaki fiber join invariants and existence criteria"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  std::int64_t max_entry = 0;
  std::uint64_t cap = SurveyOptions{}.cap;
  int rows = 0;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "spec document path, '-' for stdin")->capture_default_str();
    sub->add_option("-f,--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  auto* invariants = app.add_subcommand("invariants", "topological invariants of a spec");
  auto* classify_cmd = app.add_subcommand("classify", "invariants plus every applicable rule");
  auto* csc = app.add_subcommand("csc", "solve the two-factor CSC equations");
  auto* extremal = app.add_subcommand("extremal", "extremal polynomial of the admissible data");
  auto* se = app.add_subcommand("se", "Sasaki-Einstein obstruction check");
  auto* survey_cmd = app.add_subcommand("survey", "classify every K up to a bound");
  for (auto* sub : {invariants, classify_cmd, csc, extremal, se, survey_cmd}) add_common(sub);
  survey_cmd->add_option("--max-entry", max_entry, "largest K entry (overrides the document)");
  survey_cmd->add_option("--rows", rows, "row count when no split is given (overrides the document)");
  survey_cmd->add_option("--cap", cap, "refuse surveys enumerating more matrices")->capture_default_str();
  survey_cmd->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const Format fmt = format == "csv" ? Format::Csv : Format::Json;
  try {
    if (invariants->parsed()) return run_invariants(input, fmt);
    if (classify_cmd->parsed()) return run_classify(input, fmt);
    if (csc->parsed()) return run_csc(input, fmt);
    if (extremal->parsed()) return run_extremal(input, fmt);
    if (se->parsed()) return run_se(input, fmt);
    auto options = parse_survey_request(read_input(input));
    if (max_entry > 0) options.max_entry = max_entry;
    if (rows > 0) options.rows = rows;
    options.cap = cap;
    options.threads = threads;
    std::cout << emit(survey(options), fmt);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 1 : 2;
  }
}
