#include "hurwitz/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hurwitz/cli/record.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz::cli {

namespace {

struct Options {
  std::string format = "human";
  std::uint64_t seed = kDefaultSeed;
  SearchBounds bounds;
  int workers = 1;
};

struct Context {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;

  bool structured() const { return opt.format != "human"; }
};

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

bool read_file(const std::string& path, std::string& content) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  content = buf.str();
  return true;
}

// Branch data may be given inline or as a path to a file holding it.
std::string load_input(const std::string& arg) {
  std::error_code ec;
  if (arg.find(';') == std::string::npos && std::filesystem::is_regular_file(arg, ec)) {
    std::string content;
    if (read_file(arg, content)) return trim(content);
  }
  return arg;
}

std::string locate(std::string_view text, std::size_t pos) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string describe(std::string_view text, const ParseError& e) {
  return "parse error at " + locate(text, e.position()) + ": " + e.what();
}

void emit(const Context& ctx, const json& record) { ctx.out << record.dump(2) << '\n'; }

int fail(const Context& ctx, json record, int code, const std::string& message) {
  if (ctx.structured()) {
    record["error"] = message;
    record["exit_code"] = code;
    emit(ctx, record);
  }
  ctx.err << "error: " << message << '\n';
  return code;
}

void print_witness(std::ostream& os, const BranchData& data, const HurwitzWitness& w) {
  os << "witness (d=" << w.degree << "):\n";
  os << "  alpha    = " << w.alpha.to_string() << '\n';
  for (std::size_t i = 0; i < w.gammas.size(); ++i) {
    os << "  gamma[" << i << "] = " << w.gammas[i].to_string();
    if (i < w.row_order.size()) {
      int row = w.row_order[i];
      os << "  row " << row;
      if (row >= 0 && row < data.row_count()) os << ' ' << data.rows()[static_cast<std::size_t>(row)].to_string();
    }
    os << '\n';
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string block_string(const PointSet& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? ", " : "") + std::to_string(block[i]);
  return s + "}";
}

void print_certificate(std::ostream& os, const Certificate& c) {
  os << "certificate:\n";
  os << "  relation      " << (c.relation_ok ? "ok" : "FAILED") << '\n';
  os << "  row types     " << (c.row_types_ok ? "ok" : "FAILED") << '\n';
  os << "  transitive    " << yes_no(c.transitive) << '\n';
  os << "  primitive     " << yes_no(c.primitive) << '\n';
  if (c.witness_block) os << "  block         " << block_string(*c.witness_block) << '\n';
  os << "  euler char    " << c.euler_char << '\n';
  os << "  all checks    " << (c.all_ok() ? "passed" : "FAILED") << '\n';
}

void print_bounds(std::ostream& os, const SearchBounds& b) {
  os << "bounds: max degree " << b.max_degree << ", max rows " << b.max_rows << ", element cap " << b.element_cap
     << '\n';
}

// ---------------------------------------------------------------------------

int cmd_check(const Context& ctx, const std::string& arg) {
  const std::string text = load_input(arg);
  json record = record_header("check", text);
  std::optional<BranchData> data;
  try {
    data = parse_branch_data(text);
  } catch (const ParseError& e) {
    return fail(ctx, record, kParseError, describe(text, e));
  }
  const Admissibility adm = is_admissible(*data);
  std::optional<int> chi;
  if (adm.admissible) chi = euler_char_covering(*data);

  if (ctx.structured()) {
    record["degree"] = data->degree();
    record["rows"] = data->row_count();
    record["total_defect"] = adm.total_defect;
    record["admissible"] = adm.admissible;
    record["reason"] = adm.reason;
    record["euler_char"] = chi ? json(*chi) : json(nullptr);
    emit(ctx, record);
  } else {
    ctx.out << "input: " << data->to_string() << '\n';
    ctx.out << "degree d: " << data->degree() << '\n';
    ctx.out << "rows s: " << data->row_count() << '\n';
    ctx.out << "total defect nu: " << adm.total_defect << '\n';
    ctx.out << "admissible: " << yes_no(adm.admissible) << " (" << adm.reason << ")\n";
    ctx.out << "euler characteristic chi(M): " << (chi ? std::to_string(*chi) : "n/a") << '\n';
  }
  return adm.admissible ? kAffirmative : kNegative;
}

int cmd_classify(const Context& ctx, const std::string& arg) {
  const std::string text = load_input(arg);
  json record = record_header("classify", text);
  std::optional<BranchData> data;
  try {
    data = parse_branch_data(text);
  } catch (const ParseError& e) {
    return fail(ctx, record, kParseError, describe(text, e));
  }
  Classification c;
  try {
    c = classify_with_oracle(*data, ctx.opt.bounds);
  } catch (const CapExceeded& e) {
    return fail(ctx, record, kOutOfBounds, e.what());
  }
  const bool searched = c.realizable_case == RealizableCase::ExhaustiveSearch ||
                        c.reason == DecomposableReason::ExhaustiveSearch ||
                        (data->degree() % 2 == 1 && c.verdict == Verdict::NotAdmissible && is_admissible(*data).admissible);
  const std::string engine = searched ? "exhaustive-search" : "theorem";
  if (ctx.structured()) {
    record["classification"] = to_json(c);
    record["engine_path"] = engine;
    record["bounds"] = to_json(ctx.opt.bounds);
    emit(ctx, record);
  } else {
    ctx.out << "input: " << data->to_string() << '\n';
    ctx.out << "classification: " << c.to_string() << '\n';
    ctx.out << "detail: " << c.detail << '\n';
    ctx.out << "engine: " << engine << '\n';
  }
  return c.verdict == Verdict::UnknownOddDegree ? kUnknown : kAffirmative;
}

int cmd_realize(const Context& ctx, const std::string& arg) {
  const std::string text = load_input(arg);
  json record = record_header("realize", text);
  record["seed"] = ctx.opt.seed;
  std::optional<BranchData> data;
  try {
    data = parse_branch_data(text);
  } catch (const ParseError& e) {
    return fail(ctx, record, kParseError, describe(text, e));
  }
  const Classification c = classify(*data);
  record["classification"] = to_json(c);
  if (c.verdict != Verdict::IndecomposableRealizable) {
    return fail(ctx, record, kForbidden, "classification " + c.to_string() + " admits no indecomposable witness");
  }
  SearchOptions options;
  options.seed = ctx.opt.seed;
  std::optional<Realization> r;
  try {
    r = realize_indecomposable(*data, options);
  } catch (const std::exception& e) {
    return fail(ctx, record, kEngineDefect, std::string("engine failure: ") + e.what());
  }
  if (!r->certificate.all_ok()) {
    record["witness"] = to_json(r->witness);
    record["certificate"] = to_json(r->certificate);
    return fail(ctx, record, kEngineDefect, "engine produced a witness that fails verification");
  }

  if (ctx.structured()) {
    record["engine_path"] = to_string(r->path);
    record["witness"] = to_json(r->witness);
    record["certificate"] = to_json(r->certificate);
    json fold = json::array();
    for (const auto& step : r->trace) {
      fold.push_back({{"row", step.row},
                      {"goal", step.goal},
                      {"product_defect", step.product_defect},
                      {"remaining_defect", step.remaining_defect}});
    }
    record["fold"] = fold;
    emit(ctx, record);
  } else {
    ctx.out << "input: " << data->to_string() << '\n';
    ctx.out << "classification: " << c.to_string() << '\n';
    ctx.out << "engine: " << to_string(r->path) << " (seed " << ctx.opt.seed << ")\n";
    if (!r->trace.empty()) {
      ctx.out << "fold:\n";
      for (const auto& step : r->trace) {
        ctx.out << "  row " << step.row << ": " << step.goal << " -> product defect " << step.product_defect
                << ", remaining " << step.remaining_defect << '\n';
      }
    }
    print_witness(ctx.out, *data, r->witness);
    print_certificate(ctx.out, r->certificate);
  }
  return kAffirmative;
}

int cmd_verify(const Context& ctx, const std::string& arg, const std::string& witness_path) {
  json record = record_header("verify", "");
  std::string raw;
  if (!read_file(witness_path, raw)) return fail(ctx, record, kParseError, "cannot read witness file " + witness_path);
  json source;
  try {
    source = json::parse(raw);
  } catch (const json::exception& e) {
    return fail(ctx, record, kParseError, std::string("witness file is not valid JSON: ") + e.what());
  }

  std::string text;
  if (!arg.empty()) {
    text = load_input(arg);
  } else if (source.is_object() && source.contains("input") && source["input"].is_string()) {
    text = source["input"].get<std::string>();
  } else {
    return fail(ctx, record, kParseError, "no branch data given and the witness record has no input");
  }
  record["input"] = text;
  record["witness_file"] = witness_path;

  std::optional<BranchData> data;
  try {
    data = parse_branch_data(text);
  } catch (const ParseError& e) {
    return fail(ctx, record, kParseError, describe(text, e));
  }
  HurwitzWitness witness;
  try {
    witness = witness_from_json(source);
  } catch (const std::invalid_argument& e) {
    return fail(ctx, record, kParseError, e.what());
  }
  const Certificate cert = verify_witness(*data, witness);

  if (ctx.structured()) {
    record["witness"] = to_json(witness);
    record["certificate"] = to_json(cert);
    emit(ctx, record);
  } else {
    ctx.out << "input: " << data->to_string() << '\n';
    print_witness(ctx.out, *data, witness);
    print_certificate(ctx.out, cert);
  }
  return cert.all_ok() ? kAffirmative : kNegative;
}

enum class OracleQuery { Exists, Primitive, Survey, Involutions };

std::string query_name(OracleQuery q) {
  switch (q) {
    case OracleQuery::Exists: return "exists";
    case OracleQuery::Primitive: return "primitive";
    case OracleQuery::Survey: return "survey";
    case OracleQuery::Involutions: return "involutions";
  }
  return "?";
}

int oracle_involutions(const Context& ctx, const std::string& text, json record) {
  static const std::regex pattern(R"(\s*d\s*=\s*(\d{1,6})\s*;?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    return fail(ctx, record, kParseError, "expected 'd=N' for the involution survey");
  }
  const int d = std::stoi(m[1].str());
  InvolutionSurvey survey;
  try {
    survey = involution_pair_survey(d, ctx.opt.bounds);
  } catch (const BoundsExceeded& e) {
    return fail(ctx, record, kOutOfBounds, e.what());
  } catch (const CapExceeded& e) {
    return fail(ctx, record, kOutOfBounds, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, record, kParseError, e.what());
  }
  if (ctx.structured()) {
    record["result"] = survey.confirmed();
    record["survey"] = to_json(survey);
    emit(ctx, record);
  } else {
    ctx.out << "involution pairs at d=" << d << '\n';
    print_bounds(ctx.out, ctx.opt.bounds);
    ctx.out << "pairs examined: " << survey.pairs_examined << '\n';
    ctx.out << "transitive pairs: " << survey.transitive_pairs << '\n';
    ctx.out << "imprimitive: " << survey.imprimitive_pairs << '\n';
    ctx.out << "odd points form a block (after relabeling): " << survey.canonical_block_pairs << '\n';
    ctx.out << "conjugate to the canonical pair: " << survey.conjugate_to_canonical << '\n';
    if (survey.sample) {
      ctx.out << "sample: " << survey.sample->first.to_string() << ", " << survey.sample->second.to_string();
      if (survey.sample_block) ctx.out << "  block " << block_string(*survey.sample_block);
      ctx.out << '\n';
    }
    ctx.out << "unique up to conjugacy: " << (survey.confirmed() ? "confirmed" : "NOT confirmed") << '\n';
  }
  return survey.confirmed() ? kAffirmative : kNegative;
}

int cmd_oracle(const Context& ctx, const std::string& arg, OracleQuery query) {
  const std::string text = query == OracleQuery::Involutions ? arg : load_input(arg);
  json record = record_header("oracle", text);
  record["query"] = query_name(query);
  record["bounds"] = to_json(ctx.opt.bounds);
  if (query == OracleQuery::Involutions) return oracle_involutions(ctx, text, record);

  std::optional<BranchData> data;
  try {
    data = parse_branch_data(text);
  } catch (const ParseError& e) {
    return fail(ctx, record, kParseError, describe(text, e));
  }
  try {
    check_bounds(*data, ctx.opt.bounds);
    if (query == OracleQuery::Survey) {
      const RealizationSurvey survey = survey_realizations(*data, ctx.opt.bounds);
      const bool any = survey.transitive_primitive + survey.transitive_imprimitive > 0;
      if (ctx.structured()) {
        record["result"] = any;
        record["survey"] = to_json(survey);
        emit(ctx, record);
      } else {
        ctx.out << "input: " << data->to_string() << '\n';
        print_bounds(ctx.out, ctx.opt.bounds);
        ctx.out << "gamma tuples: " << survey.gamma_tuples << '\n';
        ctx.out << "square products: " << survey.square_products << '\n';
        ctx.out << "witnesses: " << survey.witnesses << '\n';
        ctx.out << "  intransitive: " << survey.intransitive << '\n';
        ctx.out << "  transitive primitive: " << survey.transitive_primitive << '\n';
        ctx.out << "  transitive imprimitive: " << survey.transitive_imprimitive << '\n';
        if (survey.sample_primitive) {
          ctx.out << "sample primitive ";
          print_witness(ctx.out, *data, *survey.sample_primitive);
        }
        if (survey.sample_imprimitive) {
          ctx.out << "sample imprimitive ";
          print_witness(ctx.out, *data, *survey.sample_imprimitive);
        }
      }
      return any ? kAffirmative : kNegative;
    }

    const bool primitive = query == OracleQuery::Primitive;
    const std::optional<HurwitzWitness> w =
        primitive ? find_primitive_realization(*data, ctx.opt.bounds) : find_realization(*data, ctx.opt.bounds);
    if (ctx.structured()) {
      record["result"] = w.has_value();
      record["witness"] = w ? to_json(*w) : json(nullptr);
      emit(ctx, record);
    } else {
      ctx.out << "input: " << data->to_string() << '\n';
      print_bounds(ctx.out, ctx.opt.bounds);
      ctx.out << (primitive ? "primitive realization: " : "realization: ") << yes_no(w.has_value()) << '\n';
      if (w) print_witness(ctx.out, *data, *w);
    }
    return w ? kAffirmative : kNegative;
  } catch (const BoundsExceeded& e) {
    return fail(ctx, record, kOutOfBounds, e.what());
  } catch (const CapExceeded& e) {
    return fail(ctx, record, kOutOfBounds, e.what());
  }
}

struct BatchLine {
  int line = 0;
  std::string input;
  std::string tag;
  std::string error;
  bool parse_error = false;
};

BatchLine classify_line(int line, const std::string& text, const SearchBounds& bounds) {
  BatchLine r{line, text, "", "", false};
  try {
    r.tag = classify_with_oracle(parse_branch_data(text), bounds).to_string();
  } catch (const ParseError& e) {
    r.error = "column " + std::to_string(e.position() + 1) + ": " + e.what();
    r.parse_error = true;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

int cmd_batch(const Context& ctx, const std::string& path) {
  json record = record_header("batch", path);
  std::string content;
  if (!read_file(path, content)) return fail(ctx, record, kParseError, "cannot read batch file " + path);

  std::vector<std::pair<int, std::string>> jobs;
  std::istringstream in(content);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    jobs.emplace_back(n, line);
  }

  SearchBounds bounds = ctx.opt.bounds;
  bounds.workers = 1;
  std::vector<BatchLine> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = classify_line(jobs[i].first, jobs[i].second, bounds);
    }
  };
  const int workers = std::clamp(ctx.opt.workers, 1, 64);
  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  bool parse_errors = false;
  json reports = json::array();
  for (const auto& r : results) {
    parse_errors = parse_errors || r.parse_error;
    if (ctx.structured()) {
      json item{{"line", r.line}, {"input", r.input}};
      if (r.error.empty()) {
        item["classification"] = r.tag;
      } else {
        item["error"] = r.error;
      }
      reports.push_back(item);
    } else if (r.error.empty()) {
      ctx.out << r.line << ": " << r.input << " -> " << r.tag << '\n';
    } else {
      ctx.out << r.line << ": error: " << r.error << '\n';
    }
  }
  if (ctx.structured()) {
    record["bounds"] = to_json(ctx.opt.bounds);
    record["reports"] = reports;
    emit(ctx, record);
  }
  return parse_errors ? kParseError : kAffirmative;
}

void add_common_options(CLI::App* app, Options& opt) {
  app->add_option("--format", opt.format, "Output format: human or json (alias: structured)")
      ->check(CLI::IsMember({"human", "json", "structured"}));
  app->add_option("--seed", opt.seed, "Seed for randomized search");
  app->add_option("--max-degree", opt.bounds.max_degree, "Oracle bound on the degree")->check(CLI::PositiveNumber);
  app->add_option("--max-rows", opt.bounds.max_rows, "Oracle bound on the number of rows")
      ->check(CLI::PositiveNumber);
  app->add_option("--element-cap", opt.bounds.element_cap, "Cap on enumerated group elements")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Branch data over the projective plane: admissibility, classification and witnesses", "hurwitz"};
  app.set_version_flag("--version", std::string("hurwitz ") + kToolVersion);
  app.require_subcommand(1);
  add_common_options(&app, opt);

  std::string input;
  std::string witness_path;
  bool q_exists = false, q_primitive = false, q_survey = false, q_involutions = false;

  auto* check = app.add_subcommand("check", "Admissibility, total defect and Euler characteristic");
  check->add_option("input", input, "Branch data or a file holding it")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Indecomposable realizability verdict");
  classify_cmd->add_option("input", input, "Branch data or a file holding it")->required();
  auto* realize = app.add_subcommand("realize", "Build and certify an indecomposable witness");
  realize->add_option("input", input, "Branch data or a file holding it")->required();
  auto* verify = app.add_subcommand("verify", "Check a witness record");
  verify->add_option("input", input, "Branch data (defaults to the record's input)");
  verify->add_option("--witness", witness_path, "Witness record (JSON)")->required();
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search at small degree");
  oracle->add_option("input", input, "Branch data, or d=N with --involutions")->required();
  auto* f1 = oracle->add_flag("--exists", q_exists, "Some transitive witness exists (default)");
  auto* f2 = oracle->add_flag("--primitive", q_primitive, "Some primitive witness exists");
  auto* f3 = oracle->add_flag("--survey", q_survey, "Count every witness by transitivity and primitivity");
  auto* f4 = oracle->add_flag("--involutions", q_involutions, "Survey pairs of fixed-point-free involutions");
  f1->excludes(f2, f3, f4);
  f2->excludes(f3, f4);
  f3->excludes(f4);
  auto* batch = app.add_subcommand("batch", "Classify one branch datum per line");
  batch->add_option("file", input, "Input file")->required()->check(CLI::ExistingFile);
  for (auto* sub : {oracle, batch}) {
    sub->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {check, classify_cmd, realize, verify, oracle, batch}) add_common_options(sub, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kParseError;
  }
  opt.bounds.workers = opt.workers;

  const Context ctx{opt, out, err};
  try {
    if (*check) return cmd_check(ctx, input);
    if (*classify_cmd) return cmd_classify(ctx, input);
    if (*realize) return cmd_realize(ctx, input);
    if (*verify) return cmd_verify(ctx, input, witness_path);
    if (*batch) return cmd_batch(ctx, input);
    OracleQuery q = OracleQuery::Exists;
    if (q_primitive) q = OracleQuery::Primitive;
    if (q_survey) q = OracleQuery::Survey;
    if (q_involutions) q = OracleQuery::Involutions;
    return cmd_oracle(ctx, input, q);
  } catch (const std::exception& e) {
    err << "error: internal failure: " << e.what() << '\n';
    return kEngineDefect;
  }
}

}  // namespace hurwitz::cli
