#include "dlexplain/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dlexplain/fol.hpp"
#include "dlexplain/ingest.hpp"
#include "dlexplain/reasoner.hpp"
#include "dlexplain/text.hpp"

namespace dlx {

using nlohmann::json;

json config_to_json(const SearchConfig& cfg) {
  return json{{"enable_disjunction", cfg.enable_disjunction},
              {"length_penalty", cfg.length_penalty.to_double()},
              {"max_expansions", cfg.max_expansions},
              {"max_length", cfg.max_length},
              {"noise", cfg.noise.to_double()},
              {"top_k", cfg.top_k}};
}

json learn_report_to_json(const SearchResult& result, const SearchConfig& cfg) {
  json solutions = json::array();
  for (const auto& s : result.solutions) {
    solutions.push_back(json{{"accuracy", s.coverage.accuracy.to_double()},
                             {"approximate", s.approximate},
                             {"expression", render_expression(s.expression)},
                             {"fn", s.coverage.false_neg.size()},
                             {"fp", s.coverage.false_pos.size()},
                             {"length", s.length},
                             {"score", s.score.to_double()},
                             {"tn", s.coverage.true_neg.size()},
                             {"tp", s.coverage.true_pos.size()}});
  }
  return json{{"config", config_to_json(cfg)},
              {"exhausted", result.exhausted},
              {"expansions_used", result.expansions_used},
              {"solutions", std::move(solutions)}};
}

json solution_to_json(const Solution& s) {
  const auto& c = s.coverage;
  return json{{"accuracy", c.accuracy.to_double()},
              {"approximate", s.approximate},
              {"expression", render_expression(s.expression)},
              {"falseNegatives", c.false_neg},
              {"falsePositives", c.false_pos},
              {"fn", c.false_neg.size()},
              {"fp", c.false_pos.size()},
              {"length", s.length},
              {"score", s.score.to_double()},
              {"tn", c.true_neg.size()},
              {"tp", c.true_pos.size()},
              {"trueNegatives", c.true_neg},
              {"truePositives", c.true_pos}};
}

namespace cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

// Parse errors are reported together with the file they came from.
template <typename Fn>
auto with_source(const std::string& source, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (ParseError& e) {
    throw ParseError(e.span(), source + ": " + e.message(), e.expected());
  }
}

std::set<std::string> split_ids(const std::string& list) {
  std::set<std::string> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) ids.insert(item);
  }
  return ids;
}

struct LearnOptions {
  std::string kb;
  std::string problem;
  std::string out;
  std::size_t max_expansions = SearchConfig{}.max_expansions;
  std::size_t max_length = SearchConfig{}.max_length;
  std::size_t top_k = SearchConfig{}.top_k;
  std::string noise = "0";
  std::string length_penalty = "0.01";
  bool enable_disjunction = false;
};

struct VerifyOptions {
  std::string kb;
  std::string problem;
  std::string expr;
};

struct IngestOptions {
  std::string annotations;
  std::string mapping;
  std::string role = "contains";
  std::string background;
  std::string positives;
  std::string out_kb;
  std::string out_problem;
};

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int do_learn(const LearnOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  SearchConfig cfg;
  cfg.max_expansions = o.max_expansions;
  cfg.max_length = o.max_length;
  cfg.top_k = o.top_k;
  cfg.enable_disjunction = o.enable_disjunction;
  try {
    cfg.noise = Rational::parse(o.noise);
    cfg.length_penalty = Rational::parse(o.length_penalty);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto kb_text = read_file(o.kb);
  const auto problem_text = read_file(o.problem);
  const auto kb = with_source(o.kb, [&] { return parse_kb(kb_text); });
  const auto problem = with_source(o.problem, [&] { return parse_problem(problem_text, kb.signature); });
  const auto mkb = materialize(kb);
  const auto result = search(mkb, problem, cfg);
  const auto report = learn_report_to_json(result, cfg);
  if (!o.out.empty()) write_file(o.out, report.dump(2) + "\n");

  json run_report{{"subcommand", "learn"},
                  {"config", json{{"kb", o.kb}, {"problem", o.problem}, {"out", o.out}, {"search", report["config"]}}},
                  {"result", report},
                  {"elapsed_ms", elapsed_ms(start)}};
  out << run_report.dump() << "\n";
  return kExitOk;
}

int do_verify(const VerifyOptions& o, std::ostream& out) {
  const auto kb_text = read_file(o.kb);
  const auto problem_text = read_file(o.problem);
  const auto kb = with_source(o.kb, [&] { return parse_kb(kb_text); });
  const auto problem = with_source(o.problem, [&] { return parse_problem(problem_text, kb.signature); });
  const auto expr = with_source("--expr", [&] { return parse_expression(o.expr, kb.signature); });
  const auto mkb = materialize(kb);
  out << solution_to_json(verify_solution(mkb, expr, problem)).dump() << "\n";
  return kExitOk;
}

int do_translate(const std::string& axiom_text, std::istream& in, std::ostream& out) {
  Axiom axiom;
  if (!axiom_text.empty()) {
    axiom = with_source("--axiom", [&] { return parse_axiom(axiom_text, nullptr); });
  } else {
    std::string line;
    std::string body;
    bool found = false;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      auto rest = line.substr(first);
      if (rest.rfind("gci", 0) != 0 || (rest.size() > 3 && rest[3] != ' ' && rest[3] != '\t')) {
        throw UsageError("expected a 'gci <expr> => <expr>' line on standard input");
      }
      body = rest.substr(3);
      if (auto hash = body.find('#'); hash != std::string::npos) body.resize(hash);
      found = true;
      break;
    }
    if (!found) throw UsageError("translate needs --axiom or a 'gci' line on standard input");
    axiom = with_source("<stdin>", [&] { return parse_axiom(body, nullptr); });
  }
  out << render_fol(translate_gci(axiom)) << "\n";
  return kExitOk;
}

int do_ingest(const IngestOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  const auto annotations_text = read_file(o.annotations);
  const auto mapping_text = read_file(o.mapping);
  const auto background_text = read_file(o.background);
  const auto records = parse_annotations(annotations_text);
  const auto mapping = parse_mapping(mapping_text);
  const auto background = with_source(o.background, [&] { return parse_kb(background_text); });
  const auto kb = build_abox(records, mapping, o.role, background);
  const auto problem = emit_problem(records, split_ids(o.positives));
  write_file(o.out_kb, serialize_kb(kb));
  write_file(o.out_problem, serialize_problem(problem));

  json run_report{{"subcommand", "ingest"},
                  {"config", json{{"annotations", o.annotations},
                                  {"mapping", o.mapping},
                                  {"role", o.role},
                                  {"background", o.background},
                                  {"positives", o.positives},
                                  {"out_kb", o.out_kb},
                                  {"out_problem", o.out_problem}}},
                  {"result", json{{"records", records.size()},
                                  {"individuals", kb.signature.individuals.size()},
                                  {"assertions", kb.abox.size()},
                                  {"positives", problem.positives.size()},
                                  {"negatives", problem.negatives.size()}}},
                  {"elapsed_ms", elapsed_ms(start)}};
  out << run_report.dump() << "\n";
  return kExitOk;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explain classifier decisions with description logic class expressions", "dlexplain"};
  app.require_subcommand(1);

  LearnOptions learn;
  auto* learn_cmd = app.add_subcommand("learn", "Learn class expressions separating positive from negative examples");
  learn_cmd->add_option("--kb", learn.kb, "Knowledge base (.dlkb)")->required()->check(CLI::ExistingFile);
  learn_cmd->add_option("--problem", learn.problem, "Problem file ('+ ind' / '- ind' lines)")
      ->required()
      ->check(CLI::ExistingFile);
  learn_cmd->add_option("--max-expansions", learn.max_expansions, "Refinement budget")->capture_default_str();
  learn_cmd->add_option("--max-length", learn.max_length, "Maximum expression length")->capture_default_str();
  learn_cmd->add_option("--top-k", learn.top_k, "Number of solutions to report")->capture_default_str();
  learn_cmd->add_option("--noise", learn.noise, "Tolerated error: solutions need accuracy >= 1 - noise")
      ->capture_default_str();
  learn_cmd->add_option("--length-penalty", learn.length_penalty, "Score penalty per unit of length")
      ->capture_default_str();
  learn_cmd->add_flag("--enable-disjunction", learn.enable_disjunction, "Allow 'or' in refinements");
  learn_cmd->add_option("--out", learn.out, "Write the JSON report to this file");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Score one class expression against a learning problem");
  verify_cmd->add_option("--kb", verify.kb, "Knowledge base (.dlkb)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--problem", verify.problem, "Problem file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--expr", verify.expr, "Class expression")->required();

  std::string axiom;
  auto* translate_cmd = app.add_subcommand(
      "translate", "Translate '<expr> => <expr>' to first-order logic (reads a 'gci' line from stdin without --axiom)");
  translate_cmd->add_option("--axiom", axiom, "Axiom as '<expr> => <expr>'");

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a knowledge base and problem file from annotations");
  ingest_cmd->add_option("--annotations", ingest.annotations, "TSV: id<TAB>term, term, ...")
      ->required()
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--mapping", ingest.mapping, "TSV: term<TAB>ClassName")->required()->check(CLI::ExistingFile);
  ingest_cmd->add_option("--role", ingest.role, "Role linking inputs to objects")->capture_default_str();
  ingest_cmd->add_option("--background", ingest.background, "Background ontology (.dlkb)")
      ->required()
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--positives", ingest.positives, "Comma-separated positive input ids")->required();
  ingest_cmd->add_option("--out-kb", ingest.out_kb, "Output knowledge base")->required();
  ingest_cmd->add_option("--out-problem", ingest.out_problem, "Output problem file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*learn_cmd) return do_learn(learn, out);
    if (*verify_cmd) return do_verify(verify, out);
    if (*translate_cmd) return do_translate(axiom, in, out);
    if (*ingest_cmd) return do_ingest(ingest, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    auto j = error_json("parse", e.message());
    j["line"] = e.span().line;
    j["column"] = e.span().column;
    j["expected"] = e.expected();
    err << j.dump() << "\n";
    return kExitData;
  } catch (const IngestError& e) {
    auto j = error_json("ingest", e.what());
    j["line"] = e.line();
    err << j.dump() << "\n";
    return kExitData;
  } catch (const DataError& e) {
    err << error_json("data", e.what()).dump() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace cli
}  // namespace dlx
