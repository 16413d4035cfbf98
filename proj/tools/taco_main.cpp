// taco: command-line front end for the taskbot engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "taco/corpus.hpp"
#include "taco/dm.hpp"
#include "taco/engine.hpp"
#include "taco/eval.hpp"
#include "taco/harness.hpp"
#include "taco/search.hpp"
#include "taco/server.hpp"
#include "taco/store.hpp"
#include "taco/text.hpp"

using namespace taco;

namespace {

struct Globals {
  std::string data_dir;
  std::uint64_t seed = 7;
};

engine::DataPaths paths_of(const Globals& g) {
  return engine::DataPaths{g.data_dir.empty() ? engine::default_data_dir() : std::filesystem::path(g.data_dir)};
}

engine::TrainOptions train_options(const Globals& g) {
  engine::TrainOptions o;
  o.seed = g.seed;
  return o;
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IOError("cannot write " + path);
  out << content;
}

std::vector<int> parse_ks(const std::string& s) {
  std::vector<int> ks;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) ks.push_back(std::stoi(part));
  return ks;
}

int cmd_ingest_validate(const std::string& dir) {
  std::filesystem::path root(dir);
  auto file = std::filesystem::is_directory(root) ? root / "corpus.json" : root;
  auto corpus = load_corpus(file);
  std::cout << "ok: " << corpus.size() << " documents in " << file.string() << "\n";
  return 0;
}

int cmd_repl(engine::Engine& eng) {
  const std::string id = eng.create_session();
  std::cout << "session " << id << " (empty line or Ctrl-D to quit)\n";
  std::string line;
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    if (text::collapse_whitespace(line).empty()) break;
    auto r = eng.handle_turn(id, TurnInput::say(line));
    std::cout << r.speech << "\n";
    if (r.display)
      for (std::size_t i = 0; i < r.display->cards.size(); ++i)
        std::cout << "  [" << r.display->cards[i].title << "]\n";
    std::cout << "  (" << r.debug["state"] << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"taskbot engine"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--data-dir", g.data_dir, "data directory (default: $TACO_DATA_DIR or the bundled data/)");
  app.add_option("--seed", g.seed, "seed for training, simulation and evaluation");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "corpus tools");
  ingest->require_subcommand(1);
  std::string ingest_dir;
  auto* ingest_validate = ingest->add_subcommand("validate", "validate a corpus directory or file");
  ingest_validate->add_option("dir", ingest_dir)->required();

  // nlu
  auto* nlu_cmd = app.add_subcommand("nlu", "intent recognition");
  nlu_cmd->require_subcommand(1);
  int sim_count = 1000;
  std::string sim_split = "train", sim_out;
  auto* nlu_sim = nlu_cmd->add_subcommand("simulate", "generate labeled utterances");
  nlu_sim->add_option("--count", sim_count);
  nlu_sim->add_option("--split", sim_split)->check(CLI::IsMember({"train", "heldout", "all"}));
  nlu_sim->add_option("--out", sim_out);
  auto* nlu_parse = nlu_cmd->add_subcommand("parse", "print intents, task name and domain for one utterance");
  std::string parse_text;
  nlu_parse->add_option("text", parse_text)->required();
  auto* nlu_train = nlu_cmd->add_subcommand("train", "train intent, domain and question models");
  std::string models_out;
  nlu_train->add_option("--out", models_out, "model directory (default <data>/models)");
  auto* nlu_eval = nlu_cmd->add_subcommand("eval", "intent / task name / domain metrics on held-out templates");
  int show_errors = 0;
  nlu_eval->add_option("--show-errors", show_errors, "print up to N mistakes of each kind");

  // train everything
  auto* train_all = app.add_subcommand("train", "train every model and save them under <data>/models");
  train_all->add_option("--out", models_out);

  // search
  auto* search_cmd = app.add_subcommand("search", "retrieval");
  search_cmd->require_subcommand(1);
  auto* search_index = search_cmd->add_subcommand("index", "build the index and print statistics");
  auto* search_train = search_cmd->add_subcommand("train", "train the reranker on weak labels");
  int negatives = 9;
  search_train->add_option("--n", negatives, "negatives per positive");
  search_train->add_option("--out", models_out);
  auto* search_eval = search_cmd->add_subcommand("eval", "HIT-k on the labeled eval set");
  std::string ks = "3,6";
  bool split_easy_hard = false;
  search_eval->add_option("--k", ks);
  search_eval->add_flag("--split-easy-hard", split_easy_hard);
  std::string query_text;
  auto* search_query = search_cmd->add_subcommand("query", "run one query");
  search_query->add_option("text", query_text)->required();
  std::string query_stage = "reranked";
  search_query->add_option("--stage", query_stage, "raw, expanded or reranked")
      ->check(CLI::IsMember({"raw", "expanded", "reranked"}));

  // qa
  auto* qa_cmd = app.add_subcommand("qa", "question answering");
  qa_cmd->require_subcommand(1);
  std::string qa_file;
  auto* qa_eval = qa_cmd->add_subcommand("eval", "exact match on answerable / unanswerable records");
  qa_eval->add_option("--file", qa_file);

  // templates
  auto* templates_cmd = app.add_subcommand("templates", "response templates");
  templates_cmd->require_subcommand(1);
  auto* templates_lint = templates_cmd->add_subcommand("lint", "check slots, variants and required responders");

  // dm
  auto* dm_cmd = app.add_subcommand("dm", "dialogue manager");
  dm_cmd->require_subcommand(1);
  std::string graph_out;
  auto* dm_dump = dm_cmd->add_subcommand("dump-graph", "print the transition graph");
  dm_dump->add_option("--out", graph_out);
  auto* dm_check = dm_cmd->add_subcommand("check", "model-check the transition table");
  int fuzz_turns = 100000;
  auto* dm_fuzz = dm_cmd->add_subcommand("fuzz", "random turns through the engine with invariant checks");
  dm_fuzz->add_option("--turns", fuzz_turns);

  // serve / repl
  auto* serve = app.add_subcommand("serve", "HTTP JSON API");
  int port = 8080;
  std::string host = "127.0.0.1", store_dir;
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--store-dir", store_dir, "session store directory (default <data>/../var)");
  auto* repl = app.add_subcommand("repl", "chat on stdin/stdout");
  repl->add_option("--store-dir", store_dir);

  // test
  auto* test_cmd = app.add_subcommand("test", "run keyword conversation cases");
  std::string filter, cases_dir, junit;
  test_cmd->add_option("--filter", filter, "substring of case names to run");
  test_cmd->add_option("--dir", cases_dir, "case directory (default tests/conversations)");
  test_cmd->add_option("--junit", junit, "write a JUnit-style report");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "module-level evaluation report");
  std::string suite = "all", report_out;
  eval_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "nlu", "search", "qa"}));
  eval_cmd->add_option("--report", report_out);

  // transcript
  auto* transcript_cmd = app.add_subcommand("transcript", "recorded sessions");
  transcript_cmd->require_subcommand(1);
  std::string session_id, case_name = "exported", case_out;
  std::vector<std::string> redactions;
  auto* transcript_export = transcript_cmd->add_subcommand("export", "turn a transcript into a case skeleton");
  transcript_export->add_option("--session", session_id)->required();
  transcript_export->add_option("--store-dir", store_dir)->required();
  transcript_export->add_option("--redact", redactions);
  transcript_export->add_option("--name", case_name);
  transcript_export->add_option("--out", case_out);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto paths = paths_of(g);
    auto store_path = [&] {
      return store_dir.empty() ? paths.root.parent_path() / "var" : std::filesystem::path(store_dir);
    };

    if (*ingest_validate) return cmd_ingest_validate(ingest_dir);

    if (*nlu_sim) {
      auto spec = nlu::load_simulator_spec(paths.intent_spec());
      std::vector<nlu::LabeledUtterance> data;
      if (sim_split == "heldout")
        data = eval::heldout_nlu_data(paths, train_options(g), sim_count);
      else if (sim_split == "train")
        data = nlu::simulate_training_data(
            nlu::split_templates(spec, train_options(g).holdout_fraction, g.seed).first, sim_count, g.seed);
      else
        data = nlu::simulate_training_data(spec, sim_count, g.seed);
      write_text(sim_out, Json(data).dump(1) + "\n");
      return 0;
    }
    if (*nlu_parse) {
      auto res = engine::load_resources(paths, train_options(g));
      auto set = nlu::recognize_intents(parse_text, res->models.intents);
      set.task_name = nlu::extract_task_name(parse_text);
      if (set.task_name) set.domain = res->models.domain.classify(*set.task_name);
      std::cout << Json(set).dump(2) << "\n";
      return 0;
    }
    if (*nlu_train || *train_all || *search_train) {
      auto res = engine::load_static_resources(paths);
      auto opt = train_options(g);
      auto models = engine::train_models(res, paths, opt);
      if (*search_train && negatives != 9) {
        search::RankerTrainConfig cfg;
        cfg.negatives_per_positive = negatives;
        cfg.seed = g.seed;
        models.ranker = search::train_reranker(search::load_weak_labels(paths.weak_labels_train(), &res.index),
                                               res.index, cfg);
      }
      auto dir = models_out.empty() ? paths.models() : std::filesystem::path(models_out);
      engine::save_models(models, dir);
      std::cout << "saved models to " << dir.string() << "\n";
      return 0;
    }
    if (*nlu_eval) {
      auto res = engine::load_resources(paths, train_options(g));
      auto data = eval::heldout_nlu_data(paths, train_options(g), 2000);
      auto rep = eval::evaluate_nlu(data, eval::model_predictor(res->models));
      eval::Report r;
      r.nlu = rep;
      r.seed = g.seed;
      std::printf("intent exact-set accuracy %.4f (n=%d)\ntask name EM %.4f  span F1 %.4f (n=%d)\n"
                  "domain accuracy %.4f (n=%d)\n",
                  rep.intent_accuracy, rep.examples, rep.task_em, rep.task_f1, rep.task_examples,
                  rep.domain_accuracy, rep.domain_examples);
      for (int i = 0; i < show_errors && i < static_cast<int>(rep.intent_errors.size()); ++i)
        std::printf("  intent: %s\n", rep.intent_errors[static_cast<std::size_t>(i)].c_str());
      for (int i = 0; i < show_errors && i < static_cast<int>(rep.task_errors.size()); ++i)
        std::printf("  task: %s\n", rep.task_errors[static_cast<std::size_t>(i)].c_str());
      return 0;
    }
    if (*search_index) {
      auto corpus = load_corpus(paths.corpus());
      auto index = search::build_index(corpus);
      std::cout << "documents " << index.size() << "\nterms " << index.postings.size() << "\navg_doc_length "
                << index.avg_doc_length << "\n";
      return 0;
    }
    if (*search_eval) {
      auto res = engine::load_resources(paths, train_options(g));
      auto gold = search::load_weak_labels(paths.weak_labels_eval(), &res->index);
      auto rep = eval::evaluate_search(*res, gold);
      auto want = parse_ks(ks);
      std::printf("queries %d\n%-24s", rep.queries, "");
      for (int k : want) std::printf("  HIT-%d", k);
      if (split_easy_hard) std::printf("  Easy-3 Hard-3");
      std::printf("\n");
      auto line = [&](const char* name, const RankedResult*, double easy, double hard, int which) {
        std::printf("%-24s", name);
        for (int k : want) {
          const auto& row = which == 0 ? rep.raw : which == 1 ? rep.expanded : rep.reranked;
          std::printf("  %5.1f", 100.0 * (k == 3 ? row.hit3 : k == 6 ? row.hit6 : 0.0));
        }
        if (split_easy_hard && which > 0) std::printf("  %5.1f  %5.1f", 100 * easy, 100 * hard);
        std::printf("\n");
      };
      line("raw", nullptr, 0, 0, 0);
      line("+ expansion", nullptr, rep.easy3_expanded, rep.hard3_expanded, 1);
      line("+ expansion + rerank", nullptr, rep.easy3_reranked, rep.hard3_reranked, 2);
      if (split_easy_hard) std::printf("easy %d / hard %d\n", rep.easy3, rep.hard3);
      return 0;
    }
    if (*search_query) {
      auto res = engine::load_resources(paths, train_options(g));
      engine::EngineConfig cfg;
      std::optional<Domain> domain = res->models.domain.classify(query_text);
      RankedResult r;
      if (query_stage == "raw")
        r = search::retrieve(res->index, text::tokenize(query_text), {}, cfg.search_k);
      else if (query_stage == "expanded")
        r = search::retrieve(res->index, search::expand_query(query_text, res->vocabulary), {}, cfg.search_k);
      else
        r = engine::run_search(*res, query_text, domain, {}, cfg);
      for (std::size_t i = 0; i < r.candidates.size() && i < 10; ++i) {
        const auto& c = r.candidates[i];
        std::printf("%2zu  %-12s %8.3f  %s\n", i + 1, c.doc_id.c_str(), c.sort_score(), res->doc(c.doc_id)->title.c_str());
      }
      return 0;
    }
    if (*qa_eval) {
      auto records = qa::parse_qa_eval(read_json(qa_file.empty() ? paths.qa_eval() : std::filesystem::path(qa_file)));
      auto rep = qa::evaluate_mrc(records);
      std::printf("answerable EM %.3f (%d/%d)\nunanswerable EM %.3f (%d/%d)\n", rep.answerable_em(),
                  rep.answerable_correct, rep.answerable, rep.unanswerable_em(), rep.unanswerable_correct,
                  rep.unanswerable);
      return 0;
    }
    if (*templates_lint) {
      auto reg = response::load_templates(paths.templates());
      auto problems = reg.lint(engine::required_responders());
      for (const auto& p : problems) std::cout << p << "\n";
      if (problems.empty()) std::cout << "ok: " << reg.entries.size() << " responders\n";
      return problems.empty() ? 0 : 1;
    }
    if (*dm_dump) {
      write_text(graph_out, dm::dump_graph(dm::default_table()));
      return 0;
    }
    if (*dm_check) {
      auto rep = dm::model_check(dm::default_table());
      std::cout << "reachable " << rep.reachable.size() << " execution_lock " << rep.execution_lock << " coverage "
                << rep.coverage << "\n";
      for (const auto& p : rep.problems) std::cout << p << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*dm_fuzz) {
      auto res = engine::load_resources(paths, train_options(g));
      engine::EngineConfig cfg;
      cfg.seed = g.seed;
      cfg.parallel = false;
      engine::Engine eng(res, std::make_shared<store::MemoryStore>(), cfg);
      harness::FuzzConfig fc;
      fc.turns = fuzz_turns;
      fc.seed = g.seed;
      auto rep = harness::fuzz(eng, fc);
      std::cout << rep.turns << " turns, " << rep.sessions << " sessions, " << rep.violations << " violations ("
                << rep.placeholder_violations << " placeholder) in " << rep.seconds << " s\n";
      for (const auto& [sub, n] : rep.sub_states) std::cout << "  " << sub << " " << n << "\n";
      for (const auto& v : rep.samples) std::cout << v << "\n";
      return rep.violations == 0 ? 0 : 1;
    }
    if (*serve || *repl) {
      auto res = engine::load_resources(paths, train_options(g));
      auto st = std::make_shared<store::FileStore>(store_path());
      engine::EngineConfig cfg;
      cfg.seed = g.seed;
      engine::Engine eng(res, st, cfg);
      if (*repl) return cmd_repl(eng);
      server::HttpService http(eng);
      std::cout << "listening on http://" << host << ":" << port << "\n" << std::flush;
      return http.listen(host, port) ? 0 : 1;
    }
    if (*test_cmd) {
      auto res = engine::load_resources(paths, train_options(g));
      engine::EngineConfig cfg;
      cfg.seed = g.seed;
      engine::Engine eng(res, std::make_shared<store::MemoryStore>(), cfg);
      auto dir = cases_dir.empty() ? paths.root.parent_path() / "tests" / "conversations" : std::filesystem::path(cases_dir);
      auto cases = harness::load_cases(dir);
      std::erase_if(cases, [&](const harness::ConversationCase& c) {
        return !filter.empty() && c.name.find(filter) == std::string::npos;
      });
      for (const auto& c : cases)
        for (const auto& w : harness::lint_case(c)) std::cerr << "warning: " << w << "\n";
      auto results = harness::run_suite(cases, eng);
      int failed = 0;
      std::ostringstream junit_xml;
      junit_xml << "<testsuite name=\"conversations\" tests=\"" << results.size() << "\">\n";
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        junit_xml << "  <testcase name=\"" << r.name << "\">";
        if (!r.passed) {
          ++failed;
          std::cout << "  turn " << r.failing_turn << ": " << r.reason << "\n    actual: " << r.actual;
          junit_xml << "<failure message=\"turn " << r.failing_turn << "\"/>";
        }
        junit_xml << "</testcase>\n";
        std::cout << "\n";
      }
      junit_xml << "</testsuite>\n";
      if (!junit.empty()) write_text(junit, junit_xml.str());
      std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " cases passed\n";
      return failed;
    }
    if (*eval_cmd) {
      auto res = engine::load_resources(paths, train_options(g));
      auto rep = eval::evaluate_all(*res, paths, eval::suite_from_string(suite), train_options(g));
      write_text(report_out, rep.to_text());
      return 0;
    }
    if (*transcript_export) {
      store::FileStore st(store_dir);
      auto c = harness::export_case(st.transcript(session_id), redactions, case_name);
      write_text(case_out, harness::case_to_json(c).dump(2) + "\n");
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
