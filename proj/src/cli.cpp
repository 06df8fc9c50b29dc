#include "syncswitch/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "syncswitch/analysis.hpp"
#include "syncswitch/closure.hpp"
#include "syncswitch/error.hpp"
#include "syncswitch/families.hpp"
#include "syncswitch/search.hpp"
#include "syncswitch/synchro.hpp"
#include "syncswitch/verify.hpp"

namespace syncswitch::cli {

namespace {

// Usage mistakes detected after option parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Dfa read_dfa(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_dfa(text);
}

Objective parse_objective(const std::string& name) {
  if (name == "length") return Objective::Length;
  if (name == "switch") return Objective::Switch;
  return Objective::SwitchThenLength;
}

std::size_t to_size(const std::string& text) {
  std::size_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("expected a number, got '" + text + "'");
  return value;
}

std::size_t default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

Dfa generate_from(const std::vector<std::string>& spec) {
  if (spec.empty()) throw UsageError("gen needs a family name");
  if (spec[0] == "cyclic-counterexample") {
    if (spec.size() != 1) throw UsageError("cyclic-counterexample takes no size");
    return cyclic_counterexample();
  }
  if (spec.size() != 2) throw UsageError("usage: gen <family> <n> | gen fixture <name> | gen cyclic-counterexample");
  if (spec[0] == "fixture") return fixture(spec[1]);
  return generate(spec[0], to_size(spec[1]));
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronizing words and switch counts of finite automata", "syncswitch"};
  app.require_subcommand(1);

  std::vector<std::string> gen_spec;
  auto* gen = app.add_subcommand("gen", "Print a family member, fixture or the cyclic counterexample");
  gen->add_option("spec", gen_spec, "<family> <n> | fixture <name> | cyclic-counterexample")->required();

  std::string path = "-";
  auto* ssl = app.add_subcommand("ssl", "Shortest synchronizing word length");
  ssl->add_option("file", path, "DFA file or - for stdin");
  auto* sw = app.add_subcommand("sw", "Minimal switch count");
  sw->add_option("file", path, "DFA file or - for stdin");

  std::string objective = "length";
  const auto objectives = CLI::IsMember({"length", "switch", "switch-then-length"});
  auto* opt = app.add_subcommand("opt", "Optimal synchronizing word");
  opt->add_option("file", path, "DFA file or - for stdin");
  opt->add_option("--objective", objective, "length | switch | switch-then-length")->check(objectives);
  auto* count = app.add_subcommand("count", "Number of optimal synchronizing words");
  count->add_option("file", path, "DFA file or - for stdin");
  count->add_option("--objective", objective, "length | switch-then-length")
      ->check(CLI::IsMember({"length", "switch-then-length"}));

  auto* closure = app.add_subcommand("closure", "Power closure, with provenance comments");
  closure->add_option("file", path, "DFA file or - for stdin");

  std::string transform_kind;
  auto* transform = app.add_subcommand("transform", "Apply the F or F2 construction");
  transform->add_option("kind", transform_kind, "f | f2")->required()->check(CLI::IsMember({"f", "f2"}));
  transform->add_option("file", path, "DFA file or - for stdin");

  std::size_t n = 0;
  std::size_t k = 2;
  bool long_run = false;
  bool force = false;
  std::size_t jobs = default_jobs();
  std::size_t shards = 0;
  std::string convention = "states-symbols";
  auto* search = app.add_subcommand("search", "Exhaustive extremal search over all tables");
  search->add_option("--n", n, "state count")->required();
  search->add_option("--k", k, "symbol count");
  search->add_flag("--long", long_run, "allow multi-hour spaces (n = 6 binary)");
  search->add_flag("--force", force, "lift every size guard");
  search->add_option("--jobs", jobs, "worker threads");
  search->add_option("--shards", shards, "shard count (0 = automatic)");
  search->add_option("--convention", convention, "states | states-symbols")
      ->check(CLI::IsMember({"states", "states-symbols"}));

  auto* cyclic = app.add_subcommand("cyclic-search", "Extremal search over cyclic tables");
  cyclic->add_option("--n", n, "state count")->required();
  cyclic->add_option("--k", k, "symbol count")->required();
  cyclic->add_flag("--long", long_run, "allow spaces above 10^8 tables");
  cyclic->add_option("--jobs", jobs, "worker threads");
  cyclic->add_option("--convention", convention, "states | states-symbols")
      ->check(CLI::IsMember({"states", "states-symbols"}));

  std::size_t budget = 10000;
  auto* lemmas = app.add_subcommand("verify-lemmas", "Check the distance and measure lemmas (n divisible by 6)");
  lemmas->add_option("--n", n, "state count")->required();
  lemmas->add_option("--budget", budget, "exhaustive/sampled subset budget");

  auto* battery = app.add_subcommand("verify-paper", "Run the full reproduction battery");
  battery->add_flag("--long", long_run, "include the 6-state exhaustive search");
  battery->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      out << serialize_dfa(generate_from(gen_spec));
    } else if (*ssl) {
      out << shortest_sync_length(read_dfa(path, in)) << '\n';
    } else if (*sw) {
      out << min_switch_count(read_dfa(path, in)) << '\n';
    } else if (*opt) {
      const SyncResult r = optimal_sync_word(read_dfa(path, in), parse_objective(objective));
      out << "word=" << to_string(r.word) << " len=" << r.length << " sw=" << r.switches << '\n';
      err << "display: " << to_display_string(r.word) << '\n';
    } else if (*count) {
      out << count_optimal_words(read_dfa(path, in), parse_objective(objective)) << '\n';
    } else if (*closure) {
      out << serialize_closure(power_closure(read_dfa(path, in)));
    } else if (*transform) {
      const Dfa a = read_dfa(path, in);
      out << serialize_dfa(transform_kind == "f" ? f_transform(a) : f2_transform(a));
    } else if (*search || *cyclic) {
      SearchOptions options;
      options.jobs = jobs;
      options.shards = shards;
      options.long_run = long_run;
      options.force = force;
      options.progress = [&err](const std::string& line) { err << line << '\n'; };
      const ExtremalReport r = *search ? extremal_search(n, k, options) : cyclic_extremal_search(n, k, options);
      out << format_report(r, convention == "states" ? IsoConvention::StatesOnly : IsoConvention::StatesAndSymbols);
      err << "elapsed " << r.elapsed_seconds << " s\n";
    } else if (*lemmas) {
      const auto results = verify_lemmas(n, budget);
      out << format_lemma_report(results);
      for (const auto& r : results) {
        if (!r.pass) return 1;
      }
    } else if (*battery) {
      VerifyOptions options;
      options.long_run = long_run;
      options.jobs = jobs;
      options.on_result = [&out](const CheckResult& r) { out << format_check(r) << '\n' << std::flush; };
      bool all = true;
      for (const auto& r : verify_paper(options)) all = all && r.pass;
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"syncswitch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace syncswitch::cli
