// Command-line front end: batch subcommands over the library with stable
// JSON/CSV output. Exit codes: 0 success or affirmative verdict, 1 negative
// verdict, 2 parse/configuration error, 3 precondition error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "kspf/area.hpp"
#include "kspf/invariant.hpp"
#include "kspf/json_io.hpp"
#include "kspf/pushdown.hpp"
#include "kspf/spf.hpp"

using namespace kspf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;

struct Options {
  std::vector<int> nr{3, 2};
  std::string word;
  long long grid_bound = -1;  // -1: default |w|
  bool no_pruning = false;
  int threads = 1;
  std::string format;
  long long q = 0;
  long long q_min = -10, q_max = 10;
  long long n = 1;
  long long n_max = 3;
  int max_len = 40;
  int max_conj = 2;
  long long max_states = 200000;
  unsigned long long seed = 0;  // reserved for randomized experiment drivers
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string word_or_one(const Word& w) {
  std::string s = format_word(w);
  return s.empty() ? "1" : s;
}

SpfGroup make_group(const Options& o) {
  if (o.nr.size() != 2) throw DomainError("--nr expects two integers N R");
  return SpfGroup(o.nr[0], o.nr[1]);
}

int cmd_is_trivial(const Options& o) {
  SpfGroup g = make_group(o);
  Word w = parse_word(o.word, g.kernel_alphabet());
  std::vector<Word> projections;
  for (int alpha = 1; alpha <= g.factor_count(); ++alpha)
    projections.push_back(project(g, w, alpha));
  bool trivial = true;
  for (const Word& p : projections) trivial = trivial && p.empty();
  if (o.format == "json") {
    Json j;
    j["word"] = format_word(w);
    j["n"] = g.factor_count();
    j["r"] = g.rank();
    Json pr = Json::array();
    for (const Word& p : projections) pr.push_back(format_word(p));
    j["projections"] = std::move(pr);
    j["trivial"] = trivial;
    std::cout << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < projections.size(); ++i)
      std::cout << "projection " << i + 1 << ": " << word_or_one(projections[i]) << "\n";
    std::cout << "verdict: " << (trivial ? "trivial" : "nontrivial") << "\n";
  }
  return trivial ? kExitOk : kExitNegative;
}

int cmd_invariant(const Options& o) {
  Word w = parse_word(o.word, xy_alphabet());
  InvariantOptions opts;
  opts.pruning = !o.no_pruning;
  opts.threads = o.threads;
  if (o.grid_bound >= 0) opts.grid_bound = o.grid_bound;
  const long long bound = opts.grid_bound.value_or(w.size());
  const long long side = 2 * bound + 1;
  if (side * side * side * side >= 2000000)
    std::cerr << "enumerating " << side << "^4 base-point pairs...\n";
  auto start = std::chrono::steady_clock::now();
  InvariantResult r = braid_invariant(w, opts);
  double ms = ms_since(start);
  if (side * side * side * side >= 2000000)
    std::cerr << "done in " << ms << " ms\n";
  if (o.format == "text") {
    std::cout << "count: " << r.count << " (grid bound " << r.grid_bound << ", "
              << (r.pruning ? "pruned" : "unpruned") << ")\n";
  } else {
    std::cout << invariant_json(w, r, opts.convention, ms).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_wn(const Options& o) {
  std::cout << format_word(wn_family(o.n)) << "\n";
  return kExitOk;
}

int cmd_wn_experiment(const Options& o) {
  std::cout << "n,length,I_lower_bound_paper,I_computed,seconds\n";
  for (long long n = 1; n <= o.n_max; ++n) {
    Word w = wn_family(n);
    InvariantOptions opts;
    opts.pruning = !o.no_pruning;
    opts.threads = o.threads;
    auto start = std::chrono::steady_clock::now();
    InvariantResult r = braid_invariant(w, opts);
    double secs = ms_since(start) / 1000.0;
    long long bound = ((n - 1) * (n - 1) * (n - 1) * (n - 1) + 15) / 16;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    std::cout << n << "," << w.size() << "," << bound << "," << r.count << "," << buf
              << "\n";
    std::cout.flush();
  }
  return kExitOk;
}

int cmd_normal_form(const Options& o) {
  SpfGroup g = make_group(o);
  Word w = parse_word(o.word, g.kernel_alphabet());
  NormalForm nf = normal_form(g, w);
  if (o.format == "json") {
    Json j;
    j["word"] = format_word(w);
    j["delta"] = format_word(nf.delta_part);
    Json parts = Json::array();
    for (const Word& p : nf.factor_parts) parts.push_back(format_word(p));
    j["factors"] = std::move(parts);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "delta: " << word_or_one(nf.delta_part) << "\n";
    for (size_t i = 0; i < nf.factor_parts.size(); ++i)
      std::cout << "factor " << i + 1 << ": " << word_or_one(nf.factor_parts[i]) << "\n";
  }
  return kExitOk;
}

int cmd_push(const Options& o) {
  Word w = parse_word(o.word, sb_alphabet());
  std::cout << format_word(push(o.q, w)) << "\n";
  return kExitOk;
}

int cmd_push_verify(const Options& o) {
  if (o.q_min > o.q_max) throw DomainError("--q-min must be <= --q-max");
  auto rows = verify_pushed_relators(o.q_min, o.q_max);
  std::cout << push_report_csv(rows);
  bool all = true;
  for (const auto& row : rows) all = all && row.trivial;
  return all ? kExitOk : kExitNegative;
}

int cmd_area_search(const Options& o) {
  SpfGroup g = make_group(o);
  Presentation p = presentation(g);
  Word w = parse_word(o.word, g.kernel_alphabet());
  AreaSearchLimits limits{o.max_len, o.max_conj, o.max_states};
  AreaEstimate est = area_search(w, p, limits);
  Json j;
  j["word"] = format_word(w);
  Json jl;
  jl["max_word_length"] = limits.max_word_length;
  jl["max_conjugator_length"] = limits.max_conjugator_length;
  jl["max_states"] = limits.max_states;
  j["limits"] = std::move(jl);
  j["area"] = est.area ? Json(*est.area) : Json(nullptr);
  j["certificate"] = est.witness ? certificate_json(*est.witness) : Json(nullptr);
  std::cout << j.dump(2) << "\n";
  return est.area ? kExitOk : kExitNegative;
}

int cmd_presentation(const Options& o) {
  SpfGroup g = make_group(o);
  std::cout << presentation_json(presentation(g)).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact word, braid and filling computations in kernels of products of free groups"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "seed for randomized experiment drivers (reserved)");

  auto add_nr = [&](CLI::App* sub) {
    sub->add_option("--nr", o.nr, "group parameters: factor count and rank")->expected(2);
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--word", o.word, "input word")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* is_trivial = app.add_subcommand("is-trivial", "decide triviality in the kernel");
  add_nr(is_trivial);
  add_word(is_trivial);
  add_format(is_trivial);

  CLI::App* invariant =
      app.add_subcommand("invariant", "count base points with nontrivial traced braid");
  add_word(invariant);
  invariant->add_option("--grid-bound", o.grid_bound, "override the enumeration bound");
  invariant->add_flag("--no-pruning", o.no_pruning, "disable the split-braid shortcut");
  invariant->add_option("--threads", o.threads, "worker threads");
  add_format(invariant);

  CLI::App* wn = app.add_subcommand("wn", "print the n-th word of the quartic family");
  wn->add_option("--n", o.n, "family index")->required();

  CLI::App* wn_exp =
      app.add_subcommand("wn-experiment", "invariant growth table for the quartic family");
  wn_exp->add_option("--n-max", o.n_max, "largest family index")->required();
  wn_exp->add_flag("--no-pruning", o.no_pruning, "disable the split-braid shortcut");
  wn_exp->add_option("--threads", o.threads, "worker threads");

  CLI::App* normal_form = app.add_subcommand("normal-form", "canonical factorization");
  add_nr(normal_form);
  add_word(normal_form);
  add_format(normal_form);

  CLI::App* push = app.add_subcommand("push", "push an ambient word into the kernel");
  push->add_option("--q", o.q, "height offset")->required();
  add_word(push);

  CLI::App* push_verify =
      app.add_subcommand("push-verify", "push all defining relators over an offset range");
  push_verify->add_option("--q-min", o.q_min, "smallest offset");
  push_verify->add_option("--q-max", o.q_max, "largest offset");

  CLI::App* area = app.add_subcommand("area-search", "bounded search for an area upper bound");
  add_nr(area);
  add_word(area);
  area->add_option("--max-len", o.max_len, "cap on intermediate word length");
  area->add_option("--max-conj", o.max_conj, "cap on conjugator length");
  area->add_option("--max-states", o.max_states, "search budget");

  CLI::App* pres = app.add_subcommand("presentation", "defining relators as JSON");
  add_nr(pres);
  add_format(pres);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (is_trivial->parsed()) return cmd_is_trivial(o);
    if (invariant->parsed()) return cmd_invariant(o);
    if (wn->parsed()) return cmd_wn(o);
    if (wn_exp->parsed()) return cmd_wn_experiment(o);
    if (normal_form->parsed()) return cmd_normal_form(o);
    if (push->parsed()) return cmd_push(o);
    if (push_verify->parsed()) return cmd_push_verify(o);
    if (area->parsed()) return cmd_area_search(o);
    if (pres->parsed()) return cmd_presentation(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitConfig;
}
