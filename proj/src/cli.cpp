#include "symbool/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "symbool/automaton.hpp"
#include "symbool/boolops.hpp"
#include "symbool/error.hpp"
#include "symbool/harness.hpp"
#include "symbool/perm.hpp"
#include "symbool/product.hpp"
#include "symbool/reproduce.hpp"

namespace symbool {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  // perm conjugate-bases
  std::size_t degree = 0;
  std::string b1, b2;
  // complexity / pairgraph
  std::string left, right, op, table;
  // verify
  std::size_t m = 0, n = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string ops_list;
  std::string out_path;
  std::string records = "all";
  unsigned jobs = 1;
  double conjugate_fraction = 0.0;
  // reproduce
  std::string id;
  std::optional<std::size_t> rm, rn;
};

std::optional<BoolFn> selected_function(Options const& o) {
  if (!o.op.empty()) {
    return BoolFn::from_name(o.op);
  }
  if (!o.table.empty()) {
    return BoolFn::from_bits(o.table);
  }
  return std::nullopt;
}

StateSet require_finals(AutomatonFile const& f, std::string const& path) {
  if (!f.finals) {
    throw InvalidArgument(path + ": no 'final' line");
  }
  return *f.finals;
}

int cmd_conjugate(Options const& o, std::ostream& out) {
  BasisOptions opts;
  opts.max_degree = std::max(o.degree, kDefaultDegreeCap);
  Basis const b1 = parse_basis(o.b1, o.degree, opts);
  Basis const b2 = parse_basis(o.b2, o.degree, opts);
  auto const r = bases_conjugate(b1, b2, opts.max_degree);
  out << (r ? format_cycles(*r) : "none") << '\n';
  return 0;
}

int cmd_complexity(Options const& o, std::ostream& out) {
  auto const l = load_automaton(o.left);
  auto const r = load_automaton(o.right);
  ProductAutomaton const p(l.automaton, r.automaton);
  StateSet const finals = final_set_product(*selected_function(o),
                                            require_finals(l, o.left),
                                            require_finals(r, o.right));
  out << minimize(Dfa(p.combined(), finals)).complexity << '\n';
  return 0;
}

int cmd_pairgraph(Options const& o, std::ostream& out) {
  auto const l = load_automaton(o.left);
  auto const r = load_automaton(o.right);
  ProductAutomaton const p(l.automaton, r.automaton);
  std::optional<StateSet> finals;
  if (auto f = selected_function(o)) {
    finals = final_set_product(*f, require_finals(l, o.left),
                               require_finals(r, o.right));
  }
  out << format_pair_graph(p, pair_graph(p), finals);
  return 0;
}

int cmd_verify(Options const& o, std::ostream& out, std::ostream& err) {
  CampaignConfig cfg;
  cfg.m = o.m;
  cfg.n = o.n;
  cfg.mode = o.exhaustive ? CampaignMode::Exhaustive : CampaignMode::Sampled;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  if (!o.ops_list.empty()) {
    cfg.ops = parse_function_list(o.ops_list);
  }
  cfg.jobs = o.jobs;
  cfg.conjugate_fraction = o.conjugate_fraction;
  validate(cfg);

  RecordFilter filter = RecordFilter::All;
  if (o.records == "nonpass") {
    filter = RecordFilter::NonPass;
  } else if (o.records == "failures") {
    filter = RecordFilter::Failures;
  }

  std::ofstream file;
  RecordSink sink;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      throw Error("cannot write " + o.out_path);
    }
    file << tsv_header() << '\n';
    sink = [&file](VerificationRecord const& r) { file << to_tsv(r) << '\n'; };
  }

  CampaignSummary const summary = run_campaign(cfg, sink, filter);
  write_summary(out, cfg, summary);
  if (summary.first_failure) {
    err << "first failure: " << to_tsv(*summary.first_failure) << '\n'
        << "reason: " << summary.first_failure->reason << '\n'
        << replay_text(*summary.first_failure);
  }
  return summary.ok() ? 0 : kExitFail;
}

int cmd_reproduce(Options const& o, std::ostream& out) {
  Report const r = reproduce(o.id, o.rm, o.rn);
  out << r.text;
  return r.matches ? 0 : kExitFail;
}

}  // namespace

int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Products of permutation automata and their boolean operations",
               "symbool"};
  app.require_subcommand(1);

  auto* perm = app.add_subcommand("perm", "Permutation utilities");
  perm->require_subcommand(1);
  auto* conj = perm->add_subcommand(
      "conjugate-bases", "Print r with r s r^-1 = s', r t r^-1 = t', or none");
  conj->add_option("-n", o.degree, "Degree")->required();
  conj->add_option("--b1", o.b1, "First basis, \"S;T\" in cycle notation")
      ->required();
  conj->add_option("--b2", o.b2, "Second basis")->required();

  auto add_files = [&o](CLI::App* sub) {
    sub->add_option("--left", o.left, "Left automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--right", o.right, "Right automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* op = sub->add_option("--op", o.op, "Boolean function name");
    auto* table = sub->add_option("--table", o.table, "Truth table bits");
    op->excludes(table);
    return std::pair{op, table};
  };

  auto* complexity = app.add_subcommand(
      "complexity", "Minimal DFA size of the product under a boolean function");
  auto [cop, ctable] = add_files(complexity);
  complexity->callback([&] {
    if (cop->count() + ctable->count() == 0) {
      throw CLI::RequiredError("--op or --table");
    }
  });

  auto* pairgraph =
      app.add_subcommand("pairgraph", "Pair-graph components of the product");
  add_files(pairgraph);

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--m", o.m, "Left degree")->required();
  verify->add_option("--n", o.n, "Right degree")->required();
  auto* exhaustive = verify->add_flag("--exhaustive", o.exhaustive,
                                      "Enumerate every instance");
  auto* samples = verify->add_option("--samples", o.samples, "Sample count");
  auto* seed = verify->add_option("--seed", o.seed, "64-bit seed");
  exhaustive->excludes(samples);
  exhaustive->excludes(seed);
  samples->needs(seed);
  seed->needs(samples);
  verify->add_option("--ops", o.ops_list,
                     "Comma-separated function names or bit strings");
  verify->add_option("--out", o.out_path, "Write TSV records here");
  verify->add_option("--records", o.records, "Records to write")
      ->check(CLI::IsMember({"all", "nonpass", "failures"}));
  verify->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--conjugate-fraction", o.conjugate_fraction,
                     "Sampled m = n: share of conjugate right bases")
      ->check(CLI::Range(0.0, 1.0));
  verify->callback([&] {
    if (!o.exhaustive && samples->count() == 0) {
      throw CLI::RequiredError("--exhaustive or --samples/--seed");
    }
  });

  auto* repro = app.add_subcommand("reproduce", "Rebuild a worked example");
  repro->add_option("id", o.id, "Report id")
      ->required()
      ->check(CLI::IsMember(reproduce_ids()));
  repro->add_option("--m", o.rm, "prop-1 left degree");
  repro->add_option("--n", o.rn, "prop-1 right degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*conj) {
      return cmd_conjugate(o, out);
    }
    if (*complexity) {
      return cmd_complexity(o, out);
    }
    if (*pairgraph) {
      return cmd_pairgraph(o, out);
    }
    if (*verify) {
      return cmd_verify(o, out, err);
    }
    if (*repro) {
      return cmd_reproduce(o, out);
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace symbool
