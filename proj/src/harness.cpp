#include "symbool/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "symbool/error.hpp"
#include "symbool/product.hpp"
#include "symbool/rng.hpp"

namespace symbool {

std::vector<Basis> enumerate_bases(std::size_t degree, std::size_t max_degree) {
  auto const perms = all_permutations(degree, max_degree);
  std::vector<Basis> out;
  for (auto const& s : perms) {
    for (auto const& t : perms) {
      if (s == t && degree != 2) {
        continue;
      }
      if (generates_symmetric(s, t, max_degree)) {
        out.emplace_back(s, t, BasisOptions{false, max_degree});
      }
    }
  }
  return out;
}

bool in_exception_set(std::size_t m, std::size_t n) noexcept {
  return (m == 2 && n == 2) || (m == 3 && n == 4) || (m == 4 && n == 3)
         || (m == 4 && n == 4);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::ExceptionExpected:
      return "EXCEPTION-EXPECTED";
  }
  return "?";
}

std::string to_string(Clause c) {
  switch (c) {
    case Clause::Main:
      return "main";
    case Clause::Conjugate:
      return "conjugate";
    case Clause::ExceptionSet:
      return "exception-set";
  }
  return "?";
}

std::string tsv_header() {
  return "m\tn\tb1\tb2\tconjugate\tconnected\tF\tFp\top\tpredicted\toracle\tstatus";
}

std::string to_tsv(VerificationRecord const& r) {
  std::string out;
  out.reserve(96);
  auto field = [&out](std::string const& v) {
    if (!out.empty()) {
      out += '\t';
    }
    out += v;
  };
  field(std::to_string(r.m));
  field(std::to_string(r.n));
  field(r.b1);
  field(r.b2);
  field(r.conjugate ? "1" : "0");
  field(r.connected ? "1" : "0");
  field(format_state_set(r.finals_left));
  field(format_state_set(r.finals_right));
  field(r.op.bits());
  field(r.predicted ? "1" : "0");
  field(std::to_string(r.oracle));
  field(to_string(r.status));
  return out;
}

std::string replay_text(VerificationRecord const& r) {
  auto left = parse_basis(r.b1, r.m);
  auto right = parse_basis(r.b2, r.n);
  std::ostringstream out;
  out << "# left automaton\n"
      << format_automaton(Semiautomaton::from_basis(left), r.finals_left)
      << "# right automaton\n"
      << format_automaton(Semiautomaton::from_basis(right), r.finals_right)
      << "# complexity --left LEFT --right RIGHT --table " << r.op.bits() << '\n';
  return out.str();
}

void validate(CampaignConfig const& cfg) {
  if (cfg.m < 2 || cfg.n < 2) {
    throw InvalidArgument("campaign degrees must be at least 2");
  }
  if (cfg.ops.empty()) {
    throw InvalidArgument("campaign needs at least one boolean function");
  }
  for (BoolFn f : cfg.ops) {
    if (!is_proper(f)) {
      throw InvalidArgument("boolean function " + f.bits() + " is not proper");
    }
  }
  if (cfg.mode == CampaignMode::Sampled && cfg.samples == 0) {
    throw InvalidArgument("sampled mode needs a positive sample count");
  }
  if (cfg.conjugate_fraction < 0.0 || cfg.conjugate_fraction > 1.0) {
    throw InvalidArgument("conjugate fraction must lie in [0,1]");
  }
  if (cfg.jobs == 0) {
    throw InvalidArgument("jobs must be positive");
  }
}

namespace {

std::uint64_t proper_subset_count(std::size_t degree) {
  return (std::uint64_t{1} << degree) - 2;
}

// Lower bound on the number of bases, used to refuse hopeless sweeps before
// enumerating: for n >= 3 conjugation acts freely on bases, and the basis
// ((0,...,n-1), (0,1)) has n! distinct conjugates.
std::uint64_t basis_count_lower_bound(std::size_t degree) {
  return degree >= 3 ? factorial(degree) : 3;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    return UINT64_MAX;
  }
  return a * b;
}

enum class Reason : std::uint8_t {
  None,
  Disagreement,
  Connectivity,
  ConjugateShape,
  BelowMn,
  ConjugateOnGraph,
  ConjugateOffGraph,
};

std::string to_string(Reason r) {
  switch (r) {
    case Reason::None:
      return "";
    case Reason::Disagreement:
      return "pair-graph prediction disagrees with the minimization oracle";
    case Reason::Connectivity:
      return "connectivity contradicts the conjugacy criterion";
    case Reason::ConjugateShape:
      return "conjugate product: reachable part differs from the set fixed by "
             "the conjugator";
    case Reason::BelowMn:
      return "complexity below mn";
    case Reason::ConjugateOnGraph:
      return "conjugator fixes 0: reachable part is the graph of r";
    case Reason::ConjugateOffGraph:
      return "conjugator moves 0: reachable part is the complement of the "
             "graph of r";
  }
  return "";
}

struct PairInfo {
  std::string b1;
  std::string b2;
  bool conjugate = false;
  bool connected = false;
  std::size_t reachable = 0;
  bool permutation_graph = false;
  // Conjugate pairs only: r(0) == 0 for the conjugator r, and whether the
  // reachable set is the graph of r (when r(0) == 0) or its complement.
  bool conjugator_fixes_initial = false;
  bool reachable_as_predicted = false;
};

struct Outcome {
  std::uint64_t left_mask;
  std::uint64_t right_mask;
  std::uint8_t op;
  bool predicted;
  std::uint16_t oracle;
  Status status;
  Clause clause;
  Reason reason;
};

struct Unit {
  PairInfo info;
  std::vector<Outcome> outcomes;
};

struct Judgement {
  Status status;
  Clause clause;
  Reason reason;
};

Judgement judge(std::size_t m,
                std::size_t n,
                PairInfo const& info,
                bool predicted,
                std::size_t oracle) {
  std::size_t const mn = m * n;
  Clause const clause = info.conjugate           ? Clause::Conjugate
                        : in_exception_set(m, n) ? Clause::ExceptionSet
                                                 : Clause::Main;
  // Minimal means every state reachable and no two equivalent.
  if (predicted != (oracle == mn)) {
    return {Status::Fail, clause, Reason::Disagreement};
  }
  if (info.connected == info.conjugate) {
    return {Status::Fail, clause, Reason::Connectivity};
  }
  switch (clause) {
    case Clause::Conjugate:
      if (!info.reachable_as_predicted
          || (info.conjugator_fixes_initial && oracle > n)) {
        return {Status::Fail, clause, Reason::ConjugateShape};
      }
      return {Status::Pass, clause,
              info.conjugator_fixes_initial ? Reason::ConjugateOnGraph
                                            : Reason::ConjugateOffGraph};
    case Clause::ExceptionSet:
      return {oracle == mn ? Status::Pass : Status::ExceptionExpected, clause,
              Reason::None};
    case Clause::Main:
      break;
  }
  if (oracle == mn) {
    return {Status::Pass, clause, Reason::None};
  }
  return {Status::Fail, clause, Reason::BelowMn};
}

// Everything about a basis pair that does not depend on F, F' or the
// function.
class PairContext {
 public:
  PairContext(Basis const& left, Basis const& right)
      : product_(Semiautomaton::from_basis(left),
                 Semiautomaton::from_basis(right)),
        graph_(pair_graph(product_)),
        oracle_(product_.combined()) {
    std::size_t const m = left.degree();
    std::size_t const n = right.degree();
    info_.b1 = format_basis(left);
    info_.b2 = format_basis(right);
    auto const r = m == n ? bases_conjugate(left, right) : std::nullopt;
    info_.conjugate = r.has_value();
    info_.reachable = oracle_.reachable_count();
    info_.connected = info_.reachable == m * n;

    // Orbit of (0,0) under {(g, r g r^-1)}: {(x, r(x))} if r(0) == 0, else
    // every (x, y) with y != r(x).
    if (r) {
      info_.conjugator_fixes_initial = (*r)(0) == 0;
      std::vector<bool> expected(m * n, !info_.conjugator_fixes_initial);
      for (State x = 0; x < n; ++x) {
        expected[product_.index(x, (*r)(x))] = info_.conjugator_fixes_initial;
      }
      std::vector<bool> got(m * n, false);
      for (State s : oracle_.reachable()) {
        got[s] = true;
      }
      info_.reachable_as_predicted = got == expected;
    }

    // The reachable part is the graph {(i, u(i))} of a permutation u.
    if (m == n && info_.reachable == n) {
      std::vector<bool> seen_left(m, false), seen_right(n, false);
      bool ok = true;
      for (State s : oracle_.reachable()) {
        auto [i, j] = product_.coordinates(s);
        ok = ok && !seen_left[i] && !seen_right[j];
        seen_left[i] = seen_right[j] = true;
      }
      info_.permutation_graph = ok;
    }
  }

  PairInfo const& info() const noexcept { return info_; }

  Outcome evaluate(StateSet const& finals_left,
                   std::uint64_t left_mask,
                   StateSet const& finals_right,
                   std::uint64_t right_mask,
                   BoolFn op) {
    final_set_product_into(op, finals_left, finals_right, scratch_);
    bool const predicted = predict_minimal(graph_, info_.connected, scratch_);
    std::size_t const oracle = oracle_.complexity(scratch_);
    Judgement const j = judge(product_.left_states(), product_.right_states(),
                              info_, predicted, oracle);
    return Outcome{left_mask,
                   right_mask,
                   op.table(),
                   predicted,
                   static_cast<std::uint16_t>(oracle),
                   j.status,
                   j.clause,
                   j.reason};
  }

 private:
  ProductAutomaton product_;
  PairGraph graph_;
  ComplexityOracle oracle_;
  PairInfo info_;
  StateSet scratch_;
};

std::vector<StateSet> proper_subsets(std::size_t degree) {
  std::vector<StateSet> out;
  for (std::uint64_t mask = 1; mask <= proper_subset_count(degree); ++mask) {
    out.push_back(StateSet::from_mask(degree, mask));
  }
  return out;
}

bool passes(RecordFilter filter, Status s) {
  switch (filter) {
    case RecordFilter::All:
      return true;
    case RecordFilter::NonPass:
      return s != Status::Pass;
    case RecordFilter::Failures:
      return s == Status::Fail;
  }
  return false;
}

// Builds units [0, total) in batches, possibly on several threads, and
// emits them in index order.
CampaignSummary drive(CampaignConfig const& cfg,
                      std::uint64_t total,
                      std::function<Unit(std::uint64_t)> const& make_unit,
                      RecordSink const& sink,
                      RecordFilter filter) {
  CampaignSummary summary;
  std::uint64_t const batch = std::max<std::uint64_t>(64, cfg.jobs * 16ULL);
  VerificationRecord record;
  record.m = cfg.m;
  record.n = cfg.n;

  for (std::uint64_t start = 0; start < total && !summary.halted;
       start += batch) {
    std::uint64_t const count = std::min(batch, total - start);
    std::vector<Unit> units(count);
    if (cfg.jobs <= 1 || count == 1) {
      for (std::uint64_t i = 0; i < count; ++i) {
        units[i] = make_unit(start + i);
      }
    } else {
      std::atomic<std::uint64_t> next{0};
      std::exception_ptr error;
      std::mutex error_mutex;
      std::vector<std::thread> workers;
      for (unsigned w = 0; w < std::min<std::uint64_t>(cfg.jobs, count); ++w) {
        workers.emplace_back([&] {
          for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
            try {
              units[i] = make_unit(start + i);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) {
                error = std::current_exception();
              }
            }
          }
        });
      }
      for (auto& t : workers) {
        t.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    for (auto const& unit : units) {
      ++summary.base_pairs;
      summary.conjugate_pairs += unit.info.conjugate ? 1 : 0;
      summary.connected_pairs += unit.info.connected ? 1 : 0;
      record.b1 = unit.info.b1;
      record.b2 = unit.info.b2;
      record.conjugate = unit.info.conjugate;
      record.connected = unit.info.connected;
      record.reachable = unit.info.reachable;
      record.reachable_is_permutation_graph = unit.info.permutation_graph;
      for (auto const& o : unit.outcomes) {
        ++summary.instances;
        switch (o.status) {
          case Status::Pass:
            ++summary.pass;
            break;
          case Status::Fail:
            ++summary.fail;
            break;
          case Status::ExceptionExpected:
            ++summary.exception_expected;
            break;
        }
        if (unit.info.conjugate) {
          ++summary.conjugate_instances;
          summary.conjugate_max_complexity =
              std::max<std::size_t>(summary.conjugate_max_complexity, o.oracle);
          if (unit.info.conjugator_fixes_initial) {
            summary.conjugate_on_graph_max_complexity = std::max<std::size_t>(
                summary.conjugate_on_graph_max_complexity, o.oracle);
          }
          if (unit.info.reachable != cfg.n || !unit.info.permutation_graph
              || o.oracle > cfg.n) {
            ++summary.conjugate_literal_violations;
          }
        } else if (o.oracle < cfg.m * cfg.n) {
          ++summary.below_mn;
        }
        bool const halting = o.reason == Reason::Disagreement;
        bool const want_record = (sink && passes(filter, o.status))
                                 || (o.status == Status::Fail
                                     && !summary.first_failure);
        if (!want_record) {
          continue;
        }
        record.finals_left = StateSet::from_mask(cfg.m, o.left_mask);
        record.finals_right = StateSet::from_mask(cfg.n, o.right_mask);
        record.op = BoolFn(o.op);
        record.predicted = o.predicted;
        record.oracle = o.oracle;
        record.status = o.status;
        record.clause = o.clause;
        record.reason = to_string(o.reason);
        if (o.status == Status::Fail && !summary.first_failure) {
          summary.first_failure = record;
        }
        if (sink && passes(filter, o.status)) {
          sink(record);
        }
        if (halting) {
          summary.halted = true;
          break;
        }
      }
      if (summary.halted) {
        break;
      }
    }
  }
  return summary;
}

}  // namespace

std::uint64_t exhaustive_instance_count(CampaignConfig const& cfg) {
  validate(cfg);
  std::uint64_t const per_pair =
      saturating_mul(saturating_mul(proper_subset_count(cfg.m),
                                    proper_subset_count(cfg.n)),
                     cfg.ops.size());
  auto over = [&](std::uint64_t v) {
    return v > cfg.budget;
  };
  std::uint64_t lower = saturating_mul(
      saturating_mul(basis_count_lower_bound(cfg.m),
                     basis_count_lower_bound(cfg.n)),
      per_pair);
  auto refuse = [&](std::uint64_t v) {
    return CapExceeded("exhaustive sweep of (" + std::to_string(cfg.m) + ","
                       + std::to_string(cfg.n) + ") needs "
                       + (v == UINT64_MAX ? std::string("too many")
                                          : std::to_string(v))
                       + " minimizations, above the budget of "
                       + std::to_string(cfg.budget) + "; use sampled mode");
  };
  if (over(lower) || cfg.m > kDefaultDegreeCap || cfg.n > kDefaultDegreeCap) {
    throw refuse(lower);
  }
  std::uint64_t const exact =
      saturating_mul(saturating_mul(enumerate_bases(cfg.m).size(),
                                    enumerate_bases(cfg.n).size()),
                     per_pair);
  if (over(exact)) {
    throw refuse(exact);
  }
  return exact;
}

Basis random_basis(InstanceRng& rng, std::size_t degree, std::size_t max_tries) {
  if (degree < 2) {
    throw InvalidArgument("random bases need degree at least 2");
  }
  std::size_t const cap = std::max(degree, kDefaultDegreeCap);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Permutation s = rng.permutation(degree);
    Permutation t = rng.permutation(degree);
    if (s == t && degree != 2) {
      continue;
    }
    if (generates_symmetric(s, t, cap)) {
      return Basis(std::move(s), std::move(t), BasisOptions{false, cap});
    }
  }
  throw Error("rejection sampling found no basis of S_" + std::to_string(degree)
              + " in " + std::to_string(max_tries) + " tries");
}

CampaignSummary run_campaign(CampaignConfig const& cfg,
                             RecordSink const& sink,
                             RecordFilter filter) {
  validate(cfg);
  std::vector<BoolFn> const ops = cfg.ops;

  if (cfg.mode == CampaignMode::Exhaustive) {
    exhaustive_instance_count(cfg);
    auto const left_bases = enumerate_bases(cfg.m);
    auto const right_bases = enumerate_bases(cfg.n);
    auto const left_sets = proper_subsets(cfg.m);
    auto const right_sets = proper_subsets(cfg.n);
    auto make = [&](std::uint64_t index) {
      Basis const& l = left_bases[index / right_bases.size()];
      Basis const& r = right_bases[index % right_bases.size()];
      PairContext ctx(l, r);
      Unit unit;
      unit.outcomes.reserve(left_sets.size() * right_sets.size() * ops.size());
      for (std::size_t f = 0; f < left_sets.size(); ++f) {
        for (std::size_t g = 0; g < right_sets.size(); ++g) {
          for (BoolFn op : ops) {
            unit.outcomes.push_back(
                ctx.evaluate(left_sets[f], f + 1, right_sets[g], g + 1, op));
          }
        }
      }
      unit.info = ctx.info();
      return unit;
    };
    return drive(cfg, left_bases.size() * right_bases.size(), make, sink,
                 filter);
  }

  auto make = [&](std::uint64_t index) {
    InstanceRng rng(cfg.seed, index);
    Basis const l = random_basis(rng, cfg.m);
    std::optional<Basis> r;
    if (cfg.m == cfg.n && rng.unit() < cfg.conjugate_fraction) {
      Permutation const c = rng.permutation(cfg.n);
      r.emplace(conjugate(c, l.first()), conjugate(c, l.second()),
                BasisOptions{false, std::max(cfg.n, kDefaultDegreeCap)});
    } else {
      r.emplace(random_basis(rng, cfg.n));
    }
    std::uint64_t const fl = rng.below(proper_subset_count(cfg.m)) + 1;
    std::uint64_t const fr = rng.below(proper_subset_count(cfg.n)) + 1;
    BoolFn const op = ops[rng.below(ops.size())];
    PairContext ctx(l, *r);
    Unit unit;
    unit.outcomes.push_back(ctx.evaluate(StateSet::from_mask(cfg.m, fl), fl,
                                         StateSet::from_mask(cfg.n, fr), fr,
                                         op));
    unit.info = ctx.info();
    return unit;
  };
  return drive(cfg, cfg.samples, make, sink, filter);
}

std::vector<VerificationRecord> verify_theorem1(CampaignConfig cfg) {
  cfg.mode = CampaignMode::Exhaustive;
  std::vector<VerificationRecord> out;
  run_campaign(cfg, [&](VerificationRecord const& r) { out.push_back(r); });
  return out;
}

std::vector<VerificationRecord> sample_instances(CampaignConfig cfg) {
  cfg.mode = CampaignMode::Sampled;
  std::vector<VerificationRecord> out;
  run_campaign(cfg, [&](VerificationRecord const& r) { out.push_back(r); });
  return out;
}

VerificationRecord evaluate_instance(Basis const& left,
                                     Basis const& right,
                                     StateSet const& finals_left,
                                     StateSet const& finals_right,
                                     BoolFn op) {
  PairContext ctx(left, right);
  Outcome const o = ctx.evaluate(finals_left, 0, finals_right, 0, op);
  VerificationRecord r;
  r.m = left.degree();
  r.n = right.degree();
  r.b1 = ctx.info().b1;
  r.b2 = ctx.info().b2;
  r.conjugate = ctx.info().conjugate;
  r.connected = ctx.info().connected;
  r.reachable = ctx.info().reachable;
  r.reachable_is_permutation_graph = ctx.info().permutation_graph;
  r.finals_left = finals_left;
  r.finals_right = finals_right;
  r.op = op;
  r.predicted = o.predicted;
  r.oracle = o.oracle;
  r.status = o.status;
  r.clause = o.clause;
  r.reason = to_string(o.reason);
  return r;
}

namespace {

void check_connectivity_pair(Theorem2Summary& s, Basis const& l, Basis const& r) {
  ++s.base_pairs;
  bool const conj = l.degree() == r.degree() && bases_conjugate(l, r).has_value();
  auto const product = direct_product(Semiautomaton::from_basis(l),
                                      Semiautomaton::from_basis(r));
  bool const connected = is_connected(product.combined());
  s.conjugate += conj ? 1 : 0;
  s.connected += connected ? 1 : 0;
  if (connected != predict_connected(l, r)) {
    ++s.mismatches;
    if (s.mismatch_examples.size() < 8) {
      s.mismatch_examples.emplace_back(l, r);
    }
  }
}

}  // namespace

Theorem2Summary verify_theorem2(std::size_t m,
                                std::size_t n,
                                std::size_t max_degree) {
  if (m > max_degree || n > max_degree) {
    throw CapExceeded("exhaustive connectivity check is capped at degree "
                      + std::to_string(max_degree) + "; use sampling");
  }
  Theorem2Summary s;
  s.m = m;
  s.n = n;
  auto const left = enumerate_bases(m);
  auto const right = enumerate_bases(n);
  for (auto const& l : left) {
    for (auto const& r : right) {
      check_connectivity_pair(s, l, r);
    }
  }
  return s;
}

Theorem2Summary verify_theorem2_sampled(std::size_t m,
                                        std::size_t n,
                                        std::uint64_t samples,
                                        std::uint64_t seed,
                                        double conjugate_fraction) {
  Theorem2Summary s;
  s.m = m;
  s.n = n;
  for (std::uint64_t i = 0; i < samples; ++i) {
    InstanceRng rng(seed, i);
    Basis const l = random_basis(rng, m);
    if (m == n && rng.unit() < conjugate_fraction) {
      Permutation const c = rng.permutation(n);
      Basis const r(conjugate(c, l.first()), conjugate(c, l.second()),
                    BasisOptions{false, std::max(n, kDefaultDegreeCap)});
      check_connectivity_pair(s, l, r);
    } else {
      check_connectivity_pair(s, l, random_basis(rng, n));
    }
  }
  return s;
}

void write_summary(std::ostream& out,
                   CampaignConfig const& cfg,
                   CampaignSummary const& s) {
  out << "campaign m=" << cfg.m << " n=" << cfg.n << " mode="
      << (cfg.mode == CampaignMode::Exhaustive ? "exhaustive" : "sampled");
  if (cfg.mode == CampaignMode::Sampled) {
    out << " samples=" << cfg.samples << " seed=" << cfg.seed;
  }
  out << " ops=";
  for (std::size_t i = 0; i < cfg.ops.size(); ++i) {
    out << (i ? "," : "") << cfg.ops[i].bits();
  }
  out << '\n'
      << "instances " << s.instances << '\n'
      << "pass " << s.pass << '\n'
      << "fail " << s.fail << '\n'
      << "exception-expected " << s.exception_expected << '\n'
      << "base-pairs " << s.base_pairs << '\n'
      << "conjugate-pairs " << s.conjugate_pairs << '\n'
      << "connected-pairs " << s.connected_pairs << '\n'
      << "below-mn " << s.below_mn << '\n';
  if (s.conjugate_instances > 0) {
    out << "conjugate-instances " << s.conjugate_instances << '\n'
        << "conjugate-max-complexity " << s.conjugate_max_complexity << '\n'
        << "conjugate-fixing-0-max-complexity "
        << s.conjugate_on_graph_max_complexity << " (n=" << cfg.n
        << ", attained "
        << (s.conjugate_on_graph_max_complexity == cfg.n ? "yes" : "no")
        << ")\n"
        << "conjugate-literal-violations " << s.conjugate_literal_violations
        << " (reachable != n, not a permutation graph, or complexity > n)\n";
  }
  if (s.halted) {
    out << "halted: prediction and oracle disagree\n";
  }
}

}  // namespace symbool
