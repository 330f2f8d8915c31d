#pragma once

// Verification campaigns: enumerate or sample instances (basis pair, F, F',
// boolean function), compute the structural prediction and the minimization
// oracle for each, and judge the outcome against the applicable clause of
// the main theorem.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symbool/automaton.hpp"
#include "symbool/boolops.hpp"
#include "symbool/perm.hpp"
#include "symbool/rng.hpp"

namespace symbool {

/// All ordered generating pairs of S_n in lexicographic order of (s, t)
/// image arrays. Pairs with s == t are kept only for n == 2.
std::vector<Basis> enumerate_bases(std::size_t degree,
                                   std::size_t max_degree = kDefaultDegreeCap);

/// Degrees excluded from the main theorem: (2,2), (3,4), (4,3), (4,4).
bool in_exception_set(std::size_t m, std::size_t n) noexcept;

enum class Status { Pass, Fail, ExceptionExpected };
std::string to_string(Status s);

/// Which clause an instance was judged under.
enum class Clause {
  Main,          // complexity must be mn
  // Same degree, conjugate bases with conjugator r: the reachable set must be
  // the graph of r when r(0) == 0 (then complexity <= n), and its complement
  // (n(n-1) states) otherwise.
  Conjugate,
  ExceptionSet,  // below mn is reported, not failed
};
std::string to_string(Clause c);

struct VerificationRecord {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string b1;  // "S;T"
  std::string b2;
  bool conjugate = false;
  bool connected = false;
  std::size_t reachable = 0;
  bool reachable_is_permutation_graph = false;
  StateSet finals_left;
  StateSet finals_right;
  BoolFn op{0};
  bool predicted = false;
  std::size_t oracle = 0;
  Status status = Status::Pass;
  Clause clause = Clause::Main;
  /// Failure reason, or a note on which conjugate case applied.
  std::string reason;
};

/// Tab-separated header and row:
/// m n b1 b2 conjugate connected F Fp op predicted oracle status
std::string tsv_header();
std::string to_tsv(VerificationRecord const& r);

/// Text that rebuilds the instance: both automaton files and the function.
std::string replay_text(VerificationRecord const& r);

enum class CampaignMode { Exhaustive, Sampled };

/// Exhaustive sweeps run only when bases * final-set pairs * functions stays
/// within this many minimizations.
inline constexpr std::uint64_t kExhaustiveBudget = 100'000'000;

struct CampaignConfig {
  std::size_t m = 2;
  std::size_t n = 3;
  CampaignMode mode = CampaignMode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<BoolFn> ops = proper_functions();
  /// Sampled mode with m == n: probability that the right basis is drawn as
  /// a random conjugate of the left one.
  double conjugate_fraction = 0.0;
  unsigned jobs = 1;
  std::uint64_t budget = kExhaustiveBudget;
};

/// Throws InvalidArgument on degrees below 2, an empty or improper function
/// list, or a sampled config without samples.
void validate(CampaignConfig const& cfg);

/// Instance count of an exhaustive sweep; throws CapExceeded when it would
/// exceed the budget.
std::uint64_t exhaustive_instance_count(CampaignConfig const& cfg);

struct CampaignSummary {
  std::uint64_t instances = 0;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t exception_expected = 0;
  std::uint64_t base_pairs = 0;
  std::uint64_t conjugate_pairs = 0;
  std::uint64_t connected_pairs = 0;
  std::uint64_t conjugate_instances = 0;
  std::size_t conjugate_max_complexity = 0;
  /// Same, restricted to pairs whose conjugator fixes the initial state.
  std::size_t conjugate_on_graph_max_complexity = 0;
  /// Conjugate instances where the reachable set is not an n-state
  /// permutation graph or the complexity exceeds n.
  std::uint64_t conjugate_literal_violations = 0;
  /// Non-conjugate instances with complexity below mn.
  std::uint64_t below_mn = 0;
  /// Set when the prediction and the oracle disagreed; the campaign stops
  /// there.
  bool halted = false;
  std::optional<VerificationRecord> first_failure;

  bool ok() const noexcept { return fail == 0; }
};

enum class RecordFilter { All, NonPass, Failures };

/// Called in canonical enumeration order, regardless of the worker count.
using RecordSink = std::function<void(VerificationRecord const&)>;

/// Runs an exhaustive or sampled campaign. Records passing `filter` are
/// handed to `sink`.
CampaignSummary run_campaign(CampaignConfig const& cfg,
                             RecordSink const& sink = {},
                             RecordFilter filter = RecordFilter::All);

/// Exhaustive campaign collecting every record.
std::vector<VerificationRecord> verify_theorem1(CampaignConfig cfg);

/// Sampled campaign collecting every record.
std::vector<VerificationRecord> sample_instances(CampaignConfig cfg);

/// Builds one instance directly and judges it like a campaign would.
VerificationRecord evaluate_instance(Basis const& left,
                                     Basis const& right,
                                     StateSet const& finals_left,
                                     StateSet const& finals_right,
                                     BoolFn op);

struct Theorem2Summary {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t base_pairs = 0;
  std::uint64_t conjugate = 0;
  std::uint64_t connected = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::pair<Basis, Basis>> mismatch_examples;  // first few
};

/// For every pair of bases: is_connected(product) == predict_connected.
Theorem2Summary verify_theorem2(std::size_t m,
                                std::size_t n,
                                std::size_t max_degree = 4);

/// Same check on `samples` random basis pairs; with m == n a share of the
/// right bases are random conjugates of the left.
Theorem2Summary verify_theorem2_sampled(std::size_t m,
                                        std::size_t n,
                                        std::uint64_t samples,
                                        std::uint64_t seed,
                                        double conjugate_fraction = 0.25);

/// A uniformly random basis of S_n by rejection; throws Error after
/// `max_tries` rejections.
Basis random_basis(InstanceRng& rng,
                   std::size_t degree,
                   std::size_t max_tries = 100'000);

void write_summary(std::ostream& out,
                   CampaignConfig const& cfg,
                   CampaignSummary const& s);

}  // namespace symbool
