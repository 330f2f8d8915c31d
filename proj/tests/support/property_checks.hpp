#pragma once

// Property suites shared by the doctest property tests and the acceptance
// runner. Each returns ok plus a one-line description of what was checked,
// or of the first counterexample.

#include <cstddef>
#include <cstdint>
#include <string>

namespace props {

struct CheckResult {
  bool ok = true;
  std::string detail;
};

CheckResult group_axioms(std::uint64_t seed, std::size_t trials = 300);
CheckResult cycle_relabeling(std::uint64_t seed, std::size_t trials = 300);
CheckResult parse_format_round_trip(std::uint64_t seed, std::size_t trials = 300);

/// Moore refinement against table filling on random DFAs of up to
/// `max_states` states.
CheckResult minimize_matches_pairwise(std::uint64_t seed,
                                      std::size_t cases = 200,
                                      std::size_t max_states = 36);
CheckResult minimize_is_idempotent(std::uint64_t seed, std::size_t cases = 100);
CheckResult complement_invariance(std::uint64_t seed, std::size_t cases = 100);

/// Connected permutation products: equivalence classes all have one size,
/// which divides the state count.
CheckResult equal_class_sizes(std::uint64_t seed, std::size_t cases = 100);

/// Every (m, n) with 2 <= m, n <= 4 and max(m, n) >= 3, all base pairs:
/// each component lies in one of C1, C2, C3; for connected products every
/// state occurs in every component and every component has >= mn/2 pairs.
CheckResult component_types();

/// Sampled connected products with m <= n, n >= 5, (m, n) != (6, 6): exactly
/// three components, each a full C1, C2 or C3.
CheckResult three_components(std::uint64_t seed, std::size_t samples = 50);

/// All 324 ordered pairs of S_3 bases: H is S_3 x S_3 or {(s, t^-1 s t)}.
CheckResult s3_product_groups();

/// Connected products of bases with m, n <= 3 are strongly connected.
CheckResult connected_implies_strong();

/// Product DFA accepts w iff f(w in L, w in L'), words up to length 12.
CheckResult boolean_language_consistency(std::uint64_t seed,
                                         std::size_t cases = 20);

/// For every proper f, the product finals under f are either those under
/// representative_of(f) or their complement, and the complexities agree.
CheckResult class_collapse(std::uint64_t seed, std::size_t cases = 100);

/// Two-path agreement on random products: predict_minimal ==
/// (complexity == m n).
CheckResult prediction_matches_oracle(std::uint64_t seed, std::size_t cases = 300);

}  // namespace props
