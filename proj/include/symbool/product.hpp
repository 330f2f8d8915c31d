#pragma once

// Direct products of semiautomata, their pair graphs, and the group-theoretic
// diagnostics used to predict connectivity and minimality.
//
// Product states are numbered (i, j) -> i * n + j, where n is the number of
// states of the right factor. All listings use this numbering.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symbool/automaton.hpp"
#include "symbool/perm.hpp"

namespace symbool {

class ProductAutomaton {
 public:
  /// Throws InvalidArgument unless both alphabets are identical, in order.
  ProductAutomaton(Semiautomaton left, Semiautomaton right);

  Semiautomaton const& left() const noexcept { return left_; }
  Semiautomaton const& right() const noexcept { return right_; }
  /// The product as a semiautomaton on m * n states.
  Semiautomaton const& combined() const noexcept { return combined_; }

  std::size_t left_states() const noexcept { return left_.state_count(); }
  std::size_t right_states() const noexcept { return right_.state_count(); }
  std::size_t state_count() const noexcept { return combined_.state_count(); }

  State index(State i, State j) const noexcept {
    return static_cast<State>(i * right_states() + j);
  }
  std::pair<State, State> coordinates(State s) const noexcept {
    auto const n = static_cast<State>(right_states());
    return {s / n, s % n};
  }

 private:
  Semiautomaton left_;
  Semiautomaton right_;
  Semiautomaton combined_;
};

ProductAutomaton direct_product(Semiautomaton const& left,
                                Semiautomaton const& right);

/// Connected iff the degrees differ or the bases are not conjugate.
bool predict_connected(Basis const& left, Basis const& right);

/// Unordered pair {first, second} of distinct product states, first < second.
struct StatePair {
  State first;
  State second;

  friend bool operator==(StatePair, StatePair) = default;
  friend auto operator<=>(StatePair, StatePair) = default;
};

using Component = std::vector<StatePair>;

class PairGraph {
 public:
  std::size_t left_states() const noexcept { return m_; }
  std::size_t right_states() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept;
  /// Components ordered by smallest vertex; vertices sorted within each.
  std::vector<Component> const& components() const noexcept {
    return components_;
  }
  std::size_t component_of(StatePair p) const;

 private:
  friend PairGraph pair_graph(ProductAutomaton const&);
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Component> components_;
  std::vector<std::uint32_t> component_index_;  // by triangular vertex index
};

/// Throws NotPermutation unless every letter permutes both factors. Since
/// each letter then permutes the pairs, weak and strong components coincide.
PairGraph pair_graph(ProductAutomaton const& p);

enum class ComponentKind { C1, C2, C3, Other };

/// Pairs differing in both coordinates (C1), sharing the left coordinate
/// (C2), or sharing the right coordinate (C3).
struct ComponentLabel {
  ComponentKind kind;
  bool exact;  // the component is the whole of its type

  friend bool operator==(ComponentLabel, ComponentLabel) = default;
};

std::string to_string(ComponentKind kind);

/// Throws InvalidArgument on an empty component.
ComponentLabel classify_component(std::span<StatePair const> component,
                                  std::size_t m,
                                  std::size_t n);

/// Some pair has exactly one final member.
bool has_distinguishing_pair(std::span<StatePair const> component,
                             StateSet const& finals);
std::vector<StatePair> distinguishing_pairs(std::span<StatePair const> component,
                                            StateSet const& finals);

/// Minimality predicted from structure alone: the product is connected and
/// every pair-graph component has a distinguishing pair. Throws
/// NotPermutation when a factor's transition semigroup is not a group.
bool predict_minimal(ProductAutomaton const& p, StateSet const& finals);
/// Same, reusing a pair graph computed once for many final sets.
bool predict_minimal(PairGraph const& graph,
                     bool connected,
                     StateSet const& finals);

/// The transition group H of a permutation product, as permutations of
/// m + n points: left states keep their labels, right state j becomes m + j.
GroupClosure product_transition_group(ProductAutomaton const& p,
                                      std::size_t max_elements);

/// Splits an element of product_transition_group into (pi_1(h), pi_2(h)).
std::pair<Permutation, Permutation> split_product_element(Permutation const& h,
                                                          std::size_t m);

enum class ImageKind { Symmetric, Alternating, PointStabilizer, Other };

std::string to_string(ImageKind kind);

/// Classification of pi_2(H_0) with H_0 = {h in H : pi_1(h)(0) = 0}.
struct StabilizerImage {
  ImageKind kind;
  std::optional<Point> fixed_point;  // smallest fixed point for stabilizers
  std::size_t order;
};

/// Computes H by closure. A trivial group on two points counts as the
/// stabilizer of 0. Throws CapExceeded and NotPermutation.
StabilizerImage stabilizer_image(ProductAutomaton const& p,
                                 std::size_t max_elements
                                 = factorial(6) * factorial(6));

/// "(i,j)" for a product state.
std::string format_product_state(ProductAutomaton const& p, State s);
std::string format_pair(ProductAutomaton const& p, StatePair pair);

/// Deterministic component listing; distinguishing pairs are starred when
/// finals are given.
std::string format_pair_graph(ProductAutomaton const& p,
                              PairGraph const& graph,
                              std::optional<StateSet> const& finals
                              = std::nullopt);

}  // namespace symbool
