#pragma once

// Deterministic semiautomata and automata over a shared ordered alphabet.
//
// Word convention: a word acts left to right, so run(a, q, "ab") applies the
// action of 'a' first and then that of 'b'. This is the reverse of the order
// used by compose() in perm.hpp.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symbool/perm.hpp"

namespace symbool {

using State = std::uint32_t;

/// A subset of {0, ..., universe-1}.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : bits_(universe, false) {}
  StateSet(std::size_t universe, std::initializer_list<State> members);

  /// Bit q of `mask` selects state q; requires universe <= 64.
  static StateSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(State q) const { return q < bits_.size() && bits_[q]; }
  void insert(State q);
  void erase(State q);
  void assign(State q, bool member) { member ? insert(q) : erase(q); }

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<State> members() const;
  StateSet complement() const;

  friend bool operator==(StateSet const&, StateSet const&) = default;

 private:
  std::vector<bool> bits_;
};

/// Comma-joined members, "-" for the empty set.
std::string format_state_set(StateSet const& set);

/// A transformation of {0, ..., n-1} given by its image array.
using Transformation = std::vector<State>;

class Semiautomaton {
 public:
  /// `actions[k][q]` is the successor of q under alphabet[k]. Throws
  /// InvalidArgument on duplicate letters, short action tables, or
  /// out-of-range states.
  Semiautomaton(std::size_t state_count,
                std::string alphabet,
                std::vector<Transformation> actions,
                State initial = 0);

  /// Letters act as the given permutations, in order.
  static Semiautomaton from_permutations(std::string alphabet,
                                         std::vector<Permutation> const& actions,
                                         State initial = 0);

  /// The two-letter semiautomaton "ab" with a acting as b.first() and b as
  /// b.second().
  static Semiautomaton from_basis(Basis const& b);

  std::size_t state_count() const noexcept { return states_; }
  std::string const& alphabet() const noexcept { return alphabet_; }
  std::size_t letter_count() const noexcept { return alphabet_.size(); }
  State initial() const noexcept { return initial_; }

  std::optional<std::size_t> letter_index(char letter) const noexcept;
  State step(State q, std::size_t letter) const {
    return table_[letter * states_ + q];
  }
  std::span<State const> action(std::size_t letter) const {
    return {table_.data() + letter * states_, states_};
  }

  bool is_permutation_automaton() const;
  /// Throws NotPermutation if the letter does not act bijectively.
  Permutation letter_permutation(std::size_t letter) const;

  friend bool operator==(Semiautomaton const&, Semiautomaton const&) = default;

 private:
  std::size_t states_;
  std::string alphabet_;
  std::vector<State> table_;
  State initial_;
};

class Dfa {
 public:
  /// Throws InvalidArgument if finals is over a different state count.
  Dfa(Semiautomaton base, StateSet finals);

  Semiautomaton const& base() const noexcept { return base_; }
  StateSet const& finals() const noexcept { return finals_; }
  std::size_t state_count() const noexcept { return base_.state_count(); }

  bool accepts(std::string_view word) const;
  /// Empty or full final set.
  bool is_improper() const noexcept;

  friend bool operator==(Dfa const&, Dfa const&) = default;

 private:
  Semiautomaton base_;
  StateSet finals_;
};

/// Applies the word left to right. Throws InvalidArgument on an unknown
/// letter.
State run(Semiautomaton const& a, State from, std::string_view word);

/// Sorted ascending.
std::vector<State> reachable_states(Semiautomaton const& a);
std::vector<State> reachable_from(Semiautomaton const& a, State from);
bool is_connected(Semiautomaton const& a);
bool is_strongly_connected(Semiautomaton const& a);

/// Transformations induced by non-empty words.
class TransitionSemigroup {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  /// Sorted lexicographically.
  std::span<Transformation const> elements() const noexcept {
    return elements_;
  }
  Transformation const& generator(std::size_t letter) const {
    return generators_.at(letter);
  }
  bool contains(Transformation const& t) const;
  bool contains_identity() const;
  /// Every element is a bijection and the identity is present.
  bool is_group() const;

 private:
  friend TransitionSemigroup transition_semigroup(Semiautomaton const&,
                                                  std::size_t);
  std::vector<Transformation> elements_;
  std::vector<Transformation> generators_;
};

/// Transformation induced by a word (identity for the empty word).
Transformation induced_transformation(Semiautomaton const& a,
                                      std::string_view word);

/// Throws CapExceeded beyond `max_elements`.
TransitionSemigroup transition_semigroup(Semiautomaton const& a,
                                         std::size_t max_elements
                                         = factorial(kDefaultDegreeCap));

/// Moore partition refinement over the reachable part of one semiautomaton,
/// reusable across final-state sets. Not safe for concurrent use: each call
/// reuses internal scratch buffers.
class ComplexityOracle {
 public:
  explicit ComplexityOracle(Semiautomaton const& a);

  std::size_t reachable_count() const noexcept { return reachable_.size(); }
  std::span<State const> reachable() const noexcept { return reachable_; }

  /// Number of Nerode classes among reachable states, i.e. the quotient
  /// complexity of the language of (a, finals).
  std::size_t complexity(StateSet const& finals);

  /// Class id of each reachable state (aligned with reachable()) after the
  /// most recent complexity() call. Ids are numbered by smallest member.
  std::span<std::uint32_t const> classes() const noexcept { return cls_; }

 private:
  std::size_t refine_once(std::size_t letter, std::size_t count);

  std::size_t letters_;
  std::vector<State> reachable_;
  std::vector<std::uint32_t> succ_;  // [letter * r + local]
  std::vector<std::uint32_t> cls_;
  std::vector<std::uint32_t> next_;
  std::vector<std::int32_t> pair_ids_;
  std::vector<std::uint32_t> touched_;
};

struct Minimization {
  Dfa minimal;
  std::size_t complexity;
};

/// Drops unreachable states and merges equivalent ones. Classes are numbered
/// by their smallest original state, ascending.
Minimization minimize(Dfa const& d);

/// Partition of the reachable states into equivalence classes, each sorted,
/// ordered by smallest member.
std::vector<std::vector<State>> equivalence_classes(Dfa const& d);

/// True iff (a, F) is minimal for every F with {} != F != Q, checked by
/// minimizing each of the 2^n - 2 DFAs. Throws InvalidArgument when fewer
/// than two states and CapExceeded above `max_states`.
bool is_uniformly_minimal(Semiautomaton const& a, std::size_t max_states = 20);

/// Contents of an automaton text file; `finals` is absent for semiautomata.
struct AutomatonFile {
  Semiautomaton automaton;
  std::optional<StateSet> finals;
};

/// Line-oriented format:
///   states <n>
///   alphabet <l1> <l2> ...
///   trans <letter> <perm-expr>
///   initial <q>
///   final <q1> <q2> ...      (optional)
/// '#' starts a comment. Throws ParseError carrying the line number.
AutomatonFile parse_automaton(std::string_view text);
AutomatonFile load_automaton(std::filesystem::path const& path);
/// Requires a permutation automaton.
std::string format_automaton(Semiautomaton const& a,
                             std::optional<StateSet> const& finals
                             = std::nullopt);

}  // namespace symbool
