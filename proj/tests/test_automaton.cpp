#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "symbool/automaton.hpp"
#include "symbool/boolops.hpp"
#include "symbool/error.hpp"
#include "symbool/product.hpp"

using namespace symbool;

namespace {

Semiautomaton from_basis_text(std::string_view text, std::size_t degree) {
  return Semiautomaton::from_basis(parse_basis(text, degree));
}

}  // namespace

TEST_SUITE("automaton") {

TEST_CASE("state sets") {
  StateSet s(5, {0, 2});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(9));
  CHECK(s.count() == 2);
  CHECK(format_state_set(s) == "0,2");
  CHECK(format_state_set(StateSet(3)) == "-");
  CHECK(s.complement().members() == std::vector<State>{1, 3, 4});
  s.erase(0);
  s.assign(4, true);
  CHECK(s.members() == std::vector<State>{2, 4});
  CHECK_THROWS_AS(s.insert(5), InvalidArgument);
  CHECK(StateSet::from_mask(4, 0b1010) == StateSet(4, {1, 3}));
  CHECK_THROWS_AS(StateSet::from_mask(65, 1), InvalidArgument);
}

TEST_CASE("semiautomaton construction and runs") {
  auto const a = from_basis_text("(0,1,2);(0,1)", 3);
  CHECK(a.state_count() == 3);
  CHECK(a.alphabet() == "ab");
  CHECK(a.step(0, 0) == 1);
  CHECK(a.step(0, 1) == 1);
  CHECK(a.step(2, 1) == 2);
  CHECK(run(a, 0, "aab") == 2);
  CHECK(run(a, 0, "") == 0);
  CHECK_THROWS_AS(run(a, 0, "ac"), InvalidArgument);
  CHECK(a.letter_index('b') == 1);
  CHECK_FALSE(a.letter_index('z').has_value());
  CHECK(a.is_permutation_automaton());
  CHECK(a.letter_permutation(0) == parse_cycles("(0,1,2)", 3));

  CHECK_THROWS_AS(Semiautomaton(0, "a", {{}}), InvalidArgument);
  CHECK_THROWS_AS(Semiautomaton(2, "", {}), InvalidArgument);
  CHECK_THROWS_AS(Semiautomaton(2, "aa", {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Semiautomaton(2, "a", {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Semiautomaton(2, "a", {{0, 1}}, 2), InvalidArgument);
}

TEST_CASE("non-permutation letters") {
  Semiautomaton const a(3, "ab", {{1, 2, 0}, {0, 0, 2}});
  CHECK_FALSE(a.is_permutation_automaton());
  CHECK_THROWS_AS(a.letter_permutation(1), NotPermutation);
  auto const sg = transition_semigroup(a);
  CHECK_FALSE(sg.is_group());
  CHECK(sg.contains(Transformation{0, 0, 2}));
}

TEST_CASE("dfa acceptance") {
  Dfa const d(from_basis_text("(0,1,2);(0,1)", 3), StateSet(3, {2}));
  CHECK(d.accepts("aa"));
  CHECK(d.accepts("ba"));
  CHECK_FALSE(d.accepts("a"));
  CHECK_FALSE(d.is_improper());
  CHECK(Dfa(d.base(), StateSet(3)).is_improper());
  CHECK(Dfa(d.base(), StateSet(3, {0, 1, 2})).is_improper());
  CHECK_THROWS_AS(Dfa(d.base(), StateSet(4)), InvalidArgument);
}

TEST_CASE("reachability") {
  // 0 -> 1 -> 2, state 3 unreachable, 2 is a sink
  Semiautomaton const a(4, "a", {{1, 2, 2, 0}});
  CHECK(reachable_states(a) == std::vector<State>{0, 1, 2});
  CHECK(reachable_from(a, 3) == std::vector<State>{0, 1, 2, 3});
  CHECK_FALSE(is_connected(a));
  CHECK_FALSE(is_strongly_connected(a));
  CHECK(reachable_states(a) == oracle::reachable(a));
  auto const s3 = from_basis_text("(0,1,2);(0,1)", 3);
  CHECK(is_connected(s3));
  CHECK(is_strongly_connected(s3));
}

TEST_CASE("transition semigroups of the S_3 automata") {
  auto const a = from_basis_text("(0,1,2);(0,1)", 3);
  auto const ap = from_basis_text("(0,1,2);(1,2)", 3);
  auto const app = from_basis_text("(0,1);(0,1,2)", 3);
  CHECK(transition_semigroup(a).size() == 6);
  CHECK(transition_semigroup(ap).size() == 6);
  CHECK(transition_semigroup(app).size() == 6);
  CHECK(transition_semigroup(a).is_group());
  Transformation const id{0, 1, 2};
  CHECK(induced_transformation(a, "aaa") == id);
  CHECK(induced_transformation(a, "aa") != id);
  CHECK(induced_transformation(app, "aa") == id);
  CHECK(induced_transformation(a, "ab") == Transformation{0, 2, 1});
  CHECK_THROWS_AS(transition_semigroup(from_basis_text("(0,1,2,3);(0,1)", 4), 10),
                  CapExceeded);
}

TEST_CASE("minimization of the (3,4) product under intersection") {
  auto const p = direct_product(from_basis_text("(0,1);(0,1,2)", 3),
                                from_basis_text("(0,1);(1,3,2)", 4));
  StateSet const finals =
      final_set_product(ops::kAnd, StateSet(3, {2}), StateSet(4, {0, 1}));
  Dfa const d(p.combined(), finals);
  auto const m = minimize(d);
  CHECK(m.complexity == 6);
  CHECK(oracle::pairwise_complexity(p.combined(), finals) == 6);
  auto const classes = equivalence_classes(d);
  CHECK(classes.size() == 6);
  for (auto const& c : classes) {
    CHECK(c.size() == 2);
  }
  // (0,0) and (0,3) share a class
  CHECK(std::find(classes.front().begin(), classes.front().end(),
                  p.index(0, 3)) != classes.front().end());
}

TEST_CASE("minimal DFA numbering and degenerate final sets") {
  // 0 -a-> 1 -a-> 2 -a-> 3 -a-> 0 with finals {1,3}: classes {0,2},{1,3}
  Semiautomaton const a(4, "a", {{1, 2, 3, 0}});
  auto const m = minimize(Dfa(a, StateSet(4, {1, 3})));
  CHECK(m.complexity == 2);
  CHECK(m.minimal.base().initial() == 0);
  CHECK(m.minimal.finals() == StateSet(2, {1}));
  CHECK(m.minimal.base().step(0, 0) == 1);
  CHECK(minimize(Dfa(a, StateSet(4))).complexity == 1);
  CHECK(minimize(Dfa(a, StateSet(4, {0, 1, 2, 3}))).complexity == 1);
  CHECK(equivalence_classes(Dfa(a, StateSet(4, {1, 3})))
        == std::vector<std::vector<State>>{{0, 2}, {1, 3}});
}

TEST_CASE("complexity oracle reuses its precomputation") {
  auto const p = direct_product(from_basis_text("id;(0,1)", 2),
                                from_basis_text("(0,1,2);(0,1)", 3));
  ComplexityOracle o(p.combined());
  CHECK(o.reachable_count() == 6);
  CHECK(o.complexity(final_set_product(ops::kXor, StateSet(2, {0}),
                                       StateSet(3, {0, 1})))
        == 6);
  CHECK(o.complexity(StateSet(6)) == 1);
  CHECK(o.complexity(StateSet(6, {0})) == 6);
}

TEST_CASE("uniform minimality") {
  CHECK(is_uniformly_minimal(from_basis_text("(0,1,2);(0,1)", 3)));
  CHECK(is_uniformly_minimal(from_basis_text("(0,1,2,3);(0,1)", 4)));
  CHECK(is_uniformly_minimal(from_basis_text("(0,1,2,3,4);(0,1)", 5)));
  Semiautomaton const rotation(4, "a", {{1, 2, 3, 0}});
  CHECK_FALSE(is_uniformly_minimal(rotation));
  Semiautomaton const unreachable(3, "a", {{1, 0, 2}});
  CHECK_FALSE(is_uniformly_minimal(unreachable));
  CHECK_THROWS_AS(is_uniformly_minimal(Semiautomaton(1, "a", {{0}})),
                  InvalidArgument);
}

TEST_CASE("automaton files") {
  auto const file = parse_automaton(
      "# comment\n"
      "states 4\n"
      "alphabet a b\n"
      "trans a (0,1)   # swap\n"
      "trans b (1,3,2)\n"
      "initial 0\n"
      "final 0 1\n");
  CHECK(file.automaton.state_count() == 4);
  CHECK(file.automaton.alphabet() == "ab");
  CHECK(file.automaton.step(3, 1) == 2);
  REQUIRE(file.finals.has_value());
  CHECK(*file.finals == StateSet(4, {0, 1}));

  auto const again = parse_automaton(format_automaton(file.automaton, file.finals));
  CHECK(again.automaton == file.automaton);
  CHECK(again.finals == file.finals);

  auto const nofinal = parse_automaton("states 2\nalphabet a\ntrans a (0,1)\ninitial 1\n");
  CHECK_FALSE(nofinal.finals.has_value());
  CHECK(nofinal.automaton.initial() == 1);
}

TEST_CASE("automaton file errors carry line numbers") {
  auto line_of = [](std::string const& text) -> std::size_t {
    try {
      parse_automaton(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("states 2\nalphabet a\ntrans a (0,1)\nstart 0\n") == 4);
  CHECK(line_of("states 2\nstates 3\nalphabet a\ntrans a (0,1)\ninitial 0\n") == 2);
  CHECK(line_of("states 2\nalphabet a\ntrans a (0,2)\ninitial 0\n") == 3);
  CHECK(line_of("states 2\nalphabet a\ntrans b (0,1)\ninitial 0\n") == 3);
  CHECK(line_of("states 2\nalphabet a\ntrans a (0,1)\ninitial 5\n") == 4);
  CHECK(line_of("states 2\nalphabet a 1\ntrans a (0,1)\ninitial 0\n") == 2);
  CHECK(line_of("states 2\nalphabet a\ntrans a (0,1)\ninitial 0\nfinal 1 1\n") == 5);
  CHECK_THROWS_AS(parse_automaton("states 2\nalphabet a b\ntrans a (0,1)\ninitial 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_automaton("alphabet a\ntrans a (0,1)\ninitial 0\n"),
                  ParseError);
  CHECK_THROWS_AS(load_automaton("/nonexistent/file.aut"), Error);
}

}  // TEST_SUITE
