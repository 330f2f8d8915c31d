#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "symbool/error.hpp"
#include "symbool/perm.hpp"

using namespace symbool;

namespace {

Permutation cyc(std::string_view text, std::size_t degree) {
  return parse_cycles(text, degree);
}

oracle::Image image_of(Permutation const& p) {
  return {p.image().begin(), p.image().end()};
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("cycle notation parses to images") {
  CHECK(cyc("(0,1,2)", 3).image()[0] == 1);
  CHECK(cyc("(0,1,2)", 3).image()[1] == 2);
  CHECK(cyc("(0,1,2)", 3).image()[2] == 0);
  CHECK(cyc("id", 4).is_identity());
  CHECK(cyc("(0,2)(1,3)", 4) == Permutation({2, 3, 0, 1}));
  CHECK(cyc(" ( 1 , 2 ) ", 3) == Permutation({0, 2, 1}));
}

TEST_CASE("format starts cycles at their smallest point") {
  CHECK(format_cycles(cyc("(2,0,1)", 3)) == "(0,1,2)");
  CHECK(format_cycles(cyc("(3,1)(2,0)", 4)) == "(0,2)(1,3)");
  CHECK(format_cycles(Permutation::identity(5)) == "id");
}

TEST_CASE("malformed cycle text is rejected") {
  CHECK_THROWS_AS(cyc("", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0,1", 3), ParseError);
  CHECK_THROWS_AS(cyc("0,1)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0,5)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0,0)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0,1)(1,2)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0;1)", 3), ParseError);
}

TEST_CASE("invalid image arrays are rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({}), InvalidArgument);
}

TEST_CASE("compose applies the inner permutation first") {
  Permutation const outer = cyc("(0,1)", 3);
  Permutation const inner = cyc("(1,2)", 3);
  CHECK(compose(outer, inner) == cyc("(0,1,2)", 3));
  CHECK(compose(inner, outer) == cyc("(0,2,1)", 3));
  CHECK_THROWS_AS(compose(outer, cyc("(0,1)", 4)), DegreeMismatch);
}

TEST_CASE("inverse and parity") {
  Permutation const p = cyc("(0,3,1)(2,4)", 5);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK_FALSE(p.is_even());
  CHECK(cyc("(0,1,2)", 3).is_even());
  CHECK(Permutation::identity(1).is_even());
}

TEST_CASE("conjugation relabels cycles") {
  CHECK(conjugate(cyc("(0,1,2)", 3), cyc("(0,1)", 3)) == cyc("(1,2)", 3));
  CHECK(conjugate(cyc("(0,1,2)", 3), cyc("(0,1,2)", 3)) == cyc("(0,1,2)", 3));
}

TEST_CASE("make_cycle") {
  CHECK(make_cycle(4, {3, 1, 2}) == cyc("(1,2,3)", 4));
  CHECK_THROWS_AS(make_cycle(3, {0, 3}), InvalidArgument);
}

TEST_CASE("factorial and permutation listing") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  auto const all = all_permutations(4);
  CHECK(all.size() == 24);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front().is_identity());
  CHECK_THROWS_AS(all_permutations(9), CapExceeded);
  CHECK(all_permutations(9, 9).size() == 362880);
}

TEST_CASE("group closure") {
  std::vector<Permutation> const gens{cyc("(0,1,2)", 3), cyc("(0,1)", 3)};
  GroupClosure const g = generate_group(gens);
  CHECK(g.size() == 6);
  CHECK(g.degree() == 3);
  CHECK(g.contains(cyc("(0,2)", 3)));
  CHECK(acts_transitively(g));
  CHECK(acts_doubly_transitively(g));

  std::vector<Permutation> const rot{cyc("(0,1,2,3)", 4)};
  GroupClosure const c4 = generate_group(rot);
  CHECK(c4.size() == 4);
  CHECK(acts_transitively(c4));
  CHECK_FALSE(acts_doubly_transitively(c4));

  std::vector<Permutation> const trivial{Permutation::identity(2)};
  CHECK_FALSE(acts_transitively(generate_group(trivial)));

  std::vector<Permutation> const s4{cyc("(0,1,2,3)", 4), cyc("(0,1)", 4)};
  CHECK(generate_group(s4).size() == 24);
  CHECK_THROWS_AS(generate_group(s4, 10), CapExceeded);
  CHECK_THROWS_AS(generate_group({}), InvalidArgument);
  std::vector<Permutation> const mixed{cyc("(0,1)", 2), cyc("(0,1)", 3)};
  CHECK_THROWS_AS(generate_group(mixed), InvalidArgument);
}

TEST_CASE("generation of the symmetric group") {
  CHECK(generates_symmetric(cyc("(0,1,2)", 3), cyc("(0,1)", 3)));
  CHECK_FALSE(generates_symmetric(cyc("(0,1,2)", 3), cyc("(0,2,1)", 3)));
  CHECK(generates_symmetric(cyc("(0,1)", 2), cyc("id", 2)));
  CHECK_FALSE(generates_symmetric(cyc("id", 2), cyc("id", 2)));
  // Two even permutations stay inside the alternating group.
  CHECK_FALSE(generates_symmetric(cyc("(0,1,2)", 4), cyc("(1,2,3)", 4)));
  CHECK(generates_symmetric(cyc("(0,1,2,3,4)", 5), cyc("(0,1)", 5)));
  CHECK(generates_symmetric(Permutation::identity(1), Permutation::identity(1)));
}

TEST_CASE("generation agrees with a set-based closure on S_4") {
  auto const all = all_permutations(4);
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK(generates_symmetric(all[i], all[j])
            == oracle::generates_symmetric(image_of(all[i]), image_of(all[j])));
    }
  }
}

TEST_CASE("basis validation") {
  CHECK_NOTHROW(Basis(cyc("(0,1,2)", 3), cyc("(0,1)", 3)));
  CHECK_THROWS_AS(Basis(cyc("(0,1,2)", 3), cyc("(0,2,1)", 3)), InvalidArgument);
  CHECK_THROWS_AS(Basis(cyc("(0,1)", 2), cyc("(0,1)", 3)), DegreeMismatch);
  // Equal components are allowed by default, as at n = 2.
  CHECK_NOTHROW(Basis(cyc("(0,1)", 2), cyc("(0,1)", 2)));
  CHECK_THROWS_AS(Basis(cyc("(0,1)", 2), cyc("(0,1)", 2), BasisOptions{true}),
                  InvalidArgument);
}

TEST_CASE("basis text") {
  Basis const b = parse_basis("(0,1,2);(0,1)", 3);
  CHECK(b.first() == cyc("(0,1,2)", 3));
  CHECK(b.second() == cyc("(0,1)", 3));
  CHECK(format_basis(b) == "(0,1,2);(0,1)");
  CHECK(format_basis(parse_basis("id;(0,1)", 2)) == "id;(0,1)");
  CHECK_THROWS_AS(parse_basis("(0,1,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_basis("(0,1,2);(0,1);(1,2)", 3), ParseError);
}

TEST_CASE("conjugate bases") {
  Basis const b = parse_basis("(0,1,2);(0,1)", 3);
  auto const r = bases_conjugate(b, parse_basis("(0,1,2);(1,2)", 3));
  REQUIRE(r.has_value());
  CHECK(*r == cyc("(0,1,2)", 3));
  CHECK_FALSE(bases_conjugate(b, parse_basis("(0,1);(0,1,2)", 3)).has_value());
  auto const self = bases_conjugate(b, b);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());
  CHECK_THROWS_AS(bases_conjugate(b, parse_basis("(0,1);(0,1,2,3)", 4)),
                  DegreeMismatch);
}

TEST_CASE("conjugators agree with brute force and are unique for n >= 3") {
  auto const all = all_permutations(3);
  std::vector<Basis> bases;
  for (auto const& s : all) {
    for (auto const& t : all) {
      if (generates_symmetric(s, t)) {
        bases.emplace_back(s, t);
      }
    }
  }
  for (auto const& x : bases) {
    for (auto const& y : bases) {
      auto const expected =
          oracle::conjugators(image_of(x.first()), image_of(x.second()),
                              image_of(y.first()), image_of(y.second()));
      auto const got = bases_conjugate(x, y);
      CHECK(expected.size() <= 1);
      CHECK(got.has_value() == !expected.empty());
      if (got && !expected.empty()) {
        CHECK(image_of(*got) == expected.front());
        CHECK(conjugate(*got, x.first()) == y.first());
        CHECK(conjugate(*got, x.second()) == y.second());
      }
    }
  }
}

TEST_CASE("generating pair counts") {
  CHECK(count_generating_pairs(2, true) == 3);
  CHECK(count_generating_pairs(2, false) == 2);
  CHECK(count_generating_pairs(3, false) == 18);
  CHECK(count_generating_pairs(3, false) == oracle::generating_pair_count(3, false));
  CHECK(count_generating_pairs(4, false) == oracle::generating_pair_count(4, false));
  CHECK(count_generating_pairs(4, true) == count_generating_pairs(4, false));
  CHECK(count_generating_pairs(1, true) == 1);
  CHECK(count_generating_pairs(1, false) == 0);
}

}  // TEST_SUITE
