#include "symbool/reproduce.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "symbool/automaton.hpp"
#include "symbool/boolops.hpp"
#include "symbool/error.hpp"
#include "symbool/harness.hpp"
#include "symbool/perm.hpp"
#include "symbool/product.hpp"

namespace symbool {

namespace {

char const* yes_no(bool b) {
  return b ? "yes" : "no";
}

std::size_t product_complexity(ProductAutomaton const& p,
                               StateSet const& f,
                               StateSet const& fp,
                               BoolFn op) {
  ComplexityOracle oracle(p.combined());
  return oracle.complexity(final_set_product(op, f, fp));
}

ProductAutomaton basis_product(Basis const& l, Basis const& r) {
  return ProductAutomaton(Semiautomaton::from_basis(l),
                          Semiautomaton::from_basis(r));
}

using PairSet = std::set<std::pair<std::pair<State, State>, std::pair<State, State>>>;

PairSet to_pair_set(ProductAutomaton const& p, std::vector<StatePair> const& v) {
  PairSet out;
  for (auto pair : v) {
    out.insert({p.coordinates(pair.first), p.coordinates(pair.second)});
  }
  return out;
}

PairSet pairs(std::initializer_list<std::array<State, 4>> list) {
  PairSet out;
  for (auto const& q : list) {
    std::pair<State, State> a{q[0], q[1]}, b{q[2], q[3]};
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

std::string cycle_text(std::size_t degree) {
  std::string s = "(";
  for (std::size_t i = 0; i < degree; ++i) {
    s += (i ? "," : "") + std::to_string(i);
  }
  return s + ")";
}

Report example_1() {
  std::ostringstream out;
  bool ok = true;
  Basis const b(parse_basis("(0,1,2);(0,1)", 3));
  Basis const bp(parse_basis("(0,1,2);(1,2)", 3));
  Basis const bpp(parse_basis("(0,1);(0,1,2)", 3));

  auto const r1 = bases_conjugate(b, bp);
  auto const r2 = bases_conjugate(b, bpp);
  out << "basis A   " << format_basis(b) << '\n'
      << "basis A'  " << format_basis(bp) << '\n'
      << "basis A'' " << format_basis(bpp) << '\n'
      << "conjugator A->A'  " << (r1 ? format_cycles(*r1) : "none") << '\n'
      << "conjugator A->A'' " << (r2 ? format_cycles(*r2) : "none") << '\n';
  ok = ok && r1 && format_cycles(*r1) == "(0,1,2)" && !r2;

  auto const a = Semiautomaton::from_basis(b);
  auto const ap = Semiautomaton::from_basis(bp);
  auto const app = Semiautomaton::from_basis(bpp);
  std::size_t const sizes[] = {transition_semigroup(a).size(),
                               transition_semigroup(ap).size(),
                               transition_semigroup(app).size()};
  out << "semigroup sizes " << sizes[0] << ' ' << sizes[1] << ' ' << sizes[2]
      << '\n';
  ok = ok && sizes[0] == 6 && sizes[1] == 6 && sizes[2] == 6;

  Transformation const id{0, 1, 2};
  bool const a3 = induced_transformation(a, "aaa") == id;
  bool const a2pp = induced_transformation(app, "aa") == id;
  bool const a2 = induced_transformation(a, "aa") == id;
  out << "a^3 = 1 in A   " << yes_no(a3) << '\n'
      << "a^2 = 1 in A'' " << yes_no(a2pp) << '\n'
      << "a^2 = 1 in A   " << yes_no(a2) << '\n';
  ok = ok && a3 && a2pp && !a2;

  // Same relations in A and A': a word of length 1..6 acts as the identity
  // in one iff it does in the other.
  bool same = true;
  std::vector<std::string> words{""};
  for (std::size_t len = 0; len < 6; ++len) {
    std::vector<std::string> next;
    for (auto const& w : words) {
      next.push_back(w + 'a');
      next.push_back(w + 'b');
    }
    words = std::move(next);
    for (auto const& w : words) {
      same = same && ((induced_transformation(a, w) == id)
                      == (induced_transformation(ap, w) == id));
    }
  }
  out << "A and A' satisfy the same relations up to length 6 " << yes_no(same)
      << '\n';
  ok = ok && same;

  bool const connected = is_connected(basis_product(b, bp).combined());
  out << "A x A' connected " << yes_no(connected) << '\n';
  ok = ok && !connected;
  return {out.str(), ok};
}

Report example_2_2() {
  std::ostringstream out;
  auto const bases = enumerate_bases(2);
  out << "bases " << bases.size() << '\n';
  for (auto const& b : bases) {
    out << "  " << format_basis(b) << '\n';
  }
  CampaignConfig cfg;
  cfg.m = 2;
  cfg.n = 2;
  std::map<unsigned, std::pair<std::size_t, std::size_t>> tally;  // full, below
  std::set<std::pair<std::string, std::string>> products;
  auto const summary = run_campaign(cfg, [&](VerificationRecord const& r) {
    if (r.conjugate) {
      return;
    }
    products.insert({r.b1 + " " + format_state_set(r.finals_left),
                     r.b2 + " " + format_state_set(r.finals_right)});
    auto& t = tally[r.op.table()];
    (r.oracle == 4 ? t.first : t.second) += 1;
  });

  std::set<std::set<std::string>> unordered;
  for (auto const& [x, y] : products) {
    unordered.insert({x, y});
  }
  out << "conjugate base pairs " << summary.conjugate_pairs << '\n'
      << "non-conjugate products " << products.size() << " ordered, "
      << unordered.size() << " unordered\n";

  bool ok = bases.size() == 3 && unordered.size() == 12
            && summary.conjugate_pairs == 3 && summary.fail == 0;
  for (BoolFn f : proper_functions()) {
    auto const [full, below] = tally[f.table()];
    out << "op " << f.bits() << ' ' << f.label() << " complexity 4 in " << full
        << '/' << full + below << '\n';
    bool const xor_like = f == ops::kXor || f == ops::kXnor;
    ok = ok && (xor_like ? full == 0 && below > 0 : below == 0 && full > 0);
  }
  return {out.str(), ok};
}

Report example_3_2() {
  std::ostringstream out;
  Basis const l = parse_basis("id;(0,1)", 2);
  Basis const r = parse_basis("(0,1,2);(0,1)", 3);
  auto const p = basis_product(l, r);
  auto const graph = pair_graph(p);
  StateSet const f(2, {0});
  StateSet const fp(3, {0, 1});
  StateSet const finals = final_set_product(ops::kXor, f, fp);
  out << format_pair_graph(p, graph, finals);
  std::size_t const complexity = product_complexity(p, f, fp, ops::kXor);
  out << "complexity " << complexity << '\n';

  std::set<PairSet> expected{
      pairs({{0, 0, 1, 1}, {0, 1, 1, 2}, {0, 2, 1, 0}}),
      pairs({{0, 0, 1, 2}, {0, 1, 1, 0}, {0, 2, 1, 1}}),
      pairs({{0, 0, 0, 1}, {0, 1, 0, 2}, {0, 0, 0, 2}, {1, 0, 1, 1},
             {1, 0, 1, 2}, {1, 1, 1, 2}}),
      pairs({{0, 0, 1, 0}, {0, 1, 1, 1}, {0, 2, 1, 2}}),
  };
  PairSet const expected_marked =
      pairs({{0, 0, 1, 1}, {0, 1, 1, 0}, {0, 1, 0, 2}, {0, 0, 0, 2},
             {1, 0, 1, 2}, {1, 1, 1, 2}, {0, 0, 1, 0}, {0, 1, 1, 1},
             {0, 2, 1, 2}});

  std::set<PairSet> got;
  PairSet marked;
  for (auto const& c : graph.components()) {
    got.insert(to_pair_set(p, c));
    for (auto const& pair : to_pair_set(p, distinguishing_pairs(c, finals))) {
      marked.insert(pair);
    }
  }
  bool const components_ok = got == expected;
  bool const marks_ok = marked == expected_marked;
  bool const predicted = predict_minimal(p, finals);
  out << "components as expected " << yes_no(components_ok) << '\n'
      << "distinguishing pairs as expected " << yes_no(marks_ok) << '\n';
  return {out.str(), components_ok && marks_ok && predicted && complexity == 6
                         && is_connected(p.combined())};
}

Report example_3_3() {
  std::ostringstream out;
  Basis const l = parse_basis("(0,1);(0,1,2)", 3);
  Basis const r = parse_basis("(0,1);(1,3,2)", 4);
  auto const p = basis_product(l, r);
  StateSet const f(3, {2});
  StateSet const fp(4, {0, 1});
  bool const connected = is_connected(p.combined());
  out << "bases " << format_basis(l) << " | " << format_basis(r) << '\n'
      << "connected " << yes_no(connected) << " states " << p.state_count()
      << '\n';
  bool ok = connected && p.state_count() == 12;

  std::map<BoolFn, std::size_t> c;
  for (BoolFn op : canonical_functions()) {
    c[op] = product_complexity(p, f, fp, op);
    out << "complexity " << op.label() << ' ' << c[op] << '\n';
  }
  ok = ok && c[ops::kAnd] == 6 && c[ops::kXor] == 4 && c[ops::kOr] == 12;

  auto const graph = pair_graph(p);
  StateSet const finals = final_set_product(ops::kAnd, f, fp);
  auto const& comp =
      graph.components()[graph.component_of({p.index(0, 0), p.index(0, 3)})];
  out << "component of {(0,0),(0,3)} under and:\n";
  for (auto pair : comp) {
    out << "  " << format_pair(p, pair) << '\n';
  }
  bool const t_ok = to_pair_set(p, comp)
                    == pairs({{0, 0, 0, 3}, {0, 1, 0, 2}, {1, 0, 1, 2},
                              {1, 1, 1, 3}, {2, 0, 2, 1}, {2, 2, 2, 3}});
  bool const none = !has_distinguishing_pair(comp, finals);
  out << "component as expected " << yes_no(t_ok) << '\n'
      << "distinguishing pairs " << distinguishing_pairs(comp, finals).size()
      << '\n';
  return {out.str(), ok && t_ok && none};
}

Report example_3_4() {
  std::ostringstream out;
  Basis const l = parse_basis("(0,1,2);(2,3)", 4);
  Basis const r = parse_basis("(1,3,2);(0,2,1,3)", 4);
  auto const p = basis_product(l, r);
  bool const conj = bases_conjugate(l, r).has_value();
  bool const connected = is_connected(p.combined());
  out << "bases " << format_basis(l) << " | " << format_basis(r) << '\n'
      << "conjugate " << yes_no(conj) << '\n'
      << "connected " << yes_no(connected) << '\n';
  bool ok = !conj && connected;
  std::pair<StateSet, StateSet> const choices[] = {
      {StateSet(4, {0, 1}), StateSet(4, {0, 1})},
      {StateSet(4, {0, 3}), StateSet(4, {1, 2})},
  };
  out << "expected xor 4, others 12\n";
  for (auto const& [f, fp] : choices) {
    out << "F " << format_state_set(f) << " F' " << format_state_set(fp)
        << '\n';
    for (BoolFn op : canonical_functions()) {
      std::size_t const c = product_complexity(p, f, fp, op);
      out << "  complexity " << op.label() << ' ' << c << '\n';
      ok = ok && c == (op == ops::kXor ? 4u : 12u);
    }
  }
  return {out.str(), ok};
}

Report prop_1(std::optional<std::size_t> m_opt, std::optional<std::size_t> n_opt) {
  std::vector<std::size_t> ms{3, 4, 5}, ns{3, 4, 5};
  if (m_opt) {
    ms = {*m_opt};
  }
  if (n_opt) {
    ns = {*n_opt};
  }
  for (std::size_t d : ms) {
    if (d < 3 || d > kDefaultDegreeCap) {
      throw InvalidArgument("prop-1 needs 3 <= m <= 8");
    }
  }
  for (std::size_t d : ns) {
    if (d < 3 || d > kDefaultDegreeCap) {
      throw InvalidArgument("prop-1 needs 3 <= n <= 8");
    }
  }
  std::ostringstream out;
  bool ok = true;
  for (std::size_t m : ms) {
    for (std::size_t n : ns) {
      Basis const l = parse_basis(cycle_text(m) + ";(0,1)", m);
      Basis const lp = parse_basis(cycle_text(n) + ";(0,1)", n);
      Basis const lpp = parse_basis("(0,1);" + cycle_text(n), n);
      StateSet const f(m, {static_cast<State>(m - 1)});
      StateSet const fp(n, {static_cast<State>(n - 1)});
      auto const with_pp = basis_product(l, lpp);
      auto const with_p = basis_product(l, lp);
      out << "m " << m << " n " << n << '\n';
      for (BoolFn op : canonical_functions()) {
        std::size_t const c2 = product_complexity(with_pp, f, fp, op);
        std::size_t const c1 = product_complexity(with_p, f, fp, op);
        out << "  " << op.label() << " L''=" << c2 << " L'=" << c1;
        if (m == n) {
          out << " (L' not checked, m = n)";
        }
        out << '\n';
        ok = ok && c2 == m * n && (m == n || c1 == m * n);
      }
    }
  }
  return {out.str(), ok};
}

}  // namespace

std::vector<std::string> reproduce_ids() {
  return {"example-1",   "example-2.2", "example-3.2",
          "example-3.3", "example-3.4", "prop-1"};
}

Report reproduce(std::string_view id,
                 std::optional<std::size_t> m,
                 std::optional<std::size_t> n) {
  if (id != "prop-1" && (m || n)) {
    throw InvalidArgument("--m/--n apply only to prop-1");
  }
  Report r;
  if (id == "example-1") {
    r = example_1();
  } else if (id == "example-2.2") {
    r = example_2_2();
  } else if (id == "example-3.2") {
    r = example_3_2();
  } else if (id == "example-3.3") {
    r = example_3_3();
  } else if (id == "example-3.4") {
    r = example_3_4();
  } else if (id == "prop-1") {
    r = prop_1(m, n);
  } else {
    throw InvalidArgument("unknown report id: " + std::string(id));
  }
  r.text = std::string(id) + '\n' + r.text + "match " + yes_no(r.matches) + '\n';
  return r;
}

}  // namespace symbool
