#include "symbool/product.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "symbool/error.hpp"

namespace symbool {

namespace {

Semiautomaton build_combined(Semiautomaton const& left,
                             Semiautomaton const& right) {
  if (left.alphabet() != right.alphabet()) {
    throw InvalidArgument("alphabets differ: \"" + left.alphabet() + "\" vs \""
                          + right.alphabet() + "\"");
  }
  std::size_t const m = left.state_count();
  std::size_t const n = right.state_count();
  std::vector<Transformation> actions(left.letter_count(),
                                      Transformation(m * n));
  for (std::size_t k = 0; k < left.letter_count(); ++k) {
    for (State i = 0; i < m; ++i) {
      for (State j = 0; j < n; ++j) {
        actions[k][i * n + j] =
            static_cast<State>(left.step(i, k) * n + right.step(j, k));
      }
    }
  }
  return Semiautomaton(m * n, left.alphabet(), std::move(actions),
                       static_cast<State>(left.initial() * n + right.initial()));
}

void require_permutation_factors(ProductAutomaton const& p) {
  for (auto const* factor : {&p.left(), &p.right()}) {
    if (!factor->is_permutation_automaton()) {
      throw NotPermutation(
          "product factor has a letter that does not act as a permutation");
    }
  }
}

// Vertices {x, y} with x < y over N states, numbered in lexicographic order.
std::size_t triangular_index(State x, State y, std::size_t states) {
  return x * states - x * (x + 1) / 2 + (y - x - 1);
}

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ProductAutomaton::ProductAutomaton(Semiautomaton left, Semiautomaton right)
    : left_(std::move(left)),
      right_(std::move(right)),
      combined_(build_combined(left_, right_)) {}

ProductAutomaton direct_product(Semiautomaton const& left,
                                Semiautomaton const& right) {
  return ProductAutomaton(left, right);
}

bool predict_connected(Basis const& left, Basis const& right) {
  if (left.degree() != right.degree()) {
    return true;
  }
  return !bases_conjugate(left, right, std::max(left.degree(), kDefaultDegreeCap))
              .has_value();
}

// --------------------------------------------------------------- pair graph

std::size_t PairGraph::vertex_count() const noexcept {
  std::size_t const states = m_ * n_;
  return states * (states - 1) / 2;
}

std::size_t PairGraph::component_of(StatePair p) const {
  std::size_t const states = m_ * n_;
  if (p.first >= p.second || p.second >= states) {
    throw InvalidArgument("not a pair-graph vertex");
  }
  return component_index_[triangular_index(p.first, p.second, states)];
}

PairGraph pair_graph(ProductAutomaton const& p) {
  require_permutation_factors(p);
  Semiautomaton const& a = p.combined();
  std::size_t const states = a.state_count();
  std::size_t const vertices = states * (states - 1) / 2;

  DisjointSet dsu(vertices);
  for (State x = 0; x < states; ++x) {
    for (State y = x + 1; y < states; ++y) {
      std::size_t const v = triangular_index(x, y, states);
      for (std::size_t k = 0; k < a.letter_count(); ++k) {
        State u = a.step(x, k);
        State w = a.step(y, k);
        if (u > w) {
          std::swap(u, w);
        }
        dsu.unite(v, triangular_index(u, w, states));
      }
    }
  }

  PairGraph g;
  g.m_ = p.left_states();
  g.n_ = p.right_states();
  g.component_index_.assign(vertices, 0);
  std::vector<std::int64_t> id_of_root(vertices, -1);
  for (State x = 0; x < states; ++x) {
    for (State y = x + 1; y < states; ++y) {
      std::size_t const v = triangular_index(x, y, states);
      std::size_t const root = dsu.find(v);
      if (id_of_root[root] < 0) {
        id_of_root[root] = static_cast<std::int64_t>(g.components_.size());
        g.components_.emplace_back();
      }
      auto const id = static_cast<std::size_t>(id_of_root[root]);
      g.components_[id].push_back({x, y});
      g.component_index_[v] = static_cast<std::uint32_t>(id);
    }
  }
  return g;
}

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::C1:
      return "C1";
    case ComponentKind::C2:
      return "C2";
    case ComponentKind::C3:
      return "C3";
    case ComponentKind::Other:
      break;
  }
  return "OTHER";
}

ComponentLabel classify_component(std::span<StatePair const> component,
                                  std::size_t m,
                                  std::size_t n) {
  if (component.empty()) {
    throw InvalidArgument("cannot classify an empty component");
  }
  auto kind_of = [n](StatePair pair) {
    State const i = pair.first / n, j = pair.first % n;
    State const k = pair.second / n, l = pair.second % n;
    if (i == k) {
      return ComponentKind::C2;
    }
    if (j == l) {
      return ComponentKind::C3;
    }
    return ComponentKind::C1;
  };
  ComponentKind const kind = kind_of(component.front());
  for (auto pair : component) {
    if (kind_of(pair) != kind) {
      return {ComponentKind::Other, false};
    }
  }
  std::size_t full = 0;
  switch (kind) {
    case ComponentKind::C1:
      full = m * (m - 1) * n * (n - 1) / 2;
      break;
    case ComponentKind::C2:
      full = m * n * (n - 1) / 2;
      break;
    case ComponentKind::C3:
      full = n * m * (m - 1) / 2;
      break;
    case ComponentKind::Other:
      break;
  }
  return {kind, component.size() == full};
}

bool has_distinguishing_pair(std::span<StatePair const> component,
                             StateSet const& finals) {
  return std::any_of(component.begin(), component.end(), [&](StatePair pair) {
    return finals.contains(pair.first) != finals.contains(pair.second);
  });
}

std::vector<StatePair> distinguishing_pairs(std::span<StatePair const> component,
                                            StateSet const& finals) {
  std::vector<StatePair> out;
  for (auto pair : component) {
    if (finals.contains(pair.first) != finals.contains(pair.second)) {
      out.push_back(pair);
    }
  }
  return out;
}

bool predict_minimal(PairGraph const& graph,
                     bool connected,
                     StateSet const& finals) {
  if (!connected) {
    return false;
  }
  return std::all_of(graph.components().begin(), graph.components().end(),
                     [&](Component const& c) {
                       return has_distinguishing_pair(c, finals);
                     });
}

bool predict_minimal(ProductAutomaton const& p, StateSet const& finals) {
  require_permutation_factors(p);
  if (finals.universe() != p.state_count()) {
    throw InvalidArgument("final set does not match the product state count");
  }
  return predict_minimal(pair_graph(p), is_connected(p.combined()), finals);
}

// ----------------------------------------------------------- H diagnostics

GroupClosure product_transition_group(ProductAutomaton const& p,
                                      std::size_t max_elements) {
  require_permutation_factors(p);
  std::size_t const m = p.left_states();
  std::size_t const n = p.right_states();
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < p.left().letter_count(); ++k) {
    std::vector<Point> image(m + n);
    for (State i = 0; i < m; ++i) {
      image[i] = p.left().step(i, k);
    }
    for (State j = 0; j < n; ++j) {
      image[m + j] = static_cast<Point>(m + p.right().step(j, k));
    }
    gens.emplace_back(std::move(image));
  }
  return generate_group(gens, max_elements);
}

std::pair<Permutation, Permutation> split_product_element(Permutation const& h,
                                                          std::size_t m) {
  if (m == 0 || m >= h.degree()) {
    throw InvalidArgument("split point out of range");
  }
  auto image = h.image();
  std::vector<Point> left(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<Point> right;
  for (std::size_t j = m; j < image.size(); ++j) {
    right.push_back(static_cast<Point>(image[j] - m));
  }
  return {Permutation(std::move(left)), Permutation(std::move(right))};
}

std::string to_string(ImageKind kind) {
  switch (kind) {
    case ImageKind::Symmetric:
      return "symmetric";
    case ImageKind::Alternating:
      return "alternating";
    case ImageKind::PointStabilizer:
      return "point-stabilizer";
    case ImageKind::Other:
      break;
  }
  return "other";
}

StabilizerImage stabilizer_image(ProductAutomaton const& p,
                                 std::size_t max_elements) {
  std::size_t const m = p.left_states();
  std::size_t const n = p.right_states();
  GroupClosure const h = product_transition_group(p, max_elements);

  std::set<Permutation> image;
  for (auto const& element : h.elements()) {
    if (element(0) == 0) {
      image.insert(split_product_element(element, m).second);
    }
  }

  std::uint64_t const order = image.size();
  if (order == factorial(n)) {
    return {ImageKind::Symmetric, std::nullopt, order};
  }
  if (order == factorial(n - 1)) {
    for (Point x = 0; x < n; ++x) {
      bool fixes = std::all_of(image.begin(), image.end(),
                               [x](Permutation const& g) { return g(x) == x; });
      if (fixes) {
        return {ImageKind::PointStabilizer, x, order};
      }
    }
  }
  if (n >= 2 && order * 2 == factorial(n)
      && std::all_of(image.begin(), image.end(),
                     [](Permutation const& g) { return g.is_even(); })) {
    return {ImageKind::Alternating, std::nullopt, order};
  }
  return {ImageKind::Other, std::nullopt, order};
}

// ------------------------------------------------------------- formatting

std::string format_product_state(ProductAutomaton const& p, State s) {
  auto [i, j] = p.coordinates(s);
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string format_pair(ProductAutomaton const& p, StatePair pair) {
  return "{" + format_product_state(p, pair.first) + ","
         + format_product_state(p, pair.second) + "}";
}

std::string format_pair_graph(ProductAutomaton const& p,
                              PairGraph const& graph,
                              std::optional<StateSet> const& finals) {
  std::ostringstream out;
  bool const connected = is_connected(p.combined());
  out << "product " << p.left_states() << "x" << p.right_states() << " states "
      << p.state_count() << " connected " << (connected ? "yes" : "no") << '\n';
  out << "components " << graph.components().size() << '\n';
  std::size_t index = 0;
  for (auto const& c : graph.components()) {
    auto const label = classify_component(c, p.left_states(), p.right_states());
    out << "component " << ++index << " size " << c.size() << " kind "
        << to_string(label.kind) << " exact " << (label.exact ? "yes" : "no");
    if (finals) {
      out << " distinguishing " << distinguishing_pairs(c, *finals).size();
    }
    out << '\n';
    for (auto pair : c) {
      out << "  " << format_pair(p, pair);
      if (finals && finals->contains(pair.first) != finals->contains(pair.second)) {
        out << " *";
      }
      out << '\n';
    }
  }
  if (finals) {
    out << "predicted-minimal "
        << (predict_minimal(graph, connected, *finals) ? "yes" : "no") << '\n';
  }
  return out.str();
}

}  // namespace symbool
