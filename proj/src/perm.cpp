#include "symbool/perm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "symbool/error.hpp"

namespace symbool {

std::uint64_t factorial(std::size_t n) noexcept {
  std::uint64_t result = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (result > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= k;
  }
  return result;
}

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  if (image_.empty()) {
    throw InvalidArgument("permutation degree must be at least 1");
  }
  std::vector<bool> seen(image_.size(), false);
  for (Point v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw InvalidArgument("image is not a bijection of {0,...,"
                            + std::to_string(image_.size() - 1) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) {
    throw InvalidArgument("permutation degree must be at least 1");
  }
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) {
      return false;
    }
  }
  return true;
}

bool Permutation::is_even() const {
  // sign = (-1)^(n - number of cycles)
  std::vector<bool> seen(image_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    ++cycles;
    for (Point j = static_cast<Point>(i); !seen[j]; j = image_[j]) {
      seen[j] = true;
    }
  }
  return (image_.size() - cycles) % 2 == 0;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point v : p.image()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void require_same_degree(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("degrees differ: " + std::to_string(a.degree())
                         + " vs " + std::to_string(b.degree()));
  }
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) {
    throw ParseError("degree must be at least 1");
  }
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(c);
    }
  }
  if (s == "id") {
    return Permutation::identity(degree);
  }
  if (s.empty()) {
    throw ParseError("empty permutation (use \"id\" for the identity)");
  }

  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto fail = [&](std::string const& msg) -> ParseError {
    return ParseError(msg + " at offset " + std::to_string(pos) + " in \""
                      + std::string(text) + "\"");
  };
  auto read_int = [&]() -> Point {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      throw fail("expected a point index");
    }
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v >= degree) {
        throw fail("point index out of range [0," + std::to_string(degree)
                   + ")");
      }
      ++pos;
    }
    return static_cast<Point>(v);
  };

  while (pos < s.size()) {
    if (s[pos] != '(') {
      throw fail("expected '('");
    }
    ++pos;
    std::vector<Point> cycle{read_int()};
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      cycle.push_back(read_int());
    }
    if (pos >= s.size() || s[pos] != ')') {
      throw fail("expected ',' or ')'");
    }
    ++pos;
    if (cycle.size() < 2) {
      throw fail("a cycle needs at least two points");
    }
    for (Point p : cycle) {
      if (used[p]) {
        throw fail("point " + std::to_string(p) + " appears twice");
      }
      used[p] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      image[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

std::string format_cycles(Permutation const& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) {
      continue;
    }
    out += '(';
    Point j = i;
    do {
      if (j != i) {
        out += ',';
      }
      out += std::to_string(j);
      seen[j] = true;
      j = p(j);
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation compose(Permutation const& outer, Permutation const& inner) {
  require_same_degree(outer, inner);
  std::vector<Point> image(inner.degree());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[i] = outer.image_[inner.image_[i]];
  }
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation inverse(Permutation const& p) {
  std::vector<Point> image(p.degree());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[p.image_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation conjugate(Permutation const& r, Permutation const& g) {
  require_same_degree(r, g);
  return compose(compose(r, g), inverse(r));
}

Permutation make_cycle(std::size_t degree, std::vector<Point> const& points) {
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k] >= degree) {
      throw InvalidArgument("cycle point out of range");
    }
    image[points[k]] = points[(k + 1) % points.size()];
  }
  return Permutation(std::move(image));
}

std::vector<Permutation> all_permutations(std::size_t degree,
                                          std::size_t max_degree) {
  if (degree > max_degree) {
    throw CapExceeded("degree " + std::to_string(degree)
                      + " exceeds enumeration cap " + std::to_string(max_degree));
  }
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

bool GroupClosure::contains(Permutation const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

GroupClosure generate_group(std::span<Permutation const> generators,
                            std::size_t max_elements) {
  if (generators.empty()) {
    throw InvalidArgument("generate_group needs at least one generator");
  }
  std::size_t const degree = generators.front().degree();
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generators have mixed degrees");
    }
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> order{Permutation::identity(degree)};
  seen.insert(order.front());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto const& g : generators) {
      Permutation next = compose(order[head], g);
      if (seen.insert(next).second) {
        if (order.size() >= max_elements) {
          throw CapExceeded("group closure exceeds "
                            + std::to_string(max_elements) + " elements");
        }
        order.push_back(std::move(next));
      }
    }
  }

  GroupClosure result;
  result.degree_ = degree;
  std::sort(order.begin(), order.end());
  result.elements_ = std::move(order);
  result.generators_.assign(generators.begin(), generators.end());
  return result;
}

bool acts_transitively(GroupClosure const& group) {
  std::vector<bool> hit(group.degree(), false);
  for (auto const& g : group.elements()) {
    hit[g(0)] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool acts_doubly_transitively(GroupClosure const& group) {
  std::size_t const n = group.degree();
  if (n < 2) {
    return true;
  }
  // Orbit of the ordered pair (0, 1) must be all n(n-1) ordered pairs.
  std::vector<bool> hit(n * n, false);
  std::size_t count = 0;
  for (auto const& g : group.elements()) {
    std::size_t key = g(0) * n + g(1);
    if (!hit[key]) {
      hit[key] = true;
      ++count;
    }
  }
  return count == n * (n - 1);
}

bool generates_symmetric(Permutation const& s,
                         Permutation const& t,
                         std::size_t max_degree) {
  require_same_degree(s, t);
  if (s.degree() > max_degree) {
    throw CapExceeded("degree " + std::to_string(s.degree())
                      + " exceeds closure cap " + std::to_string(max_degree));
  }
  std::uint64_t const order = factorial(s.degree());
  if (s.degree() >= 2 && s.is_even() && t.is_even()) {
    return false;
  }
  std::array<Permutation, 2> gens{s, t};
  return generate_group(gens, order).size() == order;
}

Basis::Basis(Permutation first, Permutation second, BasisOptions options)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.degree() != second_.degree()) {
    throw DegreeMismatch("basis components have different degrees");
  }
  if (options.require_distinct && first_ == second_) {
    throw InvalidArgument("basis components must be distinct");
  }
  if (!generates_symmetric(first_, second_, options.max_degree)) {
    throw InvalidArgument("(" + format_cycles(first_) + ", "
                          + format_cycles(second_) + ") does not generate S_"
                          + std::to_string(first_.degree()));
  }
}

Basis parse_basis(std::string_view text,
                  std::size_t degree,
                  BasisOptions options) {
  auto sep = text.find(';');
  if (sep == std::string_view::npos || text.find(';', sep + 1) != std::string_view::npos) {
    throw ParseError("basis must have the form \"S;T\": \"" + std::string(text)
                     + "\"");
  }
  return Basis(parse_cycles(text.substr(0, sep), degree),
               parse_cycles(text.substr(sep + 1), degree),
               options);
}

std::string format_basis(Basis const& b) {
  return format_cycles(b.first()) + ";" + format_cycles(b.second());
}

std::optional<Permutation> bases_conjugate(Basis const& b1,
                                           Basis const& b2,
                                           std::size_t max_degree) {
  std::size_t const n = b1.degree();
  if (n != b2.degree()) {
    throw DegreeMismatch("bases have different degrees");
  }
  if (n > max_degree) {
    throw CapExceeded("degree " + std::to_string(n)
                      + " exceeds conjugator search cap "
                      + std::to_string(max_degree));
  }
  auto const s = b1.first().image();
  auto const t = b1.second().image();
  auto const s2 = b2.first().image();
  auto const t2 = b2.second().image();

  // r s r^-1 = s'  <=>  r(s(i)) = s'(r(i)) for every i.
  std::optional<Permutation> found;
  std::vector<Point> r(n);
  std::iota(r.begin(), r.end(), Point{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = r[s[i]] == s2[r[i]] && r[t[i]] == t2[r[i]];
    }
    if (!ok) {
      continue;
    }
    if (!found) {
      found.emplace(r);
      if (n < 3) {
        break;
      }
    } else {
      throw std::logic_error("conjugator of bases of S_" + std::to_string(n)
                             + " is not unique");
    }
  } while (std::next_permutation(r.begin(), r.end()));
  return found;
}

std::uint64_t count_generating_pairs(std::size_t degree,
                                     bool allow_equal,
                                     std::size_t max_degree) {
  auto const perms = all_permutations(degree, max_degree);
  std::uint64_t count = 0;
  for (auto const& s : perms) {
    for (auto const& t : perms) {
      if (s == t && !allow_equal) {
        continue;
      }
      if (generates_symmetric(s, t, max_degree)) {
        ++count;
      }
    }
  }
  return count;
}

}  // namespace symbool
