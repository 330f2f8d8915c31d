#pragma once

// Permutations of Q_n = {0, ..., n-1}, generated groups and bases of the
// symmetric group.
//
// Composition convention: compose(outer, inner)(i) == outer(inner(i)), i.e.
// right-to-left. Words acting on automaton states use the opposite
// (left-to-right) order; see automaton.hpp. The two are never mixed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symbool {

using Point = std::uint32_t;

/// Largest degree for which full closures and n!-sized scans are allowed
/// unless a caller raises the bound explicitly.
inline constexpr std::size_t kDefaultDegreeCap = 8;

/// n!, saturating at UINT64_MAX.
std::uint64_t factorial(std::size_t n) noexcept;

class Permutation {
 public:
  /// Throws InvalidArgument unless `image` is a bijection of {0, ..., n-1}
  /// with n >= 1.
  explicit Permutation(std::vector<Point> image);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return image_.size(); }
  Point operator()(Point i) const { return image_[i]; }
  std::span<Point const> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  bool is_even() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> image, Unchecked) : image_(std::move(image)) {}

  friend Permutation compose(Permutation const&, Permutation const&);
  friend Permutation inverse(Permutation const&);

  std::vector<Point> image_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

/// Parses disjoint-cycle notation such as "(0,1,2)(3,4)" or "id".
/// Whitespace is ignored. Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Disjoint cycles, each starting at its smallest point, ordered by that
/// point; fixed points are omitted and the identity prints as "id".
std::string format_cycles(Permutation const& p);

/// compose(outer, inner)(i) == outer(inner(i)). Throws DegreeMismatch.
Permutation compose(Permutation const& outer, Permutation const& inner);
Permutation inverse(Permutation const& p);
/// r * g * r^-1. Throws DegreeMismatch.
Permutation conjugate(Permutation const& r, Permutation const& g);

/// The cycle (points[0], points[1], ..., points[k-1]) in S_degree.
Permutation make_cycle(std::size_t degree, std::vector<Point> const& points);

/// Every permutation of the given degree in lexicographic order of images.
/// Throws CapExceeded when degree > max_degree.
std::vector<Permutation> all_permutations(std::size_t degree,
                                          std::size_t max_degree
                                          = kDefaultDegreeCap);

/// The subgroup generated by a set of permutations, stored sorted.
class GroupClosure {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<Permutation const> elements() const noexcept { return elements_; }
  std::span<Permutation const> generators() const noexcept {
    return generators_;
  }
  bool contains(Permutation const& p) const;

 private:
  friend GroupClosure generate_group(std::span<Permutation const>,
                                     std::size_t);
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Breadth-first closure from the identity under right multiplication by the
/// generators. Throws InvalidArgument on an empty or mixed-degree generator
/// list and CapExceeded once more than `max_elements` elements are found.
GroupClosure generate_group(std::span<Permutation const> generators,
                            std::size_t max_elements
                            = factorial(kDefaultDegreeCap));

bool acts_transitively(GroupClosure const& group);
bool acts_doubly_transitively(GroupClosure const& group);

/// True iff {s, t} generates S_n. Throws DegreeMismatch and CapExceeded.
bool generates_symmetric(Permutation const& s,
                         Permutation const& t,
                         std::size_t max_degree = kDefaultDegreeCap);

struct BasisOptions {
  // Off by default: the two-state bases include (a:(0,1), b:(0,1)).
  bool require_distinct = false;
  std::size_t max_degree = kDefaultDegreeCap;
};

/// An ordered pair (s, t) generating S_n; s is the action of the first letter
/// and t of the second.
class Basis {
 public:
  /// Throws InvalidArgument unless the pair generates S_n (and is distinct
  /// when requested).
  Basis(Permutation first, Permutation second, BasisOptions options = {});

  std::size_t degree() const noexcept { return first_.degree(); }
  Permutation const& first() const noexcept { return first_; }
  Permutation const& second() const noexcept { return second_; }

  friend bool operator==(Basis const&, Basis const&) = default;
  friend auto operator<=>(Basis const&, Basis const&) = default;

 private:
  Permutation first_;
  Permutation second_;
};

/// "S;T" with each side in cycle notation.
Basis parse_basis(std::string_view text,
                  std::size_t degree,
                  BasisOptions options = {});
std::string format_basis(Basis const& b);

/// The permutation r with r s r^-1 = s' and r t r^-1 = t', if any. Scans all
/// n! candidates in lexicographic order and returns the first hit; for
/// n >= 3 a second hit is an internal error (the centralizer of a generating
/// set of S_n is trivial). Throws DegreeMismatch and CapExceeded.
std::optional<Permutation> bases_conjugate(Basis const& b1,
                                           Basis const& b2,
                                           std::size_t max_degree
                                           = kDefaultDegreeCap);

/// Number of ordered pairs (s, t) with <s, t> = S_n.
std::uint64_t count_generating_pairs(std::size_t degree,
                                     bool allow_equal,
                                     std::size_t max_degree
                                     = kDefaultDegreeCap);

}  // namespace symbool
