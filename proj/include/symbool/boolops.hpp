#pragma once

// Binary boolean functions f: {0,1} x {0,1} -> {0,1}.
//
// A function is stored as a 4-bit truth table written in the order
// f(0,0) f(0,1) f(1,0) f(1,1), most significant bit first. So "0110" (XOR) is
// table 6 and "0001" (AND) is table 1. The first argument always refers to
// the left automaton / first language.
//
//   name   bits  table      name   bits  table
//   and    0001    1        nand   1110   14
//   diff   0010    2        impl   1101   13     diff = x & !y, impl = !x | y
//   rdiff  0100    4        rimpl  1011   11     rdiff = !x & y, rimpl = x | !y
//   xor    0110    6        xnor   1001    9
//   or     0111    7        nor    1000    8

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbool/automaton.hpp"

namespace symbool {

class BoolFn {
 public:
  /// Throws InvalidArgument unless table < 16.
  explicit BoolFn(unsigned table);

  static BoolFn from_bits(std::string_view bits);  // e.g. "0110"
  static BoolFn from_name(std::string_view name);  // e.g. "xor"

  std::uint8_t table() const noexcept { return table_; }
  bool operator()(bool x, bool y) const noexcept {
    unsigned const index = 3U - ((x ? 2U : 0U) + (y ? 1U : 0U));
    return ((table_ >> index) & 1U) != 0;
  }

  std::string bits() const;
  /// Mnemonic for the ten proper functions, absent otherwise.
  std::optional<std::string> name() const;
  /// The name when there is one, otherwise the bits.
  std::string label() const;
  BoolFn negated() const noexcept { return BoolFn(15U - table_); }

  friend bool operator==(BoolFn, BoolFn) = default;
  friend auto operator<=>(BoolFn, BoolFn) = default;

 private:
  std::uint8_t table_;
};

namespace ops {
inline BoolFn const kAnd{1};
inline BoolFn const kDiff{2};
inline BoolFn const kRdiff{4};
inline BoolFn const kXor{6};
inline BoolFn const kOr{7};
inline BoolFn const kNor{8};
inline BoolFn const kXnor{9};
inline BoolFn const kRimpl{11};
inline BoolFn const kImpl{13};
inline BoolFn const kNand{14};
}  // namespace ops

/// Not constant and depends on both arguments.
bool is_proper(BoolFn f) noexcept;

/// The ten proper functions in ascending table order.
std::vector<BoolFn> proper_functions();

/// or, and, xor, diff, rdiff.
std::vector<BoolFn> canonical_functions();

/// Maps a proper function to the canonical function it equals or complements.
/// Throws InvalidArgument for improper functions.
BoolFn representative_of(BoolFn f);

/// Comma-separated names or bit strings, e.g. "and,xor,1011".
std::vector<BoolFn> parse_function_list(std::string_view text);

/// {(q, q') : f(q in F, q' in F')}, with (q, q') stored at q * n + q' where n
/// is the right universe.
StateSet final_set_product(BoolFn f, StateSet const& left, StateSet const& right);

/// Same, writing into `out` (resized as needed) to avoid reallocation in
/// sweeps.
void final_set_product_into(BoolFn f,
                            StateSet const& left,
                            StateSet const& right,
                            StateSet& out);

}  // namespace symbool
