#include "symbool/boolops.hpp"

#include <array>
#include <utility>

#include "symbool/error.hpp"

namespace symbool {

namespace {

constexpr std::array<std::pair<char const*, unsigned>, 10> kNames{{
    {"and", 1},
    {"diff", 2},
    {"rdiff", 4},
    {"xor", 6},
    {"or", 7},
    {"nor", 8},
    {"xnor", 9},
    {"rimpl", 11},
    {"impl", 13},
    {"nand", 14},
}};

}  // namespace

BoolFn::BoolFn(unsigned table) : table_(static_cast<std::uint8_t>(table)) {
  if (table > 15) {
    throw InvalidArgument("truth table index must be in [0,15]");
  }
}

BoolFn BoolFn::from_bits(std::string_view bits) {
  if (bits.size() != 4) {
    throw InvalidArgument("truth table must have 4 bits, got '"
                          + std::string(bits) + "'");
  }
  unsigned table = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("truth table must be binary, got '"
                            + std::string(bits) + "'");
    }
    table = table * 2 + static_cast<unsigned>(c - '0');
  }
  return BoolFn(table);
}

BoolFn BoolFn::from_name(std::string_view name) {
  for (auto const& [n, table] : kNames) {
    if (name == n) {
      return BoolFn(table);
    }
  }
  throw InvalidArgument("unknown boolean function '" + std::string(name) + "'");
}

std::string BoolFn::bits() const {
  std::string out(4, '0');
  for (unsigned i = 0; i < 4; ++i) {
    if ((table_ >> (3 - i)) & 1U) {
      out[i] = '1';
    }
  }
  return out;
}

std::optional<std::string> BoolFn::name() const {
  for (auto const& [n, table] : kNames) {
    if (table == table_) {
      return std::string(n);
    }
  }
  return std::nullopt;
}

std::string BoolFn::label() const {
  return name().value_or(bits());
}

bool is_proper(BoolFn f) noexcept {
  bool depends_on_x = f(false, false) != f(true, false)
                      || f(false, true) != f(true, true);
  bool depends_on_y = f(false, false) != f(false, true)
                      || f(true, false) != f(true, true);
  // A function of both variables is never constant.
  return depends_on_x && depends_on_y;
}

std::vector<BoolFn> proper_functions() {
  std::vector<BoolFn> out;
  for (unsigned t = 0; t < 16; ++t) {
    if (is_proper(BoolFn(t))) {
      out.emplace_back(t);
    }
  }
  return out;
}

std::vector<BoolFn> canonical_functions() {
  return {ops::kOr, ops::kAnd, ops::kXor, ops::kDiff, ops::kRdiff};
}

BoolFn representative_of(BoolFn f) {
  if (!is_proper(f)) {
    throw InvalidArgument("representative_of needs a proper function, got "
                          + f.bits());
  }
  for (BoolFn c : canonical_functions()) {
    if (c == f) {
      return f;
    }
  }
  return f.negated();
}

std::vector<BoolFn> parse_function_list(std::string_view text) {
  std::vector<BoolFn> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto item = text.substr(start, end - start);
    if (item.empty()) {
      throw InvalidArgument("empty item in function list '" + std::string(text)
                            + "'");
    }
    bool const is_bits = item.size() == 4
                         && item.find_first_not_of("01") == std::string_view::npos;
    out.push_back(is_bits ? BoolFn::from_bits(item) : BoolFn::from_name(item));
    start = end + 1;
  }
  return out;
}

void final_set_product_into(BoolFn f,
                            StateSet const& left,
                            StateSet const& right,
                            StateSet& out) {
  std::size_t const m = left.universe();
  std::size_t const n = right.universe();
  if (out.universe() != m * n) {
    out = StateSet(m * n);
  }
  for (std::size_t i = 0; i < m; ++i) {
    bool const x = left.contains(static_cast<State>(i));
    for (std::size_t j = 0; j < n; ++j) {
      out.assign(static_cast<State>(i * n + j),
                 f(x, right.contains(static_cast<State>(j))));
    }
  }
}

StateSet final_set_product(BoolFn f, StateSet const& left, StateSet const& right) {
  StateSet out(left.universe() * right.universe());
  final_set_product_into(f, left, right, out);
  return out;
}

}  // namespace symbool
