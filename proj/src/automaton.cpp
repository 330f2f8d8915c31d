#include "symbool/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "symbool/error.hpp"

namespace symbool {

// ---------------------------------------------------------------- StateSet

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members)
    : bits_(universe, false) {
  for (State q : members) {
    insert(q);
  }
}

StateSet StateSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) {
    throw InvalidArgument("from_mask supports at most 64 states");
  }
  StateSet s(universe);
  for (std::size_t q = 0; q < universe; ++q) {
    if ((mask >> q) & 1U) {
      s.bits_[q] = true;
    }
  }
  return s;
}

void StateSet::insert(State q) {
  if (q >= bits_.size()) {
    throw InvalidArgument("state " + std::to_string(q) + " out of range [0,"
                          + std::to_string(bits_.size()) + ")");
  }
  bits_[q] = true;
}

void StateSet::erase(State q) {
  if (q < bits_.size()) {
    bits_[q] = false;
  }
}

std::size_t StateSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (std::size_t q = 0; q < bits_.size(); ++q) {
    if (bits_[q]) {
      out.push_back(static_cast<State>(q));
    }
  }
  return out;
}

StateSet StateSet::complement() const {
  StateSet out(*this);
  out.bits_.flip();
  return out;
}

std::string format_state_set(StateSet const& set) {
  std::string out;
  for (State q : set.members()) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(q);
  }
  return out.empty() ? "-" : out;
}

// ----------------------------------------------------------- Semiautomaton

Semiautomaton::Semiautomaton(std::size_t state_count,
                             std::string alphabet,
                             std::vector<Transformation> actions,
                             State initial)
    : states_(state_count), alphabet_(std::move(alphabet)), initial_(initial) {
  if (states_ == 0) {
    throw InvalidArgument("a semiautomaton needs at least one state");
  }
  if (alphabet_.empty()) {
    throw InvalidArgument("alphabet must be non-empty");
  }
  if (actions.size() != alphabet_.size()) {
    throw InvalidArgument("expected one action per letter");
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_.find(alphabet_[i], i + 1) != std::string::npos) {
      throw InvalidArgument(std::string("duplicate letter '") + alphabet_[i]
                            + "'");
    }
  }
  if (initial_ >= states_) {
    throw InvalidArgument("initial state out of range");
  }
  table_.reserve(states_ * actions.size());
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (actions[k].size() != states_) {
      throw InvalidArgument(std::string("action of '") + alphabet_[k]
                            + "' is not total");
    }
    for (State q : actions[k]) {
      if (q >= states_) {
        throw InvalidArgument(std::string("action of '") + alphabet_[k]
                              + "' leaves the state set");
      }
      table_.push_back(q);
    }
  }
}

Semiautomaton Semiautomaton::from_permutations(
    std::string alphabet,
    std::vector<Permutation> const& actions,
    State initial) {
  if (actions.empty()) {
    throw InvalidArgument("alphabet must be non-empty");
  }
  std::vector<Transformation> table;
  for (auto const& p : actions) {
    if (p.degree() != actions.front().degree()) {
      throw DegreeMismatch("letter actions have different degrees");
    }
    table.emplace_back(p.image().begin(), p.image().end());
  }
  return Semiautomaton(actions.front().degree(), std::move(alphabet),
                       std::move(table), initial);
}

Semiautomaton Semiautomaton::from_basis(Basis const& b) {
  return from_permutations("ab", {b.first(), b.second()});
}

std::optional<std::size_t> Semiautomaton::letter_index(
    char letter) const noexcept {
  auto pos = alphabet_.find(letter);
  if (pos == std::string::npos) {
    return std::nullopt;
  }
  return pos;
}

bool Semiautomaton::is_permutation_automaton() const {
  std::vector<bool> seen(states_);
  for (std::size_t k = 0; k < letter_count(); ++k) {
    std::fill(seen.begin(), seen.end(), false);
    for (State q : action(k)) {
      if (seen[q]) {
        return false;
      }
      seen[q] = true;
    }
  }
  return true;
}

Permutation Semiautomaton::letter_permutation(std::size_t letter) const {
  auto a = action(letter);
  try {
    return Permutation(std::vector<Point>(a.begin(), a.end()));
  } catch (InvalidArgument const&) {
    throw NotPermutation(std::string("letter '") + alphabet_.at(letter)
                         + "' does not act as a permutation");
  }
}

// --------------------------------------------------------------------- Dfa

Dfa::Dfa(Semiautomaton base, StateSet finals)
    : base_(std::move(base)), finals_(std::move(finals)) {
  if (finals_.universe() != base_.state_count()) {
    throw InvalidArgument("final set is over " + std::to_string(finals_.universe())
                          + " states, automaton has "
                          + std::to_string(base_.state_count()));
  }
}

bool Dfa::accepts(std::string_view word) const {
  return finals_.contains(run(base_, base_.initial(), word));
}

bool Dfa::is_improper() const noexcept {
  auto c = finals_.count();
  return c == 0 || c == finals_.universe();
}

// ------------------------------------------------------------ reachability

State run(Semiautomaton const& a, State from, std::string_view word) {
  if (from >= a.state_count()) {
    throw InvalidArgument("start state out of range");
  }
  State q = from;
  for (char c : word) {
    auto k = a.letter_index(c);
    if (!k) {
      throw InvalidArgument(std::string("unknown letter '") + c + "'");
    }
    q = a.step(q, *k);
  }
  return q;
}

std::vector<State> reachable_from(Semiautomaton const& a, State from) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> queue{from};
  seen[from] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t k = 0; k < a.letter_count(); ++k) {
      State next = a.step(queue[head], k);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<State> reachable_states(Semiautomaton const& a) {
  return reachable_from(a, a.initial());
}

bool is_connected(Semiautomaton const& a) {
  return reachable_states(a).size() == a.state_count();
}

bool is_strongly_connected(Semiautomaton const& a) {
  for (State q = 0; q < a.state_count(); ++q) {
    if (reachable_from(a, q).size() != a.state_count()) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------- transition semigroup

namespace {

struct TransformationHash {
  std::size_t operator()(Transformation const& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (State v : t) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

bool is_identity(Transformation const& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != i) {
      return false;
    }
  }
  return true;
}

}  // namespace

Transformation induced_transformation(Semiautomaton const& a,
                                      std::string_view word) {
  Transformation t(a.state_count());
  for (State q = 0; q < a.state_count(); ++q) {
    t[q] = run(a, q, word);
  }
  return t;
}

TransitionSemigroup transition_semigroup(Semiautomaton const& a,
                                         std::size_t max_elements) {
  TransitionSemigroup result;
  std::unordered_set<Transformation, TransformationHash> seen;
  std::vector<Transformation> order;
  for (std::size_t k = 0; k < a.letter_count(); ++k) {
    auto act = a.action(k);
    Transformation t(act.begin(), act.end());
    result.generators_.push_back(t);
    if (seen.insert(t).second) {
      order.push_back(std::move(t));
    }
  }
  // Extending a word w by a letter: first w, then the letter.
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t k = 0; k < a.letter_count(); ++k) {
      Transformation next(a.state_count());
      for (State q = 0; q < a.state_count(); ++q) {
        next[q] = a.step(order[head][q], k);
      }
      if (seen.insert(next).second) {
        if (order.size() >= max_elements) {
          throw CapExceeded("transition semigroup exceeds "
                            + std::to_string(max_elements) + " elements");
        }
        order.push_back(std::move(next));
      }
    }
  }
  std::sort(order.begin(), order.end());
  result.elements_ = std::move(order);
  return result;
}

bool TransitionSemigroup::contains(Transformation const& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

bool TransitionSemigroup::contains_identity() const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [](auto const& t) { return is_identity(t); });
}

bool TransitionSemigroup::is_group() const {
  for (auto const& t : elements_) {
    std::vector<bool> seen(t.size(), false);
    for (State q : t) {
      if (seen[q]) {
        return false;
      }
      seen[q] = true;
    }
  }
  return contains_identity();
}

// ------------------------------------------------------------ minimization

ComplexityOracle::ComplexityOracle(Semiautomaton const& a)
    : letters_(a.letter_count()), reachable_(reachable_states(a)) {
  std::size_t const r = reachable_.size();
  std::vector<std::uint32_t> local(a.state_count(), 0);
  for (std::size_t i = 0; i < r; ++i) {
    local[reachable_[i]] = static_cast<std::uint32_t>(i);
  }
  succ_.resize(letters_ * r);
  for (std::size_t k = 0; k < letters_; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      succ_[k * r + i] = local[a.step(reachable_[i], k)];
    }
  }
  cls_.resize(r);
  next_.resize(r);
  if (r <= 512) {
    pair_ids_.assign(r * r, -1);
  }
}

std::size_t ComplexityOracle::refine_once(std::size_t letter,
                                          std::size_t count) {
  // New class of i is determined by (class of i, class of its successor).
  // Ids are handed out in scan order so class k's smallest member precedes
  // class k+1's.
  std::size_t const r = reachable_.size();
  std::uint32_t const* succ = succ_.data() + letter * r;
  std::uint32_t fresh = 0;
  if (!pair_ids_.empty()) {
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t key = cls_[i] * count + cls_[succ[i]];
      if (pair_ids_[key] < 0) {
        pair_ids_[key] = static_cast<std::int32_t>(fresh++);
        touched_.push_back(static_cast<std::uint32_t>(key));
      }
      next_[i] = static_cast<std::uint32_t>(pair_ids_[key]);
    }
    for (auto key : touched_) {
      pair_ids_[key] = -1;
    }
    touched_.clear();
  } else {
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    for (std::size_t i = 0; i < r; ++i) {
      std::uint64_t key = std::uint64_t{cls_[i]} * count + cls_[succ[i]];
      auto [it, inserted] = ids.try_emplace(key, fresh);
      if (inserted) {
        ++fresh;
      }
      next_[i] = it->second;
    }
  }
  cls_.swap(next_);
  return fresh;
}

std::size_t ComplexityOracle::complexity(StateSet const& finals) {
  std::size_t const r = reachable_.size();
  // Initial partition {F, Q \ F}, numbered by first appearance.
  bool const first_final = finals.contains(reachable_[0]);
  std::size_t count = 1;
  for (std::size_t i = 0; i < r; ++i) {
    bool f = finals.contains(reachable_[i]);
    cls_[i] = f == first_final ? 0 : 1;
    if (f != first_final) {
      count = 2;
    }
  }
  if (count == 1) {
    return 1;
  }
  std::size_t stable_letters = 0;
  std::size_t k = 0;
  while (stable_letters < letters_ && count < r) {
    std::size_t refined = refine_once(k, count);
    if (refined == count) {
      ++stable_letters;
    } else {
      stable_letters = 0;
      count = refined;
    }
    k = (k + 1) % letters_;
  }
  if (count == r) {
    for (std::size_t i = 0; i < r; ++i) {
      cls_[i] = static_cast<std::uint32_t>(i);
    }
  }
  return count;
}

Minimization minimize(Dfa const& d) {
  Semiautomaton const& a = d.base();
  ComplexityOracle oracle(a);
  std::size_t const count = oracle.complexity(d.finals());
  auto const reach = oracle.reachable();
  auto const cls = oracle.classes();

  std::vector<std::uint32_t> class_of(a.state_count(), 0);
  std::vector<State> representative(count, 0);
  std::vector<bool> have(count, false);
  for (std::size_t i = 0; i < reach.size(); ++i) {
    class_of[reach[i]] = cls[i];
    if (!have[cls[i]]) {
      have[cls[i]] = true;
      representative[cls[i]] = reach[i];
    }
  }

  std::vector<Transformation> actions(a.letter_count(), Transformation(count));
  StateSet finals(count);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t k = 0; k < a.letter_count(); ++k) {
      actions[k][c] = class_of[a.step(representative[c], k)];
    }
    finals.assign(static_cast<State>(c), d.finals().contains(representative[c]));
  }
  Semiautomaton base(count, a.alphabet(), std::move(actions),
                     class_of[a.initial()]);
  return Minimization{Dfa(std::move(base), std::move(finals)), count};
}

std::vector<std::vector<State>> equivalence_classes(Dfa const& d) {
  ComplexityOracle oracle(d.base());
  std::size_t const count = oracle.complexity(d.finals());
  std::vector<std::vector<State>> classes(count);
  auto const reach = oracle.reachable();
  auto const cls = oracle.classes();
  for (std::size_t i = 0; i < reach.size(); ++i) {
    classes[cls[i]].push_back(reach[i]);
  }
  return classes;
}

bool is_uniformly_minimal(Semiautomaton const& a, std::size_t max_states) {
  std::size_t const n = a.state_count();
  if (n < 2) {
    throw InvalidArgument("uniform minimality needs at least two states");
  }
  if (n > max_states || n > 63) {
    throw CapExceeded("uniform minimality enumerates 2^n final sets; n = "
                      + std::to_string(n) + " exceeds the cap");
  }
  ComplexityOracle oracle(a);
  if (oracle.reachable_count() != n) {
    return false;
  }
  std::uint64_t const full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (oracle.complexity(StateSet::from_mask(n, mask)) != n) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- text I/O

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
  std::string rest;  // text after the key and, for trans, the letter
};

std::size_t parse_index(std::string const& word, std::size_t line,
                        std::size_t bound, char const* what) {
  if (word.empty()
      || !std::all_of(word.begin(), word.end(),
                      [](unsigned char c) { return std::isdigit(c); })
      || word.size() > 9) {
    throw ParseError(std::string("invalid ") + what + " '" + word + "'", line);
  }
  std::size_t v = std::stoul(word);
  if (bound != 0 && v >= bound) {
    throw ParseError(std::string(what) + " " + word + " out of range [0,"
                         + std::to_string(bound) + ")",
                     line);
  }
  return v;
}

}  // namespace

AutomatonFile parse_automaton(std::string_view text) {
  std::map<std::string, Line> single;
  std::vector<Line> trans;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream words(raw);
    std::string key;
    if (!(words >> key)) {
      continue;
    }
    Line line{number, {}, {}};
    if (key == "trans") {
      std::string letter;
      if (!(words >> letter)) {
        throw ParseError("trans needs a letter and a permutation", number);
      }
      line.words.push_back(letter);
      std::getline(words, line.rest);
      trans.push_back(std::move(line));
      continue;
    }
    if (key != "states" && key != "alphabet" && key != "initial"
        && key != "final") {
      throw ParseError("unknown key '" + key + "'", number);
    }
    for (std::string w; words >> w;) {
      line.words.push_back(w);
    }
    if (!single.emplace(key, std::move(line)).second) {
      throw ParseError("duplicate '" + key + "' line", number);
    }
  }

  auto require = [&](std::string const& key) -> Line const& {
    auto it = single.find(key);
    if (it == single.end()) {
      throw ParseError("missing '" + key + "' line", number);
    }
    return it->second;
  };

  Line const& states_line = require("states");
  if (states_line.words.size() != 1) {
    throw ParseError("states takes exactly one value", states_line.number);
  }
  std::size_t const n =
      parse_index(states_line.words[0], states_line.number, 0, "state count");
  if (n == 0) {
    throw ParseError("state count must be positive", states_line.number);
  }

  Line const& alphabet_line = require("alphabet");
  std::string alphabet;
  for (auto const& w : alphabet_line.words) {
    if (w.size() != 1 || !std::isalpha(static_cast<unsigned char>(w[0]))) {
      throw ParseError("letters must be single ASCII letters, got '" + w + "'",
                       alphabet_line.number);
    }
    if (alphabet.find(w[0]) != std::string::npos) {
      throw ParseError("duplicate letter '" + w + "'", alphabet_line.number);
    }
    alphabet += w[0];
  }
  if (alphabet.empty()) {
    throw ParseError("alphabet must be non-empty", alphabet_line.number);
  }

  std::vector<std::optional<Permutation>> actions(alphabet.size());
  for (auto const& line : trans) {
    auto const& letter = line.words[0];
    auto pos = letter.size() == 1 ? alphabet.find(letter[0]) : std::string::npos;
    if (pos == std::string::npos) {
      throw ParseError("trans for unknown letter '" + letter + "'",
                       line.number);
    }
    if (actions[pos]) {
      throw ParseError("duplicate trans for '" + letter + "'", line.number);
    }
    try {
      actions[pos] = parse_cycles(line.rest, n);
    } catch (ParseError const& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < alphabet.size(); ++k) {
    if (!actions[k]) {
      throw ParseError(std::string("missing trans line for '") + alphabet[k]
                           + "'",
                       number);
    }
    perms.push_back(*actions[k]);
  }

  Line const& initial_line = require("initial");
  if (initial_line.words.size() != 1) {
    throw ParseError("initial takes exactly one state", initial_line.number);
  }
  auto const initial = static_cast<State>(
      parse_index(initial_line.words[0], initial_line.number, n, "state"));

  std::optional<StateSet> finals;
  if (auto it = single.find("final"); it != single.end()) {
    finals.emplace(n);
    for (auto const& w : it->second.words) {
      auto q = static_cast<State>(parse_index(w, it->second.number, n, "state"));
      if (finals->contains(q)) {
        throw ParseError("final state " + w + " listed twice",
                         it->second.number);
      }
      finals->insert(q);
    }
  }

  return AutomatonFile{
      Semiautomaton::from_permutations(std::move(alphabet), perms, initial),
      std::move(finals)};
}

AutomatonFile load_automaton(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_automaton(buf.str());
  } catch (ParseError const& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_automaton(Semiautomaton const& a,
                             std::optional<StateSet> const& finals) {
  std::ostringstream out;
  out << "states " << a.state_count() << '\n' << "alphabet";
  for (char c : a.alphabet()) {
    out << ' ' << c;
  }
  out << '\n';
  for (std::size_t k = 0; k < a.letter_count(); ++k) {
    out << "trans " << a.alphabet()[k] << ' '
        << format_cycles(a.letter_permutation(k)) << '\n';
  }
  out << "initial " << a.initial() << '\n';
  if (finals) {
    out << "final";
    for (State q : finals->members()) {
      out << ' ' << q;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace symbool
