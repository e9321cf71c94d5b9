#include "tao/model.hpp"

#include "tao/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tao {

std::string_view to_string(CompareOp op)
{
  switch (op) {
  case CompareOp::Less: return "<";
  case CompareOp::LessEqual: return "<=";
  case CompareOp::Equal: return "==";
  case CompareOp::GreaterEqual: return ">=";
  case CompareOp::Greater: return ">";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ClockConstraint

struct ClockConstraint::Node {
  Kind kind = Kind::True;
  ClockId clock;
  ClockId other;
  CompareOp op = CompareOp::Equal;
  std::uint64_t constant = 0;
  ClockConstraint lhs_child;
  ClockConstraint rhs_child;
};

// A null node is the `true` leaf.
ClockConstraint::ClockConstraint() : node_(nullptr) {}

ClockConstraint::ClockConstraint(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ClockConstraint ClockConstraint::compare(ClockId clock, CompareOp op, std::uint64_t constant)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::Compare;
  node->clock = clock;
  node->op = op;
  node->constant = constant;
  return ClockConstraint(std::move(node));
}

ClockConstraint ClockConstraint::difference(ClockId clock, ClockId other, CompareOp op,
                                            std::uint64_t constant)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::DiffCompare;
  node->clock = clock;
  node->other = other;
  node->op = op;
  node->constant = constant;
  return ClockConstraint(std::move(node));
}

ClockConstraint ClockConstraint::conjunction(ClockConstraint lhs, ClockConstraint rhs)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->lhs_child = std::move(lhs);
  node->rhs_child = std::move(rhs);
  return ClockConstraint(std::move(node));
}

ClockConstraint ClockConstraint::disjunction(ClockConstraint lhs, ClockConstraint rhs)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->lhs_child = std::move(lhs);
  node->rhs_child = std::move(rhs);
  return ClockConstraint(std::move(node));
}

ClockConstraint::Kind ClockConstraint::kind() const noexcept
{
  return node_ ? node_->kind : Kind::True;
}

ClockId ClockConstraint::clock() const
{
  if (kind() != Kind::Compare && kind() != Kind::DiffCompare)
    throw std::logic_error("clock() on a non-atomic constraint");
  return node_->clock;
}

ClockId ClockConstraint::other_clock() const
{
  if (kind() != Kind::DiffCompare)
    throw std::logic_error("other_clock() on a non-difference constraint");
  return node_->other;
}

CompareOp ClockConstraint::op() const
{
  if (kind() != Kind::Compare && kind() != Kind::DiffCompare)
    throw std::logic_error("op() on a non-atomic constraint");
  return node_->op;
}

std::uint64_t ClockConstraint::constant() const
{
  if (kind() != Kind::Compare && kind() != Kind::DiffCompare)
    throw std::logic_error("constant() on a non-atomic constraint");
  return node_->constant;
}

const ClockConstraint& ClockConstraint::lhs() const
{
  if (kind() != Kind::And && kind() != Kind::Or)
    throw std::logic_error("lhs() on a non-connective constraint");
  return node_->lhs_child;
}

const ClockConstraint& ClockConstraint::rhs() const
{
  if (kind() != Kind::And && kind() != Kind::Or)
    throw std::logic_error("rhs() on a non-connective constraint");
  return node_->rhs_child;
}

bool ClockConstraint::is_disjunction_free() const
{
  switch (kind()) {
  case Kind::Or: return false;
  case Kind::And: return lhs().is_disjunction_free() && rhs().is_disjunction_free();
  default: return true;
  }
}

void ClockConstraint::for_each_clock(const std::function<void(ClockId)>& fn) const
{
  switch (kind()) {
  case Kind::True: break;
  case Kind::Compare: fn(clock()); break;
  case Kind::DiffCompare:
    fn(clock());
    fn(other_clock());
    break;
  case Kind::And:
  case Kind::Or:
    lhs().for_each_clock(fn);
    rhs().for_each_clock(fn);
    break;
  }
}

bool operator==(const ClockConstraint& a, const ClockConstraint& b)
{
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
  case ClockConstraint::Kind::True: return true;
  case ClockConstraint::Kind::Compare:
    return a.clock() == b.clock() && a.op() == b.op() && a.constant() == b.constant();
  case ClockConstraint::Kind::DiffCompare:
    return a.clock() == b.clock() && a.other_clock() == b.other_clock() && a.op() == b.op() &&
           a.constant() == b.constant();
  case ClockConstraint::Kind::And:
  case ClockConstraint::Kind::Or:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Valuations

std::strong_ordering compare_rational(const Rational& a, const Rational& b)
{
  int c = a.compare(b);
  if (c < 0)
    return std::strong_ordering::less;
  if (c > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ClockValuation::ClockValuation(std::vector<Rational> values) : values_(std::move(values))
{
  for (const auto& v : values_)
    if (v < 0)
      throw std::invalid_argument("clock values must be non-negative");
}

ClockValuation ClockValuation::zero(std::size_t clock_count)
{
  return ClockValuation(std::vector<Rational>(clock_count, Rational(0)));
}

const Rational& ClockValuation::operator[](ClockId clock) const
{
  if (clock.index >= values_.size())
    throw ModelError("clock #" + std::to_string(clock.index) + " is not defined by the valuation");
  return values_[clock.index];
}

std::strong_ordering operator<=>(const ClockValuation& a, const ClockValuation& b)
{
  if (auto c = a.values_.size() <=> b.values_.size(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.values_.size(); ++i)
    if (auto c = compare_rational(a.values_[i], b.values_[i]); c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const State& a, const State& b)
{
  if (auto c = a.location <=> b.location; c != 0)
    return c;
  return a.valuation <=> b.valuation;
}

namespace {

bool apply(CompareOp op, const Rational& lhs, std::uint64_t constant)
{
  Rational n(constant);
  switch (op) {
  case CompareOp::Less: return lhs < n;
  case CompareOp::LessEqual: return lhs <= n;
  case CompareOp::Equal: return lhs == n;
  case CompareOp::GreaterEqual: return lhs >= n;
  case CompareOp::Greater: return lhs > n;
  }
  return false;
}

} // namespace

bool evaluate(const ClockConstraint& constraint, const ClockValuation& valuation)
{
  using Kind = ClockConstraint::Kind;
  switch (constraint.kind()) {
  case Kind::True: return true;
  case Kind::Compare:
    return apply(constraint.op(), valuation[constraint.clock()], constraint.constant());
  case Kind::DiffCompare:
    return apply(constraint.op(),
                 valuation[constraint.clock()] - valuation[constraint.other_clock()],
                 constraint.constant());
  case Kind::And:
    return evaluate(constraint.lhs(), valuation) && evaluate(constraint.rhs(), valuation);
  case Kind::Or:
    return evaluate(constraint.lhs(), valuation) || evaluate(constraint.rhs(), valuation);
  }
  return false;
}

ClockValuation reset(const ClockValuation& valuation, std::span<const ClockId> clocks)
{
  std::vector<Rational> values = valuation.values();
  for (ClockId c : clocks) {
    if (c.index >= values.size())
      throw ModelError("reset of undeclared clock #" + std::to_string(c.index));
    values[c.index] = 0;
  }
  return ClockValuation(std::move(values));
}

ClockValuation elapse(const ClockValuation& valuation, const Rational& delay)
{
  if (delay < 0)
    throw std::invalid_argument("negative delay " + to_string(delay));
  std::vector<Rational> values = valuation.values();
  for (auto& v : values)
    v += delay;
  return ClockValuation(std::move(values));
}

// ---------------------------------------------------------------------------
// Automaton

namespace {

template <typename Id>
std::optional<Id> find_name(const std::vector<std::string>& names, std::string_view name)
{
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    return std::nullopt;
  return Id{static_cast<std::uint32_t>(it - names.begin())};
}

template <typename Id>
std::vector<Id> all_ids(std::size_t n)
{
  std::vector<Id> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    ids.push_back(Id{static_cast<std::uint32_t>(i)});
  return ids;
}

} // namespace

std::optional<ClockId> TimedAutomaton::find_clock(std::string_view name) const
{
  return find_name<ClockId>(clocks_, name);
}

std::optional<EventId> TimedAutomaton::find_event(std::string_view name) const
{
  return find_name<EventId>(events_, name);
}

std::optional<LocationId> TimedAutomaton::find_location(std::string_view name) const
{
  return find_name<LocationId>(locations_, name);
}

std::vector<ClockId> TimedAutomaton::clocks() const { return all_ids<ClockId>(clocks_.size()); }
std::vector<EventId> TimedAutomaton::events() const { return all_ids<EventId>(events_.size()); }
std::vector<LocationId> TimedAutomaton::locations() const
{
  return all_ids<LocationId>(locations_.size());
}

bool operator==(const TimedAutomaton& a, const TimedAutomaton& b)
{
  return a.clocks_ == b.clocks_ && a.events_ == b.events_ && a.locations_ == b.locations_ &&
         a.initial_ == b.initial_ && a.invariants_ == b.invariants_ && a.edges_ == b.edges_;
}

ClockId AutomatonBuilder::add_clock(std::string name)
{
  clocks_.push_back(std::move(name));
  return ClockId{static_cast<std::uint32_t>(clocks_.size() - 1)};
}

EventId AutomatonBuilder::add_event(std::string name)
{
  events_.push_back(std::move(name));
  return EventId{static_cast<std::uint32_t>(events_.size() - 1)};
}

LocationId AutomatonBuilder::add_location(std::string name, bool initial)
{
  locations_.push_back(std::move(name));
  invariants_.emplace_back();
  LocationId id{static_cast<std::uint32_t>(locations_.size() - 1)};
  if (initial)
    initials_.push_back(id);
  return id;
}

void AutomatonBuilder::set_invariant(LocationId location, ClockConstraint invariant)
{
  if (location.index >= invariants_.size())
    throw ModelError("invariant on undeclared location #" + std::to_string(location.index));
  invariants_[location.index] = std::move(invariant);
}

void AutomatonBuilder::add_edge(LocationId source, EventId event, ClockConstraint guard,
                                std::vector<ClockId> resets, LocationId target)
{
  edges_.push_back(Edge{source, event, std::move(guard), std::move(resets), target});
}

namespace {

void check_unique(const std::vector<std::string>& names, std::string_view what)
{
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty())
      throw ModelError(std::string(what) + " with an empty name");
    if (!seen.insert(n).second)
      throw ModelError("duplicate " + std::string(what) + " '" + n + "'");
  }
}

void check_clocks(const ClockConstraint& c, std::size_t clock_count, std::string_view where)
{
  c.for_each_clock([&](ClockId id) {
    if (id.index >= clock_count)
      throw ModelError("undeclared clock #" + std::to_string(id.index) + " in " + std::string(where));
  });
}

} // namespace

TimedAutomaton AutomatonBuilder::build() const
{
  check_unique(clocks_, "clock");
  check_unique(events_, "event");
  check_unique(locations_, "location");

  if (initials_.empty())
    throw ModelError("no initial location declared");
  if (initials_.size() > 1)
    throw ModelError("more than one initial location; deterministic automata have exactly one "
                     "initial location");

  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    const auto& where = locations_[i];
    check_clocks(invariants_[i], clocks_.size(), "invariant of " + where);
    if (!invariants_[i].is_disjunction_free())
      throw ModelError("invariant of " + where +
                       " contains a disjunction; invariants must be conjunctions of atoms so "
                       "that time transitions can be checked at interval endpoints");
  }

  for (const auto& e : edges_) {
    if (e.source.index >= locations_.size() || e.target.index >= locations_.size())
      throw ModelError("edge references an undeclared location");
    if (e.event.index >= events_.size())
      throw ModelError("edge references an undeclared event");
    check_clocks(e.guard, clocks_.size(), "guard of an edge from " + locations_[e.source.index]);
    for (ClockId c : e.resets)
      if (c.index >= clocks_.size())
        throw ModelError("edge resets an undeclared clock");
  }

  TimedAutomaton a;
  a.clocks_ = clocks_;
  a.events_ = events_;
  a.locations_ = locations_;
  a.initial_ = initials_.front();
  a.invariants_ = invariants_;
  a.edges_ = edges_;
  for (auto& e : a.edges_) {
    std::sort(e.resets.begin(), e.resets.end());
    e.resets.erase(std::unique(e.resets.begin(), e.resets.end()), e.resets.end());
  }
  a.outgoing_.resize(locations_.size());
  for (std::size_t i = 0; i < a.edges_.size(); ++i)
    a.outgoing_[a.edges_[i].source.index].push_back(i);
  return a;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_constraint(const TimedAutomaton& automaton, const ClockConstraint& c)
{
  using Kind = ClockConstraint::Kind;
  switch (c.kind()) {
  case Kind::True: return "true";
  case Kind::Compare:
    return automaton.name(c.clock()) + " " + std::string(to_string(c.op())) + " " +
           std::to_string(c.constant());
  case Kind::DiffCompare:
    return automaton.name(c.clock()) + " - " + automaton.name(c.other_clock()) + " " +
           std::string(to_string(c.op())) + " " + std::to_string(c.constant());
  case Kind::And:
  case Kind::Or: {
    // Operators read left-associatively, so a compound right operand is
    // always parenthesized to keep the tree shape on re-parse.
    auto side = [&](const ClockConstraint& s, bool right) {
      auto text = format_constraint(automaton, s);
      bool compound = s.kind() == Kind::And || s.kind() == Kind::Or;
      bool wrap = compound && (right || s.kind() != c.kind());
      return wrap ? "(" + text + ")" : text;
    };
    return side(c.lhs(), false) + (c.kind() == Kind::And ? " and " : " or ") + side(c.rhs(), true);
  }
  }
  return "?";
}

std::string format_state(const TimedAutomaton& automaton, const State& state)
{
  std::ostringstream out;
  out << "(" << automaton.name(state.location) << ", {";
  for (std::size_t i = 0; i < state.valuation.size(); ++i) {
    if (i > 0)
      out << ", ";
    ClockId c{static_cast<std::uint32_t>(i)};
    out << automaton.name(c) << ": " << to_string(state.valuation[c]);
  }
  out << "})";
  return out.str();
}

} // namespace tao
