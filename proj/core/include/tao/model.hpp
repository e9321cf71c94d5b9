#pragma once

#include "tao/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tao {

// Interned identifiers. Each is an index into the owning automaton's name table.

struct ClockId {
  std::uint32_t index = 0;
  auto operator<=>(const ClockId&) const = default;
};

struct LocationId {
  std::uint32_t index = 0;
  auto operator<=>(const LocationId&) const = default;
};

struct EventId {
  std::uint32_t index = 0;
  auto operator<=>(const EventId&) const = default;
};

enum class CompareOp { Less, LessEqual, Equal, GreaterEqual, Greater };

std::string_view to_string(CompareOp op);

/// Guard / invariant grammar: true | x ~ n | x - y ~ n | φ ∧ φ | φ ∨ φ.
/// Immutable; copies share the underlying tree.
class ClockConstraint {
public:
  enum class Kind { True, Compare, DiffCompare, And, Or };

  ClockConstraint();

  static ClockConstraint truth() { return {}; }
  static ClockConstraint compare(ClockId clock, CompareOp op, std::uint64_t constant);
  static ClockConstraint difference(ClockId clock, ClockId other, CompareOp op,
                                    std::uint64_t constant);
  static ClockConstraint conjunction(ClockConstraint lhs, ClockConstraint rhs);
  static ClockConstraint disjunction(ClockConstraint lhs, ClockConstraint rhs);

  Kind kind() const noexcept;
  ClockId clock() const;
  ClockId other_clock() const;
  CompareOp op() const;
  std::uint64_t constant() const;
  const ClockConstraint& lhs() const;
  const ClockConstraint& rhs() const;

  bool is_disjunction_free() const;
  void for_each_clock(const std::function<void(ClockId)>& fn) const;

  friend bool operator==(const ClockConstraint& a, const ClockConstraint& b);

private:
  struct Node;
  explicit ClockConstraint(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Total map clock -> non-negative rational, indexed by ClockId.
class ClockValuation {
public:
  ClockValuation() = default;
  explicit ClockValuation(std::vector<Rational> values);

  static ClockValuation zero(std::size_t clock_count);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](ClockId clock) const;
  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const ClockValuation&, const ClockValuation&) = default;
  friend std::strong_ordering operator<=>(const ClockValuation& a, const ClockValuation& b);

private:
  std::vector<Rational> values_;
};

/// u ⊨ φ. Throws ModelError if φ references a clock the valuation does not define.
bool evaluate(const ClockConstraint& constraint, const ClockValuation& valuation);

/// u[r]: clocks in `clocks` set to zero, all others unchanged.
ClockValuation reset(const ClockValuation& valuation, std::span<const ClockId> clocks);

/// u + τ. Throws std::invalid_argument when τ < 0.
ClockValuation elapse(const ClockValuation& valuation, const Rational& delay);

std::strong_ordering compare_rational(const Rational& a, const Rational& b);

struct Edge {
  LocationId source;
  EventId event;
  ClockConstraint guard;
  std::vector<ClockId> resets;
  LocationId target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct State {
  LocationId location;
  ClockValuation valuation;

  friend bool operator==(const State&, const State&) = default;
  friend std::strong_ordering operator<=>(const State& a, const State& b);
};

class AutomatonBuilder;

/// A deterministic-by-construction-syntax timed automaton (single initial
/// location, conjunctive invariants). Immutable once built.
class TimedAutomaton {
public:
  std::size_t clock_count() const noexcept { return clocks_.size(); }
  std::size_t event_count() const noexcept { return events_.size(); }
  std::size_t location_count() const noexcept { return locations_.size(); }

  const std::string& name(ClockId id) const { return clocks_.at(id.index); }
  const std::string& name(EventId id) const { return events_.at(id.index); }
  const std::string& name(LocationId id) const { return locations_.at(id.index); }

  std::optional<ClockId> find_clock(std::string_view name) const;
  std::optional<EventId> find_event(std::string_view name) const;
  std::optional<LocationId> find_location(std::string_view name) const;

  std::vector<ClockId> clocks() const;
  std::vector<EventId> events() const;
  std::vector<LocationId> locations() const;

  LocationId initial() const noexcept { return initial_; }
  const ClockConstraint& invariant(LocationId location) const { return invariants_.at(location.index); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Indices into edges() leaving `location`, in declaration order.
  const std::vector<std::size_t>& outgoing(LocationId location) const { return outgoing_.at(location.index); }

  friend bool operator==(const TimedAutomaton& a, const TimedAutomaton& b);

private:
  friend class AutomatonBuilder;
  TimedAutomaton() = default;

  std::vector<std::string> clocks_;
  std::vector<std::string> events_;
  std::vector<std::string> locations_;
  LocationId initial_;
  std::vector<ClockConstraint> invariants_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

class AutomatonBuilder {
public:
  ClockId add_clock(std::string name);
  EventId add_event(std::string name);
  LocationId add_location(std::string name, bool initial = false);
  void set_invariant(LocationId location, ClockConstraint invariant);
  void add_edge(LocationId source, EventId event, ClockConstraint guard,
                std::vector<ClockId> resets, LocationId target);

  /// Validates and freezes. Throws ModelError on: zero or several initial
  /// locations, undeclared references, duplicate names, disjunctive invariants.
  TimedAutomaton build() const;

private:
  std::vector<std::string> clocks_;
  std::vector<std::string> events_;
  std::vector<std::string> locations_;
  std::vector<LocationId> initials_;
  std::vector<ClockConstraint> invariants_;
  std::vector<Edge> edges_;
};

std::string format_constraint(const TimedAutomaton& automaton, const ClockConstraint& constraint);

/// `(l0, {x: 3/2, y: 0})`
std::string format_state(const TimedAutomaton& automaton, const State& state);

} // namespace tao
