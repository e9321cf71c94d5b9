#pragma once

#include "tao/model.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tao {

/// An element of Σ ∪ ℝ≥0: either a discrete event or a time delay.
class Action {
public:
  static Action event(EventId id) { return Action(id); }
  static Action delay(Rational amount);

  bool is_event() const noexcept { return std::holds_alternative<EventId>(value_); }
  bool is_delay() const noexcept { return !is_event(); }
  EventId event_id() const { return std::get<EventId>(value_); }
  const Rational& amount() const { return std::get<Rational>(value_); }

  friend bool operator==(const Action&, const Action&) = default;
  /// Delays (ascending) order before events (by id).
  friend std::strong_ordering operator<=>(const Action& a, const Action& b);

private:
  explicit Action(EventId id) : value_(id) {}
  explicit Action(Rational amount) : value_(std::move(amount)) {}
  std::variant<Rational, EventId> value_;
};

struct Step {
  Action action;
  State state;

  friend bool operator==(const Step&, const Step&) = default;
};

/// s⁰ γ⁰ s¹ … γⁿ⁻¹ sⁿ. A zero-length evolution is a single state.
struct Evolution {
  State initial;
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const State& last() const { return steps.empty() ? initial : steps.back().state; }
  /// i = 0 is the initial state, i = k the state after step k-1.
  const State& state_at(std::size_t i) const { return i == 0 ? initial : steps.at(i - 1).state; }

  friend bool operator==(const Evolution&, const Evolution&) = default;
  friend std::strong_ordering operator<=>(const Evolution& a, const Evolution& b);
};

struct EnumerationBudget {
  std::size_t max_steps = 0;
  /// Positive delays tried at every state; stored sorted and deduplicated by validate().
  std::vector<Rational> delay_grid;
  bool include_zero_delay = false;
  /// When false, a delay is never directly followed by another delay.
  bool consecutive_delays = true;

  /// Sorts/dedupes the grid; throws std::invalid_argument on an empty grid or non-positive value.
  void validate();

  friend bool operator==(const EnumerationBudget&, const EnumerationBudget&) = default;
};

/// (l₀, 0). Throws UndefinedSemanticsError if 0 violates I(l₀).
State initial_state(const TimedAutomaton& automaton);

bool is_valid_state(const TimedAutomaton& automaton, const State& state);

/// Every distinct s' with (s, σ, s') ∈ δ.
std::vector<State> event_successors(const TimedAutomaton& automaton, const State& state, EventId event);

/// The unique σ-successor, if any. Throws DeterminismError when there are several.
std::optional<State> event_successor(const TimedAutomaton& automaton, const State& state, EventId event);

/// (l, u+τ) when the invariant holds on all of [0, τ]; invariants are
/// conjunctive, so checking both endpoints is sufficient.
std::optional<State> time_successor(const TimedAutomaton& automaton, const State& state,
                                    const Rational& delay);

struct ValidationResult {
  bool valid = true;
  /// Index into Evolution::steps of the first transition not in δ; empty when
  /// the initial state itself is at fault.
  std::optional<std::size_t> failing_step;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

ValidationResult validate_evolution(const TimedAutomaton& automaton, const Evolution& evolution,
                                    bool require_generated = true);

/// Sum of all delay actions.
Rational duration(const Evolution& evolution);

/// Builds the generated evolution that follows `actions` from the initial
/// state. Throws ModelError if some action is not enabled.
Evolution replay(const TimedAutomaton& automaton, const std::vector<Action>& actions);

/// All generated evolutions with at most `max_steps` actions whose delays come
/// from the grid (plus 0 if enabled). Prefix-closed, ordered lexicographically
/// by action sequence with every prefix before its extensions.
/// Throws DeterminismError if a visited state has two successors for one event.
std::vector<Evolution> enumerate_evolutions(const TimedAutomaton& automaton,
                                            EnumerationBudget budget);

/// True iff no state reachable within the budget has two distinct successors
/// for a single event.
bool check_determinism(const TimedAutomaton& automaton, EnumerationBudget budget);

std::string format_action(const TimedAutomaton& automaton, const Action& action);
std::string format_evolution(const TimedAutomaton& automaton, const Evolution& evolution);

} // namespace tao
