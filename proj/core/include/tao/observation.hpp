#pragma once

#include "tao/semantics.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tao {

/// The observable parts of L, C and Σ. Everything not listed is unobservable.
struct ObservationConfig {
  std::set<LocationId> locations;
  std::set<ClockId> clocks;
  std::set<EventId> events;

  bool observes(LocationId l) const { return locations.contains(l); }
  bool observes(ClockId c) const { return clocks.contains(c); }
  bool observes(EventId e) const { return events.contains(e); }

  /// Throws ConfigError if any member is not declared by the automaton.
  void validate(const TimedAutomaton& automaton) const;

  static ObservationConfig everything(const TimedAutomaton& automaton);

  friend bool operator==(const ObservationConfig&, const ObservationConfig&) = default;
};

/// A state as seen by the observer. An empty location is l_ε, an empty clock value u_ε.
struct ObservedState {
  std::optional<LocationId> location;
  std::vector<std::optional<Rational>> valuation;

  friend bool operator==(const ObservedState&, const ObservedState&) = default;
  friend std::strong_ordering operator<=>(const ObservedState& a, const ObservedState& b);
};

class ObservedAction {
public:
  enum class Kind { Delay, Event, Silent };

  static ObservedAction delay(Rational amount);
  static ObservedAction event(EventId id) { return ObservedAction(Kind::Event, id, 0); }
  static ObservedAction silent() { return ObservedAction(Kind::Silent, {}, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_delay() const noexcept { return kind_ == Kind::Delay; }
  bool is_silent() const noexcept { return kind_ == Kind::Silent; }
  bool is_event() const noexcept { return kind_ == Kind::Event; }
  EventId event_id() const { return event_; }
  const Rational& amount() const { return amount_; }

  friend bool operator==(const ObservedAction&, const ObservedAction&) = default;
  /// Delays < events < σ_ε.
  friend std::strong_ordering operator<=>(const ObservedAction& a, const ObservedAction& b);

private:
  ObservedAction(Kind kind, EventId event, Rational amount)
      : kind_(kind), event_(event), amount_(std::move(amount))
  {}

  Kind kind_;
  EventId event_;
  Rational amount_;
};

struct ObservedStep {
  ObservedAction action;
  ObservedState state;

  friend bool operator==(const ObservedStep&, const ObservedStep&) = default;
};

struct ObservationSequence {
  ObservedState initial;
  std::vector<ObservedStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const ObservedState& state_at(std::size_t i) const { return i == 0 ? initial : steps.at(i - 1).state; }

  friend bool operator==(const ObservationSequence&, const ObservationSequence&) = default;
  /// Step-wise lexicographic; a proper prefix orders first.
  friend std::strong_ordering operator<=>(const ObservationSequence& a, const ObservationSequence& b);
};

/// An observation sequence with no zero delays, no adjacent mergeable delays
/// and no σ_ε step between equal observed states. Only canonicalize() makes one.
class CanonicalObservation {
public:
  const ObservationSequence& sequence() const noexcept { return sequence_; }

  friend bool operator==(const CanonicalObservation&, const CanonicalObservation&) = default;
  friend std::strong_ordering operator<=>(const CanonicalObservation& a, const CanonicalObservation& b)
  {
    return a.sequence_ <=> b.sequence_;
  }

private:
  friend CanonicalObservation canonicalize(ObservationSequence);
  explicit CanonicalObservation(ObservationSequence s) : sequence_(std::move(s)) {}
  ObservationSequence sequence_;
};

ObservedState observe_state(const State& state, const ObservationConfig& config);
ObservedAction observe_action(const Action& action, const ObservationConfig& config);
ObservationSequence observe_evolution(const Evolution& evolution, const ObservationConfig& config);

/// Adds τ to every unmasked clock; u_ε stays u_ε.
std::vector<std::optional<Rational>> elapse_observed(const std::vector<std::optional<Rational>>& valuation,
                                                     const Rational& delay);

// Elementary rewrites of observational equivalence, oriented to shorten.

enum class RewriteKind {
  RemoveSilent, ///< s --σ_ε--> s  ⇒  s
  MergeDelays,  ///< s --τ--> s+τ --τ'--> s+τ+τ'  ⇒  s --τ+τ'--> s+τ+τ'
  RemoveZero,   ///< s --0--> s  ⇒  s
};

struct Redex {
  RewriteKind kind;
  std::size_t step; ///< index of the (first) affected step

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// Every position where some rewrite applies, in left-to-right order.
std::vector<Redex> find_redexes(const ObservationSequence& sequence);

/// Applies one rewrite. Throws std::invalid_argument if it does not apply there.
ObservationSequence apply_rewrite(ObservationSequence sequence, const Redex& redex);

/// Repeatedly applies the leftmost applicable rewrite until none is left.
CanonicalObservation canonicalize(ObservationSequence sequence);

/// Delay merging and zero-delay removal on a concrete evolution.
Evolution canonicalize_tau(const Evolution& evolution);

/// ρ₁ ≡_obs ρ₂ under the config, decided by comparing canonical forms.
bool obs_equivalent(const Evolution& a, const Evolution& b, const ObservationConfig& config);

inline CanonicalObservation canonical_observation(const Evolution& evolution,
                                                  const ObservationConfig& config)
{
  return canonicalize(observe_evolution(evolution, config));
}

/// Sum of the delays in the sequence.
Rational observed_duration(const ObservationSequence& sequence);

/// `(l0, {x: ε}) --1--> (ε, {x: ε}) --ε--> …`; masked parts print as ε.
std::string format_observed_state(const TimedAutomaton& automaton, const ObservedState& state);
std::string format_observation(const TimedAutomaton& automaton, const ObservationSequence& sequence);

} // namespace tao
