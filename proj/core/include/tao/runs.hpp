#pragma once

#include "tao/semantics.hpp"

#include <string>
#include <vector>

namespace tao {

struct RunStep {
  Rational delay;
  EventId event;
  State state; ///< state right after the event

  friend bool operator==(const RunStep&, const RunStep&) = default;
};

/// (l₀, 0), (d₀, e₀), (l₁, u₁), …, (dₙ₋₁, eₙ₋₁), (lₙ, uₙ). Delay-only
/// intermediate states are not kept.
struct Run {
  State initial;
  std::vector<RunStep> steps;

  const State& last() const { return steps.empty() ? initial : steps.back().state; }

  friend bool operator==(const Run&, const Run&) = default;
};

struct EtoSpec {
  LocationId private_location;
  LocationId final_location;

  friend bool operator==(const EtoSpec&, const EtoSpec&) = default;
};

/// Ψ(ρ): one step per event carrying the delay accumulated since the previous
/// event. Delays after the last event are dropped.
Run normalize_run(const Evolution& evolution);

Rational run_duration(const Run& run);

/// ρ terminates exactly on its first entry into `final_location`. Trailing
/// zero delays are ignored, so the predicate is stable under ≡_τ.
bool ends_at_first_final(const Evolution& evolution, LocationId final_location);

/// Visits l_priv at some position and reaches l_f for the first time at the end.
bool is_private_run(const Run& run, const EtoSpec& spec);

/// Reaches l_f for the first time at the end and never visits l_priv.
bool is_public_run(const Run& run, const EtoSpec& spec);

/// `(l0, {x: 0}), (2, a), (l1, {x: 0}), (3, b), (l2, {x: 3})`
std::string format_run(const TimedAutomaton& automaton, const Run& run);

} // namespace tao
