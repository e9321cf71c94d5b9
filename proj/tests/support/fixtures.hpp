#pragma once

#include "tao/model.hpp"
#include "tao/observation.hpp"
#include "tao/semantics.hpp"

#include <random>
#include <string_view>
#include <vector>

namespace tao::testing {

inline Rational q(std::string_view text) { return parse_rational(text); }

/// One clock x, one location, no events: the pure-delay graph of the closure demo.
TimedAutomaton closure_demo_automaton();

/// l0 --a, x=1--> l1 --b, x=100--> l2.
TimedAutomaton suffix_blindness_automaton();

/// l0 with an unguarded self-loop on a resetting x.
TimedAutomaton self_loop_automaton();

/// The two-path diamond: l0 -a,x=c1,{x}-> l1 -b,x=c2-> lf and the mirror through l2.
TimedAutomaton diamond_automaton(std::uint64_t c1 = 1, std::uint64_t c2 = 2);

/// l0 -a-> l1 -b-> l2 with no guards, for the worked Y and Ψ evolutions.
TimedAutomaton chain_automaton();

/// Evolution built by replaying actions written as "3/2", "a", ... on `automaton`.
Evolution evolve(const TimedAutomaton& automaton, std::initializer_list<std::string_view> actions);

struct RandomAutomaton {
  TimedAutomaton automaton;
  LocationId private_location;
  LocationId final_location;
  std::vector<Rational> grid; ///< guard constants (non-zero) plus 1/2
};

/// Small deterministic TA: at most 4 locations and 2 clocks, guard constants
/// at most 3, at most one edge per (source, event), never an edge lf -> lf.
RandomAutomaton random_automaton(std::mt19937_64& rng);

/// Random subsets of the automaton's events, with the location and clock
/// sets left empty.
ObservationConfig random_event_config(std::mt19937_64& rng, const TimedAutomaton& automaton);

/// Random observation sequence of length at most `max_length` over a small
/// pool of observed states, with delays that elapse the observed clock.
ObservationSequence random_observation_sequence(std::mt19937_64& rng, std::size_t max_length);

/// Rewrites applied in random order until none is left.
ObservationSequence random_normal_form(std::mt19937_64& rng, ObservationSequence sequence);

/// Splits each delay of ρ at random and inserts random zero delays. The result
/// is ≡_τ-equivalent to ρ and may leave the automaton's enumerated set.
Evolution random_fragmentation(std::mt19937_64& rng, const TimedAutomaton& automaton, const Evolution& evolution);

} // namespace tao::testing
