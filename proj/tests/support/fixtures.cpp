#include "fixtures.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace tao::testing {

namespace {

ClockConstraint eq(ClockId c, std::uint64_t n) { return ClockConstraint::compare(c, CompareOp::Equal, n); }

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items)
{
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

} // namespace

TimedAutomaton closure_demo_automaton()
{
  AutomatonBuilder b;
  b.add_clock("x");
  b.add_location("l0", true);
  return b.build();
}

TimedAutomaton suffix_blindness_automaton()
{
  AutomatonBuilder b;
  ClockId x = b.add_clock("x");
  EventId a = b.add_event("a");
  EventId bb = b.add_event("b");
  LocationId l0 = b.add_location("l0", true);
  LocationId l1 = b.add_location("l1");
  LocationId l2 = b.add_location("l2");
  b.add_edge(l0, a, eq(x, 1), {}, l1);
  b.add_edge(l1, bb, eq(x, 100), {}, l2);
  return b.build();
}

TimedAutomaton self_loop_automaton()
{
  AutomatonBuilder b;
  ClockId x = b.add_clock("x");
  EventId a = b.add_event("a");
  LocationId l0 = b.add_location("l0", true);
  b.add_edge(l0, a, ClockConstraint::truth(), {x}, l0);
  return b.build();
}

TimedAutomaton diamond_automaton(std::uint64_t c1, std::uint64_t c2)
{
  AutomatonBuilder b;
  ClockId x = b.add_clock("x");
  EventId a = b.add_event("a");
  EventId bb = b.add_event("b");
  LocationId l0 = b.add_location("l0", true);
  LocationId l1 = b.add_location("l1");
  LocationId l2 = b.add_location("l2");
  LocationId lf = b.add_location("lf");
  b.add_edge(l0, a, eq(x, c1), {x}, l1);
  b.add_edge(l1, bb, eq(x, c2), {}, lf);
  b.add_edge(l0, a, eq(x, c2), {x}, l2);
  b.add_edge(l2, bb, eq(x, c1), {}, lf);
  return b.build();
}

TimedAutomaton chain_automaton()
{
  AutomatonBuilder b;
  b.add_clock("x");
  EventId a = b.add_event("a");
  EventId bb = b.add_event("b");
  LocationId l0 = b.add_location("l0", true);
  LocationId l1 = b.add_location("l1");
  LocationId l2 = b.add_location("l2");
  b.add_edge(l0, a, ClockConstraint::truth(), {}, l1);
  b.add_edge(l1, bb, ClockConstraint::truth(), {}, l2);
  return b.build();
}

Evolution evolve(const TimedAutomaton& automaton, std::initializer_list<std::string_view> actions)
{
  std::vector<Action> list;
  for (std::string_view a : actions) {
    if (std::isdigit(static_cast<unsigned char>(a.front()))) {
      list.push_back(Action::delay(parse_rational(a)));
    } else {
      auto e = automaton.find_event(a);
      if (!e)
        throw std::invalid_argument("unknown event in fixture: " + std::string(a));
      list.push_back(Action::event(*e));
    }
  }
  return replay(automaton, list);
}

RandomAutomaton random_automaton(std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> location_count(2, 4), clock_count(1, 2), constant(0, 3);
  const int nl = location_count(rng);
  const int nc = clock_count(rng);

  AutomatonBuilder b;
  std::vector<ClockId> clocks;
  for (int i = 0; i < nc; ++i)
    clocks.push_back(b.add_clock(i == 0 ? "x" : "y"));
  std::vector<EventId> events = {b.add_event("a"), b.add_event("b")};
  std::vector<LocationId> locations;
  for (int i = 0; i < nl; ++i)
    locations.push_back(b.add_location(i + 1 == nl ? "lf" : "l" + std::to_string(i), i == 0));
  const LocationId lf = locations.back();

  std::set<std::uint64_t> constants;
  auto atom = [&] {
    static const std::vector<CompareOp> ops = {CompareOp::Less, CompareOp::LessEqual, CompareOp::Equal,
                                               CompareOp::GreaterEqual, CompareOp::Greater};
    std::uint64_t n = static_cast<std::uint64_t>(constant(rng));
    constants.insert(n);
    if (nc == 2 && coin(rng, 0.15))
      return ClockConstraint::difference(clocks[0], clocks[1], pick(rng, ops), n);
    return ClockConstraint::compare(pick(rng, clocks), pick(rng, ops), n);
  };

  for (LocationId l : locations) {
    if (coin(rng, 0.25)) {
      std::uint64_t n = static_cast<std::uint64_t>(std::uniform_int_distribution<int>(1, 3)(rng));
      constants.insert(n);
      b.set_invariant(l, ClockConstraint::compare(pick(rng, clocks), CompareOp::LessEqual, n));
    }
    for (EventId e : events) {
      if (!coin(rng, 0.6))
        continue;
      std::vector<LocationId> targets;
      for (LocationId t : locations)
        if (!(l == lf && t == lf))
          targets.push_back(t);
      ClockConstraint guard;
      double g = std::uniform_real_distribution<double>(0, 1)(rng);
      if (g < 0.55)
        guard = atom();
      else if (g < 0.8)
        guard = ClockConstraint::conjunction(atom(), atom());
      else if (g < 0.9)
        guard = ClockConstraint::disjunction(atom(), atom());
      std::vector<ClockId> resets;
      for (ClockId c : clocks)
        if (coin(rng, 0.4))
          resets.push_back(c);
      b.add_edge(l, e, std::move(guard), std::move(resets), pick(rng, targets));
    }
  }

  std::vector<LocationId> private_candidates(locations.begin(), locations.end() - 1);
  RandomAutomaton out{b.build(), pick(rng, private_candidates), lf, {}};
  out.grid.push_back(Rational(1, 2));
  for (std::uint64_t n : constants)
    if (n > 0)
      out.grid.push_back(Rational(n));
  return out;
}

ObservationConfig random_event_config(std::mt19937_64& rng, const TimedAutomaton& automaton)
{
  ObservationConfig cfg;
  for (EventId e : automaton.events())
    if (coin(rng, 0.5))
      cfg.events.insert(e);
  return cfg;
}

ObservationSequence random_observation_sequence(std::mt19937_64& rng, std::size_t max_length)
{
  const bool clock_observed = coin(rng, 0.6);
  std::uniform_int_distribution<int> location(0, 2);
  auto random_state = [&](const std::optional<Rational>& clock) {
    int l = location(rng);
    ObservedState s;
    if (l < 2)
      s.location = LocationId{static_cast<std::uint32_t>(l)};
    s.valuation.push_back(clock_observed ? clock : std::nullopt);
    return s;
  };
  static const std::vector<Rational> delays = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};

  ObservationSequence seq{random_state(Rational(0)), {}};
  std::size_t length = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
  for (std::size_t i = 0; i < length; ++i) {
    const ObservedState& current = seq.state_at(i);
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (r < 0.5) {
      const Rational& d = pick(rng, delays);
      seq.steps.push_back({ObservedAction::delay(d), {current.location, elapse_observed(current.valuation, d)}});
    } else {
      std::optional<Rational> clock = current.valuation.front();
      if (clock && coin(rng, 0.5))
        clock = Rational(0);
      ObservedState next = (r < 0.8 && coin(rng, 0.6)) ? current : random_state(clock);
      seq.steps.push_back({r < 0.8 ? ObservedAction::silent() : ObservedAction::event(EventId{0}), next});
    }
  }
  return seq;
}

ObservationSequence random_normal_form(std::mt19937_64& rng, ObservationSequence sequence)
{
  for (;;) {
    auto redexes = find_redexes(sequence);
    if (redexes.empty())
      return sequence;
    sequence = apply_rewrite(std::move(sequence), pick(rng, redexes));
  }
}

Evolution random_fragmentation(std::mt19937_64& rng, const TimedAutomaton& automaton, const Evolution& evolution)
{
  std::vector<Action> actions;
  auto maybe_zero = [&] {
    if (coin(rng, 0.2))
      actions.push_back(Action::delay(0));
  };
  maybe_zero();
  for (const Step& s : evolution.steps) {
    if (s.action.is_delay() && s.action.amount() > 0 && coin(rng, 0.5)) {
      Rational first = s.action.amount() * Rational(std::uniform_int_distribution<int>(1, 4)(rng), 5);
      actions.push_back(Action::delay(first));
      maybe_zero();
      actions.push_back(Action::delay(s.action.amount() - first));
    } else {
      actions.push_back(s.action);
    }
    maybe_zero();
  }
  return replay(automaton, actions);
}

} // namespace tao::testing
