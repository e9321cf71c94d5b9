#include "tao/semantics.hpp"

#include "tao/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tao {

Action Action::delay(Rational amount)
{
  if (amount < 0)
    throw std::invalid_argument("negative delay " + to_string(amount));
  return Action(std::move(amount));
}

std::strong_ordering operator<=>(const Action& a, const Action& b)
{
  if (a.is_delay() != b.is_delay())
    return a.is_delay() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_delay())
    return compare_rational(a.amount(), b.amount());
  return a.event_id() <=> b.event_id();
}

std::strong_ordering operator<=>(const Evolution& a, const Evolution& b)
{
  if (auto c = a.initial <=> b.initial; c != 0)
    return c;
  std::size_t n = std::min(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.steps[i].action <=> b.steps[i].action; c != 0)
      return c;
    if (auto c = a.steps[i].state <=> b.steps[i].state; c != 0)
      return c;
  }
  return a.steps.size() <=> b.steps.size();
}

void EnumerationBudget::validate()
{
  if (delay_grid.empty())
    throw std::invalid_argument("delay grid must not be empty");
  for (const auto& d : delay_grid)
    if (d <= 0)
      throw std::invalid_argument("delay grid values must be positive, got " + to_string(d));
  std::sort(delay_grid.begin(), delay_grid.end());
  delay_grid.erase(std::unique(delay_grid.begin(), delay_grid.end()), delay_grid.end());
}

State initial_state(const TimedAutomaton& automaton)
{
  State s{automaton.initial(), ClockValuation::zero(automaton.clock_count())};
  if (!evaluate(automaton.invariant(s.location), s.valuation))
    throw UndefinedSemanticsError("the zero valuation violates the invariant of initial location " +
                                  automaton.name(s.location) + "; the semantic graph is undefined");
  return s;
}

bool is_valid_state(const TimedAutomaton& automaton, const State& state)
{
  return state.location.index < automaton.location_count() &&
         state.valuation.size() == automaton.clock_count() &&
         evaluate(automaton.invariant(state.location), state.valuation);
}

std::vector<State> event_successors(const TimedAutomaton& automaton, const State& state, EventId event)
{
  std::vector<State> result;
  if (!evaluate(automaton.invariant(state.location), state.valuation))
    return result;
  for (std::size_t index : automaton.outgoing(state.location)) {
    const Edge& e = automaton.edges()[index];
    if (e.event != event || !evaluate(e.guard, state.valuation))
      continue;
    State next{e.target, reset(state.valuation, e.resets)};
    if (!evaluate(automaton.invariant(e.target), next.valuation))
      continue;
    if (std::find(result.begin(), result.end(), next) == result.end())
      result.push_back(std::move(next));
  }
  return result;
}

std::optional<State> event_successor(const TimedAutomaton& automaton, const State& state, EventId event)
{
  auto all = event_successors(automaton, state, event);
  if (all.empty())
    return std::nullopt;
  if (all.size() > 1)
    throw DeterminismError("event " + automaton.name(event) + " has " + std::to_string(all.size()) +
                           " distinct successors from state " + format_state(automaton, state));
  return std::move(all.front());
}

std::optional<State> time_successor(const TimedAutomaton& automaton, const State& state,
                                    const Rational& delay)
{
  const auto& inv = automaton.invariant(state.location);
  if (!evaluate(inv, state.valuation))
    return std::nullopt;
  State next{state.location, elapse(state.valuation, delay)};
  if (!evaluate(inv, next.valuation))
    return std::nullopt;
  return next;
}

ValidationResult validate_evolution(const TimedAutomaton& automaton, const Evolution& evolution,
                                    bool require_generated)
{
  if (!is_valid_state(automaton, evolution.initial))
    return {false, std::nullopt, "initial state violates its location invariant"};
  if (require_generated) {
    State expected{automaton.initial(), ClockValuation::zero(automaton.clock_count())};
    if (evolution.initial != expected)
      return {false, std::nullopt, "evolution does not start at the initial state"};
  }

  const State* current = &evolution.initial;
  for (std::size_t i = 0; i < evolution.steps.size(); ++i) {
    const Step& step = evolution.steps[i];
    bool ok = false;
    if (step.action.is_delay()) {
      auto next = time_successor(automaton, *current, step.action.amount());
      ok = next && *next == step.state;
    } else {
      auto next = event_successors(automaton, *current, step.action.event_id());
      ok = std::find(next.begin(), next.end(), step.state) != next.end();
    }
    if (!ok)
      return {false, i, "step " + std::to_string(i) + " (" + format_action(automaton, step.action) +
                            ") is not a transition"};
    current = &step.state;
  }
  return {};
}

Rational duration(const Evolution& evolution)
{
  Rational total = 0;
  for (const auto& step : evolution.steps)
    if (step.action.is_delay())
      total += step.action.amount();
  return total;
}

Evolution replay(const TimedAutomaton& automaton, const std::vector<Action>& actions)
{
  Evolution rho{initial_state(automaton), {}};
  for (const auto& action : actions) {
    std::optional<State> next;
    if (action.is_delay())
      next = time_successor(automaton, rho.last(), action.amount());
    else
      next = event_successor(automaton, rho.last(), action.event_id());
    if (!next)
      throw ModelError("action " + format_action(automaton, action) + " is not enabled at " +
                       format_state(automaton, rho.last()));
    rho.steps.push_back(Step{action, std::move(*next)});
  }
  return rho;
}

namespace {

std::vector<Action> candidate_actions(const TimedAutomaton& automaton,
                                      const EnumerationBudget& budget)
{
  std::vector<Action> actions;
  if (budget.include_zero_delay)
    actions.push_back(Action::delay(0));
  for (const auto& d : budget.delay_grid)
    actions.push_back(Action::delay(d));
  for (EventId e : automaton.events())
    actions.push_back(Action::event(e));
  return actions;
}

class Enumerator {
public:
  Enumerator(const TimedAutomaton& automaton, const EnumerationBudget& budget)
      : automaton_(automaton), budget_(budget), actions_(candidate_actions(automaton, budget))
  {}

  std::vector<Evolution> run()
  {
    Evolution current{initial_state(automaton_), {}};
    visit(current);
    return std::move(out_);
  }

private:
  void visit(Evolution& current)
  {
    out_.push_back(current);
    if (current.length() >= budget_.max_steps)
      return;
    bool after_delay = !current.steps.empty() && current.steps.back().action.is_delay();
    for (const auto& action : actions_) {
      std::optional<State> next;
      if (action.is_delay()) {
        if (after_delay && !budget_.consecutive_delays)
          continue;
        next = time_successor(automaton_, current.last(), action.amount());
      } else {
        next = event_successor(automaton_, current.last(), action.event_id());
      }
      if (!next)
        continue;
      current.steps.push_back(Step{action, std::move(*next)});
      visit(current);
      current.steps.pop_back();
    }
  }

  const TimedAutomaton& automaton_;
  const EnumerationBudget& budget_;
  std::vector<Action> actions_;
  std::vector<Evolution> out_;
};

} // namespace

std::vector<Evolution> enumerate_evolutions(const TimedAutomaton& automaton, EnumerationBudget budget)
{
  budget.validate();
  // Determinism makes distinct action sequences yield distinct evolutions, so
  // the DFS output is already free of duplicates.
  return Enumerator(automaton, budget).run();
}

bool check_determinism(const TimedAutomaton& automaton, EnumerationBudget budget)
{
  budget.validate();
  auto actions = candidate_actions(automaton, budget);

  std::set<State> seen;
  std::deque<std::pair<State, std::size_t>> frontier;
  State init = initial_state(automaton);
  seen.insert(init);
  frontier.emplace_back(init, 0);

  while (!frontier.empty()) {
    auto [state, depth] = std::move(frontier.front());
    frontier.pop_front();
    for (EventId e : automaton.events())
      if (event_successors(automaton, state, e).size() > 1)
        return false;
    if (depth >= budget.max_steps)
      continue;
    for (const auto& action : actions) {
      std::vector<State> next;
      if (action.is_delay()) {
        if (auto s = time_successor(automaton, state, action.amount()))
          next.push_back(std::move(*s));
      } else {
        next = event_successors(automaton, state, action.event_id());
      }
      for (auto& s : next)
        if (seen.insert(s).second)
          frontier.emplace_back(std::move(s), depth + 1);
    }
  }
  return true;
}

std::string format_action(const TimedAutomaton& automaton, const Action& action)
{
  return action.is_delay() ? to_string(action.amount()) : automaton.name(action.event_id());
}

std::string format_evolution(const TimedAutomaton& automaton, const Evolution& evolution)
{
  std::string out = format_state(automaton, evolution.initial);
  for (const auto& step : evolution.steps)
    out += " --" + format_action(automaton, step.action) + "--> " + format_state(automaton, step.state);
  return out;
}

} // namespace tao
