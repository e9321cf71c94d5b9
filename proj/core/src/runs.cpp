#include "tao/runs.hpp"

#include "tao/observation.hpp"

namespace tao {

Run normalize_run(const Evolution& evolution)
{
  Run run{evolution.initial, {}};
  Rational pending = 0;
  for (const auto& step : evolution.steps) {
    if (step.action.is_delay()) {
      pending += step.action.amount();
    } else {
      run.steps.push_back(RunStep{pending, step.action.event_id(), step.state});
      pending = 0;
    }
  }
  return run;
}

Rational run_duration(const Run& run)
{
  Rational total = 0;
  for (const auto& step : run.steps)
    total += step.delay;
  return total;
}

namespace {

bool first_final_at_end(const Run& run, LocationId final_location)
{
  if (run.last().location != final_location)
    return false;
  if (run.initial.location == final_location && !run.steps.empty())
    return false;
  for (std::size_t i = 0; i + 1 < run.steps.size(); ++i)
    if (run.steps[i].state.location == final_location)
      return false;
  return true;
}

} // namespace

bool ends_at_first_final(const Evolution& evolution, LocationId final_location)
{
  Evolution canonical = canonicalize_tau(evolution);
  if (canonical.steps.empty() || !canonical.steps.back().action.is_event())
    return false;
  if (canonical.last().location != final_location)
    return false;
  for (std::size_t i = 0; i < canonical.length(); ++i)
    if (canonical.state_at(i).location == final_location)
      return false;
  return true;
}

bool is_private_run(const Run& run, const EtoSpec& spec)
{
  if (!first_final_at_end(run, spec.final_location))
    return false;
  if (run.initial.location == spec.private_location)
    return true;
  for (const auto& step : run.steps)
    if (step.state.location == spec.private_location)
      return true;
  return false;
}

bool is_public_run(const Run& run, const EtoSpec& spec)
{
  if (!first_final_at_end(run, spec.final_location))
    return false;
  if (run.initial.location == spec.private_location)
    return false;
  for (const auto& step : run.steps)
    if (step.state.location == spec.private_location)
      return false;
  return true;
}

std::string format_run(const TimedAutomaton& automaton, const Run& run)
{
  std::string out = format_state(automaton, run.initial);
  for (const auto& step : run.steps)
    out += ", (" + to_string(step.delay) + ", " + automaton.name(step.event) + "), " +
           format_state(automaton, step.state);
  return out;
}

} // namespace tao
