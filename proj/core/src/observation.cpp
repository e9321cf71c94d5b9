#include "tao/observation.hpp"

#include "tao/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace tao {

void ObservationConfig::validate(const TimedAutomaton& automaton) const
{
  for (LocationId l : locations)
    if (l.index >= automaton.location_count())
      throw ConfigError("observable location #" + std::to_string(l.index) + " is not declared");
  for (ClockId c : clocks)
    if (c.index >= automaton.clock_count())
      throw ConfigError("observable clock #" + std::to_string(c.index) + " is not declared");
  for (EventId e : events)
    if (e.index >= automaton.event_count())
      throw ConfigError("observable event #" + std::to_string(e.index) + " is not declared");
}

ObservationConfig ObservationConfig::everything(const TimedAutomaton& automaton)
{
  ObservationConfig cfg;
  for (auto l : automaton.locations())
    cfg.locations.insert(l);
  for (auto c : automaton.clocks())
    cfg.clocks.insert(c);
  for (auto e : automaton.events())
    cfg.events.insert(e);
  return cfg;
}

namespace {

// Masked values order after concrete ones.
template <typename T, typename Cmp>
std::strong_ordering compare_optional(const std::optional<T>& a, const std::optional<T>& b, Cmp cmp)
{
  if (a.has_value() != b.has_value())
    return a.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (!a)
    return std::strong_ordering::equal;
  return cmp(*a, *b);
}

} // namespace

std::strong_ordering operator<=>(const ObservedState& a, const ObservedState& b)
{
  auto by_id = [](LocationId x, LocationId y) { return x <=> y; };
  if (auto c = compare_optional(a.location, b.location, by_id); c != 0)
    return c;
  if (auto c = a.valuation.size() <=> b.valuation.size(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.valuation.size(); ++i)
    if (auto c = compare_optional(a.valuation[i], b.valuation[i], compare_rational); c != 0)
      return c;
  return std::strong_ordering::equal;
}

ObservedAction ObservedAction::delay(Rational amount)
{
  if (amount < 0)
    throw std::invalid_argument("negative delay " + to_string(amount));
  return ObservedAction(Kind::Delay, {}, std::move(amount));
}

std::strong_ordering operator<=>(const ObservedAction& a, const ObservedAction& b)
{
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0)
    return c;
  switch (a.kind_) {
  case ObservedAction::Kind::Delay: return compare_rational(a.amount_, b.amount_);
  case ObservedAction::Kind::Event: return a.event_ <=> b.event_;
  case ObservedAction::Kind::Silent: return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ObservationSequence& a, const ObservationSequence& b)
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

ObservedState observe_state(const State& state, const ObservationConfig& config)
{
  ObservedState o;
  if (config.observes(state.location))
    o.location = state.location;
  const auto& values = state.valuation.values();
  o.valuation.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (config.observes(ClockId{static_cast<std::uint32_t>(i)}))
      o.valuation.emplace_back(values[i]);
    else
      o.valuation.emplace_back(std::nullopt);
  }
  return o;
}

ObservedAction observe_action(const Action& action, const ObservationConfig& config)
{
  if (action.is_delay())
    return ObservedAction::delay(action.amount());
  if (config.observes(action.event_id()))
    return ObservedAction::event(action.event_id());
  return ObservedAction::silent();
}

ObservationSequence observe_evolution(const Evolution& evolution, const ObservationConfig& config)
{
  ObservationSequence o{observe_state(evolution.initial, config), {}};
  o.steps.reserve(evolution.steps.size());
  for (const auto& step : evolution.steps)
    o.steps.push_back(ObservedStep{observe_action(step.action, config), observe_state(step.state, config)});
  return o;
}

std::vector<std::optional<Rational>> elapse_observed(const std::vector<std::optional<Rational>>& valuation,
                                                     const Rational& delay)
{
  if (delay < 0)
    throw std::invalid_argument("negative delay " + to_string(delay));
  auto out = valuation;
  for (auto& v : out)
    if (v)
      *v += delay;
  return out;
}

// ---------------------------------------------------------------------------
// Rewrites. The same three rules serve observed sequences and (minus the
// silent rule) concrete evolutions; the helpers below abstract the difference.

namespace {

bool is_zero_delay(const ObservedAction& a) { return a.is_delay() && a.amount() == 0; }
bool is_zero_delay(const Action& a) { return a.is_delay() && a.amount() == 0; }

bool elapses_to(const ObservedState& from, const Rational& delay, const ObservedState& to)
{
  return from.location == to.location && elapse_observed(from.valuation, delay) == to.valuation;
}

bool elapses_to(const State& from, const Rational& delay, const State& to)
{
  return from.location == to.location && elapse(from.valuation, delay) == to.valuation;
}

template <typename Seq>
const auto& state_before(const Seq& seq, std::size_t step)
{
  return step == 0 ? seq.initial : seq.steps[step - 1].state;
}

template <typename Seq>
bool zero_applies(const Seq& seq, std::size_t i)
{
  return is_zero_delay(seq.steps[i].action) && seq.steps[i].state == state_before(seq, i);
}

template <typename Seq>
bool merge_applies(const Seq& seq, std::size_t i)
{
  if (i + 1 >= seq.steps.size())
    return false;
  const auto& a = seq.steps[i];
  const auto& b = seq.steps[i + 1];
  if (!a.action.is_delay() || !b.action.is_delay())
    return false;
  return elapses_to(state_before(seq, i), a.action.amount(), a.state) &&
         elapses_to(a.state, b.action.amount(), b.state);
}

bool silent_applies(const ObservationSequence& seq, std::size_t i)
{
  return seq.steps[i].action.is_silent() && seq.steps[i].state == state_before(seq, i);
}

void merge_at(ObservationSequence& seq, std::size_t i)
{
  Rational total = seq.steps[i].action.amount() + seq.steps[i + 1].action.amount();
  seq.steps[i + 1].action = ObservedAction::delay(std::move(total));
  seq.steps.erase(seq.steps.begin() + static_cast<std::ptrdiff_t>(i));
}

void merge_at(Evolution& seq, std::size_t i)
{
  Rational total = seq.steps[i].action.amount() + seq.steps[i + 1].action.amount();
  seq.steps[i + 1].action = Action::delay(std::move(total));
  seq.steps.erase(seq.steps.begin() + static_cast<std::ptrdiff_t>(i));
}

template <typename Seq>
void erase_step(Seq& seq, std::size_t i)
{
  seq.steps.erase(seq.steps.begin() + static_cast<std::ptrdiff_t>(i));
}

/// Leftmost-first fixpoint. Every rewrite removes one step, so at most
/// length() rounds happen; after a rewrite at i only positions ≥ i-1 can
/// have gained a redex, so scanning resumes there.
template <typename Seq, typename Silent>
void normalize(Seq& seq, Silent silent)
{
  std::size_t i = 0;
  while (i < seq.steps.size()) {
    if (silent(seq, i) || zero_applies(seq, i)) {
      erase_step(seq, i);
      i = i > 0 ? i - 1 : 0;
    } else if (merge_applies(seq, i)) {
      merge_at(seq, i);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
}

} // namespace

std::vector<Redex> find_redexes(const ObservationSequence& sequence)
{
  std::vector<Redex> out;
  for (std::size_t i = 0; i < sequence.steps.size(); ++i) {
    if (silent_applies(sequence, i))
      out.push_back({RewriteKind::RemoveSilent, i});
    if (merge_applies(sequence, i))
      out.push_back({RewriteKind::MergeDelays, i});
    if (zero_applies(sequence, i))
      out.push_back({RewriteKind::RemoveZero, i});
  }
  return out;
}

ObservationSequence apply_rewrite(ObservationSequence sequence, const Redex& redex)
{
  if (redex.step >= sequence.steps.size())
    throw std::invalid_argument("rewrite position out of range");
  switch (redex.kind) {
  case RewriteKind::RemoveSilent:
    if (!silent_applies(sequence, redex.step))
      throw std::invalid_argument("silent-step rewrite does not apply");
    erase_step(sequence, redex.step);
    break;
  case RewriteKind::RemoveZero:
    if (!zero_applies(sequence, redex.step))
      throw std::invalid_argument("zero-delay rewrite does not apply");
    erase_step(sequence, redex.step);
    break;
  case RewriteKind::MergeDelays:
    if (!merge_applies(sequence, redex.step))
      throw std::invalid_argument("delay-merge rewrite does not apply");
    merge_at(sequence, redex.step);
    break;
  }
  return sequence;
}

CanonicalObservation canonicalize(ObservationSequence sequence)
{
  normalize(sequence, silent_applies);
  return CanonicalObservation(std::move(sequence));
}

Evolution canonicalize_tau(const Evolution& evolution)
{
  Evolution out = evolution;
  normalize(out, [](const Evolution&, std::size_t) { return false; });
  return out;
}

bool obs_equivalent(const Evolution& a, const Evolution& b, const ObservationConfig& config)
{
  return canonical_observation(a, config) == canonical_observation(b, config);
}

Rational observed_duration(const ObservationSequence& sequence)
{
  Rational total = 0;
  for (const auto& step : sequence.steps)
    if (step.action.is_delay())
      total += step.action.amount();
  return total;
}

std::string format_observed_state(const TimedAutomaton& automaton, const ObservedState& state)
{
  std::ostringstream out;
  out << "(" << (state.location ? automaton.name(*state.location) : std::string("ε")) << ", {";
  for (std::size_t i = 0; i < state.valuation.size(); ++i) {
    if (i > 0)
      out << ", ";
    out << automaton.name(ClockId{static_cast<std::uint32_t>(i)}) << ": "
        << (state.valuation[i] ? to_string(*state.valuation[i]) : std::string("ε"));
  }
  out << "})";
  return out.str();
}

std::string format_observation(const TimedAutomaton& automaton, const ObservationSequence& sequence)
{
  std::string out = format_observed_state(automaton, sequence.initial);
  for (const auto& step : sequence.steps) {
    std::string label;
    switch (step.action.kind()) {
    case ObservedAction::Kind::Delay: label = to_string(step.action.amount()); break;
    case ObservedAction::Kind::Event: label = automaton.name(step.action.event_id()); break;
    case ObservedAction::Kind::Silent: label = "ε"; break;
    }
    out += " --" + label + "--> " + format_observed_state(automaton, step.state);
  }
  return out;
}

} // namespace tao
