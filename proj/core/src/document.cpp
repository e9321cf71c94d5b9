#include "tao/document.hpp"

#include "tao/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tao {

std::string_view to_string(CheckKind kind)
{
  switch (kind) {
  case CheckKind::Ebto: return "ebto";
  case CheckKind::Lbto: return "lbto";
  case CheckKind::Eto: return "eto";
  case CheckKind::Representable: return "representable";
  case CheckKind::Closure: return "closure";
  }
  return "?";
}

namespace {

template <class Named>
const Named& lookup(const std::vector<Named>& items, std::string_view name, std::string_view what)
{
  auto it = std::find_if(items.begin(), items.end(), [&](const Named& n) { return n.name == name; });
  if (it == items.end())
    throw ConfigError("no " + std::string(what) + " named '" + std::string(name) + "'");
  return *it;
}

template <class Range, class Fn>
std::string join(const Range& range, Fn&& fn, std::string_view sep = ", ")
{
  std::string out;
  bool first = true;
  for (const auto& item : range) {
    if (!first)
      out += sep;
    out += fn(item);
    first = false;
  }
  return out;
}

std::string word_text(const TimedAutomaton& a, const TimedWord& word)
{
  if (word.empty())
    return "eps";
  std::string out;
  for (const auto& l : word.letters())
    out += "(" + a.name(l.event) + "," + to_string(l.time) + ")";
  return out;
}

std::string secret_text(const TimedAutomaton& a, const SecretSpec& secret)
{
  auto words = [&](const std::vector<TimedWord>& ws) {
    return join(ws, [&](const TimedWord& w) { return word_text(a, w); });
  };
  if (secret.is<LocationVisit>())
    return "location_visit(" + a.name(secret.as<LocationVisit>().location) + ")";
  if (secret.is<TrailingDelayGreater>()) {
    const auto& s = secret.as<TrailingDelayGreater>();
    return "trailing_delay_gt(" + to_string(s.threshold) + ", after " + a.name(s.after_event) + ")";
  }
  if (secret.is<PrivateRun>()) {
    const auto& s = secret.as<PrivateRun>().spec;
    return "private_run(" + a.name(s.private_location) + ", " + a.name(s.final_location) + ")";
  }
  if (secret.is<ExplicitList>()) {
    const auto& list = secret.as<ExplicitList>().evolutions;
    return "explicit(" + join(list, [&](const Evolution& e) { return format_action_list(a, e); }) + ")";
  }
  const auto& lang = secret.as<WordInLanguage>().language;
  if (lang.is_finite())
    return "words(" + words(lang.words()) + ")";
  const auto& p = lang.predicate();
  if (const auto* list = std::get_if<WordInList>(&p))
    return "word_in_list(" + words(list->words) + ")";
  if (const auto* prefix = std::get_if<WordPrefixOf>(&p))
    return "word_prefix_of(" + word_text(a, prefix->word) + ")";
  const auto& count = std::get<EventCountEq>(p);
  return "event_count_eq(" + a.name(count.event) + ", " + std::to_string(count.count) + ")";
}

} // namespace

const ObservationConfig& ModelDocument::observation(std::string_view name) const
{
  return lookup(observations, name, "observation config").config;
}

const SecretSpec& ModelDocument::secret(std::string_view name) const
{
  return lookup(secrets, name, "secret").secret;
}

const EnumerationBudget& ModelDocument::budget(std::string_view name) const
{
  return lookup(budgets, name, "budget").budget;
}

std::string check_call_text(const CheckRequest& check)
{
  std::string out = std::string(to_string(check.kind)) + "(" + check.secret + ", ";
  if (check.observation)
    out += *check.observation + ", ";
  return out + check.budget + ")";
}

std::string format_action_list(const TimedAutomaton& automaton, const Evolution& evolution)
{
  return "[" +
         join(evolution.steps,
              [&](const Step& s) {
                return s.action.is_delay() ? to_string(s.action.amount()) : automaton.name(s.action.event_id());
              }) +
         "]";
}

std::string serialize_model(const ModelDocument& doc)
{
  const TimedAutomaton& a = doc.automaton;
  std::ostringstream out;
  auto name_of = [&](auto id) { return a.name(id); };

  if (a.clock_count() > 0)
    out << "clocks " << join(a.clocks(), name_of) << ";\n";
  if (a.event_count() > 0)
    out << "events " << join(a.events(), name_of) << ";\n";
  for (LocationId l : a.locations()) {
    out << "location " << a.name(l);
    if (l == a.initial())
      out << " init";
    if (a.invariant(l).kind() != ClockConstraint::Kind::True)
      out << " invariant " << format_constraint(a, a.invariant(l));
    out << ";\n";
  }
  for (const Edge& e : a.edges()) {
    out << "edge " << a.name(e.source) << " -> " << a.name(e.target) << " on " << a.name(e.event);
    if (e.guard.kind() != ClockConstraint::Kind::True)
      out << " when " << format_constraint(a, e.guard);
    if (!e.resets.empty())
      out << " reset " << join(e.resets, name_of);
    out << ";\n";
  }

  for (const auto& [name, cfg] : doc.observations)
    out << "obs " << name << " { locations: " << join(cfg.locations, name_of)
        << "; clocks: " << join(cfg.clocks, name_of) << "; events: " << join(cfg.events, name_of) << "; }\n";
  for (const auto& [name, secret] : doc.secrets)
    out << "secret " << name << " = " << secret_text(a, secret) << ";\n";
  for (const auto& [name, b] : doc.budgets)
    out << "budget " << name << " { steps: " << b.max_steps
        << "; grid: " << join(b.delay_grid, [](const Rational& r) { return to_string(r); })
        << "; zero_delay: " << (b.include_zero_delay ? "true" : "false")
        << "; consecutive_delays: " << (b.consecutive_delays ? "true" : "false") << "; }\n";
  for (const auto& check : doc.checks) {
    out << "check ";
    if (check.explicit_name)
      out << check.name << " = ";
    out << check_call_text(check) << ";\n";
  }
  return out.str();
}

} // namespace tao
