#include "tao/opacity.hpp"

#include <algorithm>
#include <map>

namespace tao {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool trailing_delay_greater(const Evolution& rho, const TrailingDelayGreater& s)
{
  Rational trailing = 0;
  for (auto it = rho.steps.rbegin(); it != rho.steps.rend(); ++it) {
    if (it->action.is_event())
      return it->action.event_id() == s.after_event && trailing > s.threshold;
    trailing += it->action.amount();
  }
  return false;
}

} // namespace

bool SecretSpec::contains(const Evolution& evolution) const
{
  return std::visit(
      overloaded{
          [&](const LocationVisit& s) {
            for (std::size_t i = 0; i <= evolution.length(); ++i)
              if (evolution.state_at(i).location == s.location)
                return true;
            return false;
          },
          [&](const WordInLanguage& s) { return word_preimage_member(evolution, s.language); },
          [&](const TrailingDelayGreater& s) { return trailing_delay_greater(evolution, s); },
          [&](const PrivateRun& s) {
            return ends_at_first_final(evolution, s.spec.final_location) &&
                   is_private_run(normalize_run(evolution), s.spec);
          },
          [&](const ExplicitList& s) {
            return std::find(s.evolutions.begin(), s.evolutions.end(), evolution) != s.evolutions.end();
          },
      },
      value_);
}

std::string_view SecretSpec::kind_name() const
{
  return std::visit(overloaded{
                        [](const LocationVisit&) { return "location_visit"; },
                        [](const WordInLanguage&) { return "word_in_language"; },
                        [](const TrailingDelayGreater&) { return "trailing_delay_gt"; },
                        [](const PrivateRun&) { return "private_run"; },
                        [](const ExplicitList&) { return "explicit"; },
                    },
                    value_);
}

SecretSpec convert_lbto(TimedLanguageSpec secret_language)
{
  return SecretSpec(WordInLanguage{std::move(secret_language)});
}

SecretSpec convert_eto(const EtoSpec& spec) { return SecretSpec(PrivateRun{spec}); }

std::string_view to_string(Notion notion)
{
  switch (notion) {
  case Notion::Ebto: return "ebto";
  case Notion::Lbto: return "lbto";
  case Notion::Eto: return "eto";
  }
  return "?";
}

ClosureResult check_secret_closure(std::span<const Evolution> evolutions, const SecretSpec& secret)
{
  // canonical form -> (first member index, its secrecy)
  std::map<Evolution, std::pair<std::size_t, bool>> classes;
  for (std::size_t i = 0; i < evolutions.size(); ++i) {
    const Evolution& rho = evolutions[i];
    bool in_secret = secret.contains(rho);
    Evolution canonical = canonicalize_tau(rho);
    if (canonical != rho && secret.contains(canonical) != in_secret)
      return {false, std::pair{rho, canonical}};
    auto [it, inserted] = classes.try_emplace(std::move(canonical), i, in_secret);
    if (!inserted && it->second.second != in_secret)
      return {false, std::pair{evolutions[it->second.first], rho}};
  }
  return {};
}

RepresentabilityResult check_word_representable(std::span<const Evolution> evolutions,
                                                const SecretSpec& secret)
{
  struct Group {
    std::optional<std::size_t> secret;
    std::optional<std::size_t> other;
  };
  std::map<TimedWord, Group> groups;
  for (std::size_t i = 0; i < evolutions.size(); ++i) {
    auto& g = groups[to_timed_word(evolutions[i])];
    auto& slot = secret.contains(evolutions[i]) ? g.secret : g.other;
    if (!slot)
      slot = i;
  }
  for (const auto& [word, g] : groups)
    if (g.secret && g.other)
      return {false, std::pair{evolutions[*g.secret], evolutions[*g.other]}, word};
  return {};
}

namespace {

/// Shortest first, then set order.
void sort_witness_indices(std::vector<std::size_t>& indices, std::span<const Evolution> evolutions)
{
  std::stable_sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
    return evolutions[a].length() < evolutions[b].length();
  });
}

} // namespace

Verdict check_ebto(std::span<const Evolution> evolutions, const SecretSpec& secret,
                   const ObservationConfig& config)
{
  if (auto closure = check_secret_closure(evolutions, secret); !closure)
    throw IllFormedSecretError("secret set is not closed under delay fragmentation and zero delays",
                               closure.violation->first, closure.violation->second);

  struct Group {
    std::vector<std::size_t> secrets;
    std::vector<std::size_t> others;
  };
  std::map<CanonicalObservation, Group> groups;
  Verdict v;
  v.notion = Notion::Ebto;
  v.evolution_count = evolutions.size();
  for (std::size_t i = 0; i < evolutions.size(); ++i) {
    auto& g = groups[canonical_observation(evolutions[i], config)];
    if (secret.contains(evolutions[i])) {
      g.secrets.push_back(i);
      ++v.secret_count;
    } else {
      g.others.push_back(i);
    }
  }

  for (auto& [key, g] : groups) {
    if (g.secrets.empty())
      continue;
    if (g.others.empty()) {
      sort_witness_indices(g.secrets, evolutions);
      for (std::size_t i : g.secrets)
        v.witnesses.push_back(evolutions[i]);
    } else {
      for (std::size_t i : g.secrets)
        v.cover_map.push_back({i, g.others.front()});
    }
  }
  v.opaque = v.witnesses.empty();
  return v;
}

Verdict check_lbto(std::span<const Evolution> evolutions, const TimedLanguageSpec& secret_language,
                   const std::set<EventId>& observable_events)
{
  // generated word -> first evolution producing it
  std::map<TimedWord, std::size_t> generated;
  for (std::size_t i = 0; i < evolutions.size(); ++i)
    generated.try_emplace(to_timed_word(evolutions[i]), i);

  struct Group {
    std::vector<const TimedWord*> secrets;
    std::optional<std::size_t> partner;
  };
  std::map<TimedWord, Group> by_projection;
  Verdict v;
  v.notion = Notion::Lbto;
  v.evolution_count = evolutions.size();
  for (const auto& [word, index] : generated) {
    auto& g = by_projection[project_word(word, observable_events)];
    if (secret_language.contains(word)) {
      g.secrets.push_back(&word);
      ++v.secret_count;
    } else if (!g.partner) {
      g.partner = index;
    }
  }

  for (const auto& [projection, g] : by_projection) {
    for (const TimedWord* w : g.secrets) {
      if (g.partner) {
        v.cover_map.push_back({generated.at(*w), *g.partner});
      } else {
        v.witnesses.push_back(evolutions[generated.at(*w)]);
        v.witness_words.push_back(*w);
      }
    }
  }
  v.opaque = v.witnesses.empty();
  return v;
}

Verdict check_eto(std::span<const Evolution> evolutions, const EtoSpec& spec)
{
  // duration -> first evolution with that duration
  std::map<Rational, std::size_t> private_runs;
  std::map<Rational, std::size_t> public_runs;
  Verdict v;
  v.notion = Notion::Eto;
  v.evolution_count = evolutions.size();
  for (std::size_t i = 0; i < evolutions.size(); ++i) {
    if (!ends_at_first_final(evolutions[i], spec.final_location))
      continue;
    Run run = normalize_run(evolutions[i]);
    if (is_private_run(run, spec)) {
      private_runs.try_emplace(run_duration(run), i);
      ++v.secret_count;
    } else if (is_public_run(run, spec)) {
      public_runs.try_emplace(run_duration(run), i);
    }
  }

  EtoDurations d;
  for (const auto& [duration, index] : private_runs) {
    d.private_durations.push_back(duration);
    if (auto it = public_runs.find(duration); it != public_runs.end()) {
      v.cover_map.push_back({index, it->second});
    } else {
      v.witnesses.push_back(evolutions[index]);
      v.witness_durations.push_back(duration);
    }
  }
  for (const auto& [duration, index] : public_runs)
    d.public_durations.push_back(duration);
  v.durations = std::move(d);
  v.opaque = v.witnesses.empty();
  return v;
}

Verdict check_ebto(const TimedAutomaton& automaton, const EnumerationBudget& budget,
                   const SecretSpec& secret, const ObservationConfig& config)
{
  config.validate(automaton);
  auto evolutions = enumerate_evolutions(automaton, budget);
  Verdict v = check_ebto(evolutions, secret, config);
  v.budget = budget;
  return v;
}

Verdict check_lbto(const TimedAutomaton& automaton, const EnumerationBudget& budget,
                   const TimedLanguageSpec& secret_language, const std::set<EventId>& observable_events)
{
  auto evolutions = enumerate_evolutions(automaton, budget);
  Verdict v = check_lbto(evolutions, secret_language, observable_events);
  v.budget = budget;
  return v;
}

Verdict check_eto(const TimedAutomaton& automaton, const EnumerationBudget& budget, const EtoSpec& spec)
{
  auto evolutions = enumerate_evolutions(automaton, budget);
  Verdict v = check_eto(evolutions, spec);
  v.budget = budget;
  return v;
}

} // namespace tao
