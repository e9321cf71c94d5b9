#include "tao/words.hpp"

#include "tao/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace tao {

std::strong_ordering operator<=>(const TimedLetter& a, const TimedLetter& b)
{
  if (auto c = a.event <=> b.event; c != 0)
    return c;
  return compare_rational(a.time, b.time);
}

TimedWord::TimedWord(std::vector<TimedLetter> letters) : letters_(std::move(letters))
{
  Rational previous = 0;
  for (const auto& l : letters_) {
    if (l.time < previous)
      throw std::invalid_argument("timed word timestamps must be non-negative and non-decreasing");
    previous = l.time;
  }
}

std::strong_ordering operator<=>(const TimedWord& a, const TimedWord& b)
{
  std::size_t n = std::min(a.letters_.size(), b.letters_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0)
      return c;
  return a.letters_.size() <=> b.letters_.size();
}

TimedLanguageSpec TimedLanguageSpec::finite(std::vector<TimedWord> words)
{
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  TimedLanguageSpec spec;
  spec.value_ = std::move(words);
  return spec;
}

TimedLanguageSpec TimedLanguageSpec::predicate(Predicate p)
{
  TimedLanguageSpec spec;
  spec.value_ = std::move(p);
  return spec;
}

TimedLanguageSpec TimedLanguageSpec::named(std::string_view name, std::vector<TimedWord> words,
                                           std::optional<EventId> event, std::size_t count)
{
  if (name == "word_in_list")
    return predicate(WordInList{std::move(words)});
  if (name == "word_prefix_of") {
    if (words.size() != 1)
      throw ConfigError("word_prefix_of takes exactly one timed word");
    return predicate(WordPrefixOf{std::move(words.front())});
  }
  if (name == "event_count_eq") {
    if (!event)
      throw ConfigError("event_count_eq needs an event");
    return predicate(EventCountEq{*event, count});
  }
  throw ConfigError("unknown language predicate '" + std::string(name) + "'");
}

namespace {

bool is_prefix(const TimedWord& prefix, const TimedWord& word)
{
  const auto& p = prefix.letters();
  const auto& w = word.letters();
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

bool TimedLanguageSpec::contains(const TimedWord& word) const
{
  if (is_finite())
    return std::binary_search(words().begin(), words().end(), word);
  return std::visit(
      overloaded{
          [&](const WordInList& p) {
            return std::find(p.words.begin(), p.words.end(), word) != p.words.end();
          },
          [&](const WordPrefixOf& p) { return is_prefix(word, p.word); },
          [&](const EventCountEq& p) {
            auto n = std::count_if(word.letters().begin(), word.letters().end(),
                                   [&](const TimedLetter& l) { return l.event == p.event; });
            return static_cast<std::size_t>(n) == p.count;
          },
      },
      predicate());
}

TimedWord to_timed_word(const Evolution& evolution)
{
  std::vector<TimedLetter> letters;
  Rational now = 0;
  for (const auto& step : evolution.steps) {
    if (step.action.is_delay())
      now += step.action.amount();
    else
      letters.push_back({step.action.event_id(), now});
  }
  return TimedWord(std::move(letters));
}

TimedWord to_timed_word(const ObservationSequence& sequence)
{
  std::vector<TimedLetter> letters;
  Rational now = 0;
  for (const auto& step : sequence.steps) {
    if (step.action.is_delay())
      now += step.action.amount();
    else if (step.action.is_event())
      letters.push_back({step.action.event_id(), now});
  }
  return TimedWord(std::move(letters));
}

TimedWord project_word(const TimedWord& word, const std::set<EventId>& observable_events)
{
  std::vector<TimedLetter> kept;
  for (const auto& l : word.letters())
    if (observable_events.contains(l.event))
      kept.push_back(l);
  return TimedWord(std::move(kept));
}

bool word_preimage_member(const Evolution& evolution, const TimedLanguageSpec& language)
{
  return language.contains(to_timed_word(evolution));
}

std::string format_word(const TimedAutomaton& automaton, const TimedWord& word)
{
  if (word.empty())
    return "ε";
  std::string out;
  for (const auto& l : word.letters())
    out += "(" + automaton.name(l.event) + "," + to_string(l.time) + ")";
  return out;
}

} // namespace tao
