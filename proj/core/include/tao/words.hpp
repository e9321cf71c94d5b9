#pragma once

#include "tao/observation.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tao {

struct TimedLetter {
  EventId event;
  Rational time;

  friend bool operator==(const TimedLetter&, const TimedLetter&) = default;
  friend std::strong_ordering operator<=>(const TimedLetter& a, const TimedLetter& b);
};

/// (σ₁, t₁)…(σₙ, tₙ) with 0 ≤ t₁ ≤ … ≤ tₙ.
class TimedWord {
public:
  TimedWord() = default;
  /// Throws std::invalid_argument if timestamps are negative or decreasing.
  explicit TimedWord(std::vector<TimedLetter> letters);

  const std::vector<TimedLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const TimedWord&, const TimedWord&) = default;
  /// Lexicographic; a proper prefix orders first.
  friend std::strong_ordering operator<=>(const TimedWord& a, const TimedWord& b);

private:
  std::vector<TimedLetter> letters_;
};

/// Built-in language predicates.
struct WordInList {
  std::vector<TimedWord> words;
  friend bool operator==(const WordInList&, const WordInList&) = default;
};

/// ω is a (non-strict) prefix of `word`.
struct WordPrefixOf {
  TimedWord word;
  friend bool operator==(const WordPrefixOf&, const WordPrefixOf&) = default;
};

/// ω contains exactly `count` occurrences of `event`.
struct EventCountEq {
  EventId event;
  std::size_t count = 0;
  friend bool operator==(const EventCountEq&, const EventCountEq&) = default;
};

/// A timed language, given either as a finite list or a named predicate.
class TimedLanguageSpec {
public:
  using Predicate = std::variant<WordInList, WordPrefixOf, EventCountEq>;

  TimedLanguageSpec() = default;
  static TimedLanguageSpec finite(std::vector<TimedWord> words);
  static TimedLanguageSpec predicate(Predicate p);

  /// Resolves a predicate by name (`word_in_list`, `word_prefix_of`,
  /// `event_count_eq`). Throws ConfigError for unknown names or bad arguments.
  static TimedLanguageSpec named(std::string_view name, std::vector<TimedWord> words,
                                 std::optional<EventId> event = std::nullopt, std::size_t count = 0);

  bool is_finite() const noexcept { return std::holds_alternative<std::vector<TimedWord>>(value_); }
  const std::vector<TimedWord>& words() const { return std::get<std::vector<TimedWord>>(value_); }
  const Predicate& predicate() const { return std::get<Predicate>(value_); }

  bool contains(const TimedWord& word) const;

  friend bool operator==(const TimedLanguageSpec&, const TimedLanguageSpec&) = default;

private:
  std::variant<std::vector<TimedWord>, Predicate> value_;
};

/// Y(ρ): each event paired with the total delay before it; trailing delays are dropped.
TimedWord to_timed_word(const Evolution& evolution);

/// Y on an observation sequence; σ_ε is not an event and is skipped.
TimedWord to_timed_word(const ObservationSequence& sequence);

/// P_Σobs: keeps the letters whose event is observable.
TimedWord project_word(const TimedWord& word, const std::set<EventId>& observable_events);

/// ρ ∈ Y⁻¹(L).
bool word_preimage_member(const Evolution& evolution, const TimedLanguageSpec& language);

/// `(a,1)(b,100)`; the empty word renders as `ε`.
std::string format_word(const TimedAutomaton& automaton, const TimedWord& word);

} // namespace tao
