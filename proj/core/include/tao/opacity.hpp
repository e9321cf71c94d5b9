#pragma once

#include "tao/errors.hpp"
#include "tao/observation.hpp"
#include "tao/runs.hpp"
#include "tao/words.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tao {

// ---------------------------------------------------------------------------
// Secrets

/// Evolutions that pass through `location` at some state.
struct LocationVisit {
  LocationId location;
  friend bool operator==(const LocationVisit&, const LocationVisit&) = default;
};

/// Y⁻¹(L): evolutions whose timed word lies in the language.
struct WordInLanguage {
  TimedLanguageSpec language;
  friend bool operator==(const WordInLanguage&, const WordInLanguage&) = default;
};

/// Evolutions whose last event is `after_event` and whose delays after it
/// sum to more than `threshold`.
struct TrailingDelayGreater {
  Rational threshold;
  EventId after_event;
  friend bool operator==(const TrailingDelayGreater&, const TrailingDelayGreater&) = default;
};

/// Evolutions in Gen_{l_f} whose normalized run is private.
struct PrivateRun {
  EtoSpec spec;
  friend bool operator==(const PrivateRun&, const PrivateRun&) = default;
};

/// Exact structural membership in a finite list.
struct ExplicitList {
  std::vector<Evolution> evolutions;
  friend bool operator==(const ExplicitList&, const ExplicitList&) = default;
};

class SecretSpec {
public:
  using Variant = std::variant<LocationVisit, WordInLanguage, TrailingDelayGreater, PrivateRun, ExplicitList>;

  SecretSpec(Variant value) : value_(std::move(value)) {}

  const Variant& value() const noexcept { return value_; }
  template <typename T>
  bool is() const noexcept { return std::holds_alternative<T>(value_); }
  template <typename T>
  const T& as() const { return std::get<T>(value_); }

  /// Whether ρ belongs to the secret set.
  bool contains(const Evolution& evolution) const;

  /// `location_visit`, `word_in_language`, ...
  std::string_view kind_name() const;

  friend bool operator==(const SecretSpec&, const SecretSpec&) = default;

private:
  Variant value_;
};

/// C_LE: the secret set is the exact preimage Y⁻¹(L_s).
SecretSpec convert_lbto(TimedLanguageSpec secret_language);

/// C_ExE: evolutions ending at the first l_f whose run visits l_priv.
SecretSpec convert_eto(const EtoSpec& spec);

class IllFormedSecretError : public Error {
public:
  IllFormedSecretError(const std::string& message, Evolution first, Evolution second)
      : Error(message), first_(std::move(first)), second_(std::move(second))
  {}

  const Evolution& first() const noexcept { return first_; }
  const Evolution& second() const noexcept { return second_; }

private:
  Evolution first_;
  Evolution second_;
};

struct ClosureResult {
  bool closed = true;
  /// (ρ, ρ') with ρ ≡_τ ρ' but differing secrecy; the first is secret-or-not as found.
  std::optional<std::pair<Evolution, Evolution>> violation;

  explicit operator bool() const noexcept { return closed; }
};

/// Checks that secrecy is invariant under ≡_τ on the given set: each ρ agrees
/// with canonicalize_tau(ρ), and members of the set with equal ≡_τ-canonical
/// forms agree with each other.
ClosureResult check_secret_closure(std::span<const Evolution> evolutions, const SecretSpec& secret);

struct RepresentabilityResult {
  bool representable = true;
  /// A (secret, non-secret) pair sharing one timed word.
  std::optional<std::pair<Evolution, Evolution>> counter_pair;
  std::optional<TimedWord> shared_word;

  explicit operator bool() const noexcept { return representable; }
};

/// Whether the secret set could be Y⁻¹(L) for some language L on this set:
/// groups evolutions by timed word and requires every group to agree on secrecy.
RepresentabilityResult check_word_representable(std::span<const Evolution> evolutions,
                                                const SecretSpec& secret);

// ---------------------------------------------------------------------------
// Verdicts

enum class Notion { Ebto, Lbto, Eto };

std::string_view to_string(Notion notion);

struct CoverEntry {
  std::size_t secret;  ///< index into the checked evolution set
  std::size_t partner; ///< non-secret evolution covering it
  friend bool operator==(const CoverEntry&, const CoverEntry&) = default;
};

struct EtoDurations {
  std::vector<Rational> private_durations; ///< DVisit, ascending
  std::vector<Rational> public_durations;  ///< D̄Visit, ascending
};

struct Verdict {
  Notion notion = Notion::Ebto;
  bool opaque = true;
  /// Always true for now: verdicts are relative to a finite evolution set.
  bool bounded = true;
  std::optional<EnumerationBudget> budget;
  std::size_t evolution_count = 0;
  std::size_t secret_count = 0;

  /// Uncovered secrets, smallest first. Non-empty iff !opaque.
  std::vector<Evolution> witnesses;
  /// LBTO: uncovered secret words, aligned with `witnesses`.
  std::vector<TimedWord> witness_words;
  /// ETO: private durations with no public match, aligned with `witnesses`.
  std::vector<Rational> witness_durations;

  std::vector<CoverEntry> cover_map;
  std::optional<EtoDurations> durations;

  const Evolution* witness() const { return witnesses.empty() ? nullptr : &witnesses.front(); }
};

/// Opaque iff every secret evolution has a non-secret one with the same
/// canonical observation. Throws IllFormedSecretError if the secret is not
/// ≡_τ-closed on the set.
Verdict check_ebto(std::span<const Evolution> evolutions, const SecretSpec& secret,
                   const ObservationConfig& config);

/// Over W = Y(evolutions): opaque iff every ω ∈ W ∩ L_s has some ω' ∈ W \ L_s
/// with the same projection.
Verdict check_lbto(std::span<const Evolution> evolutions, const TimedLanguageSpec& secret_language,
                   const std::set<EventId>& observable_events);

/// Opaque iff the private durations are included in the public durations,
/// both taken over the evolutions in the set that end at the first l_f.
Verdict check_eto(std::span<const Evolution> evolutions, const EtoSpec& spec);

// Convenience forms: enumerate under the budget, then check.

Verdict check_ebto(const TimedAutomaton& automaton, const EnumerationBudget& budget,
                   const SecretSpec& secret, const ObservationConfig& config);
Verdict check_lbto(const TimedAutomaton& automaton, const EnumerationBudget& budget,
                   const TimedLanguageSpec& secret_language, const std::set<EventId>& observable_events);
Verdict check_eto(const TimedAutomaton& automaton, const EnumerationBudget& budget, const EtoSpec& spec);

} // namespace tao
