#include "fixtures.hpp"

#include "tao/errors.hpp"
#include "tao/words.hpp"

#include <doctest.h>

#include <random>

using namespace tao;
using namespace tao::testing;

namespace {

TimedWord word(const TimedAutomaton& a, std::vector<std::pair<std::string_view, std::string_view>> letters)
{
  std::vector<TimedLetter> out;
  for (auto [e, t] : letters)
    out.push_back({*a.find_event(e), q(t)});
  return TimedWord(std::move(out));
}

} // namespace

TEST_SUITE("words")
{
  TEST_CASE("timed words need non-decreasing, non-negative stamps")
  {
    CHECK_THROWS_AS((void)TimedWord({{EventId{0}, 2}, {EventId{0}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS((void)TimedWord({{EventId{0}, q("-1")}}), std::invalid_argument);
    CHECK_NOTHROW((void)TimedWord({{EventId{0}, 1}, {EventId{1}, 1}}));
  }

  TEST_CASE("to_timed_word")
  {
    auto chain = chain_automaton();
    Evolution rho = evolve(chain, {"1.5", "a", "0.7", "0.3", "b", "0.2"});
    CHECK(to_timed_word(rho) == word(chain, {{"a", "3/2"}, {"b", "5/2"}}));
    CHECK(format_word(chain, to_timed_word(rho)) == "(a,3/2)(b,5/2)");

    CHECK(to_timed_word(Evolution{initial_state(chain), {}}).empty());

    auto sb = suffix_blindness_automaton();
    CHECK(to_timed_word(evolve(sb, {"1", "a", "99", "b"})) == word(sb, {{"a", "1"}, {"b", "100"}}));
  }

  TEST_CASE("to_timed_word on observations skips silent steps")
  {
    auto sb = suffix_blindness_automaton();
    ObservationConfig cfg;
    cfg.events = {*sb.find_event("a")};
    auto o = observe_evolution(evolve(sb, {"1", "a", "99", "b"}), cfg);
    CHECK(to_timed_word(o) == word(sb, {{"a", "1"}}));
  }

  TEST_CASE("project_word")
  {
    auto sb = suffix_blindness_automaton();
    TimedWord w2 = word(sb, {{"a", "1"}, {"b", "100"}});
    CHECK(project_word(w2, {*sb.find_event("a")}) == word(sb, {{"a", "1"}}));
    CHECK(project_word(w2, {*sb.find_event("a"), *sb.find_event("b")}) == w2);
    CHECK(project_word(w2, {}).empty());
    CHECK(project_word(TimedWord(), {*sb.find_event("a")}).empty());
  }

  TEST_CASE("word_preimage_member")
  {
    auto sb = suffix_blindness_automaton();
    auto l1 = TimedLanguageSpec::finite({word(sb, {{"a", "1"}})});
    auto l2 = TimedLanguageSpec::finite({word(sb, {{"a", "1"}, {"b", "100"}})});
    CHECK(word_preimage_member(evolve(sb, {"1", "a", "50"}), l1));
    Evolution full = evolve(sb, {"1", "a", "99", "b"});
    CHECK(word_preimage_member(full, l2));
    CHECK_FALSE(word_preimage_member(full, l1));
    CHECK_FALSE(word_preimage_member(full, TimedLanguageSpec::finite({})));
  }

  TEST_CASE("language predicates")
  {
    auto sb = suffix_blindness_automaton();
    TimedWord w1 = word(sb, {{"a", "1"}});
    TimedWord w2 = word(sb, {{"a", "1"}, {"b", "100"}});
    auto prefix = TimedLanguageSpec::named("word_prefix_of", {w2}, std::nullopt, 0);
    CHECK(prefix.contains(TimedWord()));
    CHECK(prefix.contains(w1));
    CHECK(prefix.contains(w2));
    CHECK_FALSE(prefix.contains(word(sb, {{"a", "2"}})));

    auto count = TimedLanguageSpec::named("event_count_eq", {}, *sb.find_event("b"), 1);
    CHECK(count.contains(w2));
    CHECK_FALSE(count.contains(w1));

    auto list = TimedLanguageSpec::named("word_in_list", {w1}, std::nullopt, 0);
    CHECK(list.contains(w1));
    CHECK_FALSE(list.contains(w2));

    CHECK_THROWS_AS((void)TimedLanguageSpec::named("regex", {}, std::nullopt, 0), ConfigError);
  }

  TEST_CASE("suffix blindness and monotone stamps over enumerations")
  {
    for (const auto& a : {suffix_blindness_automaton(), diamond_automaton(), self_loop_automaton()}) {
      for (const auto& rho : enumerate_evolutions(a, EnumerationBudget{4, {Rational(1), q("1/2")}, true})) {
        TimedWord w = to_timed_word(rho);
        for (std::size_t i = 1; i < w.size(); ++i)
          CHECK(w.letters()[i - 1].time <= w.letters()[i].time);
        if (auto longer = time_successor(a, rho.last(), 7)) {
          Evolution extended = rho;
          extended.steps.push_back({Action::delay(7), *longer});
          CHECK(to_timed_word(extended) == w);
        }
      }
    }
  }

  TEST_CASE("canonicalization never changes the word of an observation")
  {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
      auto seq = random_observation_sequence(rng, 12);
      CHECK(to_timed_word(canonicalize(seq).sequence()) == to_timed_word(seq));
    }
  }
}
