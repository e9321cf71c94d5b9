#include "fixtures.hpp"

#include "tao/opacity.hpp"

#include <doctest.h>

#include <map>
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

ObservationConfig events(const TimedAutomaton& a, std::initializer_list<std::string_view> names)
{
  ObservationConfig cfg;
  for (auto n : names)
    cfg.events.insert(*a.find_event(n));
  return cfg;
}

std::vector<Evolution> suffix_set()
{
  return enumerate_evolutions(suffix_blindness_automaton(),
                              EnumerationBudget{6, {Rational(1), Rational(50), Rational(99), Rational(100)}, true});
}

std::vector<Evolution> diamond_set()
{
  return enumerate_evolutions(diamond_automaton(), EnumerationBudget{5, {Rational(1), Rational(2)}, true});
}

/// Canonical observation and secrecy of every evolution, computed once.
struct Labelled {
  std::vector<CanonicalObservation> canon;
  std::vector<char> secret;
};

Labelled label(const std::vector<Evolution>& set, const SecretSpec& secret, const ObservationConfig& cfg)
{
  Labelled out;
  for (const auto& e : set) {
    out.canon.push_back(canonical_observation(e, cfg));
    out.secret.push_back(secret.contains(e));
  }
  return out;
}

/// Independent oracle for EBTO: quadratic search for a cover.
bool ebto_oracle(const std::vector<Evolution>& set, const SecretSpec& secret, const ObservationConfig& cfg)
{
  Labelled l = label(set, secret, cfg);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!l.secret[i])
      continue;
    bool covered = false;
    for (std::size_t j = 0; j < set.size() && !covered; ++j)
      covered = !l.secret[j] && l.canon[i] == l.canon[j];
    if (!covered)
      return false;
  }
  return true;
}

/// Verdict invariants: every witness is an uncovered secret, every cover is genuine.
void check_verdict_shape(const std::vector<Evolution>& set, const SecretSpec& secret, const ObservationConfig& cfg,
                         const Verdict& v)
{
  Labelled l = label(set, secret, cfg);
  CHECK(v.opaque == v.witnesses.empty());
  for (const auto& w : v.witnesses) {
    CHECK(secret.contains(w));
    auto cw = canonical_observation(w, cfg);
    for (std::size_t j = 0; j < set.size(); ++j)
      if (!l.secret[j] && cw == l.canon[j])
        FAIL_CHECK("a witness of length " << w.length() << " has a cover");
  }
  for (const auto& c : v.cover_map) {
    CHECK(l.secret[c.secret]);
    CHECK_FALSE(l.secret[c.partner]);
    CHECK(obs_equivalent(set[c.secret], set[c.partner], cfg));
  }
}

} // namespace

TEST_SUITE("opacity")
{
  TEST_CASE("ebto: suffix blindness is caught")
  {
    auto a = suffix_blindness_automaton();
    auto set = suffix_set();
    SecretSpec secret = convert_lbto(TimedLanguageSpec::finite({word(a, {{"a", "1"}})}));
    auto cfg = events(a, {"a"});
    Verdict v = check_ebto(set, secret, cfg);
    CHECK_FALSE(v.opaque);
    REQUIRE(v.witness());
    const Evolution& w = *v.witness();
    CHECK(to_timed_word(w) == word(a, {{"a", "1"}}));
    CHECK(duration(w) - 1 < 100);
    CHECK(v.opaque == ebto_oracle(set, secret, cfg));
    check_verdict_shape(set, secret, cfg, v);
  }

  TEST_CASE("ebto: empty secret is opaque")
  {
    auto set = suffix_set();
    Verdict v = check_ebto(set, SecretSpec(ExplicitList{}), ObservationConfig{});
    CHECK(v.opaque);
    CHECK(v.secret_count == 0);
  }

  TEST_CASE("ebto: diamond under L_obs = {lf} is opaque")
  {
    auto d = diamond_automaton();
    auto set = diamond_set();
    ObservationConfig cfg;
    cfg.locations = {*d.find_location("lf")};
    SecretSpec secret = convert_eto({*d.find_location("l1"), *d.find_location("lf")});
    Verdict v = check_ebto(set, secret, cfg);
    CHECK(v.opaque);
    CHECK(v.opaque == ebto_oracle(set, secret, cfg));
    CHECK(v.cover_map.size() == v.secret_count);
    check_verdict_shape(set, secret, cfg, v);

    Verdict with_events = check_ebto(set, secret, events(d, {"a", "b"}));
    CHECK_FALSE(with_events.opaque);
    check_verdict_shape(set, secret, events(d, {"a", "b"}), with_events);
  }

  TEST_CASE("ebto: ill-formed secrets are rejected with the pair")
  {
    auto demo = closure_demo_automaton();
    auto set = enumerate_evolutions(demo, EnumerationBudget{2, {Rational(1), Rational(2), Rational(3)}, true});
    SecretSpec secret(ExplicitList{{evolve(demo, {"3"})}});
    try {
      (void)check_ebto(set, secret, ObservationConfig{});
      FAIL("expected IllFormedSecretError");
    } catch (const IllFormedSecretError& e) {
      CHECK(secret.contains(e.first()) != secret.contains(e.second()));
      CHECK(canonicalize_tau(e.first()) == canonicalize_tau(e.second()));
    }
  }

  TEST_CASE("lbto")
  {
    auto a = suffix_blindness_automaton();
    auto set = suffix_set();
    auto ls = TimedLanguageSpec::finite({word(a, {{"a", "1"}})});
    CHECK(check_lbto(set, ls, {*a.find_event("a")}).opaque);

    auto disjoint = TimedLanguageSpec::finite({word(a, {{"b", "7"}})});
    Verdict d = check_lbto(set, disjoint, {*a.find_event("a")});
    CHECK(d.opaque);
    CHECK(d.secret_count == 0);

    Verdict all = check_lbto(set, ls, {*a.find_event("a"), *a.find_event("b")});
    CHECK_FALSE(all.opaque);
    REQUIRE(all.witness_words.size() == 1);
    CHECK(all.witness_words.front() == word(a, {{"a", "1"}}));
  }

  TEST_CASE("eto")
  {
    auto d = diamond_automaton();
    Verdict v = check_eto(diamond_set(), {*d.find_location("l1"), *d.find_location("lf")});
    CHECK(v.opaque);
    REQUIRE(v.durations);
    CHECK(v.durations->private_durations == std::vector<Rational>{3});
    CHECK(v.durations->public_durations == std::vector<Rational>{3});

    // l1 is on the only path to l2.
    auto a = suffix_blindness_automaton();
    Verdict chain = check_eto(suffix_set(), {*a.find_location("l1"), *a.find_location("l2")});
    CHECK_FALSE(chain.opaque);
    CHECK(chain.durations->private_durations == std::vector<Rational>{100});
    CHECK(chain.durations->public_durations.empty());
    CHECK(chain.witness_durations == std::vector<Rational>{100});
  }

  TEST_CASE("convert_lbto")
  {
    auto a = suffix_blindness_automaton();
    auto set = suffix_set();
    TimedWord w1 = word(a, {{"a", "1"}}), w2 = word(a, {{"a", "1"}, {"b", "100"}});
    SecretSpec s1 = convert_lbto(TimedLanguageSpec::finite({w1}));
    SecretSpec none = convert_lbto(TimedLanguageSpec::finite({}));
    SecretSpec both = convert_lbto(TimedLanguageSpec::finite({w1, w2}));
    for (const auto& rho : set) {
      TimedWord w = to_timed_word(rho);
      CHECK(s1.contains(rho) == (w == w1));
      CHECK_FALSE(none.contains(rho));
      CHECK(both.contains(rho) == !w.empty());
    }
  }

  TEST_CASE("convert_eto")
  {
    auto d = diamond_automaton();
    SecretSpec s = convert_eto({*d.find_location("l1"), *d.find_location("lf")});
    std::set<Evolution> secret_forms;
    for (const auto& rho : diamond_set())
      if (s.contains(rho))
        secret_forms.insert(canonicalize_tau(rho));
    CHECK(secret_forms == std::set<Evolution>{evolve(d, {"1", "a", "2", "b"})});

    auto a = suffix_blindness_automaton();
    SecretSpec unreachable = convert_eto({*a.find_location("l1"), *a.find_location("l0")});
    SecretSpec full = convert_eto({*a.find_location("l1"), *a.find_location("l2")});
    std::set<Evolution> full_forms;
    for (const auto& rho : suffix_set()) {
      CHECK_FALSE(unreachable.contains(rho));
      if (full.contains(rho))
        full_forms.insert(canonicalize_tau(rho));
    }
    CHECK(full_forms == std::set<Evolution>{evolve(a, {"1", "a", "99", "b"})});
  }

  TEST_CASE("closure")
  {
    auto demo = closure_demo_automaton();
    auto demo_set = enumerate_evolutions(demo, EnumerationBudget{2, {Rational(1), Rational(2), Rational(3)}, true});
    auto r = check_secret_closure(demo_set, SecretSpec(ExplicitList{{evolve(demo, {"3"})}}));
    CHECK_FALSE(r.closed);
    REQUIRE(r.violation);

    auto a = suffix_blindness_automaton();
    auto set = suffix_set();
    CHECK(check_secret_closure(set, convert_lbto(TimedLanguageSpec::finite({word(a, {{"a", "1"}})}))));

    auto loop = self_loop_automaton();
    auto loop_set = enumerate_evolutions(loop, EnumerationBudget{4, {Rational(5), Rational(10), Rational(15)}, true});
    SecretSpec late(TrailingDelayGreater{10, *loop.find_event("a")});
    CHECK(check_secret_closure(loop_set, late));
  }

  TEST_CASE("closure: random fragmentations keep predicate secrets stable")
  {
    std::mt19937_64 rng(29);
    auto loop = self_loop_automaton();
    auto d = diamond_automaton();
    auto a = suffix_blindness_automaton();
    struct Case {
      TimedAutomaton automaton;
      std::vector<Evolution> set;
      SecretSpec secret;
    };
    std::vector<Case> cases = {
        {loop, enumerate_evolutions(loop, EnumerationBudget{4, {Rational(5), Rational(10), Rational(15)}, true}),
         SecretSpec(TrailingDelayGreater{10, *loop.find_event("a")})},
        {d, diamond_set(), convert_eto({*d.find_location("l1"), *d.find_location("lf")})},
        {d, diamond_set(), SecretSpec(LocationVisit{*d.find_location("l2")})},
        {a, suffix_set(), convert_lbto(TimedLanguageSpec::finite({word(a, {{"a", "1"}})}))},
    };
    for (const auto& c : cases)
      for (const auto& rho : c.set)
        for (int k = 0; k < 3; ++k)
          CHECK(c.secret.contains(random_fragmentation(rng, c.automaton, rho)) == c.secret.contains(rho));
  }

  TEST_CASE("representability")
  {
    auto loop = self_loop_automaton();
    auto set = enumerate_evolutions(loop, EnumerationBudget{3, {Rational(5), Rational(10), Rational(15)}, false});
    SecretSpec late(TrailingDelayGreater{10, *loop.find_event("a")});
    auto r = check_word_representable(set, late);
    CHECK_FALSE(r.representable);
    REQUIRE(r.counter_pair);
    CHECK(*r.shared_word == word(loop, {{"a", "0"}}));
    CHECK(to_timed_word(r.counter_pair->first) == *r.shared_word);
    CHECK(to_timed_word(r.counter_pair->second) == *r.shared_word);
    CHECK(late.contains(r.counter_pair->first) != late.contains(r.counter_pair->second));

    auto a = suffix_blindness_automaton();
    CHECK(check_word_representable(suffix_set(), convert_lbto(TimedLanguageSpec::finite({word(a, {{"a", "1"}})}))));

    // Two branches separated by guard constants: visiting l2 shows in the word.
    AutomatonBuilder b;
    ClockId x = b.add_clock("x");
    EventId e = b.add_event("e");
    EventId f = b.add_event("f");
    LocationId l0 = b.add_location("l0", true);
    LocationId l1 = b.add_location("l1");
    LocationId l2 = b.add_location("l2");
    b.add_edge(l0, e, ClockConstraint::compare(x, CompareOp::Equal, 1), {}, l1);
    b.add_edge(l0, f, ClockConstraint::compare(x, CompareOp::Equal, 2), {}, l2);
    auto branches = b.build();
    auto branch_set = enumerate_evolutions(branches, EnumerationBudget{4, {Rational(1), Rational(2)}, true});
    CHECK(check_word_representable(branch_set, SecretSpec(LocationVisit{l2})));
  }

  TEST_CASE("ebto agrees with a quadratic oracle")
  {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
      auto r = random_automaton(rng);
      auto set = enumerate_evolutions(r.automaton, EnumerationBudget{3, r.grid, true});
      auto cfg = random_event_config(rng, r.automaton);
      cfg.locations = {r.final_location};
      SecretSpec secret = convert_eto({r.private_location, r.final_location});
      Verdict v = check_ebto(set, secret, cfg);
      CHECK(v.opaque == ebto_oracle(set, secret, cfg));
      check_verdict_shape(set, secret, cfg, v);
    }
  }

  TEST_CASE("ebto implies lbto under the language conversion")
  {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 15; ++i) {
      auto r = random_automaton(rng);
      auto set = enumerate_evolutions(r.automaton, EnumerationBudget{4, r.grid, true});
      auto cfg = random_event_config(rng, r.automaton);
      // Secret language: the words of a few random generated evolutions.
      std::vector<TimedWord> words;
      for (int k = 0; k < 3; ++k)
        words.push_back(to_timed_word(set[std::uniform_int_distribution<std::size_t>(0, set.size() - 1)(rng)]));
      auto ls = TimedLanguageSpec::finite(words);
      bool ebto = check_ebto(set, convert_lbto(ls), cfg).opaque;
      bool lbto = check_lbto(set, ls, cfg.events).opaque;
      if (ebto)
        CHECK(lbto);
    }
  }

  TEST_CASE("a self-loop on lf breaks the ETO/EBTO correspondence")
  {
    // l0 --a--> lf --b--> lf. Every run to lf passes l0, so ETO fails, but
    // the σ_ε self-loop at lf erases under ≡_ε and hands each secret a
    // non-secret twin that re-enters lf.
    AutomatonBuilder b;
    b.add_clock("x");
    EventId ea = b.add_event("a");
    EventId eb = b.add_event("b");
    LocationId l0 = b.add_location("l0", true);
    LocationId lf = b.add_location("lf");
    b.add_edge(l0, ea, ClockConstraint::truth(), {}, lf);
    b.add_edge(lf, eb, ClockConstraint::truth(), {}, lf);
    auto a = b.build();
    // Alternating delays keep every secret within one b-step of the budget.
    auto set = enumerate_evolutions(a, EnumerationBudget{4, {Rational(1)}, false, false});
    EtoSpec spec{l0, lf};
    ObservationConfig cfg;
    cfg.locations = {lf};

    CHECK_FALSE(check_eto(set, spec).opaque);
    CHECK(check_ebto(set, convert_eto(spec), cfg).opaque);
    CHECK(obs_equivalent(evolve(a, {"1", "a"}), evolve(a, {"1", "a", "b"}), cfg));
  }
}
