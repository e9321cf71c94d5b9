#include "tao/document.hpp"

#include "tao/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace tao {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text)
{
  static const std::vector<std::string_view> puncts = {"->", "<=", ">=", "==", "&&", "||", ";", ",", "(",
                                                       ")",  "{",  "}",  "[",  "]",  ":",  "-", "<", ">", "="};
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n')
        advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Tok::Ident;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      auto digits = [&] {
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
      };
      digits();
      if (j + 1 < text.size() && (text[j] == '.' || text[j] == '/') &&
          std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        digits();
      }
      t.kind = Tok::Number;
      advance(j - i);
    } else {
      auto it = std::find_if(puncts.begin(), puncts.end(),
                             [&](std::string_view p) { return text.substr(i, p.size()) == p; });
      if (it == puncts.end())
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      t.kind = Tok::Punct;
      advance(it->size());
    }
    t.text = std::string(text.substr(start, i - start));
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ModelDocument parse();

private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& at, const std::string& message) const
  {
    throw ParseError(message, at.line, at.column);
  }

  static std::string describe(const Token& t)
  {
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  }

  bool at_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_keyword(std::string_view k) const { return peek().kind == Tok::Ident && peek().text == k; }

  bool accept(std::string_view p)
  {
    if (at_punct(p)) {
      next();
      return true;
    }
    return false;
  }

  void expect(std::string_view p)
  {
    if (!accept(p))
      fail(peek(), "expected '" + std::string(p) + "', found " + describe(peek()));
  }

  void expect_keyword(std::string_view k)
  {
    if (!at_keyword(k))
      fail(peek(), "expected '" + std::string(k) + "', found " + describe(peek()));
    next();
  }

  const Token& identifier(std::string_view what)
  {
    if (peek().kind != Tok::Ident)
      fail(peek(), "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }

  Rational rational()
  {
    const Token& t = peek();
    if (t.kind != Tok::Number)
      fail(t, "expected a number, found " + describe(t));
    next();
    try {
      return parse_rational(t.text);
    } catch (const std::invalid_argument& e) {
      fail(t, e.what());
    }
  }

  std::uint64_t natural(std::string_view what)
  {
    const Token& t = peek();
    Rational r = rational();
    if (!is_natural(r))
      fail(t, "non-natural constant " + t.text + " in " + std::string(what) +
                  "; clock constraints compare against natural numbers");
    if (r > Rational(std::numeric_limits<std::uint64_t>::max()))
      fail(t, "constant " + t.text + " is too large");
    return static_cast<std::uint64_t>(numerator(r));
  }

  void check_fresh_name(const Token& t, std::set<std::string>& names, std::string_view what)
  {
    if (!names.insert(t.text).second)
      fail(t, "duplicate " + std::string(what) + " '" + t.text + "'");
  }

  ClockId clock_ref()
  {
    const Token& t = identifier("a clock");
    auto it = clocks_.find(t.text);
    if (it == clocks_.end())
      fail(t, "undeclared clock '" + t.text + "'");
    return it->second;
  }

  EventId event_ref()
  {
    const Token& t = identifier("an event");
    auto it = events_.find(t.text);
    if (it == events_.end())
      fail(t, "undeclared event '" + t.text + "'");
    return it->second;
  }

  LocationId location_ref()
  {
    const Token& t = identifier("a location");
    auto it = locations_.find(t.text);
    if (it == locations_.end())
      fail(t, "undeclared location '" + t.text + "'");
    return it->second;
  }

  // Constraint grammar: or-expr of and-exprs of atoms.
  ClockConstraint constraint_or();
  ClockConstraint constraint_and();
  ClockConstraint constraint_atom();
  CompareOp compare_op();

  void clocks_decl();
  void events_decl();
  void location_decl();
  void edge_decl();
  void obs_decl();
  void secret_decl();
  void budget_decl();
  void check_decl();

  TimedWord timed_word();
  std::vector<TimedWord> timed_word_list();
  Evolution action_list();

  TimedAutomaton& automaton();

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  AutomatonBuilder builder_;
  std::map<std::string, ClockId, std::less<>> clocks_;
  std::map<std::string, EventId, std::less<>> events_;
  std::map<std::string, LocationId, std::less<>> locations_;
  std::set<std::string> automaton_names_;
  std::optional<Token> initial_;
  std::optional<TimedAutomaton> automaton_;

  std::vector<NamedObservation> observations_;
  std::vector<NamedSecret> secrets_;
  std::vector<NamedBudget> budgets_;
  std::vector<CheckRequest> checks_;
  std::set<std::string> observation_names_, secret_names_, budget_names_, check_names_;
};

CompareOp Parser::compare_op()
{
  const Token& t = peek();
  if (t.kind == Tok::Punct) {
    if (t.text == "<") return next(), CompareOp::Less;
    if (t.text == "<=") return next(), CompareOp::LessEqual;
    if (t.text == "==" || t.text == "=") return next(), CompareOp::Equal;
    if (t.text == ">=") return next(), CompareOp::GreaterEqual;
    if (t.text == ">") return next(), CompareOp::Greater;
  }
  fail(t, "expected a comparison operator, found " + describe(t));
}

ClockConstraint Parser::constraint_or()
{
  ClockConstraint lhs = constraint_and();
  while (at_keyword("or") || at_punct("||")) {
    next();
    lhs = ClockConstraint::disjunction(std::move(lhs), constraint_and());
  }
  return lhs;
}

ClockConstraint Parser::constraint_and()
{
  ClockConstraint lhs = constraint_atom();
  while (at_keyword("and") || at_punct("&&")) {
    next();
    lhs = ClockConstraint::conjunction(std::move(lhs), constraint_atom());
  }
  return lhs;
}

ClockConstraint Parser::constraint_atom()
{
  if (accept("(")) {
    ClockConstraint inner = constraint_or();
    expect(")");
    return inner;
  }
  if (at_keyword("true")) {
    next();
    return ClockConstraint::truth();
  }
  ClockId clock = clock_ref();
  if (accept("-")) {
    ClockId other = clock_ref();
    CompareOp op = compare_op();
    return ClockConstraint::difference(clock, other, op, natural("a clock constraint"));
  }
  CompareOp op = compare_op();
  return ClockConstraint::compare(clock, op, natural("a clock constraint"));
}

void Parser::clocks_decl()
{
  do {
    const Token& t = identifier("a clock name");
    check_fresh_name(t, automaton_names_, "name");
    clocks_.emplace(t.text, builder_.add_clock(t.text));
  } while (accept(","));
  expect(";");
}

void Parser::events_decl()
{
  do {
    const Token& t = identifier("an event name");
    check_fresh_name(t, automaton_names_, "name");
    events_.emplace(t.text, builder_.add_event(t.text));
  } while (accept(","));
  expect(";");
}

void Parser::location_decl()
{
  const Token& name = identifier("a location name");
  check_fresh_name(name, automaton_names_, "name");
  bool initial = false;
  if (at_keyword("init")) {
    const Token& init = next();
    if (initial_)
      fail(init, "more than one initial location (first: '" + initial_->text +
                     "'); deterministic automata have exactly one initial location");
    initial_ = name;
    initial = true;
  }
  LocationId id = builder_.add_location(name.text, initial);
  locations_.emplace(name.text, id);
  if (at_keyword("invariant")) {
    next();
    const Token& at = peek();
    ClockConstraint invariant = constraint_or();
    if (!invariant.is_disjunction_free())
      fail(at, "invariant of '" + name.text +
                   "' uses a disjunction; invariants must be disjunction-free so that each "
                   "time transition can be decided at its two endpoints");
    builder_.set_invariant(id, std::move(invariant));
  }
  expect(";");
}

void Parser::edge_decl()
{
  LocationId source = location_ref();
  expect("->");
  LocationId target = location_ref();
  expect_keyword("on");
  EventId event = event_ref();
  ClockConstraint guard;
  if (at_keyword("when")) {
    next();
    guard = constraint_or();
  }
  std::vector<ClockId> resets;
  if (at_keyword("reset")) {
    next();
    do
      resets.push_back(clock_ref());
    while (accept(","));
  }
  expect(";");
  builder_.add_edge(source, event, std::move(guard), std::move(resets), target);
}

TimedAutomaton& Parser::automaton()
{
  if (!automaton_) {
    if (!initial_)
      fail(peek(), "no initial location declared before this point");
    try {
      automaton_ = builder_.build();
    } catch (const ModelError& e) {
      fail(peek(), e.what());
    }
  }
  return *automaton_;
}

void Parser::obs_decl()
{
  const Token& name = identifier("an observation name");
  check_fresh_name(name, observation_names_, "observation config");
  ObservationConfig config;
  std::set<std::string> seen;
  expect("{");
  while (!accept("}")) {
    const Token& field = identifier("'locations', 'clocks' or 'events'");
    if (field.text != "locations" && field.text != "clocks" && field.text != "events")
      fail(field, "unknown observation field '" + field.text + "'");
    check_fresh_name(field, seen, "field");
    expect(":");
    if (!at_punct(";")) {
      do {
        if (field.text == "locations")
          config.locations.insert(location_ref());
        else if (field.text == "clocks")
          config.clocks.insert(clock_ref());
        else
          config.events.insert(event_ref());
      } while (accept(","));
    }
    expect(";");
  }
  accept(";");
  observations_.push_back({name.text, std::move(config)});
}

TimedWord Parser::timed_word()
{
  if (at_keyword("eps")) {
    next();
    return TimedWord(std::vector<TimedLetter>{});
  }
  const Token& start = peek();
  std::vector<TimedLetter> letters;
  do {
    expect("(");
    EventId e = event_ref();
    expect(",");
    Rational t = rational();
    expect(")");
    letters.push_back({e, std::move(t)});
  } while (at_punct("("));
  try {
    return TimedWord(std::move(letters));
  } catch (const std::invalid_argument& e) {
    fail(start, e.what());
  }
}

std::vector<TimedWord> Parser::timed_word_list()
{
  std::vector<TimedWord> words;
  if (at_punct(")"))
    return words;
  do
    words.push_back(timed_word());
  while (accept(","));
  return words;
}

Evolution Parser::action_list()
{
  const Token& start = peek();
  expect("[");
  std::vector<Action> actions;
  if (!at_punct("]")) {
    do {
      if (peek().kind == Tok::Number)
        actions.push_back(Action::delay(rational()));
      else
        actions.push_back(Action::event(event_ref()));
    } while (accept(","));
  }
  expect("]");
  try {
    return replay(automaton(), actions);
  } catch (const Error& e) {
    fail(start, std::string("explicit evolution cannot be replayed: ") + e.what());
  }
}

void Parser::secret_decl()
{
  const Token& name = identifier("a secret name");
  check_fresh_name(name, secret_names_, "secret");
  expect("=");
  const Token& kind = identifier("a secret kind");
  expect("(");
  std::optional<SecretSpec> secret;
  if (kind.text == "location_visit") {
    secret.emplace(LocationVisit{location_ref()});
  } else if (kind.text == "words") {
    secret.emplace(WordInLanguage{TimedLanguageSpec::finite(timed_word_list())});
  } else if (kind.text == "word_in_list") {
    secret.emplace(WordInLanguage{TimedLanguageSpec::predicate(WordInList{timed_word_list()})});
  } else if (kind.text == "word_prefix_of") {
    secret.emplace(WordInLanguage{TimedLanguageSpec::predicate(WordPrefixOf{timed_word()})});
  } else if (kind.text == "event_count_eq") {
    EventId e = event_ref();
    expect(",");
    std::uint64_t n = natural("event_count_eq");
    secret.emplace(WordInLanguage{TimedLanguageSpec::predicate(EventCountEq{e, n})});
  } else if (kind.text == "trailing_delay_gt") {
    Rational threshold = rational();
    expect(",");
    expect_keyword("after");
    secret.emplace(TrailingDelayGreater{std::move(threshold), event_ref()});
  } else if (kind.text == "private_run") {
    LocationId priv = location_ref();
    expect(",");
    LocationId fin = location_ref();
    secret.emplace(PrivateRun{EtoSpec{priv, fin}});
  } else if (kind.text == "explicit") {
    std::vector<Evolution> evolutions;
    if (!at_punct(")")) {
      do
        evolutions.push_back(action_list());
      while (accept(","));
    }
    secret.emplace(ExplicitList{std::move(evolutions)});
  } else {
    fail(kind, "unknown secret kind '" + kind.text + "'");
  }
  expect(")");
  expect(";");
  secrets_.push_back({name.text, std::move(*secret)});
}

void Parser::budget_decl()
{
  const Token& name = identifier("a budget name");
  check_fresh_name(name, budget_names_, "budget");
  EnumerationBudget budget;
  std::set<std::string> seen;
  expect("{");
  while (!accept("}")) {
    const Token& field = identifier("a budget field");
    check_fresh_name(field, seen, "field");
    expect(":");
    if (field.text == "steps") {
      budget.max_steps = natural("steps");
    } else if (field.text == "grid") {
      do
        budget.delay_grid.push_back(rational());
      while (accept(","));
    } else if (field.text == "zero_delay" || field.text == "consecutive_delays") {
      const Token& v = identifier("true or false");
      if (v.text != "true" && v.text != "false")
        fail(v, "expected true or false, found " + describe(v));
      (field.text == "zero_delay" ? budget.include_zero_delay : budget.consecutive_delays) = v.text == "true";
    } else {
      fail(field, "unknown budget field '" + field.text + "'");
    }
    expect(";");
  }
  accept(";");
  if (!seen.contains("steps") || !seen.contains("grid"))
    fail(name, "budget '" + name.text + "' needs both 'steps' and 'grid'");
  try {
    budget.validate();
  } catch (const std::invalid_argument& e) {
    fail(name, e.what());
  }
  budgets_.push_back({name.text, std::move(budget)});
}

void Parser::check_decl()
{
  CheckRequest check;
  std::optional<Token> name_token;
  if (peek().kind == Tok::Ident && peek(1).kind == Tok::Punct && peek(1).text == "=") {
    name_token = next();
    next();
    check.name = name_token->text;
    check.explicit_name = true;
  }
  const Token& kind = identifier("a check kind");
  if (kind.text == "ebto") check.kind = CheckKind::Ebto;
  else if (kind.text == "lbto") check.kind = CheckKind::Lbto;
  else if (kind.text == "eto") check.kind = CheckKind::Eto;
  else if (kind.text == "representable") check.kind = CheckKind::Representable;
  else if (kind.text == "closure") check.kind = CheckKind::Closure;
  else fail(kind, "unknown check kind '" + kind.text + "'");

  auto reference = [&](const std::set<std::string>& declared, std::string_view what) {
    const Token& t = identifier(what);
    if (!declared.contains(t.text))
      fail(t, "undeclared " + std::string(what) + " '" + t.text + "'");
    return t;
  };

  expect("(");
  Token secret = reference(secret_names_, "secret");
  check.secret = secret.text;
  expect(",");
  if (check.kind == CheckKind::Ebto || check.kind == CheckKind::Lbto) {
    check.observation = reference(observation_names_, "observation config").text;
    expect(",");
  }
  check.budget = reference(budget_names_, "budget").text;
  expect(")");
  expect(";");

  const SecretSpec* spec = nullptr;
  for (const auto& s : secrets_)
    if (s.name == check.secret)
      spec = &s.secret;
  if (check.kind == CheckKind::Lbto && !spec->is<WordInLanguage>())
    fail(secret, "lbto needs a timed-language secret, '" + secret.text + "' is " +
                     std::string(spec->kind_name()));
  if (check.kind == CheckKind::Eto && !spec->is<PrivateRun>())
    fail(secret, "eto needs a private_run secret, '" + secret.text + "' is " + std::string(spec->kind_name()));

  if (!check.explicit_name)
    check.name = check_call_text(check);
  if (!check_names_.insert(check.name).second)
    fail(name_token ? *name_token : kind, "duplicate check name '" + check.name + "'");
  checks_.push_back(std::move(check));
}

ModelDocument Parser::parse()
{
  while (peek().kind != Tok::End) {
    const Token& kw = identifier("a declaration keyword");
    const bool automaton_part = kw.text == "clocks" || kw.text == "events" || kw.text == "location" ||
                                kw.text == "edge";
    if (automaton_part && automaton_)
      fail(kw, "automaton declarations must come before obs, secret, budget and check lines");
    if (kw.text == "clocks") clocks_decl();
    else if (kw.text == "events") events_decl();
    else if (kw.text == "location") location_decl();
    else if (kw.text == "edge") edge_decl();
    else if (kw.text == "obs") { automaton(); obs_decl(); }
    else if (kw.text == "secret") { automaton(); secret_decl(); }
    else if (kw.text == "budget") { automaton(); budget_decl(); }
    else if (kw.text == "check") { automaton(); check_decl(); }
    else fail(kw, "unknown declaration '" + kw.text + "'");
  }
  return ModelDocument{std::move(automaton()), std::move(observations_), std::move(secrets_),
                       std::move(budgets_), std::move(checks_)};
}

} // namespace

ModelDocument parse_model(std::string_view text) { return Parser(text).parse(); }

} // namespace tao
