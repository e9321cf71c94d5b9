#include "tao/report.hpp"

#include "tao/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

namespace tao {

namespace {

std::string budget_text(const EnumerationBudget& b)
{
  std::string grid;
  for (std::size_t i = 0; i < b.delay_grid.size(); ++i)
    grid += (i ? ", " : "") + to_string(b.delay_grid[i]);
  return "steps: " + std::to_string(b.max_steps) + "; grid: " + grid +
         "; zero_delay: " + (b.include_zero_delay ? "true" : "false") +
         "; consecutive_delays: " + (b.consecutive_delays ? "true" : "false");
}

std::vector<std::string> rational_strings(const std::vector<Rational>& values)
{
  std::vector<std::string> out;
  for (const auto& v : values)
    out.push_back(to_string(v));
  return out;
}

std::string concrete_line(const TimedAutomaton& a, const Evolution& e)
{
  return format_observation(a, observe_evolution(e, ObservationConfig::everything(a)));
}

void evaluate(const ModelDocument& doc, const CheckRequest& check, const std::vector<Evolution>& evolutions,
              const RunOptions& options, CheckOutcome& out)
{
  const TimedAutomaton& a = doc.automaton;
  const SecretSpec& secret = doc.secret(check.secret);
  auto keep = [&](std::size_t i) { return i < options.max_witnesses; };

  switch (check.kind) {
  case CheckKind::Ebto:
  case CheckKind::Lbto:
  case CheckKind::Eto: {
    Verdict v;
    if (check.kind == CheckKind::Ebto) {
      const auto& cfg = doc.observation(*check.observation);
      cfg.validate(a);
      v = check_ebto(evolutions, secret, cfg);
    } else if (check.kind == CheckKind::Lbto) {
      v = check_lbto(evolutions, secret.as<WordInLanguage>().language, doc.observation(*check.observation).events);
    } else {
      v = check_eto(evolutions, secret.as<PrivateRun>().spec);
    }
    out.positive = v.opaque;
    out.secret_count = v.secret_count;
    out.cover_map_size = v.cover_map.size();
    out.witness_total = v.witnesses.size();
    for (std::size_t i = 0; i < v.witnesses.size() && keep(i); ++i) {
      RenderedWitness w{concrete_line(a, v.witnesses[i]), {}, {}, {}};
      if (check.kind == CheckKind::Ebto)
        w.observed = format_observation(
            a, canonical_observation(v.witnesses[i], doc.observation(*check.observation)).sequence());
      if (check.kind == CheckKind::Lbto)
        w.word = format_word(a, v.witness_words[i]);
      if (check.kind == CheckKind::Eto)
        w.duration = to_string(v.witness_durations[i]);
      out.witnesses.push_back(std::move(w));
    }
    if (v.durations)
      out.durations.emplace(rational_strings(v.durations->private_durations),
                            rational_strings(v.durations->public_durations));
    break;
  }
  case CheckKind::Representable: {
    for (const auto& e : evolutions)
      out.secret_count += secret.contains(e) ? 1 : 0;
    auto r = check_word_representable(evolutions, secret);
    out.positive = r.representable;
    if (!r.representable) {
      out.witness_total = 2;
      std::string word = format_word(a, *r.shared_word);
      // The pair is one witness; both halves are always shown.
      for (const Evolution* e : {&r.counter_pair->first, &r.counter_pair->second})
        out.witnesses.push_back({concrete_line(a, *e), {}, word, {}});
    }
    break;
  }
  case CheckKind::Closure: {
    for (const auto& e : evolutions)
      out.secret_count += secret.contains(e) ? 1 : 0;
    auto r = check_secret_closure(evolutions, secret);
    out.positive = r.closed;
    if (!r.closed) {
      out.witness_total = 2;
      for (const Evolution* e : {&r.violation->first, &r.violation->second})
        out.witnesses.push_back({concrete_line(a, *e), {}, {}, {}});
    }
    break;
  }
  }
}

} // namespace

std::string CheckOutcome::verdict_text() const
{
  switch (kind) {
  case CheckKind::Representable: return positive ? "representable" : "not representable";
  case CheckKind::Closure: return positive ? "closed" : "not closed";
  default: return positive ? "opaque" : "not opaque";
  }
}

int Report::exit_code() const
{
  for (const auto& c : checks)
    if (!c.positive)
      return 1;
  return 0;
}

std::string document_checksum(const ModelDocument& document)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_model(document)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report run_checks(const ModelDocument& document, const RunOptions& options)
{
  std::vector<const CheckRequest*> selected;
  for (const auto& c : document.checks)
    if (!options.only || c.name == *options.only)
      selected.push_back(&c);
  if (options.only && selected.empty())
    throw ConfigError("no check named '" + *options.only + "'");

  Report report;
  report.checksum = document_checksum(document);
  std::map<std::string, std::vector<Evolution>> enumerated;
  for (const CheckRequest* check : selected) {
    CheckOutcome out;
    out.name = check->name;
    out.kind = check->kind;
    out.budget_name = check->budget;
    out.budget = document.budget(check->budget);
    auto start = std::chrono::steady_clock::now();
    try {
      auto it = enumerated.find(check->budget);
      if (it == enumerated.end())
        it = enumerated.emplace(check->budget, enumerate_evolutions(document.automaton, out.budget)).first;
      out.evolution_count = it->second.size();
      evaluate(document, *check, it->second, options, out);
    } catch (const IllFormedSecretError& e) {
      throw IllFormedSecretError("check '" + check->name + "': " + e.what(), e.first(), e.second());
    } catch (const Error& e) {
      throw Error("check '" + check->name + "': " + e.what());
    }
    if (!options.stable)
      out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(out));
  }
  return report;
}

std::string render_text(const Report& report)
{
  std::ostringstream out;
  out << "document " << report.checksum << "\n";
  std::size_t positive = 0;
  for (const auto& c : report.checks) {
    positive += c.positive ? 1 : 0;
    out << "\ncheck " << c.name << "\n";
    out << "  notion      " << to_string(c.kind) << "\n";
    out << "  verdict     " << c.verdict_text() << "\n";
    out << "  bounded     true\n";
    out << "  budget      " << c.budget_name << " { " << budget_text(c.budget) << " }\n";
    out << "  evolutions  " << c.evolution_count << "\n";
    out << "  secrets     " << c.secret_count << "\n";
    out << "  cover_map   " << c.cover_map_size << "\n";
    if (c.durations) {
      auto set = [](const std::vector<std::string>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i)
          s += (i ? ", " : "") + v[i];
        return s + "}";
      };
      out << "  private     " << set(c.durations->first) << "\n";
      out << "  public      " << set(c.durations->second) << "\n";
    }
    if (c.witness_total > 0)
      out << "  witnesses   " << c.witnesses.size() << " of " << c.witness_total << "\n";
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
      const auto& w = c.witnesses[i];
      out << "  witness[" << i << "]  " << w.evolution << "\n";
      if (w.observed)
        out << "    observed  " << *w.observed << "\n";
      if (w.word)
        out << "    word      " << *w.word << "\n";
      if (w.duration)
        out << "    duration  " << *w.duration << "\n";
    }
    if (c.elapsed_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *c.elapsed_ms);
      out << "  time_ms     " << buf << "\n";
    }
  }
  out << "\nsummary " << report.checks.size() << " checks, " << positive << " positive, "
      << report.checks.size() - positive << " negative\n";
  return out.str();
}

std::string render_json(const Report& report)
{
  using nlohmann::ordered_json;
  ordered_json root;
  root["document_checksum"] = report.checksum;
  root["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["notion"] = std::string(to_string(c.kind));
    j["verdict"] = c.verdict_text();
    j["positive"] = c.positive;
    j["bounded"] = true;
    ordered_json b;
    b["name"] = c.budget_name;
    b["steps"] = c.budget.max_steps;
    b["grid"] = rational_strings(c.budget.delay_grid);
    b["zero_delay"] = c.budget.include_zero_delay;
    b["consecutive_delays"] = c.budget.consecutive_delays;
    j["budget"] = std::move(b);
    j["evolution_count"] = c.evolution_count;
    j["secret_count"] = c.secret_count;
    j["cover_map_size"] = c.cover_map_size;
    j["witness_total"] = c.witness_total;
    j["witnesses"] = ordered_json::array();
    for (const auto& w : c.witnesses) {
      ordered_json wj;
      wj["evolution"] = w.evolution;
      if (w.observed)
        wj["observed"] = *w.observed;
      if (w.word)
        wj["word"] = *w.word;
      if (w.duration)
        wj["duration"] = *w.duration;
      j["witnesses"].push_back(std::move(wj));
    }
    if (c.durations) {
      j["private_durations"] = c.durations->first;
      j["public_durations"] = c.durations->second;
    }
    if (c.elapsed_ms)
      j["time_ms"] = *c.elapsed_ms;
    root["checks"].push_back(std::move(j));
  }
  root["exit_code"] = report.exit_code();
  return root.dump(2) + "\n";
}

} // namespace tao
