#pragma once

#include "tao/model.hpp"
#include "tao/observation.hpp"
#include "tao/opacity.hpp"
#include "tao/semantics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tao {

enum class CheckKind { Ebto, Lbto, Eto, Representable, Closure };

std::string_view to_string(CheckKind kind);

struct NamedObservation {
  std::string name;
  ObservationConfig config;
  friend bool operator==(const NamedObservation&, const NamedObservation&) = default;
};

struct NamedSecret {
  std::string name;
  SecretSpec secret;
  friend bool operator==(const NamedSecret&, const NamedSecret&) = default;
};

struct NamedBudget {
  std::string name;
  EnumerationBudget budget;
  friend bool operator==(const NamedBudget&, const NamedBudget&) = default;
};

/// One `check` line. `observation` is set only for ebto and lbto.
struct CheckRequest {
  std::string name;
  CheckKind kind = CheckKind::Ebto;
  std::string secret;
  std::optional<std::string> observation;
  std::string budget;
  /// False when the name was derived from the call text.
  bool explicit_name = false;

  friend bool operator==(const CheckRequest&, const CheckRequest&) = default;
};

/// A parsed model file. Declarations keep their file order, and every
/// reference in `checks` resolves.
struct ModelDocument {
  TimedAutomaton automaton;
  std::vector<NamedObservation> observations;
  std::vector<NamedSecret> secrets;
  std::vector<NamedBudget> budgets;
  std::vector<CheckRequest> checks;

  const ObservationConfig& observation(std::string_view name) const;
  const SecretSpec& secret(std::string_view name) const;
  const EnumerationBudget& budget(std::string_view name) const;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

/// Throws ParseError carrying the line and column of the offending token.
ModelDocument parse_model(std::string_view text);

/// Canonical text form; parse_model(serialize_model(d)) == d.
std::string serialize_model(const ModelDocument& document);

/// Call text such as `ebto(s1, cfg1, b1)`, also used as the default check name.
std::string check_call_text(const CheckRequest& check);

/// `[1/2, a, 3]`, the action-list syntax used by explicit secrets.
std::string format_action_list(const TimedAutomaton& automaton, const Evolution& evolution);

} // namespace tao
