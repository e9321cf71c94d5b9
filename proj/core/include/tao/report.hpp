#pragma once

#include "tao/document.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tao {

struct RunOptions {
  /// Run only the check with this name.
  std::optional<std::string> only;
  /// Omit timings so that reports are byte-identical across runs.
  bool stable = false;
  /// Witnesses rendered per check.
  std::size_t max_witnesses = 1;
};

struct RenderedWitness {
  std::string evolution;               ///< concrete line format
  std::optional<std::string> observed; ///< EBTO: the canonical observation
  std::optional<std::string> word;     ///< LBTO / representability: timed word
  std::optional<std::string> duration; ///< ETO: run duration
};

struct CheckOutcome {
  std::string name;
  CheckKind kind = CheckKind::Ebto;
  /// Opaque, representable or closed.
  bool positive = true;
  std::string budget_name;
  EnumerationBudget budget;
  std::size_t evolution_count = 0;
  std::size_t secret_count = 0;
  std::size_t cover_map_size = 0;
  std::size_t witness_total = 0;
  std::vector<RenderedWitness> witnesses;
  /// ETO only: DVisit and D̄Visit.
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> durations;
  std::optional<double> elapsed_ms;

  /// `opaque` / `not opaque`, `representable` / ..., `closed` / ...
  std::string verdict_text() const;
};

struct Report {
  std::string checksum;
  std::vector<CheckOutcome> checks;

  /// 0 if every check is positive, else 1.
  int exit_code() const;
};

/// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string document_checksum(const ModelDocument& document);

/// Enumerates once per referenced budget and evaluates the requested checks.
/// Checker errors are rethrown as tao::Error prefixed with the check name.
/// Throws ConfigError if `options.only` names no check.
Report run_checks(const ModelDocument& document, const RunOptions& options = {});

std::string render_text(const Report& report);
std::string render_json(const Report& report);

} // namespace tao
