#pragma once

// Assembles the full analysis of one presentation into a report value and
// renders it deterministically (byte-identical output for identical input
// and version) as JSON or human-readable text.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onerel/invariants.hpp"

namespace onerel {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kReportSchema = "onerel.report/1";

struct ThicknessEntry {
  Character character;
  long long value;
};

struct Report {
  Presentation presentation;  // as given
  Word reduced_relator;
  std::vector<std::string> warnings;

  Classification classification;
  AbelianizationData abelianization;

  std::optional<PolytopeInvariant> polytope;
  std::string polytope_refused;  // reason when absent

  MarkingReport marking_report;

  std::vector<ThicknessEntry> thickness_table;
  std::vector<SplittingReport> splitting_table;
  std::string splitting_refused;  // reason when empty

  // Term images whose net integer coefficient would cancel or shrink; the
  // multiset support keeps them (see the polytope invariant's semantics).
  std::vector<std::string> cancellation_notes;

  bool include_trace = false;
};

// All primitive integer pairs with |entries| <= bound that factor through H,
// in lexicographic order.
std::vector<Character> default_character_grid(const Presentation& p, long long bound = 5);

// Runs the pipeline. `character_values` empty means the default grid.
// Throws ClassificationError for free_rank2 / other_b1_1 presentations and
// CharacterError for invalid explicit characters.
Report analyze(const Presentation& p,
               std::span<const std::pair<long long, long long>> character_values,
               bool include_trace = false);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace onerel
