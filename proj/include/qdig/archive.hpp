#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdig/domain.hpp"
#include "qdig/rng.hpp"

namespace qdig {

enum class InsertOutcome { new_cell, improved, rejected };

std::string_view to_string(InsertOutcome o);
InsertOutcome insert_outcome_from_string(std::string_view s);

struct InsertionLogEntry {
  int iteration = 0;
  int style_index = 0;
  std::string instruction_id;
  InsertOutcome outcome = InsertOutcome::rejected;

  bool operator==(const InsertionLogEntry&) const = default;
};

// Elitist per-style archive. One cell per attack style; a cell keeps the
// highest-variance instruction seen for that style. Mutation is serialized
// by design: callers apply inserts in candidate-index order.
class StyleArchive {
 public:
  explicit StyleArchive(StyleSet style_set);

  // Two update conditions: an empty cell accepts any candidate (new_cell);
  // an occupied cell is replaced only on a strict quality increase
  // (improved). Ties keep the incumbent. Every call appends to the log.
  InsertOutcome insert(const Instruction& instruction, const EvalRecord& eval);

  // Uniform draw over filled cells; the base instruction when none are
  // filled yet.
  const Instruction& select_parent(const Instruction& base_instruction,
                                   Rng& rng) const;

  double coverage() const;
  int filled_count() const;

  const StyleSet& style_set() const { return style_set_; }
  const ArchiveCell* cell(int style_index) const;
  std::vector<const ArchiveCell*> filled_cells() const;  // by style index
  const std::vector<InsertionLogEntry>& insertion_log() const { return log_; }

  // Reassembles an archive from persisted parts (snapshot loading).
  static StyleArchive from_parts(StyleSet style_set,
                                 std::vector<ArchiveCell> cells,
                                 std::vector<InsertionLogEntry> log);

  bool operator==(const StyleArchive&) const = default;

 private:
  StyleSet style_set_;
  std::vector<std::optional<ArchiveCell>> cells_;
  std::vector<InsertionLogEntry> log_;
};

}  // namespace qdig
