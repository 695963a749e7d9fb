#include "qdig/archive.hpp"

#include <stdexcept>

namespace qdig {

std::string_view to_string(InsertOutcome o) {
  switch (o) {
    case InsertOutcome::new_cell: return "new_cell";
    case InsertOutcome::improved: return "improved";
    case InsertOutcome::rejected: return "rejected";
  }
  return "rejected";
}

InsertOutcome insert_outcome_from_string(std::string_view s) {
  if (s == "new_cell") return InsertOutcome::new_cell;
  if (s == "improved") return InsertOutcome::improved;
  if (s == "rejected") return InsertOutcome::rejected;
  throw std::invalid_argument("unknown insert outcome: " + std::string(s));
}

StyleArchive::StyleArchive(StyleSet style_set)
    : style_set_(std::move(style_set)),
      cells_(static_cast<std::size_t>(style_set_.size())) {}

InsertOutcome StyleArchive::insert(const Instruction& instruction,
                                   const EvalRecord& eval) {
  if (!instruction.judged_style.has_value())
    throw std::invalid_argument("instruction " + instruction.id +
                                " has no judged style");
  const int style = *instruction.judged_style;
  if (!style_set_.contains(style))
    throw std::out_of_range("judged style " + std::to_string(style) +
                            " out of range for this archive");

  auto& slot = cells_[static_cast<std::size_t>(style)];
  InsertOutcome outcome;
  if (!slot.has_value()) {
    slot = ArchiveCell{style, instruction, eval, instruction.iteration};
    outcome = InsertOutcome::new_cell;
  } else if (quality_less(slot->eval, eval)) {
    slot = ArchiveCell{style, instruction, eval, instruction.iteration};
    outcome = InsertOutcome::improved;
  } else {
    outcome = InsertOutcome::rejected;
  }
  log_.push_back({instruction.iteration, style, instruction.id, outcome});
  return outcome;
}

const Instruction& StyleArchive::select_parent(
    const Instruction& base_instruction, Rng& rng) const {
  std::vector<const ArchiveCell*> filled = filled_cells();
  if (filled.empty()) return base_instruction;
  const std::size_t pick =
      static_cast<std::size_t>(rng.next_below(filled.size()));
  return filled[pick]->instruction;
}

double StyleArchive::coverage() const {
  return static_cast<double>(filled_count()) /
         static_cast<double>(style_set_.size());
}

int StyleArchive::filled_count() const {
  int count = 0;
  for (const auto& c : cells_)
    if (c.has_value()) ++count;
  return count;
}

const ArchiveCell* StyleArchive::cell(int style_index) const {
  if (!style_set_.contains(style_index))
    throw std::out_of_range("style index out of range");
  const auto& slot = cells_[static_cast<std::size_t>(style_index)];
  return slot.has_value() ? &*slot : nullptr;
}

std::vector<const ArchiveCell*> StyleArchive::filled_cells() const {
  std::vector<const ArchiveCell*> out;
  for (const auto& c : cells_)
    if (c.has_value()) out.push_back(&*c);
  return out;
}

StyleArchive StyleArchive::from_parts(StyleSet style_set,
                                      std::vector<ArchiveCell> cells,
                                      std::vector<InsertionLogEntry> log) {
  StyleArchive archive(std::move(style_set));
  for (auto& cell : cells) {
    if (!archive.style_set_.contains(cell.style_index))
      throw std::out_of_range("cell style index out of range");
    auto& slot = archive.cells_[static_cast<std::size_t>(cell.style_index)];
    if (slot.has_value())
      throw std::invalid_argument("duplicate cell for style " +
                                  std::to_string(cell.style_index));
    slot = std::move(cell);
  }
  archive.log_ = std::move(log);
  return archive;
}

}  // namespace qdig
