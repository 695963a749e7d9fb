#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdig {

// One semantic category of instruction perturbation. The archive has one
// cell per style.
struct AttackStyle {
  int index = 0;
  std::string name;
  std::string description;

  bool operator==(const AttackStyle&) const = default;
};

// Ordered set of attack styles. Indices are contiguous from 0.
class StyleSet {
 public:
  explicit StyleSet(std::vector<AttackStyle> styles);

  // The shipped taxonomy: 8 styles, z0 through z7.
  static StyleSet default_set();

  int size() const { return static_cast<int>(styles_.size()); }
  const AttackStyle& at(int index) const;
  const std::vector<AttackStyle>& styles() const { return styles_; }
  bool contains(int index) const { return index >= 0 && index < size(); }

  // Case-insensitive, whitespace-trimmed lookup. Accepts the style name or
  // the short "z<index>" form.
  std::optional<int> resolve_label(std::string_view label) const;

  bool operator==(const StyleSet&) const = default;

 private:
  std::vector<AttackStyle> styles_;
};

// A task is opaque to the engine: the rollout evaluator owns the initial
// state distribution and the goal predicate behind environment_ref.
struct Task {
  std::string task_id;
  std::string base_instruction_text;
  std::string environment_ref;
  std::string image_ref;  // optional handle to the initial observation

  bool operator==(const Task&) const = default;
};

enum class Provenance { original, qdig, ert, rephrase };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

struct Instruction {
  std::string id;
  std::string text;
  std::string task_id;
  Provenance provenance = Provenance::original;
  std::optional<std::string> parent_id;
  std::optional<int> target_style;  // style the mutator was asked for
  std::optional<int> judged_style;  // style assigned by the judge
  int iteration = 0;

  bool operator==(const Instruction&) const = default;
};

// Rollout statistics for one instruction. Success counts are kept as exact
// integers; ratios are materialized only for reporting, so ordering
// decisions never depend on float rounding.
struct EvalRecord {
  std::string instruction_id;
  int n_rollouts = 0;
  int n_successes = 0;
  std::vector<std::uint64_t> rollout_seeds;

  double success_rate() const;
  double quality() const;           // p * (1 - p)
  double quality_rescaled() const;  // 4 * quality, in [0, 1]

  bool operator==(const EvalRecord&) const = default;
};

// Exact comparison of p(1-p) via integer cross-multiplication.
bool quality_less(const EvalRecord& a, const EvalRecord& b);
bool quality_equal(const EvalRecord& a, const EvalRecord& b);

struct ArchiveCell {
  int style_index = 0;
  Instruction instruction;
  EvalRecord eval;
  int inserted_at_iteration = 0;

  bool operator==(const ArchiveCell&) const = default;
};

// Variance of the policy's outcome at the given success rate. Maximal at
// 0.5, zero at both ends. Throws std::domain_error outside [0, 1].
double failure_variance(double success_rate);

// Maps a variance in [0, 0.25] onto [0, 1]. Throws std::domain_error
// outside that range.
double rescale_variance(double quality);

}  // namespace qdig
