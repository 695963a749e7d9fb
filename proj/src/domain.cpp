#include "qdig/domain.hpp"

#include <stdexcept>

#include "qdig/text.hpp"

namespace qdig {

StyleSet::StyleSet(std::vector<AttackStyle> styles) : styles_(std::move(styles)) {
  if (styles_.empty()) throw std::invalid_argument("style set must not be empty");
  for (std::size_t i = 0; i < styles_.size(); ++i) {
    if (styles_[i].index != static_cast<int>(i))
      throw std::invalid_argument("style indices must be contiguous from 0");
    if (styles_[i].name.empty())
      throw std::invalid_argument("style name must not be empty");
  }
}

StyleSet StyleSet::default_set() {
  return StyleSet({
      {0, "step-by-step",
       "unnecessary breakdown of the task into multiple sequential steps"},
      {1, "uncommon-vocabulary",
       "use of rare, technical, or overly formal words instead of simple ones"},
      {2, "human-centric-tone",
       "instruction phrased as if addressing a human instead of a robot"},
      {3, "adverbs",
       "adding vague modifiers like \"carefully\" or \"gently\" that don't add clarity"},
      {4, "action-specification",
       "extra details about how to execute the task, beyond the core instruction"},
      {5, "verbose",
       "inflated or wordy phrasing without changing the meaning"},
      {6, "colloquial",
       "use of slang or conversational tone inappropriate for robotic tasks"},
      {7, "mixed-modality",
       "adding sensory references (e.g., sight, sound) that the robot may not have"},
  });
}

const AttackStyle& StyleSet::at(int index) const {
  if (!contains(index)) throw std::out_of_range("style index out of range");
  return styles_[static_cast<std::size_t>(index)];
}

std::optional<int> StyleSet::resolve_label(std::string_view label) const {
  std::string norm = to_lower(trim(label));
  if (norm.empty()) return std::nullopt;
  for (const auto& s : styles_) {
    if (to_lower(s.name) == norm) return s.index;
  }
  // short form: "z3"
  if (norm.size() >= 2 && norm[0] == 'z') {
    int idx = 0;
    bool numeric = true;
    for (std::size_t i = 1; i < norm.size(); ++i) {
      if (norm[i] < '0' || norm[i] > '9') {
        numeric = false;
        break;
      }
      idx = idx * 10 + (norm[i] - '0');
    }
    if (numeric && contains(idx)) return idx;
  }
  return std::nullopt;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::original: return "original";
    case Provenance::qdig: return "qdig";
    case Provenance::ert: return "ert";
    case Provenance::rephrase: return "rephrase";
  }
  return "original";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "original") return Provenance::original;
  if (s == "qdig") return Provenance::qdig;
  if (s == "ert") return Provenance::ert;
  if (s == "rephrase") return Provenance::rephrase;
  throw std::invalid_argument("unknown provenance: " + std::string(s));
}

double EvalRecord::success_rate() const {
  if (n_rollouts <= 0) throw std::logic_error("EvalRecord has no rollouts");
  return static_cast<double>(n_successes) / static_cast<double>(n_rollouts);
}

double EvalRecord::quality() const {
  if (n_rollouts <= 0) throw std::logic_error("EvalRecord has no rollouts");
  const double s = static_cast<double>(n_successes);
  const double n = static_cast<double>(n_rollouts);
  return s * (n - s) / (n * n);
}

double EvalRecord::quality_rescaled() const { return 4.0 * quality(); }

namespace {

// p(1-p) = s(n-s)/n^2; compare a vs b by cross-multiplying in 128 bits.
__int128 cross(const EvalRecord& x, const EvalRecord& y) {
  const __int128 sx = x.n_successes;
  const __int128 nx = x.n_rollouts;
  const __int128 ny = y.n_rollouts;
  return sx * (nx - sx) * ny * ny;
}

}  // namespace

bool quality_less(const EvalRecord& a, const EvalRecord& b) {
  if (a.n_rollouts <= 0 || b.n_rollouts <= 0)
    throw std::logic_error("quality comparison requires rollouts");
  return cross(a, b) < cross(b, a);
}

bool quality_equal(const EvalRecord& a, const EvalRecord& b) {
  if (a.n_rollouts <= 0 || b.n_rollouts <= 0)
    throw std::logic_error("quality comparison requires rollouts");
  return cross(a, b) == cross(b, a);
}

double failure_variance(double success_rate) {
  if (!(success_rate >= 0.0 && success_rate <= 1.0))
    throw std::domain_error("success rate must lie in [0, 1]");
  return success_rate * (1.0 - success_rate);
}

double rescale_variance(double quality) {
  if (!(quality >= 0.0 && quality <= 0.25))
    throw std::domain_error("variance must lie in [0, 0.25]");
  return 4.0 * quality;
}

}  // namespace qdig
