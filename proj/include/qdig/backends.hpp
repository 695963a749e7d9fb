#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdig/domain.hpp"

namespace qdig {

enum class BackendKind { mutator, judge, embedder, evaluator };
enum class BackendMode { mock, remote };

std::string_view to_string(BackendKind k);
std::string_view to_string(BackendMode m);

// Connection/retry parameters for one backend. Auth tokens are referenced
// by environment-variable name only and are never persisted to disk or logs.
struct BackendSpec {
  BackendKind kind = BackendKind::mutator;
  BackendMode mode = BackendMode::mock;
  std::string endpoint_url;   // remote only
  std::string auth_env;       // name of the env var holding the token
  std::string template_path;  // optional prompt-template override
  int timeout_ms = 30000;
  int max_retries = 3;
  int backoff_ms = 250;

  bool operator==(const BackendSpec&) const = default;
};

// One text-generation request. In styled mode target_styles carries one
// entry per requested output; ert mode conditions on exemplars instead and
// rephrase mode paraphrases parent_text with no style targeting.
struct GenerationRequest {
  enum class Mode { styled, ert, rephrase };

  Mode mode = Mode::styled;
  std::string parent_text;
  std::optional<int> parent_style;
  std::vector<int> target_styles;
  std::vector<std::string> exemplars;
  std::string image_ref;
  int n_outputs = 0;
  std::uint64_t seed = 0;
};

class TextGenerator {
 public:
  virtual ~TextGenerator() = default;
  virtual std::vector<std::string> generate(const GenerationRequest& request) = 0;
};

struct JudgeLabel {
  int style_index = 0;
  std::string raw_label;
};

class StyleJudge {
 public:
  virtual ~StyleJudge() = default;
  virtual JudgeLabel classify(const std::string& text) = 0;
};

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<double> embed(const std::string& text) = 0;
};

// One request = one seeded episode verdict.
class RolloutEvaluator {
 public:
  virtual ~RolloutEvaluator() = default;
  virtual bool rollout(const std::string& environment_ref,
                       const std::string& instruction_text,
                       std::uint64_t seed) = 0;
};

struct Backends {
  std::shared_ptr<TextGenerator> mutator;
  std::shared_ptr<StyleJudge> judge;
  std::shared_ptr<Embedder> embedder;
  std::shared_ptr<RolloutEvaluator> evaluator;
};

}  // namespace qdig
