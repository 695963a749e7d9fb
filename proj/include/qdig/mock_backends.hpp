#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdig/backends.hpp"
#include "qdig/domain.hpp"
#include "qdig/rng.hpp"

namespace qdig {

// Word lists and template pools driving the mock mutator, judge, and
// brittle-policy evaluator. They share one bundle so a style's templates and
// the rule that detects the style stay consistent (the closure property:
// judge(mutate(target=z)) == z). Shipped as data so desk-scale difficulty is
// tunable without rebuilds; builtin() is the compiled-in copy of the shipped
// file.
struct MockLexicons {
  // detection lexicons, one per default style
  std::vector<std::string> enumerators;           // z0
  std::vector<std::string> rare_words;            // z1
  std::vector<std::string> politeness_words;      // z2
  std::vector<std::string> politeness_bigrams;    // z2, e.g. "could you"
  std::vector<std::string> adverbs;               // z3
  std::vector<std::string> detail_words;          // z4
  int verbose_min_tokens = 15;                    // z5
  std::vector<std::string> slang;                 // z6
  std::vector<std::string> sensory;               // z7

  // z1 substitutions, common -> rare; applied token-wise
  std::vector<std::pair<std::string, std::string>> rare_substitutions;

  // mutation templates, one pool per style; {core}, {adverb}, {adverb2}
  std::vector<std::vector<std::string>> style_templates;

  // baseline pools
  std::vector<std::string> rephrase_templates;
  std::vector<std::string> ert_templates;

  static MockLexicons builtin();
  static MockLexicons load(const std::string& path);
  std::string to_json() const;

  bool operator==(const MockLexicons&) const = default;
};

// Per-style feature detection shared by the mock judge and the brittle
// policy. Rules match the default taxonomy positionally: rule i fires for
// style index i.
class StyleFeatureDetector {
 public:
  StyleFeatureDetector(const MockLexicons& lexicons, int style_count);

  bool fires(int style_index, const std::string& text) const;
  std::vector<int> fired_styles(const std::string& text) const;

 private:
  const MockLexicons& lexicons_;
  int style_count_;
};

// First-match rule cascade in style order, with a configurable default when
// nothing fires.
class MockJudge : public StyleJudge {
 public:
  MockJudge(StyleSet style_set, MockLexicons lexicons, int default_style = 0);

  JudgeLabel classify(const std::string& text) override;

 private:
  StyleSet style_set_;
  MockLexicons lexicons_;
  StyleFeatureDetector detector_;
  int default_style_;
};

struct BrittlePolicyParams {
  double base_rate = 0.9;
  double floor = 0.05;
  // style_index -> success-probability penalty when that style's feature
  // fires; sized to the style set, padded with 0 beyond the defaults
  std::vector<double> penalties;

  static std::vector<double> default_penalties();

  bool operator==(const BrittlePolicyParams&) const = default;
};

// Scripted stand-in for the base policy: success probability degrades when
// the instruction text exhibits attack-style features, which is what makes
// some styles genuinely adversarial at desk scale.
class MockRolloutEvaluator : public RolloutEvaluator {
 public:
  MockRolloutEvaluator(StyleSet style_set, MockLexicons lexicons,
                       BrittlePolicyParams params);

  // clamp(base_rate - sum of fired penalties, floor, 1)
  double success_probability(const std::string& instruction_text) const;

  bool rollout(const std::string& environment_ref,
               const std::string& instruction_text,
               std::uint64_t seed) override;

 private:
  StyleSet style_set_;
  MockLexicons lexicons_;
  StyleFeatureDetector detector_;
  BrittlePolicyParams params_;
};

// Deterministic stand-in for the VLM mutator. Styled outputs are rendered
// from the target style's template pool after stripping the parent's own
// style features, so the closure property holds for styled parents too.
class MockMutator : public TextGenerator {
 public:
  MockMutator(StyleSet style_set, MockLexicons lexicons);

  std::vector<std::string> generate(const GenerationRequest& request) override;

  // Inverse of the template transformations: removes known wrappers and
  // reverses rare-word substitutions.
  std::string extract_core(const std::string& text) const;

  std::string apply_style(const std::string& core, int style, Rng& rng) const;

 private:
  std::string render(const std::string& tmpl, const std::string& core,
                     Rng& rng) const;

  StyleSet style_set_;
  MockLexicons lexicons_;
  // every (prefix, suffix) pair any template can produce, for stripping
  std::vector<std::pair<std::string, std::string>> wrappers_;
};

// Signed token-hash bag of words, L2-normalized. Identical texts map to
// identical vectors; token-disjoint texts are orthogonal unless buckets
// collide.
class MockEmbedder : public Embedder {
 public:
  explicit MockEmbedder(int dimension = 64);

  std::vector<double> embed(const std::string& text) override;

  int dimension() const { return dimension_; }
  // bucket/sign of one token, exposed so tests can verify fixtures
  int bucket_of(const std::string& token) const;
  double sign_of(const std::string& token) const;

 private:
  int dimension_;
};

}  // namespace qdig
