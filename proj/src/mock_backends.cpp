#include "qdig/mock_backends.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "qdig/errors.hpp"
#include "qdig/text.hpp"

namespace qdig {

namespace {

bool has_token(const std::vector<std::string>& lexicon,
               const std::vector<std::string>& tokens) {
  for (const auto& t : tokens)
    if (std::find(lexicon.begin(), lexicon.end(), t) != lexicon.end())
      return true;
  return false;
}

bool has_bigram(const std::vector<std::string>& bigrams,
                const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    std::string pair = tokens[i] + " " + tokens[i + 1];
    if (std::find(bigrams.begin(), bigrams.end(), pair) != bigrams.end())
      return true;
  }
  return false;
}

}  // namespace

MockLexicons MockLexicons::builtin() {
  MockLexicons lex;
  lex.enumerators = {"first",  "second", "third",     "then",
                     "next",   "step",   "steps",     "finally",
                     "afterwards"};
  lex.rare_words = {"propel",  "procure",  "deposit",   "transpose",
                    "unlatch", "fasten",   "pivot",     "apprehend",
                    "acquire", "elevate",  "depress",   "canister",
                    "receptacle", "vessel", "situate",  "endeavor"};
  lex.politeness_words = {"please", "kindly", "thanks", "thank"};
  lex.politeness_bigrams = {"could you", "would you", "can you"};
  lex.adverbs = {"carefully", "gently",    "slowly",    "quickly",
                 "smoothly",  "precisely", "cautiously", "swiftly"};
  lex.detail_words = {"gripper", "wrist",     "joint",    "fingers", "grasp",
                      "extending", "aligning", "clamping", "actuator"};
  lex.verbose_min_tokens = 15;
  lex.slang = {"yo", "gotta", "wanna", "buddy", "dude", "cmon", "gonna"};
  lex.sensory = {"hear", "click", "shiny", "listen",
                 "beep", "sound", "glossy", "noise"};

  lex.rare_substitutions = {
      {"push", "propel"},   {"pick", "procure"},  {"put", "deposit"},
      {"place", "situate"}, {"move", "transpose"}, {"open", "unlatch"},
      {"close", "fasten"},  {"turn", "pivot"},     {"grab", "apprehend"},
      {"take", "acquire"},  {"lift", "elevate"},   {"press", "depress"},
      {"can", "canister"},  {"box", "receptacle"}, {"bowl", "vessel"},
  };

  lex.style_templates = {
      // z0 step-by-step
      {"first, {core}. then, confirm completion.",
       "first, get into position. then, {core}.",
       "first, {core}. then, verify the outcome."},
      // z1 uncommon vocabulary: token substitution with a wrapped fallback
      {"{substitute}"},
      // z2 human-centric tone
      {"could you please {core}, thanks?",
       "would you kindly {core}? thank you!",
       "can you please {core} for me?"},
      // z3 adverbs
      {"{adverb} {core}", "{core} {adverb}", "{adverb} and {adverb2}, {core}"},
      // z4 unnecessary action specification
      {"{core} by extending the gripper toward it and closing the fingers",
       "{core} using a slow approach of the wrist and a firm grasp",
       "{core} after aligning the joint angles"},
      // z5 overly verbose reformulation
      {"in order to accomplish the task at hand, {core}, making sure that "
       "the goal of the task is satisfied",
       "the objective of the current assignment is as follows: {core}, and "
       "the assignment counts as complete when the goal has been reached"},
      // z6 colloquial
      {"yo, {core} real quick", "c'mon buddy, {core}",
       "{core}, gotta do it now"},
      // z7 mixed modality
      {"{core} until you hear the click", "{core}, the shiny one",
       "{core} and listen for the beep"},
  };

  lex.rephrase_templates = {
      "{core}",
      "{core} now",
      "please {core}",
      "{core} slowly",
      "when you are ready and everything is in position, {core}, and make "
      "sure that it is done in the end",
      "go ahead and {core}",
      "{core} for me, please",
      "{core} gently",
      "it would be great if you could {core}",
      "{core} when possible",
  };

  lex.ert_templates = {
      "{core}",
      "{core} now",
      "{adverb} {core}",
      "{core} {adverb}",
      "the task to perform is the following: {core}, and it must be carried "
      "out until it is finished entirely",
  };
  return lex;
}

namespace {

nlohmann::json pairs_to_json(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(
    const nlohmann::json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) out.emplace_back(e.at(0), e.at(1));
  return out;
}

}  // namespace

std::string MockLexicons::to_json() const {
  nlohmann::json j;
  j["enumerators"] = enumerators;
  j["rare_words"] = rare_words;
  j["politeness_words"] = politeness_words;
  j["politeness_bigrams"] = politeness_bigrams;
  j["adverbs"] = adverbs;
  j["detail_words"] = detail_words;
  j["verbose_min_tokens"] = verbose_min_tokens;
  j["slang"] = slang;
  j["sensory"] = sensory;
  j["rare_substitutions"] = pairs_to_json(rare_substitutions);
  j["style_templates"] = style_templates;
  j["rephrase_templates"] = rephrase_templates;
  j["ert_templates"] = ert_templates;
  return j.dump(2) + "\n";
}

MockLexicons MockLexicons::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("lexicon file " + path + " is not valid JSON: " + e.what());
  }
  try {
    MockLexicons lex;
    lex.enumerators = j.at("enumerators").get<std::vector<std::string>>();
    lex.rare_words = j.at("rare_words").get<std::vector<std::string>>();
    lex.politeness_words =
        j.at("politeness_words").get<std::vector<std::string>>();
    lex.politeness_bigrams =
        j.at("politeness_bigrams").get<std::vector<std::string>>();
    lex.adverbs = j.at("adverbs").get<std::vector<std::string>>();
    lex.detail_words = j.at("detail_words").get<std::vector<std::string>>();
    lex.verbose_min_tokens = j.at("verbose_min_tokens").get<int>();
    lex.slang = j.at("slang").get<std::vector<std::string>>();
    lex.sensory = j.at("sensory").get<std::vector<std::string>>();
    lex.rare_substitutions = pairs_from_json(j.at("rare_substitutions"));
    lex.style_templates =
        j.at("style_templates").get<std::vector<std::vector<std::string>>>();
    lex.rephrase_templates =
        j.at("rephrase_templates").get<std::vector<std::string>>();
    lex.ert_templates = j.at("ert_templates").get<std::vector<std::string>>();
    return lex;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("lexicon file " + path + " is missing fields: " + e.what());
  }
}

StyleFeatureDetector::StyleFeatureDetector(const MockLexicons& lexicons,
                                           int style_count)
    : lexicons_(lexicons), style_count_(style_count) {}

bool StyleFeatureDetector::fires(int style_index,
                                 const std::string& text) const {
  const std::vector<std::string> tokens = tokenize(text);
  switch (style_index) {
    case 0: return has_token(lexicons_.enumerators, tokens);
    case 1: return has_token(lexicons_.rare_words, tokens);
    case 2:
      return has_token(lexicons_.politeness_words, tokens) ||
             has_bigram(lexicons_.politeness_bigrams, tokens);
    case 3: return has_token(lexicons_.adverbs, tokens);
    case 4: return has_token(lexicons_.detail_words, tokens);
    case 5:
      return static_cast<int>(tokens.size()) >= lexicons_.verbose_min_tokens;
    case 6: return has_token(lexicons_.slang, tokens);
    case 7: return has_token(lexicons_.sensory, tokens);
    default: return false;  // styles beyond the shipped taxonomy
  }
}

std::vector<int> StyleFeatureDetector::fired_styles(
    const std::string& text) const {
  std::vector<int> fired;
  for (int i = 0; i < style_count_; ++i)
    if (fires(i, text)) fired.push_back(i);
  return fired;
}

MockJudge::MockJudge(StyleSet style_set, MockLexicons lexicons,
                     int default_style)
    : style_set_(std::move(style_set)),
      lexicons_(std::move(lexicons)),
      detector_(lexicons_, style_set_.size()),
      default_style_(default_style) {
  if (!style_set_.contains(default_style))
    throw std::invalid_argument("judge default style out of range");
}

JudgeLabel MockJudge::classify(const std::string& text) {
  // fixed priority: the first style whose rule fires wins
  for (int i = 0; i < style_set_.size(); ++i) {
    if (detector_.fires(i, text)) return {i, style_set_.at(i).name};
  }
  return {default_style_, style_set_.at(default_style_).name};
}

std::vector<double> BrittlePolicyParams::default_penalties() {
  return {0.15, 0.35, 0.10, 0.40, 0.25, 0.45, 0.20, 0.50};
}

MockRolloutEvaluator::MockRolloutEvaluator(StyleSet style_set,
                                           MockLexicons lexicons,
                                           BrittlePolicyParams params)
    : style_set_(std::move(style_set)),
      lexicons_(std::move(lexicons)),
      detector_(lexicons_, style_set_.size()),
      params_(std::move(params)) {
  if (params_.penalties.empty())
    params_.penalties = BrittlePolicyParams::default_penalties();
  params_.penalties.resize(static_cast<std::size_t>(style_set_.size()), 0.0);
}

double MockRolloutEvaluator::success_probability(
    const std::string& instruction_text) const {
  double p = params_.base_rate;
  for (int fired : detector_.fired_styles(instruction_text))
    p -= params_.penalties[static_cast<std::size_t>(fired)];
  return std::clamp(p, params_.floor, 1.0);
}

bool MockRolloutEvaluator::rollout(const std::string& /*environment_ref*/,
                                   const std::string& instruction_text,
                                   std::uint64_t seed) {
  const double p = success_probability(instruction_text);
  const std::uint64_t draw = mix64(seed ^ fnv1a64(instruction_text));
  const double u = static_cast<double>(draw >> 11) * 0x1.0p-53;
  return u < p;
}

MockMutator::MockMutator(StyleSet style_set, MockLexicons lexicons)
    : style_set_(std::move(style_set)), lexicons_(std::move(lexicons)) {
  // Enumerate every concrete (prefix, suffix) wrapper a template can emit;
  // extract_core strips these to recover the clean instruction.
  auto add_wrappers = [this](const std::string& tmpl) {
    const std::size_t at = tmpl.find("{core}");
    if (at == std::string::npos) return;
    const std::string pre = tmpl.substr(0, at);
    const std::string suf = tmpl.substr(at + 6);
    const bool has_a = pre.find("{adverb}") != std::string::npos ||
                       suf.find("{adverb}") != std::string::npos;
    const bool has_a2 = pre.find("{adverb2}") != std::string::npos ||
                        suf.find("{adverb2}") != std::string::npos;
    std::vector<std::pair<std::string, std::string>> expanded;
    if (!has_a && !has_a2) {
      expanded.emplace_back(pre, suf);
    } else {
      for (const auto& a : lexicons_.adverbs) {
        if (!has_a2) {
          expanded.emplace_back(
              render_template(pre, {{"adverb", a}}),
              render_template(suf, {{"adverb", a}}));
          continue;
        }
        for (const auto& a2 : lexicons_.adverbs) {
          std::map<std::string, std::string> vars{{"adverb", a},
                                                  {"adverb2", a2}};
          expanded.emplace_back(render_template(pre, vars),
                                render_template(suf, vars));
        }
      }
    }
    for (auto& [p, s] : expanded)
      if (!(p.empty() && s.empty())) wrappers_.emplace_back(p, s);
  };

  for (const auto& pool : lexicons_.style_templates)
    for (const auto& t : pool) add_wrappers(t);
  for (const auto& t : lexicons_.rephrase_templates) add_wrappers(t);
  for (const auto& t : lexicons_.ert_templates) add_wrappers(t);
  add_wrappers("endeavor to {core}");  // z1 fallback

  // longest wrappers first so partial matches never shadow full ones
  std::stable_sort(wrappers_.begin(), wrappers_.end(),
                   [](const auto& x, const auto& y) {
                     return x.first.size() + x.second.size() >
                            y.first.size() + y.second.size();
                   });
}

std::string MockMutator::extract_core(const std::string& text) const {
  std::string core = trim(text);
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (const auto& [pre, suf] : wrappers_) {
      if (core.size() <= pre.size() + suf.size()) continue;
      if (!pre.empty() && !core.starts_with(pre)) continue;
      if (!suf.empty() && !core.ends_with(suf)) continue;
      core = trim(core.substr(pre.size(), core.size() - pre.size() - suf.size()));
      stripped = true;
      break;
    }
  }

  // reverse rare-word substitutions, keeping surrounding punctuation
  std::vector<std::string> chunks;
  std::string chunk;
  for (char c : core) {
    if (c == ' ') {
      if (!chunk.empty()) chunks.push_back(chunk);
      chunk.clear();
    } else {
      chunk.push_back(c);
    }
  }
  if (!chunk.empty()) chunks.push_back(chunk);

  for (auto& word : chunks) {
    std::size_t begin = 0;
    std::size_t end = word.size();
    while (begin < end && std::ispunct(static_cast<unsigned char>(word[begin])))
      ++begin;
    while (end > begin && std::ispunct(static_cast<unsigned char>(word[end - 1])))
      --end;
    const std::string bare = to_lower(word.substr(begin, end - begin));
    for (const auto& [common, rare] : lexicons_.rare_substitutions) {
      if (bare == rare) {
        word = word.substr(0, begin) + common + word.substr(end);
        break;
      }
    }
  }
  return join(chunks, " ");
}

std::string MockMutator::render(const std::string& tmpl,
                                const std::string& core, Rng& rng) const {
  std::map<std::string, std::string> vars{{"core", core}};
  if (tmpl.find("{adverb}") != std::string::npos) {
    const std::size_t n = lexicons_.adverbs.size();
    const std::size_t i = static_cast<std::size_t>(rng.next_below(n));
    vars["adverb"] = lexicons_.adverbs[i];
    if (tmpl.find("{adverb2}") != std::string::npos) {
      std::size_t j = n > 1 ? static_cast<std::size_t>(rng.next_below(n - 1))
                            : 0;
      if (j >= i && n > 1) ++j;
      vars["adverb2"] = lexicons_.adverbs[j];
    }
  }
  return render_template(tmpl, vars);
}

std::string MockMutator::apply_style(const std::string& core, int style,
                                     Rng& rng) const {
  if (core.empty()) throw std::invalid_argument("cannot mutate empty text");
  const auto& pools = lexicons_.style_templates;
  if (style < 0 || static_cast<std::size_t>(style) >= pools.size() ||
      pools[static_cast<std::size_t>(style)].empty()) {
    // style outside the shipped template pools: identity mutation
    return core;
  }
  const auto& pool = pools[static_cast<std::size_t>(style)];
  const std::string& tmpl =
      pool[static_cast<std::size_t>(rng.next_below(pool.size()))];

  if (tmpl == "{substitute}") {
    // token-wise common -> rare replacement; wrapped fallback when the core
    // offers nothing to substitute
    std::vector<std::string> chunks;
    std::string chunk;
    for (char c : core) {
      if (c == ' ') {
        if (!chunk.empty()) chunks.push_back(chunk);
        chunk.clear();
      } else {
        chunk.push_back(c);
      }
    }
    if (!chunk.empty()) chunks.push_back(chunk);
    bool substituted = false;
    for (auto& word : chunks) {
      std::size_t begin = 0;
      std::size_t end = word.size();
      while (begin < end &&
             std::ispunct(static_cast<unsigned char>(word[begin])))
        ++begin;
      while (end > begin &&
             std::ispunct(static_cast<unsigned char>(word[end - 1])))
        --end;
      const std::string bare = to_lower(word.substr(begin, end - begin));
      for (const auto& [common, rare] : lexicons_.rare_substitutions) {
        if (bare == common) {
          word = word.substr(0, begin) + rare + word.substr(end);
          substituted = true;
          break;
        }
      }
    }
    if (!substituted) return "endeavor to " + core;
    return join(chunks, " ");
  }
  return render(tmpl, core, rng);
}

std::vector<std::string> MockMutator::generate(
    const GenerationRequest& request) {
  if (request.n_outputs < 0)
    throw std::invalid_argument("n_outputs must be non-negative");
  Rng rng(request.seed);
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(request.n_outputs));

  switch (request.mode) {
    case GenerationRequest::Mode::styled: {
      if (trim(request.parent_text).empty())
        throw std::invalid_argument("parent text must not be empty");
      if (static_cast<int>(request.target_styles.size()) != request.n_outputs)
        throw std::invalid_argument(
            "styled generation needs one target style per output");
      const std::string core = extract_core(request.parent_text);
      for (int i = 0; i < request.n_outputs; ++i)
        out.push_back(apply_style(core, request.target_styles[i], rng));
      break;
    }
    case GenerationRequest::Mode::rephrase: {
      if (trim(request.parent_text).empty())
        throw std::invalid_argument("parent text must not be empty");
      const std::string core = extract_core(request.parent_text);
      const std::size_t n_templates = lexicons_.rephrase_templates.size();
      for (int i = 0; i < request.n_outputs; ++i) {
        const auto& tmpl =
            lexicons_.rephrase_templates[static_cast<std::size_t>(i) %
                                         n_templates];
        out.push_back(render(tmpl, core, rng));
      }
      break;
    }
    case GenerationRequest::Mode::ert: {
      if (request.exemplars.empty())
        throw std::invalid_argument("ert generation needs exemplars");
      const std::size_t n_templates = lexicons_.ert_templates.size();
      for (int i = 0; i < request.n_outputs; ++i) {
        const auto& exemplar =
            request.exemplars[static_cast<std::size_t>(
                rng.next_below(request.exemplars.size()))];
        const std::string core = extract_core(exemplar);
        const auto& tmpl =
            lexicons_.ert_templates[static_cast<std::size_t>(
                rng.next_below(n_templates))];
        out.push_back(render(tmpl, core, rng));
      }
      break;
    }
  }
  return out;
}

MockEmbedder::MockEmbedder(int dimension) : dimension_(dimension) {
  if (dimension_ < 2)
    throw std::invalid_argument("embedding dimension must be at least 2");
}

int MockEmbedder::bucket_of(const std::string& token) const {
  return static_cast<int>(fnv1a64(token) %
                          static_cast<std::uint64_t>(dimension_));
}

double MockEmbedder::sign_of(const std::string& token) const {
  return ((fnv1a64(token) >> 32) & 1u) ? 1.0 : -1.0;
}

std::vector<double> MockEmbedder::embed(const std::string& text) {
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty())
    throw DataError("cannot embed text with no tokens: \"" + text + "\"");
  std::vector<double> v(static_cast<std::size_t>(dimension_), 0.0);
  for (const auto& t : tokens)
    v[static_cast<std::size_t>(bucket_of(t))] += sign_of(t);
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (norm2 == 0.0)
    throw DataError("embedding collapsed to zero for text: \"" + text + "\"");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv;
  return v;
}

std::string_view to_string(BackendKind k) {
  switch (k) {
    case BackendKind::mutator: return "mutator";
    case BackendKind::judge: return "judge";
    case BackendKind::embedder: return "embedder";
    case BackendKind::evaluator: return "evaluator";
  }
  return "mutator";
}

std::string_view to_string(BackendMode m) {
  return m == BackendMode::mock ? "mock" : "remote";
}

}  // namespace qdig
