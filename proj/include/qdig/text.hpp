#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qdig {

std::string to_lower(std::string_view s);

// Strips leading/trailing ASCII whitespace.
std::string trim(std::string_view s);

// The tokenization rule shared by the BLEU metric and the mock backends:
// lowercase, strip punctuation characters, split on whitespace. Frozen
// because metric values depend on it.
std::vector<std::string> tokenize(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Replaces {name} placeholders. Unknown placeholders are left untouched so a
// template can be rendered in stages.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars);

}  // namespace qdig
