#pragma once

#include <string>
#include <string_view>

namespace matkg::text {

// Evaluation-side text cleanup: drop sentence punctuation, case-fold, collapse
// whitespace. Applying a policy twice equals applying it once.
struct NormalizationPolicy {
  std::string strip_punctuation = ".,;";  // set semantics, ASCII characters
  bool lowercase = true;
  bool collapse_whitespace = true;

  bool operator==(const NormalizationPolicy&) const = default;
};

std::string normalize_text(std::string_view text,
                           const NormalizationPolicy& policy);

std::string policy_to_json(const NormalizationPolicy& policy);
NormalizationPolicy policy_from_json(const std::string& text);

}  // namespace matkg::text
