#include "matkg/text_normalize.hpp"

#include <cctype>

#include "json.hpp"
#include "matkg/errors.hpp"

namespace matkg::text {

std::string normalize_text(std::string_view text,
                           const NormalizationPolicy& policy) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool emitted = false;
  for (unsigned char c : text) {
    if (policy.strip_punctuation.find(static_cast<char>(c)) !=
        std::string::npos)
      continue;
    if (std::isspace(c)) {
      if (policy.collapse_whitespace) {
        pending_space = emitted;  // trims leading runs too
      } else {
        out.push_back(static_cast<char>(c));
      }
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    // Only ASCII is case-folded; multibyte UTF-8 passes through untouched.
    char ch = static_cast<char>(c);
    if (policy.lowercase && c < 0x80)
      ch = static_cast<char>(std::tolower(c));
    out.push_back(ch);
    emitted = true;
  }
  if (!policy.collapse_whitespace) {
    size_t a = out.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = out.find_last_not_of(" \t\r\n");
    return out.substr(a, b - a + 1);
  }
  return out;
}

std::string policy_to_json(const NormalizationPolicy& policy) {
  nlohmann::json j{{"strip_punctuation", policy.strip_punctuation},
                   {"lowercase", policy.lowercase},
                   {"collapse_whitespace", policy.collapse_whitespace}};
  return j.dump(2) + "\n";
}

NormalizationPolicy policy_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaViolation("$", std::string("invalid policy JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaViolation("$", "policy must be an object");
  NormalizationPolicy p;
  if (j.contains("strip_punctuation")) {
    if (!j["strip_punctuation"].is_string())
      throw SchemaViolation("$.strip_punctuation", "expected string");
    p.strip_punctuation = j["strip_punctuation"].get<std::string>();
  }
  if (j.contains("lowercase")) {
    if (!j["lowercase"].is_boolean())
      throw SchemaViolation("$.lowercase", "expected boolean");
    p.lowercase = j["lowercase"].get<bool>();
  }
  if (j.contains("collapse_whitespace")) {
    if (!j["collapse_whitespace"].is_boolean())
      throw SchemaViolation("$.collapse_whitespace", "expected boolean");
    p.collapse_whitespace = j["collapse_whitespace"].get<bool>();
  }
  return p;
}

}  // namespace matkg::text
