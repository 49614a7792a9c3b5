#include "matkg/document.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "matkg/errors.hpp"
#include "matkg/util.hpp"

namespace matkg::doc {

using util::trim;

namespace {

const std::regex kMarkdownHeading{R"(^(#{1,6})\s+(.+)$)"};
// "2.1 Some Title" - level is the number of dotted components. Guarded so
// sentences that merely start with a number ("2.1 mm thick ...") stay text.
const std::regex kNumberedHeading{R"(^(\d+(?:\.\d+)*)\.?\s+(\S.*)$)"};
const std::regex kCaptionLine{R"(^(Fig\.|Figure)\s+(\d+)\s*:\s*(.+)$)"};
const std::regex kFigureMention{R"((Fig\.|Figure)\s+(\d+))"};

int count_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::string w;
  int n = 0;
  while (in >> w) ++n;
  return n;
}

bool ends_with_sentence_punct(std::string_view s) {
  if (s.empty()) return false;
  char c = s.back();
  return c == '.' || c == ';' || c == ',';
}

bool is_all_caps_heading(const std::string& line) {
  bool has_alpha = false;
  for (unsigned char c : line) {
    if (std::isalpha(c)) {
      has_alpha = true;
      if (std::islower(c)) return false;
    }
  }
  if (!has_alpha) return false;
  if (line.front() == '|') return false;  // table row
  return count_words(line) <= 8 && !ends_with_sentence_punct(line);
}

// Returns heading level, or 0 when the line is not a heading.
int classify_heading(const std::string& line, TextFormat format,
                     std::string* heading_text) {
  std::smatch m;
  if (format == TextFormat::markdown) {
    if (std::regex_match(line, m, kMarkdownHeading)) {
      *heading_text = trim(m[2].str());
      return static_cast<int>(m[1].length());
    }
    return 0;
  }
  // Numbered pattern wins over ALL-CAPS when both could apply.
  if (std::regex_match(line, m, kNumberedHeading)) {
    const std::string rest = m[2].str();
    const bool title_like = std::isupper(static_cast<unsigned char>(rest[0]));
    if (title_like && count_words(line) <= 12 &&
        !ends_with_sentence_punct(line)) {
      *heading_text = trim(line);
      return 1 + static_cast<int>(
                     std::count(m[1].first, m[1].second, '.'));
    }
  }
  if (is_all_caps_heading(line)) {
    *heading_text = trim(line);
    return 1;
  }
  return 0;
}

// Pull caption paragraphs out of a section body; they become FigureRefs.
void collect_section(const std::string& heading, int level,
                     const std::string& body, Document* document,
                     std::vector<std::string>* diagnostics) {
  Section section;
  section.heading = heading;
  section.level = level;
  for (std::string& para : segment_paragraphs(body)) {
    std::smatch m;
    std::string flat = para;
    std::replace(flat.begin(), flat.end(), '\n', ' ');
    if (std::regex_match(flat, m, kCaptionLine)) {
      FigureRef fig;
      fig.label = m[1].str() + " " + m[2].str();
      fig.caption = trim(m[3].str());
      auto dup = std::find_if(
          document->figures.begin(), document->figures.end(),
          [&](const FigureRef& f) {
            return canonical_figure_label(f.label) ==
                   canonical_figure_label(fig.label);
          });
      if (dup != document->figures.end()) {
        if (diagnostics)
          diagnostics->push_back("duplicate figure label ignored: " +
                                 fig.label);
      } else {
        document->figures.push_back(std::move(fig));
      }
      continue;
    }
    section.paragraphs.push_back(std::move(para));
  }
  document->sections.push_back(std::move(section));
}

}  // namespace

std::vector<std::string> segment_paragraphs(std::string_view body) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    std::string t = trim(current);
    if (!t.empty()) out.push_back(std::move(t));
    current.clear();
  };
  for (const std::string& line : util::split_lines(body)) {
    if (trim(line).empty()) {
      flush();
    } else {
      if (!current.empty()) current.push_back('\n');
      current += line;
    }
  }
  flush();
  return out;
}

Document parse_document(const std::string& raw_text, TextFormat format,
                        std::vector<std::string>* diagnostics) {
  if (trim(raw_text).empty()) throw EmptyInput("document text is blank");

  Document document;
  std::string heading = "_preamble";
  int level = 1;
  bool in_preamble = true;
  std::string body;

  for (const std::string& line : util::split_lines(raw_text)) {
    std::string heading_text;
    int new_level = classify_heading(line, format, &heading_text);
    if (new_level > 0) {
      if (!in_preamble || !trim(body).empty())
        collect_section(heading, level, body, &document, diagnostics);
      heading = heading_text;
      level = new_level;
      in_preamble = false;
      body.clear();
      if (document.title.empty()) document.title = heading_text;
    } else {
      body += line;
      body.push_back('\n');
    }
  }
  if (!in_preamble || !trim(body).empty())
    collect_section(heading, level, body, &document, diagnostics);

  document.id = document.title.empty() ? "document" : slugify(document.title);
  return document;
}

Document scan_figure_mentions(Document document,
                              std::vector<std::string>* diagnostics) {
  std::vector<std::string> undefined;
  for (Section& section : document.sections) {
    section.figure_labels.clear();
    for (const std::string& para : section.paragraphs) {
      auto begin = std::sregex_iterator(para.begin(), para.end(),
                                        kFigureMention);
      for (auto it = begin; it != std::sregex_iterator(); ++it) {
        std::string label = (*it)[1].str() + " " + (*it)[2].str();
        bool seen = std::any_of(
            section.figure_labels.begin(), section.figure_labels.end(),
            [&](const std::string& l) {
              return canonical_figure_label(l) ==
                     canonical_figure_label(label);
            });
        if (!seen) section.figure_labels.push_back(label);

        bool defined = std::any_of(
            document.figures.begin(), document.figures.end(),
            [&](const FigureRef& f) {
              return canonical_figure_label(f.label) ==
                     canonical_figure_label(label);
            });
        if (!defined &&
            std::find(undefined.begin(), undefined.end(),
                      canonical_figure_label(label)) == undefined.end()) {
          undefined.push_back(canonical_figure_label(label));
          if (diagnostics)
            diagnostics->push_back("figure mentioned but not defined: " +
                                   label + " (section '" + section.heading +
                                   "')");
        }
      }
    }
  }
  return document;
}

std::string to_markdown(const Document& document) {
  std::string out;
  auto blank = [&] {
    if (!out.empty()) out += "\n";
  };
  for (const Section& section : document.sections) {
    if (!(section.heading == "_preamble" && section.level == 1)) {
      blank();
      int level = std::clamp(section.level, 1, 6);
      out += std::string(static_cast<size_t>(level), '#') + " " +
             section.heading + "\n";
    }
    for (const std::string& para : section.paragraphs) {
      blank();
      out += para + "\n";
    }
  }
  for (const FigureRef& fig : document.figures) {
    blank();
    out += fig.label + ": " + fig.caption + "\n";
  }
  return out;
}

std::string document_to_json(const Document& document) {
  nlohmann::json sections = nlohmann::json::array();
  for (const Section& s : document.sections) {
    sections.push_back({{"heading", s.heading},
                        {"level", s.level},
                        {"paragraphs", s.paragraphs},
                        {"figure_labels", s.figure_labels}});
  }
  nlohmann::json figures = nlohmann::json::array();
  for (const FigureRef& f : document.figures) {
    nlohmann::json j{{"label", f.label}, {"caption", f.caption}};
    if (f.asset_path) j["asset_path"] = *f.asset_path;
    figures.push_back(std::move(j));
  }
  nlohmann::json j{{"id", document.id},
                   {"title", document.title},
                   {"sections", sections},
                   {"figures", figures}};
  return j.dump(2) + "\n";
}

Document document_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaViolation("$", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaViolation("$", "expected object");
  Document document;
  if (!j.contains("id") || !j["id"].is_string())
    throw SchemaViolation("$.id", "expected string");
  document.id = j["id"].get<std::string>();
  if (!j.contains("title") || !j["title"].is_string())
    throw SchemaViolation("$.title", "expected string");
  document.title = j["title"].get<std::string>();
  if (!j.contains("sections") || !j["sections"].is_array())
    throw SchemaViolation("$.sections", "expected array");
  size_t i = 0;
  for (const auto& s : j["sections"]) {
    std::string path = "$.sections[" + std::to_string(i++) + "]";
    if (!s.is_object()) throw SchemaViolation(path, "expected object");
    Section section;
    if (!s.contains("heading") || !s["heading"].is_string())
      throw SchemaViolation(path + ".heading", "expected string");
    section.heading = s["heading"].get<std::string>();
    if (!s.contains("level") || !s["level"].is_number_integer() ||
        s["level"].get<int>() < 1)
      throw SchemaViolation(path + ".level", "expected positive integer");
    section.level = s["level"].get<int>();
    if (s.contains("paragraphs")) {
      if (!s["paragraphs"].is_array())
        throw SchemaViolation(path + ".paragraphs", "expected array");
      for (const auto& p : s["paragraphs"]) {
        if (!p.is_string() || p.get<std::string>().empty())
          throw SchemaViolation(path + ".paragraphs",
                                "expected non-empty strings");
        section.paragraphs.push_back(p.get<std::string>());
      }
    }
    if (s.contains("figure_labels")) {
      if (!s["figure_labels"].is_array())
        throw SchemaViolation(path + ".figure_labels", "expected array");
      for (const auto& l : s["figure_labels"])
        section.figure_labels.push_back(l.get<std::string>());
    }
    document.sections.push_back(std::move(section));
  }
  if (j.contains("figures")) {
    if (!j["figures"].is_array())
      throw SchemaViolation("$.figures", "expected array");
    i = 0;
    for (const auto& f : j["figures"]) {
      std::string path = "$.figures[" + std::to_string(i++) + "]";
      if (!f.is_object() || !f.contains("label") || !f["label"].is_string())
        throw SchemaViolation(path, "expected object with label");
      FigureRef fig;
      fig.label = f["label"].get<std::string>();
      fig.caption = f.value("caption", std::string{});
      if (f.contains("asset_path") && f["asset_path"].is_string())
        fig.asset_path = f["asset_path"].get<std::string>();
      document.figures.push_back(std::move(fig));
    }
  }
  return document;
}

std::string canonical_figure_label(std::string_view label) {
  std::string lowered = util::to_lower_ascii(label);
  std::string out;
  for (size_t i = 0; i < lowered.size();) {
    if (lowered.compare(i, 6, "figure") == 0) {
      out += "fig";
      i += 6;
      continue;
    }
    char c = lowered[i++];
    if (c == '.') continue;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
      continue;
    }
    out.push_back(c);
  }
  return util::trim(out);
}

std::string slugify(std::string_view text) {
  std::string out;
  bool dash = false;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      if (dash && !out.empty()) out.push_back('-');
      out.push_back(static_cast<char>(std::tolower(c)));
      dash = false;
    } else {
      dash = true;
    }
  }
  return out.empty() ? "document" : out;
}

}  // namespace matkg::doc
