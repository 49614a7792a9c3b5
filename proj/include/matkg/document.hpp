#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matkg::doc {

struct FigureRef {
  std::string label;    // as written in the source, e.g. "Fig. 1"
  std::string caption;
  std::optional<std::string> asset_path;

  bool operator==(const FigureRef&) const = default;
};

struct Section {
  std::string heading;
  int level = 1;
  std::vector<std::string> paragraphs;
  std::vector<std::string> figure_labels;  // filled by scan_figure_mentions

  bool operator==(const Section&) const = default;
};

struct Document {
  std::string id;
  std::string title;
  std::vector<Section> sections;
  std::vector<FigureRef> figures;

  bool operator==(const Document&) const = default;
};

enum class TextFormat { plain, markdown };

// Split on blank-line boundaries, trim, drop empties. Paragraphs keep their
// internal single newlines.
std::vector<std::string> segment_paragraphs(std::string_view body);

// Markdown: '#'..'######' headings. Plain: numbered headings ("2.1 Title")
// first, ALL-CAPS lines (<= 8 words) second. Text before the first heading
// goes to an implicit "_preamble" section. Caption lines ("Figure 1: ...")
// become FigureRefs instead of paragraphs.
Document parse_document(const std::string& raw_text, TextFormat format,
                        std::vector<std::string>* diagnostics = nullptr);

// Records "Fig. N" / "Figure N" mentions in each section's figure_labels.
// Mentions with no matching FigureRef are reported in diagnostics.
Document scan_figure_mentions(Document document,
                              std::vector<std::string>* diagnostics = nullptr);

// Inverse of parse_document for the markdown format: emits headings,
// paragraphs and caption lines so that re-parsing yields an equal Document.
std::string to_markdown(const Document& document);

std::string document_to_json(const Document& document);
Document document_from_json(const std::string& text);  // SchemaViolation

// "Fig. 1" and "Figure 1" refer to the same figure.
std::string canonical_figure_label(std::string_view label);

std::string slugify(std::string_view text);

}  // namespace matkg::doc
