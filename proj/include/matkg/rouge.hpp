#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matkg/text_normalize.hpp"

namespace matkg::rouge {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const RougeScore&) const = default;
};

// precision/recall as given; f1 = 2pr/(p+r), 0 when p+r == 0.
RougeScore make_score(double precision, double recall);

// Componentwise arithmetic mean over p, r and f1. Composite rows are means,
// not re-derived harmonic f1 (the corpus report averages the same way).
RougeScore mean_score(const RougeScore& a, const RougeScore& b);

std::vector<std::string> tokenize(std::string_view text,
                                  const text::NormalizationPolicy& policy);

// Clipped n-gram overlap: precision over candidate n-grams, recall over
// reference n-grams; 0/0 -> 0.
RougeScore ngram_rouge(const std::vector<std::string>& reference,
                       const std::vector<std::string>& candidate, int n);

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b);

// Positions (into `reference`) of one LCS between reference and candidate.
// Deterministic backtrace: take a match when tokens are equal, otherwise
// drop the reference token when both directions tie.
std::vector<std::size_t> lcs_match_positions(
    std::span<const std::string> reference,
    std::span<const std::string> candidate);

// Split on newlines and on '.', '!' or '?' followed by whitespace (so decimal
// points survive). Must run before punctuation stripping.
std::vector<std::string> split_sentences(std::string_view text);

RougeScore rouge_l(std::string_view reference, std::string_view candidate,
                   const text::NormalizationPolicy& policy);

// Sentence-level LCS: per reference sentence, union of LCS-matched positions
// against every candidate sentence; the union drives both precision and
// recall, so no reference token is counted twice.
RougeScore rouge_lsum(std::string_view reference, std::string_view candidate,
                      const text::NormalizationPolicy& policy);

struct MatchReport {
  RougeScore rouge1, rouge2, rougeL, rougeLsum;
  RougeScore exact;    // mean(rouge1, rouge2)
  RougeScore relaxed;  // mean(rougeL, rougeLsum)
};

MatchReport match_report(std::string_view reference,
                         std::string_view candidate,
                         const text::NormalizationPolicy& policy);

struct CorpusPair {
  std::string name;
  std::string reference_path;
  std::string candidate_path;
};

struct CorpusRow {
  std::string pair_name;
  RougeScore exact;
  RougeScore relaxed;
};

struct CorpusReport {
  std::vector<CorpusRow> rows;
  CorpusRow average_row;  // componentwise mean of rows
};

CorpusRow average_rows(const std::vector<CorpusRow>& rows);
CorpusReport evaluate_corpus(const std::vector<CorpusPair>& pairs,
                             const text::NormalizationPolicy& policy);

std::string match_report_text(const MatchReport& report);
std::string match_report_json(const MatchReport& report);
std::string corpus_report_text(const CorpusReport& report);
std::string corpus_report_json(const CorpusReport& report);
std::string corpus_report_csv(const CorpusReport& report);

}  // namespace matkg::rouge
