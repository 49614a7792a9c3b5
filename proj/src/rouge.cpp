#include "matkg/rouge.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "matkg/errors.hpp"
#include "matkg/util.hpp"

namespace matkg::rouge {

RougeScore make_score(double precision, double recall) {
  RougeScore s;
  s.precision = precision;
  s.recall = recall;
  s.f1 = (precision + recall) > 0.0
             ? 2.0 * precision * recall / (precision + recall)
             : 0.0;
  return s;
}

RougeScore mean_score(const RougeScore& a, const RougeScore& b) {
  return RougeScore{(a.precision + b.precision) / 2.0,
                    (a.recall + b.recall) / 2.0, (a.f1 + b.f1) / 2.0};
}

std::vector<std::string> tokenize(std::string_view text,
                                  const text::NormalizationPolicy& policy) {
  std::istringstream in{text::normalize_text(text, policy)};
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

namespace {

// n-grams keyed by joining tokens with an unlikely separator byte.
std::unordered_map<std::string, int> ngram_counts(
    const std::vector<std::string>& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (n <= 0 || tokens.size() < static_cast<size_t>(n)) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (size_t k = 1; k < static_cast<size_t>(n); ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

RougeScore ngram_rouge(const std::vector<std::string>& reference,
                       const std::vector<std::string>& candidate, int n) {
  auto ref_counts = ngram_counts(reference, n);
  auto cand_counts = ngram_counts(candidate, n);
  long ref_total = 0, cand_total = 0, overlap = 0;
  for (const auto& [key, c] : ref_counts) ref_total += c;
  for (const auto& [key, c] : cand_counts) {
    cand_total += c;
    auto it = ref_counts.find(key);
    if (it != ref_counts.end()) overlap += std::min(c, it->second);
  }
  double p = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
  double r = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
  return make_score(p, r);
}

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  if (b.size() > a.size()) std::swap(a, b);  // keep the rows short
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::size_t> lcs_match_positions(
    std::span<const std::string> reference,
    std::span<const std::string> candidate) {
  const size_t m = reference.size(), n = candidate.size();
  std::vector<std::vector<std::size_t>> t(m + 1,
                                          std::vector<std::size_t>(n + 1, 0));
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = 1; j <= n; ++j)
      t[i][j] = reference[i - 1] == candidate[j - 1]
                    ? t[i - 1][j - 1] + 1
                    : std::max(t[i - 1][j], t[i][j - 1]);
  std::vector<std::size_t> positions;
  size_t i = m, j = n;
  while (i > 0 && j > 0) {
    if (reference[i - 1] == candidate[j - 1]) {
      positions.push_back(i - 1);
      --i;
      --j;
    } else if (t[i - 1][j] >= t[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::string current;
  auto flush = [&] {
    std::string t = util::trim(current);
    if (!t.empty()) sentences.push_back(std::move(t));
    current.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\n') {
      flush();
      continue;
    }
    current.push_back(c);
    if ((c == '.' || c == '!' || c == '?') &&
        (i + 1 == text.size() || text[i + 1] == ' ' || text[i + 1] == '\t' ||
         text[i + 1] == '\r' || text[i + 1] == '\n')) {
      flush();
    }
  }
  flush();
  return sentences;
}

RougeScore rouge_l(std::string_view reference, std::string_view candidate,
                   const text::NormalizationPolicy& policy) {
  std::string ref_flat(reference), cand_flat(candidate);
  std::replace(ref_flat.begin(), ref_flat.end(), '\n', ' ');
  std::replace(cand_flat.begin(), cand_flat.end(), '\n', ' ');
  auto ref = tokenize(ref_flat, policy);
  auto cand = tokenize(cand_flat, policy);
  double L = static_cast<double>(lcs_length(ref, cand));
  double p = cand.empty() ? 0.0 : L / static_cast<double>(cand.size());
  double r = ref.empty() ? 0.0 : L / static_cast<double>(ref.size());
  return make_score(p, r);
}

RougeScore rouge_lsum(std::string_view reference, std::string_view candidate,
                      const text::NormalizationPolicy& policy) {
  std::vector<std::vector<std::string>> ref_sents, cand_sents;
  size_t ref_total = 0, cand_total = 0;
  for (const std::string& s : split_sentences(reference)) {
    auto toks = tokenize(s, policy);
    if (toks.empty()) continue;
    ref_total += toks.size();
    ref_sents.push_back(std::move(toks));
  }
  for (const std::string& s : split_sentences(candidate)) {
    auto toks = tokenize(s, policy);
    if (toks.empty()) continue;
    cand_total += toks.size();
    cand_sents.push_back(std::move(toks));
  }
  size_t hits = 0;
  for (const auto& ref_sent : ref_sents) {
    std::set<std::size_t> matched;
    for (const auto& cand_sent : cand_sents) {
      for (std::size_t pos : lcs_match_positions(ref_sent, cand_sent))
        matched.insert(pos);
    }
    hits += matched.size();
  }
  double p = cand_total > 0 ? static_cast<double>(hits) / cand_total : 0.0;
  double r = ref_total > 0 ? static_cast<double>(hits) / ref_total : 0.0;
  return make_score(p, r);
}

MatchReport match_report(std::string_view reference,
                         std::string_view candidate,
                         const text::NormalizationPolicy& policy) {
  MatchReport report;
  auto ref = tokenize(reference, policy);
  auto cand = tokenize(candidate, policy);
  report.rouge1 = ngram_rouge(ref, cand, 1);
  report.rouge2 = ngram_rouge(ref, cand, 2);
  report.rougeL = rouge_l(reference, candidate, policy);
  report.rougeLsum = rouge_lsum(reference, candidate, policy);
  report.exact = mean_score(report.rouge1, report.rouge2);
  report.relaxed = mean_score(report.rougeL, report.rougeLsum);
  return report;
}

CorpusRow average_rows(const std::vector<CorpusRow>& rows) {
  CorpusRow avg;
  avg.pair_name = "Average";
  if (rows.empty()) return avg;
  for (const CorpusRow& row : rows) {
    avg.exact.precision += row.exact.precision;
    avg.exact.recall += row.exact.recall;
    avg.exact.f1 += row.exact.f1;
    avg.relaxed.precision += row.relaxed.precision;
    avg.relaxed.recall += row.relaxed.recall;
    avg.relaxed.f1 += row.relaxed.f1;
  }
  double n = static_cast<double>(rows.size());
  avg.exact.precision /= n;
  avg.exact.recall /= n;
  avg.exact.f1 /= n;
  avg.relaxed.precision /= n;
  avg.relaxed.recall /= n;
  avg.relaxed.f1 /= n;
  return avg;
}

CorpusReport evaluate_corpus(const std::vector<CorpusPair>& pairs,
                             const text::NormalizationPolicy& policy) {
  CorpusReport report;
  for (const CorpusPair& pair : pairs) {
    std::string ref = util::read_file(pair.reference_path);
    std::string cand = util::read_file(pair.candidate_path);
    MatchReport m = match_report(ref, cand, policy);
    report.rows.push_back(CorpusRow{pair.name, m.exact, m.relaxed});
  }
  report.average_row = average_rows(report.rows);
  return report;
}

namespace {

nlohmann::json score_json(const RougeScore& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

void score_cells(std::ostringstream& out, const RougeScore& s) {
  out << std::setw(10) << s.recall << std::setw(10) << s.precision
      << std::setw(10) << s.f1;
}

}  // namespace

std::string match_report_text(const MatchReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(5);
  out << std::left << std::setw(12) << "Metric" << std::right << std::setw(10)
      << "Recall" << std::setw(10) << "Precision" << std::setw(10) << "F1"
      << "\n";
  auto row = [&](const char* name, const RougeScore& s) {
    out << std::left << std::setw(12) << name << std::right;
    score_cells(out, s);
    out << "\n";
  };
  row("ROUGE-1", report.rouge1);
  row("ROUGE-2", report.rouge2);
  row("ROUGE-L", report.rougeL);
  row("ROUGE-Lsum", report.rougeLsum);
  row("Exact", report.exact);
  row("Relaxed", report.relaxed);
  return out.str();
}

std::string match_report_json(const MatchReport& report) {
  nlohmann::json j{{"rouge1", score_json(report.rouge1)},
                   {"rouge2", score_json(report.rouge2)},
                   {"rougeL", score_json(report.rougeL)},
                   {"rougeLsum", score_json(report.rougeLsum)},
                   {"exact", score_json(report.exact)},
                   {"relaxed", score_json(report.relaxed)}};
  return j.dump(2) + "\n";
}

std::string corpus_report_text(const CorpusReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(5);
  out << std::left << std::setw(16) << "Pair" << std::right << std::setw(10)
      << "Ex.R" << std::setw(10) << "Ex.P" << std::setw(10) << "Ex.F1"
      << std::setw(10) << "Rx.R" << std::setw(10) << "Rx.P" << std::setw(10)
      << "Rx.F1" << "\n";
  auto row = [&](const CorpusRow& r) {
    out << std::left << std::setw(16) << r.pair_name << std::right;
    score_cells(out, r.exact);
    score_cells(out, r.relaxed);
    out << "\n";
  };
  for (const CorpusRow& r : report.rows) row(r);
  row(report.average_row);
  return out.str();
}

std::string corpus_report_json(const CorpusReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  auto row_json = [](const CorpusRow& r) {
    return nlohmann::json{{"pair_name", r.pair_name},
                          {"exact", score_json(r.exact)},
                          {"relaxed", score_json(r.relaxed)}};
  };
  for (const CorpusRow& r : report.rows) rows.push_back(row_json(r));
  nlohmann::json j{{"rows", rows}, {"average", row_json(report.average_row)}};
  return j.dump(2) + "\n";
}

std::string corpus_report_csv(const CorpusReport& report) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "pair,exact_recall,exact_precision,exact_f1,"
         "relaxed_recall,relaxed_precision,relaxed_f1\n";
  auto csv_field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += "\"\"";
      else quoted.push_back(c);
    }
    return quoted + "\"";
  };
  auto row = [&](const CorpusRow& r) {
    out << csv_field(r.pair_name) << ',' << r.exact.recall << ','
        << r.exact.precision << ',' << r.exact.f1 << ',' << r.relaxed.recall
        << ',' << r.relaxed.precision << ',' << r.relaxed.f1 << "\n";
  };
  for (const CorpusRow& r : report.rows) row(r);
  row(report.average_row);
  return out.str();
}

}  // namespace matkg::rouge
