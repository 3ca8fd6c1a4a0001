#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "uzsyllable/syllabifier.hpp"

namespace uzsyllable {

// One gold dataset row: a word with its reference division, line-break
// variants and syllable count.
struct EvalRecord {
  std::string word;  // normalized UTF-8
  std::vector<Grapheme> graphemes;
  std::vector<size_t> goldBoundaries;
  std::vector<std::string> goldHyphenations;
  size_t goldCount = 0;
  Script script = Script::Latin;
};

enum class DatasetIssueKind { Parse, CountMismatch, ConcatMismatch };

struct DatasetIssue {
  DatasetIssueKind kind;
  size_t line;
  std::string message;
};

struct DatasetError : std::runtime_error {
  DatasetError(DatasetIssueKind kind, size_t line, const std::string& message);

  DatasetIssueKind kind;
  size_t line;
};

struct Dataset {
  std::vector<EvalRecord> records;
  std::vector<DatasetIssue> issues;  // skipped lines (lenient mode only)
};

// TSV with 4 columns: word, hyphen-marked syllables, `;`-separated
// hyphenation variants (may be empty), syllable count. `#` comments and
// blank lines are ignored. Lenient mode skips invalid lines and reports
// them as issues; strict mode throws DatasetError at the first one.
Dataset loadDataset(std::istream& in, bool strict = false);
Dataset loadDatasetFile(const std::string& path, bool strict = false);

struct EvalMismatch {
  std::string word;
  std::string gold;
  std::string predicted;
};

struct EvalReport {
  size_t nRecords = 0;
  double wordAccuracy = 1.0;
  double boundaryPrecision = 1.0;
  double boundaryRecall = 1.0;
  double boundaryF1 = 1.0;
  double countMicroF1 = 1.0;
  double countAccuracy = 1.0;
  double hyphenationExactMatch = 1.0;
  std::vector<EvalMismatch> errorListing;
};

// Scores the engine against gold records. Word accuracy is exact-division
// match; boundary P/R/F1 pool boundary positions across records; the count
// micro-F1 pools per-record count labels (single-label, so it equals count
// accuracy — both are reported).
EvalReport evaluate(const std::vector<EvalRecord>& records, const ExceptionLexicon* lexicon = nullptr);

// Word / gold / predicted rows for every mismatching record.
std::vector<EvalMismatch> diffReport(const std::vector<EvalRecord>& records,
                                     const ExceptionLexicon* lexicon = nullptr);

// Gold records produced by the engine itself; useful as a self-check
// baseline. Throws std::invalid_argument if some input is not a single
// syllabifiable word.
std::vector<EvalRecord> generateGold(const std::vector<std::string>& words,
                                     const ExceptionLexicon* lexicon = nullptr);

std::string formatReport(const EvalReport& report);

}  // namespace uzsyllable
