#include "uzsyllable/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "uzsyllable/hyphenator.hpp"
#include "uzsyllable/utf8.hpp"

namespace uzsyllable {

namespace {

std::vector<std::string> splitOn(const std::string_view text, const char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

struct LineError {
  DatasetIssueKind kind;
  std::string message;
};

// Parses one data line into a record, or explains why it cannot be one.
bool parseRecord(const std::string& line, EvalRecord& record, LineError& error) {
  const std::vector<std::string> columns = splitOn(line, '\t');
  if (columns.size() != 4) {
    error = {DatasetIssueKind::Parse, "expected 4 tab-separated columns, got " + std::to_string(columns.size())};
    return false;
  }
  const std::string word = normalizeText(columns[0]);
  const std::string division = normalizeText(columns[1]);
  if (word.empty() || division.empty()) {
    error = {DatasetIssueKind::Parse, "empty word or division column"};
    return false;
  }

  const ScriptDetection detected = detectScript(word);
  if (detected == ScriptDetection::Mixed) {
    error = {DatasetIssueKind::Parse, "mixed-script word \"" + word + "\""};
    return false;
  }
  const Script script = detected == ScriptDetection::Cyrillic ? Script::Cyrillic : Script::Latin;

  std::vector<Grapheme> graphemes;
  size_t errorPosition = 0;
  if (!trySegmentGraphemes(decodeUtf8(word), script, graphemes, errorPosition)) {
    error = {DatasetIssueKind::Parse, "word \"" + word + "\" is not segmentable"};
    return false;
  }

  const std::vector<std::string> parts = splitOn(division, '-');
  std::string joined;
  for (const std::string& part : parts) {
    if (part.empty()) {
      error = {DatasetIssueKind::Parse, "empty syllable in \"" + division + "\""};
      return false;
    }
    joined += part;
  }
  if (joined != word) {
    error = {DatasetIssueKind::ConcatMismatch,
             "syllables \"" + division + "\" do not concatenate to \"" + word + "\""};
    return false;
  }

  std::vector<size_t> boundaries;
  size_t partIndex = 0;
  size_t cpTarget = decodeUtf8(parts[0]).size();
  size_t cpSeen = 0;
  for (size_t g = 0; g < graphemes.size() && partIndex + 1 < parts.size(); ++g) {
    cpSeen += graphemes[g].text.size();
    if (cpSeen == cpTarget) {
      boundaries.push_back(g + 1);
      ++partIndex;
      if (partIndex + 1 < parts.size()) {
        cpTarget += decodeUtf8(parts[partIndex]).size();
      }
    } else if (cpSeen > cpTarget) {
      error = {DatasetIssueKind::Parse, "division \"" + division + "\" splits a digraph"};
      return false;
    }
  }
  if (boundaries.size() + 1 != parts.size()) {
    error = {DatasetIssueKind::Parse, "division \"" + division + "\" splits a digraph"};
    return false;
  }

  size_t count = 0;
  const std::string& countColumn = columns[3];
  const auto [ptr, ec] = std::from_chars(countColumn.data(), countColumn.data() + countColumn.size(), count);
  if (ec != std::errc() || ptr != countColumn.data() + countColumn.size() || count == 0) {
    error = {DatasetIssueKind::Parse, "invalid syllable count \"" + countColumn + "\""};
    return false;
  }
  if (count != parts.size()) {
    error = {DatasetIssueKind::CountMismatch, "count " + std::to_string(count) + " does not match " +
                                                  std::to_string(parts.size()) + " syllables"};
    return false;
  }

  record.word = word;
  record.graphemes = std::move(graphemes);
  record.goldBoundaries = std::move(boundaries);
  record.goldHyphenations.clear();
  if (!columns[2].empty()) {
    for (const std::string& variant : splitOn(columns[2], ';')) {
      if (!variant.empty()) {
        record.goldHyphenations.push_back(normalizeText(variant));
      }
    }
  }
  record.goldCount = count;
  record.script = script;
  return true;
}

Token recordToken(const EvalRecord& record) {
  return Token::word(record.word, record.graphemes, record.script);
}

std::string divisionString(const std::vector<Grapheme>& graphemes, const std::vector<size_t>& boundaries) {
  std::string out;
  size_t next = 0;
  for (size_t g = 0; g < graphemes.size(); ++g) {
    if (next < boundaries.size() && boundaries[next] == g) {
      out += '-';
      ++next;
    }
    out += encodeUtf8(graphemes[g].text);
  }
  return out;
}

bool sameVariantSet(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

}  // namespace

DatasetError::DatasetError(const DatasetIssueKind kind, const size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), kind(kind), line(line) {}

Dataset loadDataset(std::istream& in, const bool strict) {
  Dataset dataset;
  std::string line;
  size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    EvalRecord record;
    LineError error{DatasetIssueKind::Parse, {}};
    if (parseRecord(line, record, error)) {
      dataset.records.push_back(std::move(record));
    } else if (strict) {
      throw DatasetError(error.kind, lineNo, error.message);
    } else {
      dataset.issues.push_back({error.kind, lineNo, error.message});
    }
  }
  return dataset;
}

Dataset loadDatasetFile(const std::string& path, const bool strict) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path);
  }
  return loadDataset(in, strict);
}

EvalReport evaluate(const std::vector<EvalRecord>& records, const ExceptionLexicon* lexicon) {
  EvalReport report;
  report.nRecords = records.size();
  if (records.empty()) {
    return report;
  }

  size_t exactWords = 0;
  size_t exactCounts = 0;
  size_t exactHyphenations = 0;
  size_t boundaryTp = 0;
  size_t boundaryPredicted = 0;
  size_t boundaryGold = 0;

  for (const EvalRecord& record : records) {
    const Token token = recordToken(record);
    const SyllabifiedWord division = syllabify(token, lexicon);
    const std::vector<size_t> predicted = division.boundaries();

    if (predicted == record.goldBoundaries) {
      ++exactWords;
    } else {
      report.errorListing.push_back({record.word, divisionString(record.graphemes, record.goldBoundaries),
                                     divisionString(record.graphemes, predicted)});
    }

    boundaryPredicted += predicted.size();
    boundaryGold += record.goldBoundaries.size();
    std::vector<size_t> common;
    std::set_intersection(predicted.begin(), predicted.end(), record.goldBoundaries.begin(),
                          record.goldBoundaries.end(), std::back_inserter(common));
    boundaryTp += common.size();

    if (division.syllables.size() == record.goldCount) {
      ++exactCounts;
    }
    if (sameVariantSet(renderVariants(token, breakPoints(division)), record.goldHyphenations)) {
      ++exactHyphenations;
    }
  }

  const double n = static_cast<double>(records.size());
  report.wordAccuracy = static_cast<double>(exactWords) / n;
  report.boundaryPrecision = boundaryPredicted > 0
                                 ? static_cast<double>(boundaryTp) / static_cast<double>(boundaryPredicted)
                                 : (boundaryGold == 0 ? 1.0 : 0.0);
  report.boundaryRecall = boundaryGold > 0 ? static_cast<double>(boundaryTp) / static_cast<double>(boundaryGold)
                                           : (boundaryPredicted == 0 ? 1.0 : 0.0);
  const double pr = report.boundaryPrecision + report.boundaryRecall;
  report.boundaryF1 = pr > 0.0 ? 2.0 * report.boundaryPrecision * report.boundaryRecall / pr : 0.0;

  // Single-label micro-averaging: every miss is one false positive for the
  // predicted label and one false negative for the gold label, so
  // F1 = 2*TP / (2*TP + FP + FN) reduces to plain accuracy.
  const size_t misses = records.size() - exactCounts;
  report.countMicroF1 =
      static_cast<double>(2 * exactCounts) / static_cast<double>(2 * exactCounts + misses + misses);
  report.countAccuracy = static_cast<double>(exactCounts) / n;
  report.hyphenationExactMatch = static_cast<double>(exactHyphenations) / n;
  return report;
}

std::vector<EvalMismatch> diffReport(const std::vector<EvalRecord>& records, const ExceptionLexicon* lexicon) {
  std::vector<EvalMismatch> listing;
  for (const EvalRecord& record : records) {
    const std::vector<size_t> predicted = syllabify(recordToken(record), lexicon).boundaries();
    if (predicted != record.goldBoundaries) {
      listing.push_back({record.word, divisionString(record.graphemes, record.goldBoundaries),
                         divisionString(record.graphemes, predicted)});
    }
  }
  return listing;
}

std::vector<EvalRecord> generateGold(const std::vector<std::string>& words, const ExceptionLexicon* lexicon) {
  std::vector<EvalRecord> records;
  records.reserve(words.size());
  for (const std::string& raw : words) {
    const std::string normalized = normalizeText(raw);
    const std::vector<Token> tokens = tokenize(normalized);
    if (tokens.size() != 1 || tokens[0].kind != TokenKind::Word) {
      throw std::invalid_argument("not a single syllabifiable word: \"" + raw + "\"");
    }
    const Token& token = tokens[0];
    const SyllabifiedWord division = syllabify(token, lexicon);

    EvalRecord record;
    record.word = token.text;
    record.graphemes = token.graphemes;
    record.goldBoundaries = division.boundaries();
    record.goldHyphenations = renderVariants(token, breakPoints(division));
    record.goldCount = division.syllables.size();
    record.script = *token.script;
    records.push_back(std::move(record));
  }
  return records;
}

std::string formatReport(const EvalReport& report) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  out << "records:                 " << report.nRecords << '\n';
  out << "word_accuracy:           " << report.wordAccuracy << '\n';
  out << "boundary_precision:      " << report.boundaryPrecision << '\n';
  out << "boundary_recall:         " << report.boundaryRecall << '\n';
  out << "boundary_f1:             " << report.boundaryF1 << '\n';
  out << "count_micro_f1:          " << report.countMicroF1 << '\n';
  out << "count_accuracy:          " << report.countAccuracy << '\n';
  out << "hyphenation_exact_match: " << report.hyphenationExactMatch << '\n';
  out << "mismatches:              " << report.errorListing.size() << '\n';
  for (const EvalMismatch& m : report.errorListing) {
    out << m.word << '\t' << m.gold << '\t' << m.predicted << '\n';
  }
  return out.str();
}

}  // namespace uzsyllable
