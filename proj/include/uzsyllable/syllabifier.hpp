#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uzsyllable/alphabet.hpp"
#include "uzsyllable/tokenizer.hpp"

namespace uzsyllable {

enum class DivisionSource { Rule, Lexicon };

struct SyllabifiedWord {
  std::vector<std::vector<Grapheme>> syllables;
  DivisionSource source = DivisionSource::Rule;

  // Internal boundaries as cumulative grapheme counts (one per gap).
  std::vector<size_t> boundaries() const;
  std::vector<std::string> syllableTexts() const;
  size_t graphemeCount() const;
  std::string text(std::string_view mark = "-") const;
};

struct NoVowelError : std::runtime_error {
  NoVowelError() : std::runtime_error("word has no vowel grapheme") {}
};

struct LexiconError : std::runtime_error {
  enum class Kind { Parse, ConcatMismatch };

  LexiconError(Kind kind, size_t line, const std::string& message);

  Kind kind;
  size_t line;
};

// Exact-match overrides for loanwords whose dictionary division does not
// follow the native rules. Keys are normalized lowercase words; values are
// grapheme boundary indices. Immutable after loading.
class ExceptionLexicon {
 public:
  void add(std::string normalizedLowerWord, std::vector<size_t> boundaries);
  const std::vector<size_t>* find(std::string_view normalizedLowerWord) const;
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::unordered_map<std::string, std::vector<size_t>> entries_;
};

// Lexicon file: one `word<TAB>syl-la-bles` entry per line, `#` comments and
// blank lines ignored. Later duplicates override earlier ones; a note per
// override is appended to `warnings` when given. Throws LexiconError.
ExceptionLexicon loadLexicon(std::istream& in, std::vector<std::string>* warnings = nullptr);
ExceptionLexicon loadLexiconFile(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Rule-based division: every vowel is a nucleus; of each consonant run
// between two nuclei, the last consonant opens the next syllable; sign
// graphemes stay with the grapheme before them. Throws NoVowelError.
SyllabifiedWord divide(const std::vector<Grapheme>& graphemes);

// Lexicon lookup first (exact match on the lowercased word), rules otherwise.
SyllabifiedWord syllabify(const Token& word, const ExceptionLexicon* lexicon = nullptr);

size_t countSyllables(const Token& word, const ExceptionLexicon* lexicon = nullptr);

struct PipelineOptions {
  ScriptPolicy script = ScriptPolicy::Auto;
  const ExceptionLexicon* lexicon = nullptr;
  std::string mark = "-";
};

struct AnalyzedToken {
  Token token;
  std::optional<SyllabifiedWord> division;  // engaged iff token.kind == Word
};

struct AnalyzedText {
  std::vector<AnalyzedToken> tokens;
  std::string rendered;
};

// Full pipeline over raw text: normalize, tokenize, divide each word,
// re-render with the mark at every syllable boundary. Total: per-word
// failures surface as passthrough tokens, never as errors.
AnalyzedText syllabifyText(std::string_view rawText, const PipelineOptions& options = {});

}  // namespace uzsyllable
