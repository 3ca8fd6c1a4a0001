#include "uzsyllable/syllabifier.hpp"

#include <fstream>
#include <istream>
#include <sstream>

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

std::vector<std::vector<Grapheme>> splitAtBoundaries(const std::vector<Grapheme>& graphemes,
                                                     const std::vector<size_t>& boundaries) {
  std::vector<std::vector<Grapheme>> syllables;
  size_t start = 0;
  for (const size_t b : boundaries) {
    syllables.emplace_back(graphemes.begin() + start, graphemes.begin() + b);
    start = b;
  }
  syllables.emplace_back(graphemes.begin() + start, graphemes.end());
  return syllables;
}

std::string lexiconKey(const std::string_view wordText) { return toLowerUtf8(wordText); }

}  // namespace

std::vector<size_t> SyllabifiedWord::boundaries() const {
  std::vector<size_t> out;
  size_t cumulative = 0;
  for (size_t i = 0; i + 1 < syllables.size(); ++i) {
    cumulative += syllables[i].size();
    out.push_back(cumulative);
  }
  return out;
}

std::vector<std::string> SyllabifiedWord::syllableTexts() const {
  std::vector<std::string> out;
  out.reserve(syllables.size());
  for (const auto& syllable : syllables) {
    std::string text;
    for (const Grapheme& g : syllable) {
      text += encodeUtf8(g.text);
    }
    out.push_back(std::move(text));
  }
  return out;
}

size_t SyllabifiedWord::graphemeCount() const {
  size_t n = 0;
  for (const auto& syllable : syllables) {
    n += syllable.size();
  }
  return n;
}

std::string SyllabifiedWord::text(const std::string_view mark) const {
  std::string out;
  bool first = true;
  for (const std::string& syllable : syllableTexts()) {
    if (!first) {
      out += mark;
    }
    first = false;
    out += syllable;
  }
  return out;
}

LexiconError::LexiconError(const Kind kind, const size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), kind(kind), line(line) {}

void ExceptionLexicon::add(std::string normalizedLowerWord, std::vector<size_t> boundaries) {
  entries_[std::move(normalizedLowerWord)] = std::move(boundaries);
}

const std::vector<size_t>* ExceptionLexicon::find(const std::string_view normalizedLowerWord) const {
  const auto it = entries_.find(std::string(normalizedLowerWord));
  return it == entries_.end() ? nullptr : &it->second;
}

SyllabifiedWord divide(const std::vector<Grapheme>& graphemes) {
  std::vector<size_t> nuclei;
  for (size_t i = 0; i < graphemes.size(); ++i) {
    if (graphemes[i].cls == LetterClass::Vowel) {
      nuclei.push_back(i);
    }
  }
  if (nuclei.empty()) {
    throw NoVowelError();
  }

  std::vector<size_t> boundaries;
  for (size_t k = 0; k + 1 < nuclei.size(); ++k) {
    size_t lastConsonant = 0;
    bool found = false;
    for (size_t i = nuclei[k] + 1; i < nuclei[k + 1]; ++i) {
      if (graphemes[i].cls == LetterClass::Consonant) {
        lastConsonant = i;
        found = true;
      }
    }
    // Hiatus: the next syllable starts at its vowel; signs in the gap stay
    // left of the boundary either way.
    boundaries.push_back(found ? lastConsonant : nuclei[k + 1]);
  }

  SyllabifiedWord out;
  out.syllables = splitAtBoundaries(graphemes, boundaries);
  out.source = DivisionSource::Rule;
  return out;
}

SyllabifiedWord syllabify(const Token& word, const ExceptionLexicon* lexicon) {
  if (word.kind != TokenKind::Word) {
    throw std::invalid_argument("syllabify expects a word token");
  }
  if (lexicon != nullptr) {
    if (const std::vector<size_t>* boundaries = lexicon->find(lexiconKey(word.text))) {
      for (const size_t b : *boundaries) {
        if (b == 0 || b >= word.graphemes.size()) {
          throw std::logic_error("lexicon boundaries inconsistent with word \"" + word.text + "\"");
        }
      }
      SyllabifiedWord out;
      out.syllables = splitAtBoundaries(word.graphemes, *boundaries);
      out.source = DivisionSource::Lexicon;
      return out;
    }
  }
  return divide(word.graphemes);
}

size_t countSyllables(const Token& word, const ExceptionLexicon* lexicon) {
  return syllabify(word, lexicon).syllables.size();
}

ExceptionLexicon loadLexicon(std::istream& in, std::vector<std::string>* warnings) {
  ExceptionLexicon lexicon;
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
    const std::vector<std::string> columns = splitOn(line, '\t');
    if (columns.size() != 2 || columns[0].empty() || columns[1].empty()) {
      throw LexiconError(LexiconError::Kind::Parse, lineNo, "expected `word<TAB>syl-la-bles`");
    }
    const std::string word = normalizeText(columns[0]);
    const std::string division = normalizeText(columns[1]);

    const ScriptDetection detected = detectScript(word);
    if (detected == ScriptDetection::Mixed) {
      throw LexiconError(LexiconError::Kind::Parse, lineNo, "mixed-script headword \"" + word + "\"");
    }
    const Script script = detected == ScriptDetection::Cyrillic ? Script::Cyrillic : Script::Latin;

    std::vector<Grapheme> graphemes;
    size_t errorPosition = 0;
    if (!trySegmentGraphemes(decodeUtf8(word), script, graphemes, errorPosition)) {
      throw LexiconError(LexiconError::Kind::Parse, lineNo, "headword \"" + word + "\" is not segmentable");
    }

    const std::vector<std::string> parts = splitOn(division, '-');
    std::string joined;
    for (const std::string& part : parts) {
      if (part.empty()) {
        throw LexiconError(LexiconError::Kind::Parse, lineNo, "empty syllable in \"" + division + "\"");
      }
      joined += part;
    }
    if (joined != word) {
      throw LexiconError(LexiconError::Kind::ConcatMismatch, lineNo,
                         "syllables \"" + division + "\" do not concatenate to \"" + word + "\"");
    }

    // Map cumulative codepoint offsets of the division onto grapheme
    // boundaries; an offset inside a digraph has no grapheme equivalent.
    std::vector<size_t> boundaries;
    size_t part_index = 0;
    size_t cpTarget = decodeUtf8(parts[0]).size();
    size_t cpSeen = 0;
    for (size_t g = 0; g < graphemes.size() && part_index + 1 < parts.size(); ++g) {
      cpSeen += graphemes[g].text.size();
      if (cpSeen == cpTarget) {
        boundaries.push_back(g + 1);
        ++part_index;
        if (part_index + 1 <= parts.size() - 1) {
          cpTarget += decodeUtf8(parts[part_index]).size();
        }
      } else if (cpSeen > cpTarget) {
        throw LexiconError(LexiconError::Kind::Parse, lineNo,
                           "division \"" + division + "\" splits a digraph");
      }
    }
    if (boundaries.size() + 1 != parts.size()) {
      throw LexiconError(LexiconError::Kind::Parse, lineNo, "division \"" + division + "\" splits a digraph");
    }

    const std::string key = lexiconKey(word);
    if (lexicon.find(key) != nullptr && warnings != nullptr) {
      warnings->push_back("line " + std::to_string(lineNo) + ": duplicate entry \"" + key +
                          "\" overrides an earlier one");
    }
    lexicon.add(key, std::move(boundaries));
  }
  return lexicon;
}

ExceptionLexicon loadLexiconFile(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open lexicon file: " + path);
  }
  return loadLexicon(in, warnings);
}

AnalyzedText syllabifyText(const std::string_view rawText, const PipelineOptions& options) {
  const std::string normalized = normalizeText(rawText);
  std::vector<Token> tokens = tokenize(normalized, options.script);

  AnalyzedText out;
  out.tokens.reserve(tokens.size());
  std::vector<std::vector<size_t>> wordBoundaries;
  for (Token& token : tokens) {
    AnalyzedToken analyzed;
    if (token.kind == TokenKind::Word) {
      analyzed.division = syllabify(token, options.lexicon);
      wordBoundaries.push_back(analyzed.division->boundaries());
    }
    analyzed.token = std::move(token);
    out.tokens.push_back(std::move(analyzed));
  }

  std::vector<Token> plainTokens;
  plainTokens.reserve(out.tokens.size());
  for (const AnalyzedToken& t : out.tokens) {
    plainTokens.push_back(t.token);
  }
  out.rendered = detokenize(plainTokens, wordBoundaries, options.mark);
  return out;
}

}  // namespace uzsyllable
