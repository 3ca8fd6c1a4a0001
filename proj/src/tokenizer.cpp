#include "uzsyllable/tokenizer.hpp"

#include "uzsyllable/utf8.hpp"

namespace uzsyllable {

namespace {

bool isAsciiDigit(const char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool isExtendedLatinLetter(const char32_t cp) {
  if (cp >= 0x00C0 && cp <= 0x00FF) {
    return cp != 0x00D7 && cp != 0x00F7;  // × ÷
  }
  return cp >= 0x0100 && cp <= 0x017F;
}

bool isLetterCp(const char32_t cp) {
  return isLatinLetter(cp) || isCyrillicLetter(cp) || isExtendedLatinLetter(cp);
}

// Codepoints that can belong to a word candidate.
bool isWordCp(const char32_t cp) {
  return isLetterCp(cp) || isAsciiDigit(cp) || cp == kDigraphModifier || cp == kTutuqMark;
}

bool isWhitespaceCp(const char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:
    case 0x2028:
    case 0x2029:
      return true;
    default:
      return false;
  }
}

bool isPunctuationCp(const char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) || (cp >= 0x5B && cp <= 0x60) ||
           (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0x00A1:  // ¡
    case 0x00AB:  // «
    case 0x00B7:  // ·
    case 0x00BB:  // »
    case 0x00BF:  // ¿
    case 0x2010:  // hyphen
    case 0x2011:
    case 0x2012:
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2015:
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x2026:  // …
    case 0x2039:
    case 0x203A:
      return true;
    default:
      return false;
  }
}

bool isSeparatorCp(const char32_t cp) { return isWhitespaceCp(cp) || isPunctuationCp(cp); }

Token classifyCandidate(std::string text, const std::u32string_view cps, const ScriptPolicy policy) {
  size_t letters = 0;
  size_t upperLetters = 0;
  bool hasDigit = false;
  for (const char32_t cp : cps) {
    if (isAsciiDigit(cp)) {
      hasDigit = true;
    } else if (isLetterCp(cp)) {
      ++letters;
      if (isUpperUz(cp)) {
        ++upperLetters;
      }
    }
  }

  if (letters >= 2 && upperLetters == letters) {
    return Token::passthrough(std::move(text), PassthroughReason::Acronym);
  }
  if (hasDigit) {
    return Token::passthrough(std::move(text), PassthroughReason::ContainsDigit);
  }
  if (letters == 0) {
    // Only canonical marks; a sign cannot carry a syllable.
    return Token::passthrough(std::move(text), PassthroughReason::NoVowel);
  }

  const ScriptDetection detected = detectScript(cps);
  if (detected == ScriptDetection::Mixed) {
    return Token::passthrough(std::move(text), PassthroughReason::MixedScript);
  }

  Script script = detected == ScriptDetection::Cyrillic ? Script::Cyrillic : Script::Latin;
  if (policy == ScriptPolicy::ForceLatin) {
    script = Script::Latin;
  } else if (policy == ScriptPolicy::ForceCyrillic) {
    script = Script::Cyrillic;
  }

  std::vector<Grapheme> graphemes;
  size_t errorPosition = 0;
  if (!trySegmentGraphemes(cps, script, graphemes, errorPosition)) {
    return Token::passthrough(std::move(text), PassthroughReason::UnknownCharacter);
  }

  bool hasVowel = false;
  for (const Grapheme& g : graphemes) {
    hasVowel = hasVowel || g.cls == LetterClass::Vowel;
  }
  if (!hasVowel) {
    return Token::passthrough(std::move(text), PassthroughReason::NoVowel);
  }

  return Token::word(std::move(text), std::move(graphemes), script);
}

}  // namespace

Token Token::word(std::string text, std::vector<Grapheme> graphemes, const Script script) {
  Token t;
  t.kind = TokenKind::Word;
  t.text = std::move(text);
  t.graphemes = std::move(graphemes);
  t.script = script;
  return t;
}

Token Token::passthrough(std::string text, const PassthroughReason reason) {
  Token t;
  t.kind = TokenKind::Passthrough;
  t.text = std::move(text);
  t.reason = reason;
  return t;
}

Token Token::separator(std::string text) {
  Token t;
  t.kind = TokenKind::Separator;
  t.text = std::move(text);
  return t;
}

std::vector<Token> tokenize(const std::string_view normalizedText, const ScriptPolicy policy) {
  const DecodedText decoded = decodeUtf8WithOffsets(normalizedText);
  const std::u32string& cps = decoded.codepoints;

  std::vector<Token> tokens;
  size_t i = 0;
  const auto slice = [&](const size_t from, const size_t to) {
    return std::string(normalizedText.substr(decoded.offsets[from], decoded.offsets[to] - decoded.offsets[from]));
  };

  while (i < cps.size()) {
    if (isWordCp(cps[i])) {
      size_t j = i;
      while (j < cps.size() && isWordCp(cps[j])) {
        ++j;
      }
      tokens.push_back(classifyCandidate(slice(i, j), std::u32string_view(cps).substr(i, j - i), policy));
      i = j;
      continue;
    }
    const bool sep = isSeparatorCp(cps[i]);
    size_t j = i;
    while (j < cps.size() && !isWordCp(cps[j]) && isSeparatorCp(cps[j]) == sep) {
      ++j;
    }
    if (sep) {
      tokens.push_back(Token::separator(slice(i, j)));
    } else {
      tokens.push_back(Token::passthrough(slice(i, j), PassthroughReason::Symbol));
    }
    i = j;
  }
  return tokens;
}

std::string detokenize(const std::vector<Token>& tokens, const std::vector<std::vector<size_t>>& wordBoundaries,
                       const std::string_view mark) {
  std::string out;
  if (wordBoundaries.empty()) {
    for (const Token& t : tokens) {
      out += t.text;
    }
    return out;
  }

  size_t wordIndex = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Word) {
      out += t.text;
      continue;
    }
    if (wordIndex >= wordBoundaries.size()) {
      throw AnnotationMismatchError("fewer annotations than word tokens");
    }
    const std::vector<size_t>& boundaries = wordBoundaries[wordIndex++];
    size_t previous = 0;
    for (const size_t b : boundaries) {
      if (b <= previous || b >= t.graphemes.size()) {
        throw AnnotationMismatchError("boundary index " + std::to_string(b) + " out of range for \"" + t.text +
                                      "\"");
      }
      previous = b;
    }
    size_t nextBoundary = 0;
    for (size_t g = 0; g < t.graphemes.size(); ++g) {
      if (nextBoundary < boundaries.size() && boundaries[nextBoundary] == g) {
        out += mark;
        ++nextBoundary;
      }
      out += encodeUtf8(t.graphemes[g].text);
    }
  }
  if (wordIndex != wordBoundaries.size()) {
    throw AnnotationMismatchError("more annotations than word tokens");
  }
  return out;
}

}  // namespace uzsyllable
