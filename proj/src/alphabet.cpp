#include "uzsyllable/alphabet.hpp"

#include <array>

#include "uzsyllable/utf8.hpp"

namespace uzsyllable {

namespace {

// Latin inventory (1995 official alphabet). Bare "c" and "w" are not
// letters of the alphabet; "c" occurs only inside the digraph "ch".
constexpr std::u32string_view kLatinVowels = U"aeiou";
constexpr std::u32string_view kLatinConsonants = U"bdfghjklmnpqrstvxyz";

// Cyrillic inventory (35 letters).
constexpr std::u32string_view kCyrillicVowels = U"аеёиоуўэюя";
constexpr std::u32string_view kCyrillicConsonants = U"бвгджзйклмнпрстфхцчшқғҳ";
constexpr std::u32string_view kCyrillicSigns = U"ъь";

struct Digraph {
  char32_t first;
  char32_t second;
  LetterClass cls;
};

constexpr std::array<Digraph, 4> kLatinDigraphs = {{
    {U'o', kDigraphModifier, LetterClass::Vowel},
    {U'g', kDigraphModifier, LetterClass::Consonant},
    {U's', U'h', LetterClass::Consonant},
    {U'c', U'h', LetterClass::Consonant},
}};

constexpr Digraph kNgDigraph = {U'n', U'g', LetterClass::Consonant};

bool contains(const std::u32string_view set, const char32_t cp) {
  return set.find(cp) != std::u32string_view::npos;
}

std::optional<LetterClass> singleClass(const char32_t lower, const Script script) {
  if (script == Script::Latin) {
    if (contains(kLatinVowels, lower)) {
      return LetterClass::Vowel;
    }
    if (contains(kLatinConsonants, lower)) {
      return LetterClass::Consonant;
    }
    if (lower == kTutuqMark) {
      return LetterClass::Sign;
    }
    return std::nullopt;
  }
  if (contains(kCyrillicVowels, lower)) {
    return LetterClass::Vowel;
  }
  if (contains(kCyrillicConsonants, lower)) {
    return LetterClass::Consonant;
  }
  if (contains(kCyrillicSigns, lower)) {
    return LetterClass::Sign;
  }
  return std::nullopt;
}

std::optional<Digraph> matchDigraph(const char32_t first, const char32_t second, const Script script,
                                    const SegmentationOptions& options) {
  if (script != Script::Latin) {
    return std::nullopt;
  }
  for (const Digraph& d : kLatinDigraphs) {
    if (d.first == first && d.second == second) {
      return d;
    }
  }
  if (options.ngDigraph && kNgDigraph.first == first && kNgDigraph.second == second) {
    return kNgDigraph;
  }
  return std::nullopt;
}

}  // namespace

UnknownCharacterError::UnknownCharacterError(const size_t position, const char32_t codepoint)
    : std::runtime_error("unknown character at codepoint index " + std::to_string(position)),
      position(position),
      codepoint(codepoint) {}

char32_t toLowerUz(const char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') {
    return cp - U'A' + U'a';
  }
  if (cp >= 0x0410 && cp <= 0x042F) {  // А..Я
    return cp + 0x20;
  }
  switch (cp) {
    case 0x0401:  // Ё
      return 0x0451;
    case 0x040E:  // Ў
      return 0x045E;
    case 0x049A:  // Қ
      return 0x049B;
    case 0x0492:  // Ғ
      return 0x0493;
    case 0x04B2:  // Ҳ
      return 0x04B3;
    default:
      return cp;
  }
}

char32_t toUpperUz(const char32_t cp) {
  if (cp >= U'a' && cp <= U'z') {
    return cp - U'a' + U'A';
  }
  if (cp >= 0x0430 && cp <= 0x044F) {  // а..я
    return cp - 0x20;
  }
  switch (cp) {
    case 0x0451:  // ё
      return 0x0401;
    case 0x045E:  // ў
      return 0x040E;
    case 0x049B:  // қ
      return 0x049A;
    case 0x0493:  // ғ
      return 0x0492;
    case 0x04B3:  // ҳ
      return 0x04B2;
    default:
      return cp;
  }
}

bool isUpperUz(const char32_t cp) { return cp != toLowerUz(cp); }

bool isLatinLetter(const char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
}

bool isCyrillicLetter(const char32_t cp) { return cp >= 0x0400 && cp <= 0x04FF; }

bool isApostropheLike(const char32_t cp) {
  switch (cp) {
    case U'\'':   // U+0027
    case U'`':    // U+0060
    case 0x00B4:  // acute accent
    case 0x2018:  // left single quotation mark
    case 0x2019:  // right single quotation mark
    case kDigraphModifier:
    case kTutuqMark:
      return true;
    default:
      return false;
  }
}

std::u32string normalizeText(const std::u32string_view raw) {
  std::u32string out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    const char32_t cp = raw[i];
    if (!isApostropheLike(cp)) {
      out.push_back(cp);
      continue;
    }
    const char32_t prev = i > 0 ? raw[i - 1] : 0;
    const char32_t next = i + 1 < raw.size() ? raw[i + 1] : 0;
    const char32_t prevLower = toLowerUz(prev);
    if (isLatinLetter(prev) && (prevLower == U'o' || prevLower == U'g')) {
      out.push_back(kDigraphModifier);
    } else if (isLatinLetter(prev) || isLatinLetter(next)) {
      out.push_back(kTutuqMark);
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

std::string normalizeText(const std::string_view raw) {
  return encodeUtf8(normalizeText(decodeUtf8(raw)));
}

bool trySegmentGraphemes(const std::u32string_view word, const Script script, std::vector<Grapheme>& out,
                         size_t& errorPosition, const SegmentationOptions& options) {
  out.clear();
  size_t i = 0;
  while (i < word.size()) {
    const char32_t lower = toLowerUz(word[i]);
    if (i + 1 < word.size()) {
      const char32_t nextLower = toLowerUz(word[i + 1]);
      if (const auto d = matchDigraph(lower, nextLower, script, options)) {
        out.push_back(Grapheme{std::u32string(word.substr(i, 2)), d->cls, script});
        i += 2;
        continue;
      }
    }
    if (const auto cls = singleClass(lower, script)) {
      out.push_back(Grapheme{std::u32string(word.substr(i, 1)), *cls, script});
      ++i;
      continue;
    }
    errorPosition = i;
    return false;
  }
  return true;
}

std::vector<Grapheme> segmentGraphemes(const std::u32string_view word, const Script script,
                                       const SegmentationOptions& options) {
  std::vector<Grapheme> out;
  size_t errorPosition = 0;
  if (!trySegmentGraphemes(word, script, out, errorPosition, options)) {
    throw UnknownCharacterError(errorPosition, word[errorPosition]);
  }
  return out;
}

std::vector<Grapheme> segmentGraphemes(const std::string_view wordUtf8, const Script script,
                                       const SegmentationOptions& options) {
  return segmentGraphemes(decodeUtf8(wordUtf8), script, options);
}

LetterClass classify(const Grapheme& g) {
  const auto cls = lookupClass(g.text, g.script);
  if (!cls) {
    throw std::invalid_argument("grapheme not in inventory: " + encodeUtf8(g.text));
  }
  return *cls;
}

std::optional<LetterClass> lookupClass(const std::u32string_view graphemeText, const Script script) {
  if (graphemeText.size() == 1) {
    return singleClass(toLowerUz(graphemeText[0]), script);
  }
  if (graphemeText.size() == 2) {
    SegmentationOptions withNg;
    withNg.ngDigraph = true;
    if (const auto d = matchDigraph(toLowerUz(graphemeText[0]), toLowerUz(graphemeText[1]), script, withNg)) {
      return d->cls;
    }
  }
  return std::nullopt;
}

ScriptDetection detectScript(const std::u32string_view text) {
  bool hasLatin = false;
  bool hasCyrillic = false;
  for (const char32_t cp : text) {
    hasLatin = hasLatin || isLatinLetter(cp);
    hasCyrillic = hasCyrillic || isCyrillicLetter(cp);
  }
  if (hasCyrillic && !hasLatin) {
    return ScriptDetection::Cyrillic;
  }
  if (hasLatin && !hasCyrillic) {
    return ScriptDetection::Latin;
  }
  return ScriptDetection::Mixed;
}

ScriptDetection detectScript(const std::string_view textUtf8) { return detectScript(decodeUtf8(textUtf8)); }

std::vector<std::u32string> inventoryGraphemes(const Script script, const SegmentationOptions& options) {
  std::vector<std::u32string> out;
  const auto pushAll = [&](const std::u32string_view set) {
    for (const char32_t cp : set) {
      out.emplace_back(1, cp);
    }
  };
  if (script == Script::Latin) {
    pushAll(kLatinVowels);
    pushAll(kLatinConsonants);
    out.emplace_back(1, kTutuqMark);
    for (const Digraph& d : kLatinDigraphs) {
      out.push_back(std::u32string{d.first, d.second});
    }
    if (options.ngDigraph) {
      out.push_back(std::u32string{kNgDigraph.first, kNgDigraph.second});
    }
  } else {
    pushAll(kCyrillicVowels);
    pushAll(kCyrillicConsonants);
    pushAll(kCyrillicSigns);
  }
  return out;
}

std::string toLowerUtf8(const std::string_view utf8) {
  std::u32string cps = decodeUtf8(utf8);
  for (char32_t& cp : cps) {
    cp = toLowerUz(cp);
  }
  return encodeUtf8(cps);
}

}  // namespace uzsyllable
