#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uzsyllable {

enum class Script { Latin, Cyrillic };

enum class LetterClass { Vowel, Consonant, Sign };

enum class ScriptDetection { Latin, Cyrillic, Mixed };

// Canonical marks of the Latin orthography. U+02BB is the second codepoint
// of the digraphs oʻ and gʻ; U+02BC is the tutuq (glottal stop) sign.
inline constexpr char32_t kDigraphModifier = U'ʻ';
inline constexpr char32_t kTutuqMark = U'ʼ';

// One orthographic letter: 1-2 codepoints in original case.
struct Grapheme {
  std::u32string text;
  LetterClass cls;
  Script script;

  bool operator==(const Grapheme&) const = default;
};

struct UnknownCharacterError : std::runtime_error {
  UnknownCharacterError(size_t position, char32_t codepoint);

  size_t position;  // codepoint index within the word
  char32_t codepoint;
};

struct SegmentationOptions {
  // "ng" is not treated as a digraph unless requested; splitting it keeps
  // suffix junctions like men+ga correct.
  bool ngDigraph = false;
};

// Canonicalizes apostrophe-shaped codepoints: after Latin o/g they become
// the digraph modifier, elsewhere next to Latin letters the tutuq mark.
// Everything else passes through. Idempotent.
std::string normalizeText(std::string_view raw);
std::u32string normalizeText(std::u32string_view raw);

// Splits a normalized word into graphemes, matching digraphs longest-first
// and case-insensitively. Throws UnknownCharacterError on codepoints outside
// the script inventory.
std::vector<Grapheme> segmentGraphemes(std::u32string_view word, Script script,
                                       const SegmentationOptions& options = {});
std::vector<Grapheme> segmentGraphemes(std::string_view wordUtf8, Script script,
                                       const SegmentationOptions& options = {});

// Non-throwing form; on failure returns false and sets errorPosition.
bool trySegmentGraphemes(std::u32string_view word, Script script, std::vector<Grapheme>& out,
                         size_t& errorPosition, const SegmentationOptions& options = {});

// Inventory class of a grapheme, case-insensitive.
LetterClass classify(const Grapheme& g);
std::optional<LetterClass> lookupClass(std::u32string_view graphemeText, Script script);

ScriptDetection detectScript(std::u32string_view text);
ScriptDetection detectScript(std::string_view textUtf8);

// All grapheme texts of a script inventory (lowercase canonical form).
std::vector<std::u32string> inventoryGraphemes(Script script, const SegmentationOptions& options = {});

char32_t toLowerUz(char32_t cp);
char32_t toUpperUz(char32_t cp);
bool isUpperUz(char32_t cp);
bool isLatinLetter(char32_t cp);
bool isCyrillicLetter(char32_t cp);
bool isApostropheLike(char32_t cp);

std::string toLowerUtf8(std::string_view utf8);

}  // namespace uzsyllable
