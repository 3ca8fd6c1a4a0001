#pragma once

#include <random>
#include <string>
#include <vector>

#include "uzsyllable/alphabet.hpp"
#include "uzsyllable/utf8.hpp"

// Deterministic random input builders shared by the property tests and the
// acceptance suite.

namespace uzsyllable::testgen {

inline const std::vector<char32_t> kApostropheVariants = {U'\'',  U'`',   0x00B4, 0x2018,
                                                          0x2019, 0x02BB, 0x02BC};

struct WordGenerator {
  explicit WordGenerator(const Script script, const unsigned seed = 20240101) : script(script), rng(seed) {
    for (const std::u32string& text : inventoryGraphemes(script)) {
      const LetterClass cls = *lookupClass(text, script);
      switch (cls) {
        case LetterClass::Vowel:
          vowels.push_back(text);
          break;
        case LetterClass::Consonant:
          consonants.push_back(text);
          break;
        case LetterClass::Sign:
          signs.push_back(text);
          break;
      }
    }
  }

  // A random grapheme sequence with at least one vowel, no leading sign,
  // and occasional uppercase letters.
  std::vector<Grapheme> next(const size_t minLen = 1, const size_t maxLen = 11) {
    std::uniform_int_distribution<size_t> lenDist(minLen, maxLen);
    const size_t len = lenDist(rng);
    std::vector<Grapheme> out;
    out.reserve(len);
    bool hasVowel = false;
    for (size_t i = 0; i < len; ++i) {
      std::uniform_int_distribution<int> pick(0, 99);
      const int roll = pick(rng);
      const std::u32string* text = nullptr;
      LetterClass cls;
      if (roll < 42 || (i + 1 == len && !hasVowel)) {
        text = &vowels[std::uniform_int_distribution<size_t>(0, vowels.size() - 1)(rng)];
        cls = LetterClass::Vowel;
        hasVowel = true;
      } else if (roll < 92 || i == 0 || signs.empty()) {
        text = &consonants[std::uniform_int_distribution<size_t>(0, consonants.size() - 1)(rng)];
        cls = LetterClass::Consonant;
      } else {
        text = &signs[std::uniform_int_distribution<size_t>(0, signs.size() - 1)(rng)];
        cls = LetterClass::Sign;
      }
      std::u32string cased = *text;
      if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
        for (char32_t& cp : cased) {
          cp = toUpperUz(cp);
        }
      }
      out.push_back(Grapheme{std::move(cased), cls, script});
    }
    return out;
  }

  Script script;
  std::mt19937 rng;
  std::vector<std::u32string> vowels;
  std::vector<std::u32string> consonants;
  std::vector<std::u32string> signs;
};

inline std::string wordText(const std::vector<Grapheme>& graphemes) {
  std::u32string cps;
  for (const Grapheme& g : graphemes) {
    cps += g.text;
  }
  return encodeUtf8(cps);
}

// Noisy text mixing both scripts, digits, punctuation, symbols and all
// apostrophe variants.
struct NoiseGenerator {
  explicit NoiseGenerator(const unsigned seed = 987654321) : rng(seed) {
    pool = decodeUtf8("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ");
    pool += decodeUtf8("абвгдеёжзийклмнопрстуфхцчшъьэюяўқғҳАБВГДЕЁЖЗИК");
    pool += decodeUtf8("0123456789 \t.,!?;:()-«»€£…—–");
    pool += U"éü☃";       // é ü ☃
    pool += U"\U0001F600";               // emoji, 4-byte UTF-8
    for (const char32_t cp : kApostropheVariants) {
      pool.push_back(cp);
      pool.push_back(cp);  // weigh apostrophes up
    }
  }

  std::string next(const size_t minLen = 0, const size_t maxLen = 40) {
    std::uniform_int_distribution<size_t> lenDist(minLen, maxLen);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    const size_t len = lenDist(rng);
    std::u32string cps;
    cps.reserve(len);
    for (size_t i = 0; i < len; ++i) {
      cps.push_back(pool[pick(rng)]);
    }
    return encodeUtf8(cps);
  }

  std::mt19937 rng;
  std::u32string pool;
};

}  // namespace uzsyllable::testgen
