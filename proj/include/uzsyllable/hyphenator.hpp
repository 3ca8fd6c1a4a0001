#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uzsyllable/syllabifier.hpp"
#include "uzsyllable/tokenizer.hpp"

namespace uzsyllable {

struct HyphenationSet {
  std::vector<size_t> validBreaks;    // grapheme positions, subset of the division boundaries
  std::vector<std::string> variants;  // one hyphen each, left to right
};

// Syllable boundaries usable as line breaks: both sides must keep at least
// two graphemes (a digraph or sign counts as one grapheme).
std::vector<size_t> breakPoints(const SyllabifiedWord& division);

// The word with a single "-" at each break, original case and marks kept.
std::vector<std::string> renderVariants(const Token& word, const std::vector<size_t>& breaks);

HyphenationSet hyphenate(const Token& word, const SyllabifiedWord& division);

}  // namespace uzsyllable
