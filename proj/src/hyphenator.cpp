#include "uzsyllable/hyphenator.hpp"

#include "uzsyllable/utf8.hpp"

namespace uzsyllable {

namespace {

constexpr size_t kMinSideGraphemes = 2;

}  // namespace

std::vector<size_t> breakPoints(const SyllabifiedWord& division) {
  const size_t total = division.graphemeCount();
  std::vector<size_t> out;
  for (const size_t boundary : division.boundaries()) {
    if (boundary >= kMinSideGraphemes && total - boundary >= kMinSideGraphemes) {
      out.push_back(boundary);
    }
  }
  return out;
}

std::vector<std::string> renderVariants(const Token& word, const std::vector<size_t>& breaks) {
  std::vector<std::string> out;
  out.reserve(breaks.size());
  for (const size_t breakAt : breaks) {
    std::string variant;
    for (size_t g = 0; g < word.graphemes.size(); ++g) {
      if (g == breakAt) {
        variant += '-';
      }
      variant += encodeUtf8(word.graphemes[g].text);
    }
    out.push_back(std::move(variant));
  }
  return out;
}

HyphenationSet hyphenate(const Token& word, const SyllabifiedWord& division) {
  HyphenationSet set;
  set.validBreaks = breakPoints(division);
  set.variants = renderVariants(word, set.validBreaks);
  return set;
}

}  // namespace uzsyllable
