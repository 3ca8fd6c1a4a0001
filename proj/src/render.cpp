#include "uzsyllable/render.hpp"

#include "uzsyllable/hyphenator.hpp"
#include "uzsyllable/utf8.hpp"

namespace uzsyllable {

namespace {

std::string joinVariants(const std::vector<std::string>& variants) {
  std::string out;
  for (size_t i = 0; i < variants.size(); ++i) {
    if (i > 0) {
      out += ';';
    }
    out += variants[i];
  }
  return out;
}

}  // namespace

const char* kindName(const TokenKind kind) {
  switch (kind) {
    case TokenKind::Word:
      return "word";
    case TokenKind::Passthrough:
      return "passthrough";
    case TokenKind::Separator:
      return "separator";
  }
  return "unknown";
}

const char* reasonName(const PassthroughReason reason) {
  switch (reason) {
    case PassthroughReason::Acronym:
      return "acronym";
    case PassthroughReason::ContainsDigit:
      return "contains_digit";
    case PassthroughReason::Symbol:
      return "symbol";
    case PassthroughReason::NoVowel:
      return "no_vowel";
    case PassthroughReason::MixedScript:
      return "mixed_script";
    case PassthroughReason::UnknownCharacter:
      return "unknown_character";
  }
  return "unknown";
}

nlohmann::json buildDocument(const AnalyzedText& analyzed) {
  nlohmann::json tokens = nlohmann::json::array();
  for (const AnalyzedToken& t : analyzed.tokens) {
    nlohmann::json item;
    item["text"] = t.token.text;
    item["kind"] = kindName(t.token.kind);
    if (t.token.kind == TokenKind::Passthrough && t.token.reason) {
      item["reason"] = reasonName(*t.token.reason);
    }
    if (t.token.kind == TokenKind::Word && t.division) {
      item["syllables"] = t.division->syllableTexts();
      item["count"] = t.division->syllables.size();
      item["source"] = t.division->source == DivisionSource::Lexicon ? "lexicon" : "rule";
      item["hyphenations"] = hyphenate(t.token, *t.division).variants;
    }
    tokens.push_back(std::move(item));
  }
  nlohmann::json doc;
  doc["tokens"] = std::move(tokens);
  doc["rendered"] = analyzed.rendered;
  return doc;
}

std::string renderPlainSyllabify(const AnalyzedText& analyzed) { return analyzed.rendered; }

std::string renderPlainHyphenate(const AnalyzedText& analyzed) {
  std::string out;
  for (const AnalyzedToken& t : analyzed.tokens) {
    if (t.token.kind == TokenKind::Word && t.division) {
      const HyphenationSet set = hyphenate(t.token, *t.division);
      out += set.variants.empty() ? t.token.text : joinVariants(set.variants);
    } else {
      out += t.token.text;
    }
  }
  return out;
}

std::string renderPlainCount(const AnalyzedText& analyzed) {
  std::string out;
  bool first = true;
  for (const AnalyzedToken& t : analyzed.tokens) {
    if (t.token.kind != TokenKind::Word || !t.division) {
      continue;
    }
    if (!first) {
      out += ' ';
    }
    first = false;
    out += t.token.text;
    out += ' ';
    out += std::to_string(t.division->syllables.size());
  }
  return out;
}

nlohmann::json reportJson(const EvalReport& report) {
  nlohmann::json listing = nlohmann::json::array();
  for (const EvalMismatch& m : report.errorListing) {
    listing.push_back({{"word", m.word}, {"gold", m.gold}, {"predicted", m.predicted}});
  }
  return nlohmann::json{
      {"n_records", report.nRecords},
      {"word_accuracy", report.wordAccuracy},
      {"boundary_precision", report.boundaryPrecision},
      {"boundary_recall", report.boundaryRecall},
      {"boundary_f1", report.boundaryF1},
      {"count_micro_f1", report.countMicroF1},
      {"count_accuracy", report.countAccuracy},
      {"hyphenation_exact_match", report.hyphenationExactMatch},
      {"error_listing", std::move(listing)},
  };
}

std::string asciiApostrophes(std::string text) {
  static const std::string modifier = encodeUtf8(std::u32string(1, kDigraphModifier));
  static const std::string tutuq = encodeUtf8(std::u32string(1, kTutuqMark));
  for (const std::string* mark : {&modifier, &tutuq}) {
    size_t pos = 0;
    while ((pos = text.find(*mark, pos)) != std::string::npos) {
      text.replace(pos, mark->size(), "'");
      ++pos;
    }
  }
  return text;
}

}  // namespace uzsyllable
